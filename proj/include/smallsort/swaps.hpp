#pragma once

// Compare-exchange strategies on Element. All strategies implement the same
// relation: afterwards left.key <= right.key, and the pair is left untouched
// when the keys are equal (the comparison is strict right < left).
//
// The select-based strategies are written as comparison -> flag -> select
// dataflow without a control-flow fork on the key comparison. Comments on each
// strategy name the machine idiom the dataflow is meant to become.

#include <cstdint>
#include <span>
#include <string_view>
#include <tuple>
#include <utility>

#include "smallsort/element.hpp"
#include "smallsort/network.hpp"

namespace smallsort {

enum class SwapStrategy {
    BranchIf,            // Def
    SelectExpr,          // QMa
    TupleSelect,         // Tie
    FourSelect,          // 4Cm
    FourSelectSplit,     // 4CS
    SixSelect,           // 6Cm
    SlotSelect,          // Cla
    PredicateSlotSelect, // CPr
};

inline constexpr SwapStrategy kAllSwapStrategies[] = {
    SwapStrategy::BranchIf,   SwapStrategy::SelectExpr,      SwapStrategy::TupleSelect,
    SwapStrategy::FourSelect, SwapStrategy::FourSelectSplit, SwapStrategy::SixSelect,
    SwapStrategy::SlotSelect, SwapStrategy::PredicateSlotSelect,
};

//! Three-letter code used on the command line and in CSV output.
std::string_view swap_code(SwapStrategy s);

//! Inverse of swap_code; ParseError on unknown codes.
SwapStrategy parse_swap_code(std::string_view code);

namespace detail {

//! All-ones if flag, zero otherwise.
inline std::uint64_t flag_mask(bool flag) noexcept {
    return std::uint64_t{0} - static_cast<std::uint64_t>(flag);
}

inline std::uint64_t blend(std::uint64_t mask, std::uint64_t if_set,
                           std::uint64_t if_clear) noexcept {
    return (if_set & mask) | (if_clear & ~mask);
}

} // namespace detail

//! Def: swap inside a branch.
struct SwapBranchIf {
    static constexpr SwapStrategy id = SwapStrategy::BranchIf;

    void operator()(Element& left, Element& right) const noexcept {
        if (right.key < left.key) std::swap(left, right);
    }
};

//! QMa: whole-element conditional expressions.
struct SwapSelectExpr {
    static constexpr SwapStrategy id = SwapStrategy::SelectExpr;

    void operator()(Element& left, Element& right) const noexcept {
        const bool r = left.key > right.key;
        const Element temp = left;
        left = r ? right : left;
        right = r ? temp : right;
    }
};

//! Tie: assignment through a tuple of references.
struct SwapTupleSelect {
    static constexpr SwapStrategy id = SwapStrategy::TupleSelect;

    void operator()(Element& left, Element& right) const noexcept {
        std::tie(left, right) = (right.key < left.key) ? std::make_tuple(right, left)
                                                       : std::make_tuple(left, right);
    }
};

//! 4Cm: one comparison, two temporaries, four scalar selects in one block.
//! Intended idiom: cmp + four cmov on the key/reference words.
struct SwapFourSelect {
    static constexpr SwapStrategy id = SwapStrategy::FourSelect;

    void operator()(Element& left, Element& right) const noexcept {
        const std::uint64_t tmp = left.key;
        const std::uint64_t tmp_ref = left.reference;
        const bool c = right.key < tmp;
        left.key = c ? right.key : left.key;
        left.reference = c ? right.reference : left.reference;
        right.key = c ? tmp : right.key;
        right.reference = c ? tmp_ref : right.reference;
    }
};

//! 4CS: the flag is materialized once as a mask and every word is blended by
//! its own statement, so the four selects carry no ordering between each
//! other and can be scheduled around unrelated work.
struct SwapFourSelectSplit {
    static constexpr SwapStrategy id = SwapStrategy::FourSelectSplit;

    void operator()(Element& left, Element& right) const noexcept {
        const std::uint64_t tmp = left.key;
        const std::uint64_t tmp_ref = left.reference;
        const std::uint64_t mask = detail::flag_mask(right.key < tmp);
        left.key = detail::blend(mask, right.key, left.key);
        left.reference = detail::blend(mask, right.reference, left.reference);
        right.key = detail::blend(mask, tmp, right.key);
        right.reference = detail::blend(mask, tmp_ref, right.reference);
    }
};

//! 6Cm: the temporaries are selected too (six selects on one flag).
struct SwapSixSelect {
    static constexpr SwapStrategy id = SwapStrategy::SixSelect;

    void operator()(Element& left, Element& right) const noexcept {
        const bool c = right.key < left.key;
        const std::uint64_t tmp = c ? left.key : right.key;
        const std::uint64_t tmp_ref = c ? left.reference : right.reference;
        left.key = c ? right.key : left.key;
        left.reference = c ? right.reference : left.reference;
        right.key = c ? tmp : right.key;
        right.reference = c ? tmp_ref : right.reference;
    }
};

//! Cla: select which storage slot to copy from, then copy whole elements
//! through the chosen address. Intended idiom: cmov on pointers.
struct SwapSlotSelect {
    static constexpr SwapStrategy id = SwapStrategy::SlotSelect;

    void operator()(Element& left, Element& right) const noexcept {
        const Element tmp = left;
        const bool c = right.key < tmp.key;
        const Element* left_src = c ? &right : &left;
        left = *left_src;
        const Element* right_src = c ? &tmp : &right;
        right = *right_src;
    }
};

struct KeyLess {
    bool operator()(const Element& a, const Element& b) const noexcept {
        return a.key < b.key;
    }
};

//! CPr: like Cla, but the comparison comes from a predicate whose boolean
//! result is tested against zero before the slot select.
template <typename Less = KeyLess>
struct SwapPredicateSlotSelect {
    static constexpr SwapStrategy id = SwapStrategy::PredicateSlotSelect;

    Less less{};

    void operator()(Element& left, Element& right) const noexcept {
        const Element tmp = left;
        const int predicate_result = static_cast<int>(less(right, tmp));
        const Element* left_src = predicate_result != 0 ? &right : &left;
        left = *left_src;
        const Element* right_src = predicate_result != 0 ? &tmp : &right;
        right = *right_src;
    }
};

//! Wraps a strategy and counts its invocations.
template <typename Inner>
struct CountingSwap {
    static constexpr SwapStrategy id = Inner::id;

    Inner inner{};
    std::uint64_t* count = nullptr;

    void operator()(Element& left, Element& right) const noexcept {
        ++*count;
        inner(left, right);
    }
};

//! Calls f(StrategyType{}) for the strategy type matching `s`.
template <typename F>
decltype(auto) dispatch_strategy(SwapStrategy s, F&& f) {
    switch (s) {
    case SwapStrategy::BranchIf: return f(SwapBranchIf{});
    case SwapStrategy::SelectExpr: return f(SwapSelectExpr{});
    case SwapStrategy::TupleSelect: return f(SwapTupleSelect{});
    case SwapStrategy::FourSelect: return f(SwapFourSelect{});
    case SwapStrategy::FourSelectSplit: return f(SwapFourSelectSplit{});
    case SwapStrategy::SixSelect: return f(SwapSixSelect{});
    case SwapStrategy::SlotSelect: return f(SwapSlotSelect{});
    case SwapStrategy::PredicateSlotSelect: return f(SwapPredicateSlotSelect<>{});
    }
    return f(SwapBranchIf{});
}

//! Returns (min, max) by key; equal keys come back unchanged.
std::pair<Element, Element> compare_exchange(SwapStrategy s, Element left, Element right);

//! Applies net's comparators to data, in order. SizeError if the lengths
//! differ.
template <typename CSwap>
void execute_network(const Network& net, std::span<Element> data, const CSwap& cswap);

void execute_network(const Network& net, std::span<Element> data, SwapStrategy s);

void check_network_input(const Network& net, std::size_t data_size);

template <typename CSwap>
void execute_network(const Network& net, std::span<Element> data, const CSwap& cswap) {
    check_network_input(net, data.size());
    Element* a = data.data();
    for (const Comparator& c : net.comparators()) cswap(a[c.lo], a[c.hi]);
}

} // namespace smallsort
