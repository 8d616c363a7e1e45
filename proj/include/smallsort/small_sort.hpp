#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>

#include "smallsort/element.hpp"
#include "smallsort/static_network.hpp"
#include "smallsort/swaps.hpp"

namespace smallsort {

enum class SmallSorterId {
    InsertionGuarded,
    InsertionUnguarded,
    NetworkBest,
    NetworkBoseNelsonLocality,
    NetworkBoseNelsonParallelism,
};

//! Insertion sort with a bounds check in the inner scan.
inline void insertion_sort_guarded(std::span<Element> data) {
    Element* a = data.data();
    const std::size_t n = data.size();
    for (std::size_t i = 1; i < n; ++i) {
        const Element tmp = a[i];
        std::size_t j = i;
        while (j > 0 && tmp.key < a[j - 1].key) {
            a[j] = a[j - 1];
            --j;
        }
        a[j] = tmp;
    }
}

//! Moves the minimum to the front first, so the inner scan needs no bound.
inline void insertion_sort_unguarded(std::span<Element> data) {
    Element* a = data.data();
    const std::size_t n = data.size();
    if (n < 2) return;
    std::size_t min_pos = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (a[i].key < a[min_pos].key) min_pos = i;
    }
    std::swap(a[0], a[min_pos]);
    for (std::size_t i = 2; i < n; ++i) {
        const Element tmp = a[i];
        std::size_t j = i;
        while (tmp.key < a[j - 1].key) {
            a[j] = a[j - 1];
            --j;
        }
        a[j] = tmp;
    }
}

inline constexpr std::size_t kSmallSortThreshold = 16;

//! n <= 1: nothing; n <= 16: size-n network; otherwise insertion sort.
template <NetworkKind Kind, typename CSwap>
inline void sort_small(std::span<Element> data, const CSwap& cswap) {
    if (data.size() <= kSmallSortThreshold)
        sort_network<Kind>(data, cswap);
    else
        insertion_sort_guarded(data);
}

void sort_small(std::span<Element> data, NetworkKind kind, SwapStrategy strategy);

//! Small sorters as callables, for use as base cases.
struct InsertionGuardedSorter {
    void operator()(std::span<Element> data) const { insertion_sort_guarded(data); }
};

struct InsertionUnguardedSorter {
    void operator()(std::span<Element> data) const { insertion_sort_unguarded(data); }
};

template <NetworkKind Kind, typename CSwap>
struct NetworkSorter {
    CSwap cswap{};

    void operator()(std::span<Element> data) const { sort_small<Kind>(data, cswap); }
};

//! Runtime description of a small sorter. The strategy is ignored by the
//! insertion variants.
struct SmallSorterChoice {
    SmallSorterId id = SmallSorterId::NetworkBoseNelsonLocality;
    SwapStrategy strategy = SwapStrategy::FourSelectSplit;
};

inline bool is_insertion(SmallSorterId id) {
    return id == SmallSorterId::InsertionGuarded || id == SmallSorterId::InsertionUnguarded;
}

NetworkKind network_kind_of(SmallSorterId id);
SmallSorterId small_sorter_for(NetworkKind kind);

//! "I" or "N <kind>", the leading part of a sorter id.
std::string small_sorter_prefix(SmallSorterId id);

//! Calls f with the monomorphized sorter object matching choice.
template <typename F>
decltype(auto) dispatch_small_sorter(const SmallSorterChoice& choice, F&& f) {
    if (choice.id == SmallSorterId::InsertionGuarded) return f(InsertionGuardedSorter{});
    if (choice.id == SmallSorterId::InsertionUnguarded) return f(InsertionUnguardedSorter{});
    return dispatch_network_kind(network_kind_of(choice.id), [&](auto kind) -> decltype(auto) {
        return dispatch_strategy(choice.strategy, [&](auto cswap) -> decltype(auto) {
            return f(NetworkSorter<decltype(kind)::value, decltype(cswap)>{cswap});
        });
    });
}

void sort_small(std::span<Element> data, const SmallSorterChoice& choice);

} // namespace smallsort
