#include "smallsort/swaps.hpp"

#include <string>

#include "smallsort/error.hpp"

namespace smallsort {

std::string_view swap_code(SwapStrategy s) {
    switch (s) {
    case SwapStrategy::BranchIf: return "Def";
    case SwapStrategy::SelectExpr: return "QMa";
    case SwapStrategy::TupleSelect: return "Tie";
    case SwapStrategy::FourSelect: return "4Cm";
    case SwapStrategy::FourSelectSplit: return "4CS";
    case SwapStrategy::SixSelect: return "6Cm";
    case SwapStrategy::SlotSelect: return "Cla";
    case SwapStrategy::PredicateSlotSelect: return "CPr";
    }
    return "?";
}

SwapStrategy parse_swap_code(std::string_view code) {
    for (SwapStrategy s : kAllSwapStrategies) {
        if (swap_code(s) == code) return s;
    }
    throw ParseError("unknown swap strategy '" + std::string(code) +
                     "' (expected Def, QMa, Tie, 4Cm, 4CS, 6Cm, Cla or CPr)");
}

std::pair<Element, Element> compare_exchange(SwapStrategy s, Element left, Element right) {
    dispatch_strategy(s, [&](auto cswap) { cswap(left, right); });
    return {left, right};
}

void check_network_input(const Network& net, std::size_t data_size) {
    if (data_size != net.size()) {
        throw SizeError("network of size " + std::to_string(net.size()) +
                        " applied to " + std::to_string(data_size) + " elements");
    }
}

void execute_network(const Network& net, std::span<Element> data, SwapStrategy s) {
    dispatch_strategy(s, [&](auto cswap) { execute_network(net, data, cswap); });
}

} // namespace smallsort
