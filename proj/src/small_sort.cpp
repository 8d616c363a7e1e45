#include "smallsort/small_sort.hpp"

namespace smallsort {

void sort_small(std::span<Element> data, NetworkKind kind, SwapStrategy strategy) {
    dispatch_network_kind(kind, [&](auto k) {
        dispatch_strategy(strategy, [&](auto cswap) { sort_small<decltype(k)::value>(data, cswap); });
    });
}

void sort_small(std::span<Element> data, const SmallSorterChoice& choice) {
    dispatch_small_sorter(choice, [&](auto sorter) { sorter(data); });
}

NetworkKind network_kind_of(SmallSorterId id) {
    switch (id) {
    case SmallSorterId::NetworkBest: return NetworkKind::Best;
    case SmallSorterId::NetworkBoseNelsonParallelism: return NetworkKind::BoseNelsonParallelism;
    default: return NetworkKind::BoseNelsonLocality;
    }
}

SmallSorterId small_sorter_for(NetworkKind kind) {
    switch (kind) {
    case NetworkKind::Best: return SmallSorterId::NetworkBest;
    case NetworkKind::BoseNelsonLocality: return SmallSorterId::NetworkBoseNelsonLocality;
    case NetworkKind::BoseNelsonParallelism: break;
    }
    return SmallSorterId::NetworkBoseNelsonParallelism;
}

std::string small_sorter_prefix(SmallSorterId id) {
    switch (id) {
    case SmallSorterId::InsertionGuarded:
    case SmallSorterId::InsertionUnguarded: return "I";
    default: return "N " + std::string(network_code(network_kind_of(id)));
    }
}

} // namespace smallsort
