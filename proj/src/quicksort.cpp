#include "smallsort/quicksort.hpp"

namespace smallsort {

void quicksort(std::span<Element> data, const BaseCaseKind& base_case, QuicksortTrace* trace) {
    switch (base_case.policy) {
    case BaseCasePolicy::InsertionFinalPass:
        quicksort_final_pass(data, trace);
        return;
    case BaseCasePolicy::InsertionPerPartition:
        quicksort_per_partition(data, InsertionGuardedSorter{}, trace);
        return;
    case BaseCasePolicy::NetworkPerPartition:
        dispatch_network_kind(base_case.network, [&](auto kind) {
            dispatch_strategy(base_case.strategy, [&](auto cswap) {
                const auto network = [&cswap](std::span<Element> part) {
                    sort_network<decltype(kind)::value>(part, cswap);
                };
                quicksort_per_partition(data, network, trace);
            });
        });
        return;
    }
}

std::string quicksort_sorter_id(const BaseCaseKind& base_case) {
    switch (base_case.policy) {
    case BaseCasePolicy::InsertionFinalPass: return "QSort -Q KR Def";
    case BaseCasePolicy::InsertionPerPartition: return "I -Q KR Grd";
    case BaseCasePolicy::NetworkPerPartition: break;
    }
    return "N " + std::string(network_code(base_case.network)) + " -Q KR " +
           std::string(swap_code(base_case.strategy));
}

} // namespace smallsort
