#include "smallsort/bench/catalog.hpp"

#include <algorithm>

#include "smallsort/quicksort.hpp"

namespace smallsort::bench {

namespace {

struct StdSorter {
    void operator()(std::span<Element> data) const {
        std::sort(data.begin(), data.end(), key_less);
    }
};

std::string insertion_suffix(SmallSorterId id) {
    return id == SmallSorterId::InsertionUnguarded ? "Ung" : "Grd";
}

} // namespace

std::string small_sorter_id(const SmallSorterChoice& choice, std::string_view tag) {
    std::string id = small_sorter_prefix(choice.id);
    id += ' ';
    id += tag;
    id += " KR ";
    id += is_insertion(choice.id) ? insertion_suffix(choice.id) : std::string(swap_code(choice.strategy));
    return id;
}

std::vector<BenchSorter> small_sorters(std::span<const NetworkKind> kinds,
                                       std::span<const SwapStrategy> strategies,
                                       std::string_view tag) {
    std::vector<SmallSorterChoice> choices = {{SmallSorterId::InsertionGuarded},
                                          {SmallSorterId::InsertionUnguarded}};
    for (NetworkKind kind : kinds)
        for (SwapStrategy s : strategies) choices.push_back({small_sorter_for(kind), s});

    std::vector<BenchSorter> out;
    for (const SmallSorterChoice& choice : choices) {
        dispatch_small_sorter(choice, [&](auto sorter) {
            out.push_back(make_bench_sorter(small_sorter_id(choice, tag), sorter));
        });
    }
    return out;
}

std::vector<BenchSorter> quicksort_sorters(std::span<const NetworkKind> kinds,
                                           std::span<const SwapStrategy> strategies) {
    std::vector<BenchSorter> out;
    out.push_back(make_bench_sorter("StdSort -Q KR Def", StdSorter{}));
    out.push_back(make_bench_sorter(
        quicksort_sorter_id({BaseCasePolicy::InsertionFinalPass}),
        [](std::span<Element> data) { quicksort_final_pass(data); }));
    out.push_back(make_bench_sorter(
        quicksort_sorter_id({BaseCasePolicy::InsertionPerPartition}),
        [](std::span<Element> data) { quicksort_per_partition(data, InsertionGuardedSorter{}); }));
    for (NetworkKind kind : kinds) {
        for (SwapStrategy s : strategies) {
            const BaseCaseKind base{BaseCasePolicy::NetworkPerPartition, kind, s};
            dispatch_network_kind(kind, [&](auto k) {
                dispatch_strategy(s, [&](auto cswap) {
                    const auto network = [cswap](std::span<Element> part) {
                        sort_network<decltype(k)::value>(part, cswap);
                    };
                    out.push_back(make_bench_sorter(
                        quicksort_sorter_id(base), [network](std::span<Element> data) {
                            quicksort_per_partition(data, network);
                        }));
                });
            });
        }
    }
    return out;
}

std::vector<BenchSorter> sample_sorters(const SampleSortConfig& cfg,
                                        std::span<const NetworkKind> kinds,
                                        std::span<const SwapStrategy> strategies) {
    cfg.validate();
    const std::string tag = "-S" + sample_sort_config_code(cfg);
    std::vector<BenchSorter> out;
    out.push_back(make_bench_sorter("StdSort " + tag + " KR Def", StdSorter{}));

    std::vector<SmallSorterChoice> choices = {{SmallSorterId::InsertionGuarded}};
    for (NetworkKind kind : kinds)
        for (SwapStrategy s : strategies) choices.push_back({small_sorter_for(kind), s});
    for (const SmallSorterChoice& choice : choices) {
        dispatch_small_sorter(choice, [&](auto base) {
            out.push_back(make_bench_sorter(small_sorter_id(choice, tag),
                                            [cfg, base](std::span<Element> data) {
                                                sample_sort(data, cfg, base);
                                            }));
        });
    }
    return out;
}

} // namespace smallsort::bench
