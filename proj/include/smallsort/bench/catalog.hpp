#pragma once

// Sorter line-ups for each benchmark family. Ids are
//   "<sorter> <harness tag> KR <swap code>", e.g. "N Best -N KR 4CS",
// where the tag is -N (single array), -I (in row), -Q (quicksort) or
// -S<config> (sample sort).

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smallsort/bench/measure.hpp"
#include "smallsort/network.hpp"
#include "smallsort/sample_sort.hpp"
#include "smallsort/small_sort.hpp"
#include "smallsort/swaps.hpp"

namespace smallsort::bench {

//! "I -N KR Grd", "I -N KR Ung" or "N <kind> -N KR <swap>".
std::string small_sorter_id(const SmallSorterChoice& choice, std::string_view tag);

//! Both insertion sorts followed by every (kind, strategy) network sorter.
std::vector<BenchSorter> small_sorters(std::span<const NetworkKind> kinds,
                                       std::span<const SwapStrategy> strategies,
                                       std::string_view tag);

//! std::sort, classic introsort, insertion per partition, then networks per
//! partition for every (kind, strategy).
std::vector<BenchSorter> quicksort_sorters(std::span<const NetworkKind> kinds,
                                           std::span<const SwapStrategy> strategies);

//! std::sort, sample sort over insertion, then sample sort over each network.
std::vector<BenchSorter> sample_sorters(const SampleSortConfig& cfg,
                                        std::span<const NetworkKind> kinds,
                                        std::span<const SwapStrategy> strategies);

} // namespace smallsort::bench
