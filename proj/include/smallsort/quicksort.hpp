#pragma once

// Introsort variant whose partitions of at most 16 elements are handed to a
// base-case sorter as soon as they appear, instead of one insertion sort pass
// over the whole array at the end. The pivot is the median of three elements
// ordered by the 3-channel network.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>

#include "smallsort/element.hpp"
#include "smallsort/small_sort.hpp"
#include "smallsort/static_network.hpp"
#include "smallsort/swaps.hpp"

namespace smallsort {

enum class BaseCasePolicy {
    InsertionFinalPass,    //!< leave small partitions, one insertion sweep at the end
    InsertionPerPartition, //!< insertion sort each small partition immediately
    NetworkPerPartition,   //!< sorting network on each small partition immediately
};

struct BaseCaseKind {
    BaseCasePolicy policy = BaseCasePolicy::NetworkPerPartition;
    NetworkKind network = NetworkKind::Best;
    SwapStrategy strategy = SwapStrategy::SlotSelect;
};

//! Optional instrumentation filled by quicksort.
struct QuicksortTrace {
    std::size_t depth_limit = 0;
    std::size_t max_depth = 0;
    std::size_t heap_fallbacks = 0;
    std::size_t base_case_calls = 0;
    std::size_t min_base_case = std::numeric_limits<std::size_t>::max();
    std::size_t max_base_case = 0;
};

inline constexpr std::size_t kQuicksortThreshold = 16;

//! Median by key, computed with the 3-channel network and a select-based swap.
inline Element median_of_three(Element a, Element b, Element c) {
    Element v[3] = {a, b, c};
    sort_network_fixed<NetworkKind::BoseNelsonLocality, 3>(v, SwapFourSelectSplit{});
    return v[1];
}

//! 2 * floor(log2 n), 0 for n < 2.
constexpr std::size_t introsort_depth_limit(std::size_t n) {
    return n < 2 ? 0 : 2 * static_cast<std::size_t>(std::bit_width(n) - 1);
}

namespace detail {

inline void heap_sort(Element* first, Element* last) {
    std::make_heap(first, last, key_less);
    std::sort_heap(first, last, key_less);
}

//! Moves the median of (first+1, mid, last-1) to *first and Hoare-partitions
//! [first+1, last) around it. Returns the start of the right part.
inline Element* partition_around_median(Element* first, Element* last) {
    Element* mid = first + (last - first) / 2;
    const SwapFourSelectSplit cswap;
    // channels (0,1,2) = (first+1, mid, last-1), network (1,2),(0,2),(0,1)
    cswap(*mid, *(last - 1));
    cswap(*(first + 1), *(last - 1));
    cswap(*(first + 1), *mid);
    std::swap(*first, *mid);

    const std::uint64_t pivot = first->key;
    Element* lo = first + 1;
    Element* hi = last;
    while (true) {
        while (lo->key < pivot) ++lo;
        --hi;
        while (pivot < hi->key) --hi;
        if (!(lo < hi)) return lo;
        std::swap(*lo, *hi);
        ++lo;
    }
}

//! `depth` counts the partition levels still allowed before heap sort.
template <bool PerPartition, typename BaseCase>
void introsort_loop(Element* first, Element* last, std::size_t depth,
                    const BaseCase& base_case, QuicksortTrace* trace) {
    while (static_cast<std::size_t>(last - first) > kQuicksortThreshold) {
        if (depth == 0) {
            heap_sort(first, last);
            if (trace) ++trace->heap_fallbacks;
            return;
        }
        --depth;
        if (trace) {
            const std::size_t used = trace->depth_limit - depth;
            trace->max_depth = std::max(trace->max_depth, used);
        }
        Element* cut = partition_around_median(first, last);
        introsort_loop<PerPartition>(cut, last, depth, base_case, trace);
        last = cut;
    }
    if constexpr (PerPartition) {
        const auto n = static_cast<std::size_t>(last - first);
        if (n >= 2) {
            base_case(std::span<Element>(first, n));
            if (trace) {
                ++trace->base_case_calls;
                trace->min_base_case = std::min(trace->min_base_case, n);
                trace->max_base_case = std::max(trace->max_base_case, n);
            }
        }
    }
}

} // namespace detail

//! Sorts data with `base_case` applied to every partition of 2..16 elements.
template <typename BaseCase>
void quicksort_per_partition(std::span<Element> data, const BaseCase& base_case,
                             QuicksortTrace* trace = nullptr) {
    const std::size_t limit = introsort_depth_limit(data.size());
    if (trace) trace->depth_limit = limit;
    detail::introsort_loop<true>(data.data(), data.data() + data.size(), limit, base_case, trace);
}

//! Classic introsort: partitions down to 16, then one insertion sort sweep.
inline void quicksort_final_pass(std::span<Element> data, QuicksortTrace* trace = nullptr) {
    const std::size_t limit = introsort_depth_limit(data.size());
    if (trace) trace->depth_limit = limit;
    detail::introsort_loop<false>(data.data(), data.data() + data.size(), limit,
                                  InsertionGuardedSorter{}, trace);
    insertion_sort_guarded(data);
}

void quicksort(std::span<Element> data, const BaseCaseKind& base_case,
               QuicksortTrace* trace = nullptr);

//! "QSort -Q KR Def", "I -Q KR Grd" or "N <kind> -Q KR <strategy>".
std::string quicksort_sorter_id(const BaseCaseKind& base_case);

} // namespace smallsort
