#pragma once

// Benchmark loops. measure_single_once follows the single-array scheme: a
// warm-up sort, a timed loop of (generate, sort, check), then the generator
// is reset and a timed loop of (generate, cost-matched check) is subtracted.
// measure_inrow sorts many contiguous blocks of a region larger than the last
// level cache in one timed pass and checks them afterwards.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "smallsort/bench/counter.hpp"
#include "smallsort/bench/fingerprint.hpp"
#include "smallsort/bench/rng.hpp"
#include "smallsort/element.hpp"
#include "smallsort/error.hpp"

namespace smallsort::bench {

struct MeasurementRecord {
    std::string sorter_id;
    std::size_t array_size = 0;
    std::size_t measure_index = 0;
    double cost = 0.0; //!< per iteration (single) or per block (inrow); may be negative
    CostUnit unit = CostUnit::Nanoseconds;

    friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

inline constexpr std::size_t kDefaultEvictBytes = std::size_t{32} << 20;

namespace detail {

//! Keeps check results observable so the optimizer cannot drop the sorts.
inline volatile std::uint64_t side_effect_sink = 0;

[[noreturn]] void report_bad_sort(std::size_t array_size, bool unsorted);

//! Throws CorrectnessError naming the first block that differs from the
//! reference (compared by key order and by (key, reference) multiset).
void check_arrays_for_equality(std::span<const Element> result,
                               std::span<const Element> reference, std::size_t array_size);

} // namespace detail

template <typename Sorter>
double measure_single_once(const Sorter& sorter, std::size_t array_size, std::size_t iterations,
                           std::uint64_t seed, CostCounter& counter) {
    if (iterations == 0) throw ParameterError("iterations must be at least 1");
    std::vector<Element> storage(array_size);
    const std::span<Element> arr(storage);
    Minstd rng(seed);
    std::uint64_t side = 0;

    const auto generate = [&] {
        generate_random_array(arr, rng);
        return make_fingerprint(arr, rng.next());
    };
    const auto verify = [&](const PermutationFingerprint& fp) {
        const bool sorted = check_sorted(arr);
        if (!sorted || !fp.matches(arr)) detail::report_bad_sort(array_size, !sorted);
        side += sorted;
    };

    {
        const PermutationFingerprint fp = generate();
        sorter(arr);
        verify(fp);
    }

    counter.start();
    for (std::size_t i = 0; i < iterations; ++i) {
        const PermutationFingerprint fp = generate();
        sorter(arr);
        verify(fp);
    }
    const std::int64_t with_sort = counter.stop();

    rng.set_seed(seed);
    counter.start();
    for (std::size_t i = 0; i < iterations; ++i) {
        const PermutationFingerprint fp = generate();
        side += simulate_check_sorted(arr);
        side += fp.matches(arr);
    }
    const std::int64_t baseline = counter.stop();

    detail::side_effect_sink = detail::side_effect_sink + side;
    return static_cast<double>(with_sort - baseline) / static_cast<double>(iterations);
}

//! One record per measure; measure m uses the m-th seed of measure_seeds.
template <typename Sorter>
std::vector<MeasurementRecord> measure_single(const std::string& sorter_id, const Sorter& sorter,
                                              std::size_t array_size, std::size_t iterations,
                                              std::size_t measures, std::uint64_t seed,
                                              CostCounter& counter) {
    if (measures == 0) throw ParameterError("measures must be at least 1");
    std::vector<MeasurementRecord> records;
    records.reserve(measures);
    const std::vector<std::uint64_t> seeds = measure_seeds(seed, measures);
    for (std::size_t m = 0; m < measures; ++m) {
        const double cost = measure_single_once(sorter, array_size, iterations, seeds[m], counter);
        records.push_back({sorter_id, array_size, m, cost, counter.unit()});
    }
    return records;
}

//! Smallest block count whose total footprint exceeds evict_bytes.
constexpr std::size_t inrow_array_count(std::size_t array_size, std::size_t evict_bytes) {
    const std::size_t block_bytes = (array_size == 0 ? 1 : array_size) * sizeof(Element);
    return evict_bytes / block_bytes + 1;
}

//! Cost per block. ParameterError unless number_of_arrays * array_size
//! elements exceed evict_bytes.
template <typename Sorter>
double measure_inrow(const Sorter& sorter, std::size_t array_size, std::size_t number_of_arrays,
                     std::uint64_t seed, CostCounter& counter,
                     std::size_t evict_bytes = kDefaultEvictBytes) {
    if (array_size == 0 || number_of_arrays == 0)
        throw ParameterError("in-row benchmark needs at least one non-empty block");
    const std::size_t total = array_size * number_of_arrays;
    if (total * sizeof(Element) <= evict_bytes) {
        throw ParameterError("in-row region of " + std::to_string(total * sizeof(Element)) +
                             " bytes does not exceed the eviction threshold of " +
                             std::to_string(evict_bytes) + " bytes");
    }

    Minstd rng(seed);
    std::vector<Element> arr(total);
    generate_random_array(arr, rng);
    std::vector<Element> reference(arr);
    for (std::size_t b = 0; b < number_of_arrays; ++b) {
        Element* block = reference.data() + b * array_size;
        std::sort(block, block + array_size, [](const Element& x, const Element& y) {
            return x.key < y.key || (x.key == y.key && x.reference < y.reference);
        });
    }

    {
        Minstd warm_rng(seed);
        std::vector<Element> warm(array_size);
        generate_random_array(warm, warm_rng);
        sorter(std::span<Element>(warm));
        detail::side_effect_sink = detail::side_effect_sink + check_sorted(warm);
    }

    counter.start();
    for (std::size_t b = 0; b < number_of_arrays; ++b)
        sorter(std::span<Element>(arr.data() + b * array_size, array_size));
    const std::int64_t cost = counter.stop();

    detail::check_arrays_for_equality(arr, reference, array_size);
    return static_cast<double>(cost) / static_cast<double>(number_of_arrays);
}

//! A sorter bound into both benchmark loops, so the timed code calls the
//! concrete sorter type directly.
struct BenchSorter {
    std::string id;
    std::function<double(std::size_t array_size, std::size_t iterations, std::uint64_t seed,
                         CostCounter& counter)>
        single;
    std::function<double(std::size_t array_size, std::size_t number_of_arrays,
                         std::uint64_t seed, CostCounter& counter, std::size_t evict_bytes)>
        inrow;
};

template <typename Sorter>
BenchSorter make_bench_sorter(std::string id, Sorter sorter) {
    BenchSorter out;
    out.id = std::move(id);
    out.single = [sorter](std::size_t n, std::size_t iterations, std::uint64_t seed,
                          CostCounter& counter) {
        return measure_single_once(sorter, n, iterations, seed, counter);
    };
    out.inrow = [sorter](std::size_t n, std::size_t arrays, std::uint64_t seed,
                         CostCounter& counter, std::size_t evict_bytes) {
        return measure_inrow(sorter, n, arrays, seed, counter, evict_bytes);
    };
    return out;
}

//! For every size and measure, runs each sorter once on the same seed.
std::vector<MeasurementRecord> run_single(std::span<const BenchSorter> sorters,
                                          std::span<const std::size_t> sizes,
                                          std::size_t iterations, std::size_t measures,
                                          std::uint64_t seed, CostCounter& counter);

std::vector<MeasurementRecord> run_inrow(std::span<const BenchSorter> sorters,
                                         std::span<const std::size_t> sizes,
                                         std::size_t measures, std::uint64_t seed,
                                         CostCounter& counter, std::size_t evict_bytes);

} // namespace smallsort::bench
