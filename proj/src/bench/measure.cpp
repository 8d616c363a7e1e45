#include "smallsort/bench/measure.hpp"

#include <algorithm>

namespace smallsort::bench {

namespace detail {

void report_bad_sort(std::size_t array_size, bool unsorted) {
    throw CorrectnessError(std::string(unsorted ? "array not sorted" : "array is not a permutation "
                                                                        "of its input") +
                           " (size " + std::to_string(array_size) + ")");
}

void check_arrays_for_equality(std::span<const Element> result,
                               std::span<const Element> reference, std::size_t array_size) {
    if (result.size() != reference.size())
        throw CorrectnessError("result and reference regions differ in size");
    const auto lexicographic = [](const Element& x, const Element& y) {
        return x.key < y.key || (x.key == y.key && x.reference < y.reference);
    };
    std::vector<Element> block(array_size);
    for (std::size_t b = 0; b * array_size < result.size(); ++b) {
        const auto got = result.subspan(b * array_size, array_size);
        const auto want = reference.subspan(b * array_size, array_size);
        bool ok = std::equal(got.begin(), got.end(), want.begin(),
                             [](const Element& x, const Element& y) { return x.key == y.key; });
        if (ok) {
            std::copy(got.begin(), got.end(), block.begin());
            std::sort(block.begin(), block.end(), lexicographic);
            ok = std::equal(block.begin(), block.end(), want.begin());
        }
        if (!ok) {
            throw CorrectnessError("block " + std::to_string(b) + " (elements " +
                                   std::to_string(b * array_size) + ".." +
                                   std::to_string((b + 1) * array_size - 1) +
                                   ") differs from the reference");
        }
    }
}

} // namespace detail

std::vector<MeasurementRecord> run_single(std::span<const BenchSorter> sorters,
                                          std::span<const std::size_t> sizes,
                                          std::size_t iterations, std::size_t measures,
                                          std::uint64_t seed, CostCounter& counter) {
    std::vector<MeasurementRecord> records;
    const std::vector<std::uint64_t> seeds = measure_seeds(seed, measures);
    for (std::size_t n : sizes) {
        for (std::size_t m = 0; m < measures; ++m) {
            for (const BenchSorter& sorter : sorters) {
                const double cost = sorter.single(n, iterations, seeds[m], counter);
                records.push_back({sorter.id, n, m, cost, counter.unit()});
            }
        }
    }
    return records;
}

std::vector<MeasurementRecord> run_inrow(std::span<const BenchSorter> sorters,
                                         std::span<const std::size_t> sizes,
                                         std::size_t measures, std::uint64_t seed,
                                         CostCounter& counter, std::size_t evict_bytes) {
    std::vector<MeasurementRecord> records;
    const std::vector<std::uint64_t> seeds = measure_seeds(seed, measures);
    for (std::size_t n : sizes) {
        const std::size_t arrays = inrow_array_count(n, evict_bytes);
        for (std::size_t m = 0; m < measures; ++m) {
            for (const BenchSorter& sorter : sorters) {
                const double cost = sorter.inrow(n, arrays, seeds[m], counter, evict_bytes);
                records.push_back({sorter.id, n, m, cost, counter.unit()});
            }
        }
    }
    return records;
}

} // namespace smallsort::bench
