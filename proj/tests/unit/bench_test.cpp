#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "smallsort/bench/catalog.hpp"
#include "smallsort/bench/counter.hpp"
#include "smallsort/bench/fingerprint.hpp"
#include "smallsort/bench/measure.hpp"
#include "smallsort/bench/rng.hpp"
#include "smallsort/error.hpp"
#include "smallsort/small_sort.hpp"
#include "test_support.hpp"

using namespace smallsort;
using namespace smallsort::bench;

namespace {

struct NoopSorter {
    void operator()(std::span<Element>) const {}
};

struct InsertionSorter {
    void operator()(std::span<Element> d) const { insertion_sort_guarded(d); }
};

} // namespace

TEST(Rng, RecurrenceFixtures) {
    EXPECT_EQ(minstd_next(1), 48271u);
    EXPECT_EQ(minstd_next(48271), 182605794u);
    Minstd rng(1);
    EXPECT_EQ(rng.next(), 48271u);
    EXPECT_EQ(rng.next(), 182605794u);
}

TEST(Rng, MatchesStandardLibraryGenerator) {
    std::minstd_rand reference(12345);
    Minstd rng(12345);
    for (int i = 0; i < 100000; ++i) ASSERT_EQ(rng.next(), reference());
}

TEST(Rng, NoZeroInFirstMillionOutputs) {
    Minstd rng(1);
    for (int i = 0; i < 1000000; ++i) ASSERT_NE(rng.next(), 0u);
}

TEST(Rng, InvalidSeeds) {
    EXPECT_THROW(Minstd(0), ParameterError);
    EXPECT_THROW(Minstd(2147483647), ParameterError);
    EXPECT_THROW(minstd_next(0), ParameterError);
    Minstd rng(5);
    EXPECT_THROW(rng.set_seed(0), ParameterError);
}

TEST(Rng, ArraysAreDeterministicWithSequentialReferences) {
    Minstd a(77), b(77);
    std::vector<Element> x(20), y(20);
    generate_random_array(x, a);
    generate_random_array(y, b);
    EXPECT_EQ(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(x[i].reference, i);
    EXPECT_EQ(measure_seeds(3, 4), measure_seeds(3, 4));
    EXPECT_EQ(measure_seeds(1, 2), (std::vector<std::uint64_t>{48271, 182605794}));
}

TEST(Fingerprint, SmallPrimeExample) {
    const std::vector<Element> keys = {{3, 0}, {5, 1}};
    EXPECT_EQ(permutation_fingerprint(keys, 1, 7), 1u);
}

TEST(Fingerprint, InvariantUnderAllPermutations) {
    std::vector<Element> base = {{17, 0}, {4, 1}, {4, 2}, {99, 3}, {123456789, 4}};
    const std::uint64_t want = permutation_fingerprint(base, 1000);
    std::vector<std::size_t> idx(base.size());
    std::iota(idx.begin(), idx.end(), 0);
    int count = 0;
    do {
        std::vector<Element> perm;
        for (std::size_t i : idx) perm.push_back(base[i]);
        EXPECT_EQ(permutation_fingerprint(perm, 1000), want);
        ++count;
    } while (std::next_permutation(idx.begin(), idx.end()));
    EXPECT_EQ(count, 120);
}

TEST(Fingerprint, DetectsSingleKeyChangeAcrossProbes) {
    const std::vector<Element> a = {{3, 0}, {5, 1}};
    const std::vector<Element> b = {{3, 0}, {6, 1}};
    for (std::uint64_t z = 1; z <= 100; ++z) {
        const PermutationFingerprint fp = make_fingerprint(a, z);
        EXPECT_NE(fp.v, 0u);
        EXPECT_TRUE(fp.matches(a));
        EXPECT_FALSE(fp.matches(b)) << "z=" << z;
    }
}

TEST(Fingerprint, ZeroProductAdvancesZ) {
    const std::vector<Element> keys = {{3, 0}, {5, 1}};
    const PermutationFingerprint fp = make_fingerprint(keys, 3);
    EXPECT_EQ(fp.z, 4u);
    EXPECT_EQ(fp.v, permutation_fingerprint(keys, 4));
}

TEST(Fingerprint, LargeKeysAgreeWithGenericReduction) {
    std::mt19937_64 gen(21);
    for (int i = 0; i < 200; ++i) {
        const auto data = oracle::random_elements(9, gen);
        const std::uint64_t z = gen();
        std::uint64_t v = 1;
        for (const Element& e : data) {
            const std::uint64_t zr = z % kFingerprintPrime;
            const std::uint64_t a = e.key % kFingerprintPrime;
            v = bench::detail::mulmod(v, (zr + kFingerprintPrime - a) % kFingerprintPrime,
                               kFingerprintPrime);
        }
        EXPECT_EQ(permutation_fingerprint(data, z), v);
    }
}

TEST(Fingerprint, SortedChecks) {
    const std::vector<Element> a = {{1, 0}, {2, 0}, {2, 0}, {3, 0}};
    EXPECT_TRUE(check_sorted(a));
    EXPECT_TRUE(simulate_check_sorted(a));
    const std::vector<Element> b = {{2, 0}, {1, 0}};
    EXPECT_FALSE(check_sorted(b));
    EXPECT_FALSE(simulate_check_sorted(b));
    EXPECT_TRUE(check_sorted(std::vector<Element>{}));
}

TEST(Fingerprint, FreshArraysHaveNoAdjacentDuplicates) {
    Minstd rng(9);
    std::vector<Element> arr(16);
    int hits = 0;
    for (int i = 0; i < 10000; ++i) {
        generate_random_array(arr, rng);
        hits += simulate_check_sorted(arr);
    }
    EXPECT_EQ(hits, 0);
}

TEST(Counter, FakeCounterSequence) {
    FakeCounter c;
    std::vector<std::int64_t> got;
    for (int k = 0; k < 24; ++k) {
        c.start();
        got.push_back(c.stop());
    }
    EXPECT_EQ(got[0], 2000);
    EXPECT_EQ(got[1], 1000);
    EXPECT_EQ(got[2], 2037);
    EXPECT_EQ(got[20], 2370);
    EXPECT_EQ(got[22], 2000);
    EXPECT_EQ(got[23], 1000);
    EXPECT_EQ(c.unit(), CostUnit::Fake);
}

TEST(Counter, ChoicesAndUnits) {
    EXPECT_EQ(parse_counter_choice("fake"), CounterChoice::Fake);
    EXPECT_EQ(parse_counter_choice("clock"), CounterChoice::Clock);
    EXPECT_EQ(parse_counter_choice("cycles"), CounterChoice::Cycles);
    EXPECT_THROW(parse_counter_choice("tsc"), ParseError);
    EXPECT_EQ(make_counter(CounterChoice::Clock)->unit(), CostUnit::Nanoseconds);
    const auto cycles = make_counter(CounterChoice::Cycles);
    EXPECT_EQ(cycles->unit() == CostUnit::Cycles,
              hardware_counter_available(PerfEvent::Cycles));
    for (CostUnit u : {CostUnit::Cycles, CostUnit::Nanoseconds, CostUnit::Fake})
        EXPECT_EQ(parse_unit(unit_name(u)), u);
}

TEST(Counter, ClockIsMonotonic) {
    ClockCounter c;
    c.start();
    volatile std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i) x = x + static_cast<std::uint64_t>(i);
    EXPECT_GE(c.stop(), 0);
}

TEST(Measure, FakeCounterCostIsDifferenceOverIterations) {
    FakeCounter counter;
    const double cost = measure_single_once(InsertionSorter{}, 8, 10, 1, counter);
    EXPECT_DOUBLE_EQ(cost, (2000.0 - 1000.0) / 10.0);
}

TEST(Measure, RecordCountAndUnits) {
    FakeCounter counter;
    const auto records = measure_single("x", InsertionSorter{}, 5, 3, 7, 1, counter);
    ASSERT_EQ(records.size(), 7u);
    for (std::size_t m = 0; m < records.size(); ++m) {
        EXPECT_EQ(records[m].measure_index, m);
        EXPECT_EQ(records[m].array_size, 5u);
        EXPECT_EQ(records[m].unit, CostUnit::Fake);
    }
}

TEST(Measure, UnsortedOutputIsRejected) {
    FakeCounter counter;
    EXPECT_THROW(measure_single_once(NoopSorter{}, 8, 5, 1, counter), CorrectnessError);
}

TEST(Measure, NonPermutationIsRejected) {
    FakeCounter counter;
    const auto zeroing = [](std::span<Element> d) {
        for (Element& e : d) e.key = 0;
    };
    EXPECT_THROW(measure_single_once(zeroing, 8, 5, 1, counter), CorrectnessError);
}

TEST(Measure, InvalidParameters) {
    FakeCounter counter;
    EXPECT_THROW(measure_single_once(InsertionSorter{}, 4, 0, 1, counter), ParameterError);
    EXPECT_THROW(measure_single("x", InsertionSorter{}, 4, 1, 0, 1, counter), ParameterError);
}

TEST(Measure, SortersSeeIdenticalKeySequences) {
    const auto capture = [](std::vector<std::uint64_t>* seen) {
        return [seen](std::span<Element> d) {
            seen->push_back(permutation_fingerprint(d, 1234567));
            insertion_sort_guarded(d);
        };
    };
    std::vector<std::uint64_t> a, b;
    FakeCounter c1, c2;
    measure_single("a", capture(&a), 12, 4, 3, 99, c1);
    measure_single("b", capture(&b), 12, 4, 3, 99, c2);
    EXPECT_EQ(a.size(), 3u * 5u);
    EXPECT_EQ(a, b);
}

TEST(Measure, EmptySorterCostIsNearZero) {
    ClockCounter counter;
    std::vector<double> costs;
    for (std::uint64_t seed = 1; seed <= 500; ++seed)
        costs.push_back(measure_single_once(NoopSorter{}, 1, 100, seed, counter));
    const double mean = std::accumulate(costs.begin(), costs.end(), 0.0) / costs.size();
    double var = 0.0;
    for (double c : costs) var += (c - mean) * (c - mean);
    const double stderr_mean = std::sqrt(var / (costs.size() - 1) / costs.size());
    // noise floor: three standard errors plus a couple of nanoseconds of bias
    EXPECT_LE(std::abs(mean), 3.0 * stderr_mean + 2.0) << "mean " << mean;
}

TEST(Measure, InrowSortsAllBlocks) {
    FakeCounter counter;
    const std::size_t n = 8, arrays = 1000000 / 8;
    const double cost = measure_inrow(InsertionSorter{}, n, arrays, 5, counter, 1 << 20);
    EXPECT_DOUBLE_EQ(cost, 2000.0 / arrays);
    EXPECT_NO_THROW(measure_inrow(NoopSorter{}, 1, 2000, 5, counter, 1000));
}

TEST(Measure, InrowNamesFirstBadBlock) {
    FakeCounter counter;
    std::size_t call = 0;
    const auto skip_third = [&call](std::span<Element> d) {
        // call 0 is the warm-up
        if (call++ != 3) insertion_sort_guarded(d);
    };
    try {
        measure_inrow(skip_third, 8, 200, 5, counter, 1000);
        FAIL() << "expected a correctness error";
    } catch (const CorrectnessError& e) {
        EXPECT_NE(std::string(e.what()).find("block 2 "), std::string::npos) << e.what();
    }
}

TEST(Measure, InrowRequiresRegionAboveThreshold) {
    FakeCounter counter;
    // 10 blocks of 8 elements occupy exactly 1280 bytes
    EXPECT_THROW(measure_inrow(InsertionSorter{}, 8, 10, 1, counter, 1280), ParameterError);
    EXPECT_NO_THROW(measure_inrow(InsertionSorter{}, 8, 11, 1, counter, 1280));
    EXPECT_EQ(inrow_array_count(8, 1280), 11u);
    EXPECT_GT(inrow_array_count(16, kDefaultEvictBytes) * 16 * sizeof(Element),
              kDefaultEvictBytes);
}

TEST(Measure, RunSingleIsDeterministicWithFakeCounter) {
    const NetworkKind kinds[] = {NetworkKind::Best};
    const SwapStrategy strategies[] = {SwapStrategy::FourSelectSplit};
    const auto sorters = small_sorters(kinds, strategies, "-N");
    ASSERT_EQ(sorters.size(), 3u);
    EXPECT_EQ(sorters[0].id, "I -N KR Grd");
    EXPECT_EQ(sorters[1].id, "I -N KR Ung");
    EXPECT_EQ(sorters[2].id, "N Best -N KR 4CS");
    const std::size_t sizes[] = {2, 3};
    FakeCounter c1, c2;
    const auto a = run_single(sorters, sizes, 5, 4, 7, c1);
    const auto b = run_single(sorters, sizes, 5, 4, 7, c2);
    EXPECT_EQ(a.size(), 3u * 2u * 4u);
    EXPECT_EQ(a, b);
}

TEST(Catalog, FamiliesSortCorrectly) {
    const NetworkKind kinds[] = {NetworkKind::Best, NetworkKind::BoseNelsonParallelism};
    const SwapStrategy strategies[] = {SwapStrategy::SlotSelect, SwapStrategy::BranchIf};
    FakeCounter counter;
    for (const BenchSorter& s : quicksort_sorters(kinds, strategies))
        EXPECT_NO_THROW(s.single(500, 2, 3, counter)) << s.id;
    const auto samples = sample_sorters(SampleSortConfig{}, kinds, strategies);
    EXPECT_EQ(samples[1].id, "I -S332 KR Grd");
    EXPECT_EQ(samples[2].id, "N Best -S332 KR Cla");
    for (const BenchSorter& s : samples) EXPECT_NO_THROW(s.single(256, 2, 3, counter)) << s.id;
    const auto inrow = small_sorters(kinds, strategies, "-I");
    for (const BenchSorter& s : inrow) EXPECT_NO_THROW(s.inrow(4, 100, 3, counter, 1000)) << s.id;
}
