#include <gtest/gtest.h>

#include <random>

#include "smallsort/error.hpp"
#include "smallsort/small_sort.hpp"
#include "test_support.hpp"

using namespace smallsort;

namespace {

constexpr NetworkKind kKinds[] = {NetworkKind::Best, NetworkKind::BoseNelsonLocality,
                                  NetworkKind::BoseNelsonParallelism};

const SmallSorterId kAllSorters[] = {
    SmallSorterId::InsertionGuarded, SmallSorterId::InsertionUnguarded,
    SmallSorterId::NetworkBest, SmallSorterId::NetworkBoseNelsonLocality,
    SmallSorterId::NetworkBoseNelsonParallelism};

} // namespace

TEST(SmallSort, EveryKindAndStrategySortsSizesUpToForty) {
    std::mt19937_64 gen(1);
    for (NetworkKind kind : kKinds) {
        for (SwapStrategy s : kAllSwapStrategies) {
            for (std::size_t n = 0; n <= 40; ++n) {
                for (std::uint64_t range : {std::uint64_t{0}, std::uint64_t{3}}) {
                    const auto input = oracle::random_elements(n, gen, range);
                    auto data = input;
                    sort_small(data, kind, s);
                    ASSERT_TRUE(oracle::sorts_exactly(input, data))
                        << network_code(kind) << " " << swap_code(s) << " n=" << n;
                }
            }
        }
    }
}

TEST(SmallSort, InsertionSortsHandleDuplicatesAndOrderings) {
    std::mt19937_64 gen(2);
    for (std::size_t n = 0; n <= 64; ++n) {
        for (int variant = 0; variant < 4; ++variant) {
            auto input = oracle::random_elements(n, gen, variant == 3 ? 2 : 0);
            if (variant == 1) std::sort(input.begin(), input.end(), oracle::lexicographic_less);
            if (variant == 2) {
                std::sort(input.begin(), input.end(), oracle::lexicographic_less);
                std::reverse(input.begin(), input.end());
            }
            auto a = input;
            insertion_sort_guarded(a);
            EXPECT_TRUE(oracle::sorts_exactly(input, a));
            auto b = input;
            insertion_sort_unguarded(b);
            EXPECT_TRUE(oracle::sorts_exactly(input, b));
        }
    }
}

TEST(SmallSort, GuardedInsertionIsStable) {
    std::mt19937_64 gen(3);
    auto data = oracle::random_elements(50, gen, 4);
    insertion_sort_guarded(data);
    for (std::size_t i = 1; i < data.size(); ++i) {
        if (data[i - 1].key == data[i].key) EXPECT_LT(data[i - 1].reference, data[i].reference);
    }
}

TEST(SmallSort, DispatcherUsesNetworkUpToSixteen) {
    std::mt19937_64 gen(4);
    for (std::size_t n = 2; n <= 17; ++n) {
        const auto input = oracle::random_elements(n, gen);
        auto data = input;
        std::uint64_t count = 0;
        sort_small<NetworkKind::Best>(data, CountingSwap<SwapBranchIf>{{}, &count});
        EXPECT_TRUE(oracle::sorts_exactly(input, data));
        if (n <= kSmallSortThreshold)
            EXPECT_EQ(count, best_network(n).length()) << "n=" << n;
        else
            EXPECT_EQ(count, 0u) << "n=" << n;
    }
}

TEST(SmallSort, DirectNetworkRejectsSeventeen) {
    std::vector<Element> data(17);
    EXPECT_THROW(sort_network<NetworkKind::Best>(data, SwapBranchIf{}), SizeError);
}

TEST(SmallSort, SpecDispatchSortsAndPrefixes) {
    std::mt19937_64 gen(5);
    for (SmallSorterId id : kAllSorters) {
        for (std::size_t n = 0; n <= 20; ++n) {
            const auto input = oracle::random_elements(n, gen, 6);
            auto data = input;
            sort_small(data, SmallSorterChoice{id, SwapStrategy::SixSelect});
            EXPECT_TRUE(oracle::sorts_exactly(input, data));
        }
    }
    EXPECT_EQ(small_sorter_prefix(SmallSorterId::InsertionGuarded), "I");
    EXPECT_EQ(small_sorter_prefix(SmallSorterId::NetworkBest), "N Best");
    EXPECT_EQ(small_sorter_prefix(SmallSorterId::NetworkBoseNelsonParallelism), "N BoNeP");
    for (NetworkKind kind : kKinds) EXPECT_EQ(network_kind_of(small_sorter_for(kind)), kind);
}
