#pragma once

// Constexpr building blocks shared by the runtime network generator and the
// compile-time network tables.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "smallsort/comparator.hpp"

namespace smallsort::detail {

//! Bose-Nelson merge of the sorted runs [i, i+x) and [j, j+y).
template <typename Sink>
constexpr void bose_nelson_merge(std::uint32_t i, std::uint32_t x,
                                 std::uint32_t j, std::uint32_t y, Sink& sink) {
    if (x == 1 && y == 1) {
        sink(Comparator{i, j});
    }
    else if (x == 1 && y == 2) {
        sink(Comparator{i, j + 1});
        sink(Comparator{i, j});
    }
    else if (x == 2 && y == 1) {
        sink(Comparator{i, j});
        sink(Comparator{i + 1, j});
    }
    else {
        const std::uint32_t a = x / 2;
        const std::uint32_t b = (x & 1) ? y / 2 : (y + 1) / 2;
        bose_nelson_merge(i, a, j, b, sink);
        bose_nelson_merge(i + a, x - a, j + b, y - b, sink);
        bose_nelson_merge(i + a, x - a, j, b, sink);
    }
}

//! Emits [sort first half][sort second half][merge], first half = floor(n/2).
template <typename Sink>
constexpr void bose_nelson_sort(std::uint32_t first, std::uint32_t count, Sink& sink) {
    if (count < 2) return;
    const std::uint32_t half = count / 2;
    bose_nelson_sort(first, half, sink);
    bose_nelson_sort(first + half, count - half, sink);
    bose_nelson_merge(first, half, first + half, count - half, sink);
}

//! Greedy earliest-fit level of each comparator (1-based); returns the level
//! count. `channel_level` must hold one zeroed slot per channel.
constexpr std::size_t assign_levels(std::span<const Comparator> comparators,
                                    std::span<std::uint32_t> channel_level,
                                    std::span<std::uint32_t> level_of) {
    std::size_t depth = 0;
    for (std::size_t k = 0; k < comparators.size(); ++k) {
        const Comparator c = comparators[k];
        const std::uint32_t lo_level = channel_level[c.lo];
        const std::uint32_t hi_level = channel_level[c.hi];
        const std::uint32_t level = (lo_level > hi_level ? lo_level : hi_level) + 1;
        channel_level[c.lo] = level;
        channel_level[c.hi] = level;
        level_of[k] = level;
        if (level > depth) depth = level;
    }
    return depth;
}

//! Fixed-capacity comparator buffer usable in constant evaluation.
template <std::size_t Capacity>
struct FixedComparators {
    std::array<Comparator, Capacity> items{};
    std::size_t count = 0;

    constexpr void operator()(Comparator c) { items[count++] = c; }

    constexpr std::span<const Comparator> view() const {
        return {items.data(), count};
    }
};

inline constexpr std::size_t kMaxStaticChannels = 32;
inline constexpr std::size_t kMaxStaticComparators = 256;

using StaticBuffer = FixedComparators<kMaxStaticComparators>;

constexpr StaticBuffer bose_nelson_locality(std::uint32_t n) {
    StaticBuffer out;
    bose_nelson_sort(0, n, out);
    return out;
}

//! Re-emits the comparators level by level, keeping input order inside a level.
constexpr StaticBuffer order_by_levels(const StaticBuffer& in, std::uint32_t n) {
    std::array<std::uint32_t, kMaxStaticChannels> channel_level{};
    std::array<std::uint32_t, kMaxStaticComparators> level_of{};
    const std::size_t depth = assign_levels(
        in.view(), std::span(channel_level.data(), n), level_of);
    StaticBuffer out;
    for (std::uint32_t level = 1; level <= depth; ++level) {
        for (std::size_t k = 0; k < in.count; ++k) {
            if (level_of[k] == level) out(in.items[k]);
        }
    }
    return out;
}

constexpr StaticBuffer bose_nelson_parallelism(std::uint32_t n) {
    return order_by_levels(bose_nelson_locality(n), n);
}

} // namespace smallsort::detail
