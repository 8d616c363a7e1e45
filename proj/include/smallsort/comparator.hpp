#pragma once

#include <cstdint>

namespace smallsort {

//! A comparator between two channels of a network, lo < hi.
struct Comparator {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;

    friend constexpr bool operator==(const Comparator&, const Comparator&) = default;
    friend constexpr auto operator<=>(const Comparator&, const Comparator&) = default;
};

} // namespace smallsort
