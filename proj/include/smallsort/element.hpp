#pragma once

#include <cstdint>

namespace smallsort {

//! Sortable record: ordered by key only, the reference travels with it.
struct Element {
    std::uint64_t key = 0;
    std::uint64_t reference = 0;

    friend constexpr bool operator==(const Element&, const Element&) = default;
};

static_assert(sizeof(Element) == 16, "Element must stay two packed words");

constexpr bool key_less(const Element& a, const Element& b) noexcept {
    return a.key < b.key;
}

} // namespace smallsort
