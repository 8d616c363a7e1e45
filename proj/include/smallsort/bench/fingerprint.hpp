#pragma once

// Probabilistic permutation check: v = prod (z - a_i) mod p over the keys.
// Different v proves the key multisets differ; equal v is taken as a match.

#include <cstdint>
#include <span>

#include "smallsort/element.hpp"

namespace smallsort::bench {

inline constexpr std::uint64_t kFingerprintPrime = (std::uint64_t{1} << 61) - 1;

namespace detail {

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t mulmod_mersenne61(std::uint64_t a, std::uint64_t b) noexcept {
    const uint128 product = static_cast<uint128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(product & kFingerprintPrime) +
                      static_cast<std::uint64_t>(product >> 61);
    if (r >= kFingerprintPrime) r -= kFingerprintPrime;
    return r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p);
}

} // namespace detail

//! prod (z - key_i) mod p, each factor reduced into [0, p).
inline std::uint64_t permutation_fingerprint(std::span<const Element> data, std::uint64_t z,
                                             std::uint64_t p = kFingerprintPrime) noexcept {
    const std::uint64_t zr = z % p;
    std::uint64_t v = 1 % p;
    if (p == kFingerprintPrime) {
        for (const Element& e : data) {
            const std::uint64_t a = e.key % p;
            v = detail::mulmod_mersenne61(v, zr >= a ? zr - a : zr + (p - a));
        }
    }
    else {
        for (const Element& e : data) {
            const std::uint64_t a = e.key % p;
            v = detail::mulmod(v, zr >= a ? zr - a : zr + (p - a), p);
        }
    }
    return v;
}

struct PermutationFingerprint {
    std::uint64_t z = 0;
    std::uint64_t p = kFingerprintPrime;
    std::uint64_t v = 1;

    bool matches(std::span<const Element> data) const noexcept {
        return permutation_fingerprint(data, z, p) == v;
    }
};

//! Starts at z and increments it until the product is nonzero.
inline PermutationFingerprint make_fingerprint(std::span<const Element> data, std::uint64_t z,
                                               std::uint64_t p = kFingerprintPrime) noexcept {
    PermutationFingerprint fp{z, p, permutation_fingerprint(data, z, p)};
    while (fp.v == 0) {
        ++fp.z;
        fp.v = permutation_fingerprint(data, fp.z, p);
    }
    return fp;
}

inline bool check_sorted(std::span<const Element> data) noexcept {
    for (std::size_t i = 1; i < data.size(); ++i) {
        if (data[i].key < data[i - 1].key) return false;
    }
    return true;
}

//! Same pass as check_sorted but tests adjacent keys for equality; used as
//! the cost-matched baseline. True if any adjacent pair is equal.
inline bool simulate_check_sorted(std::span<const Element> data) noexcept {
    bool equal = false;
    for (std::size_t i = 1; i < data.size(); ++i) {
        if (data[i].key == data[i - 1].key) equal = true;
    }
    return equal;
}

} // namespace smallsort::bench
