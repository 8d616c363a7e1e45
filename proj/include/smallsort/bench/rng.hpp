#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smallsort/element.hpp"

namespace smallsort::bench {

//! Lehmer generator with multiplier 48271 modulo 2^31 - 1 (minstd_rand).
//! Each call returns the new seed, so outputs lie in [1, 2^31 - 2].
class Minstd
{
public:
    static constexpr std::uint64_t kMultiplier = 48271;
    static constexpr std::uint64_t kModulus = 2147483647;

    //! ParameterError unless 0 < seed < 2^31 - 1.
    explicit Minstd(std::uint64_t seed);

    std::uint64_t next() noexcept {
        seed_ = seed_ * kMultiplier % kModulus;
        return seed_;
    }

    void set_seed(std::uint64_t seed);
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
};

//! One step of the recurrence; ParameterError on an invalid seed.
std::uint64_t minstd_next(std::uint64_t seed);

//! Keys are raw generator outputs, references are positions 0..n-1.
inline void generate_random_array(std::span<Element> data, Minstd& rng) noexcept {
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = Element{rng.next(), i};
}

//! Seeds for measures 0..count-1: successive outputs of a generator started
//! at `seed`.
std::vector<std::uint64_t> measure_seeds(std::uint64_t seed, std::size_t count);

} // namespace smallsort::bench
