#include "smallsort/bench/rng.hpp"

#include <string>

#include "smallsort/error.hpp"

namespace smallsort::bench {

namespace {

void check_seed(std::uint64_t seed) {
    if (seed == 0 || seed >= Minstd::kModulus)
        throw ParameterError("minstd seed must be in [1, 2147483646], got " + std::to_string(seed));
}

} // namespace

Minstd::Minstd(std::uint64_t seed) : seed_(seed) { check_seed(seed); }

void Minstd::set_seed(std::uint64_t seed) {
    check_seed(seed);
    seed_ = seed;
}

std::uint64_t minstd_next(std::uint64_t seed) {
    Minstd rng(seed);
    return rng.next();
}

std::vector<std::uint64_t> measure_seeds(std::uint64_t seed, std::size_t count) {
    Minstd rng(seed);
    std::vector<std::uint64_t> seeds(count);
    for (auto& s : seeds) s = rng.next();
    return seeds;
}

} // namespace smallsort::bench
