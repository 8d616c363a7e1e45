#pragma once

// Register Sample Sort: sample sort for inputs up to a few hundred elements
// with three splitters kept in scalar variables. An element is classified with
// two comparisons against a two-level splitter tree: the first compares with
// the middle splitter, its outcome selects (without branching) the splitter
// for the second comparison and becomes the high bit of the bucket index.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smallsort/element.hpp"
#include "smallsort/error.hpp"
#include "smallsort/small_sort.hpp"
#include "smallsort/swaps.hpp"

namespace smallsort {

struct SampleSortConfig {
    std::size_t splitter_count = 3;
    std::size_t oversampling = 3;
    std::size_t block_size = 2;
    std::size_t base_case_limit = 16;

    //! ParameterError unless splitters == 3, oversampling >= 1 and
    //! block_size in [1,5].
    void validate() const;
};

//! Parses "xyz", "Sxyz" or "-Sxyz" (x splitters, y oversampling, z block size).
SampleSortConfig parse_sample_sort_config(std::string_view text);

//! "xyz" form of the config.
std::string sample_sort_config_code(const SampleSortConfig& cfg);

struct SplitterSet {
    std::uint64_t s0 = 0;
    std::uint64_t s1 = 0;
    std::uint64_t s2 = 0;

    friend constexpr bool operator==(const SplitterSet&, const SplitterSet&) = default;
};

inline constexpr std::size_t kBucketCount = 4;

struct KeyLessU64 {
    bool operator()(std::uint64_t a, std::uint64_t b) const noexcept { return a < b; }
};

//! Bucket j holds keys with s_{j-1} < key <= s_j.
template <typename Less = KeyLessU64>
inline unsigned classify_element(std::uint64_t key, const SplitterSet& s,
                                 const Less& less = Less{}) noexcept {
    const bool p1 = less(s.s1, key);
    const std::uint64_t splitterx = detail::blend(detail::flag_mask(p1), s.s2, s.s0);
    const bool p2 = less(splitterx, key);
    return (static_cast<unsigned>(p1) << 1) + static_cast<unsigned>(p2);
}

//! Four buckets carved out of one buffer, each with room for `capacity`
//! elements.
class BucketSet
{
public:
    BucketSet() = default;
    explicit BucketSet(std::size_t capacity)
        : storage_(capacity * kBucketCount), capacity_(capacity) {}

    std::span<Element> bucket(std::size_t j) {
        return {storage_.data() + j * capacity_, counts_[j]};
    }
    std::span<const Element> bucket(std::size_t j) const {
        return {storage_.data() + j * capacity_, counts_[j]};
    }
    std::size_t bucket_size(std::size_t j) const { return counts_[j]; }
    std::size_t total() const { return counts_[0] + counts_[1] + counts_[2] + counts_[3]; }
    std::size_t capacity() const { return capacity_; }

    //! Write cursor at the start of bucket j.
    Element* begin_of(std::size_t j) { return storage_.data() + j * capacity_; }
    void set_size(std::size_t j, std::size_t count) { counts_[j] = count; }

private:
    std::vector<Element> storage_;
    std::size_t capacity_ = 0;
    std::array<std::size_t, kBucketCount> counts_{};
};

namespace detail {

template <std::size_t BlockSize, typename Less>
void classify_blocked(std::span<const Element> data, const SplitterSet& s,
                      BucketSet& out, const Less& less) {
    Element* cursor[kBucketCount] = {out.begin_of(0), out.begin_of(1), out.begin_of(2),
                                     out.begin_of(3)};
    const Element* a = data.data();
    const std::size_t n = data.size();
    std::size_t i = 0;
    for (; i + BlockSize <= n; i += BlockSize) {
        unsigned state[BlockSize];
        for (std::size_t k = 0; k < BlockSize; ++k)
            state[k] = classify_element(a[i + k].key, s, less);
        for (std::size_t k = 0; k < BlockSize; ++k)
            *cursor[state[k]]++ = a[i + k];
    }
    for (; i < n; ++i) *cursor[classify_element(a[i].key, s, less)]++ = a[i];
    for (std::size_t j = 0; j < kBucketCount; ++j)
        out.set_size(j, static_cast<std::size_t>(cursor[j] - out.begin_of(j)));
}

} // namespace detail

//! Distributes data into `out` (capacity >= data.size()). Full blocks of
//! block_size elements are classified together, the remainder one by one.
//! Bucket contents, including order, do not depend on block_size.
template <typename Less = KeyLessU64>
void classify_into(std::span<const Element> data, const SplitterSet& s,
                   std::size_t block_size, BucketSet& out, const Less& less = Less{}) {
    if (out.capacity() < data.size())
        throw SizeError("bucket capacity smaller than input");
    switch (block_size) {
    case 1: return detail::classify_blocked<1>(data, s, out, less);
    case 2: return detail::classify_blocked<2>(data, s, out, less);
    case 3: return detail::classify_blocked<3>(data, s, out, less);
    case 4: return detail::classify_blocked<4>(data, s, out, less);
    case 5: return detail::classify_blocked<5>(data, s, out, less);
    default:
        throw ParameterError("block size must be in [1,5], got " + std::to_string(block_size));
    }
}

template <typename Less = KeyLessU64>
BucketSet classify(std::span<const Element> data, const SplitterSet& s,
                   std::size_t block_size, const Less& less = Less{}) {
    BucketSet out(data.size());
    classify_into(data, s, block_size, out, less);
    return out;
}

//! Sample position i of 4a for an input of n elements.
constexpr std::size_t sample_position(std::size_t i, std::size_t n, std::size_t sample_size) {
    return i * n / sample_size;
}

//! Takes 4a evenly spaced elements, sorts them with `sorter` and returns the
//! keys at sample positions a, 2a, 3a (1-based). nullopt when the input is
//! shorter than the sample.
template <typename Sorter>
std::optional<SplitterSet> select_splitters(std::span<const Element> data, std::size_t a,
                                            const Sorter& sorter) {
    if (a == 0) throw ParameterError("oversampling factor must be at least 1");
    const std::size_t sample_size = kBucketCount * a;
    const std::size_t n = data.size();
    if (n < sample_size) return std::nullopt;

    std::array<Element, 64> local;
    std::vector<Element> heap;
    Element* sample = local.data();
    if (sample_size > local.size()) {
        heap.resize(sample_size);
        sample = heap.data();
    }
    for (std::size_t i = 0; i < sample_size; ++i)
        sample[i] = data[sample_position(i, n, sample_size)];
    sorter(std::span<Element>(sample, sample_size));
    return SplitterSet{sample[a - 1].key, sample[2 * a - 1].key, sample[3 * a - 1].key};
}

namespace detail {

template <typename Sorter>
void sample_sort_recursive(std::span<Element> data, const SampleSortConfig& cfg,
                           const Sorter& sorter) {
    const std::size_t n = data.size();
    if (n <= cfg.base_case_limit) {
        sorter(data);
        return;
    }
    const std::optional<SplitterSet> splitters = select_splitters(
        std::span<const Element>(data), cfg.oversampling, sorter);
    if (!splitters) {
        sorter(data);
        return;
    }

    BucketSet buckets(n);
    classify_into(std::span<const Element>(data), *splitters, cfg.block_size, buckets);
    for (std::size_t j = 0; j < kBucketCount; ++j) {
        // no progress: everything landed in one bucket
        if (buckets.bucket_size(j) == n) {
            insertion_sort_guarded(data);
            return;
        }
    }

    Element* out = data.data();
    for (std::size_t j = 0; j < kBucketCount; ++j) {
        const std::span<Element> bucket = buckets.bucket(j);
        sample_sort_recursive(bucket, cfg, sorter);
        out = std::copy(bucket.begin(), bucket.end(), out);
    }
}

} // namespace detail

//! Sorts data in place. Inputs up to base_case_limit go straight to sorter,
//! which also sorts the splitter samples.
template <typename Sorter>
void sample_sort(std::span<Element> data, const SampleSortConfig& cfg, const Sorter& sorter) {
    cfg.validate();
    detail::sample_sort_recursive(data, cfg, sorter);
}

void sample_sort(std::span<Element> data, const SampleSortConfig& cfg,
                 const SmallSorterChoice& base_sorter);

} // namespace smallsort
