#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smallsort/comparator.hpp"

namespace smallsort {

//! Which construction a network came from.
enum class NetworkKind {
    Best,                  //!< embedded length-optimal network
    BoseNelsonLocality,    //!< recursive halves, then merger
    BoseNelsonParallelism, //!< same comparators, emitted level by level
};

//! Code used in sorter ids: "Best", "BoNeL", "BoNeP".
std::string_view network_code(NetworkKind kind);

//! Accepts best|bnl|bnp, the long names (best, bose-nelson-locality,
//! bose-nelson-parallelism) and the sorter-id codes.
NetworkKind parse_network_kind(std::string_view text);

inline constexpr std::size_t kMaxGeneratedChannels = 32;
inline constexpr std::size_t kMaxValidationChannels = 24;

//! A comparator network over a fixed number of channels. Every comparator
//! satisfies lo < hi < size. Equality compares size and comparator sequence;
//! the origin is provenance only.
class Network
{
public:
    Network() = default;

    //! Throws RangeError if any comparator violates lo < hi < size.
    Network(std::size_t size, std::vector<Comparator> comparators,
            std::optional<NetworkKind> origin = std::nullopt);

    std::size_t size() const { return size_; }
    std::size_t length() const { return comparators_.size(); }
    std::span<const Comparator> comparators() const { return comparators_; }
    std::optional<NetworkKind> origin() const { return origin_; }

    friend bool operator==(const Network& a, const Network& b) {
        return a.size_ == b.size_ && a.comparators_ == b.comparators_;
    }

private:
    std::size_t size_ = 0;
    std::vector<Comparator> comparators_;
    std::optional<NetworkKind> origin_;
};

struct LevelDecomposition {
    std::vector<std::vector<Comparator>> levels;

    std::size_t depth() const { return levels.size(); }
};

//! Embedded best-known network, 2 <= n <= 16; SizeError otherwise.
Network best_network(std::size_t n);

//! Bose-Nelson network, 2 <= n <= 32; SizeError otherwise.
Network generate_bose_nelson(std::size_t n, NetworkKind order);

//! best_network or generate_bose_nelson depending on kind.
Network make_network(NetworkKind kind, std::size_t n);

//! Greedy earliest-fit: each comparator goes to the level right after the
//! last level touching either of its channels.
LevelDecomposition compute_levels(const Network& net);

//! Zero-one principle check over all 2^n binary inputs. CapacityError for
//! n > 24.
bool validate_network(const Network& net);

//! "n <size>" followed by one "<lo> <hi>" line per comparator.
std::string emit_network(const Network& net);

//! Inverse of emit_network; blank lines and '#' comments are skipped.
//! ParseError on malformed lines, RangeError on bad channels.
Network parse_network(std::string_view text);

} // namespace smallsort
