#include "smallsort/network.hpp"

#include <charconv>
#include <cstdint>
#include <string>

#include "smallsort/best_networks.hpp"
#include "smallsort/bose_nelson.hpp"
#include "smallsort/error.hpp"

namespace smallsort {

std::string_view network_code(NetworkKind kind) {
    switch (kind) {
    case NetworkKind::Best: return "Best";
    case NetworkKind::BoseNelsonLocality: return "BoNeL";
    case NetworkKind::BoseNelsonParallelism: return "BoNeP";
    }
    return "?";
}

NetworkKind parse_network_kind(std::string_view text) {
    if (text == "best" || text == "Best") return NetworkKind::Best;
    if (text == "bnl" || text == "bose-nelson-locality" || text == "BoNeL")
        return NetworkKind::BoseNelsonLocality;
    if (text == "bnp" || text == "bose-nelson-parallelism" || text == "BoNeP")
        return NetworkKind::BoseNelsonParallelism;
    throw ParseError("unknown network kind '" + std::string(text) + "'");
}

Network::Network(std::size_t size, std::vector<Comparator> comparators,
                 std::optional<NetworkKind> origin)
    : size_(size), comparators_(std::move(comparators)), origin_(origin) {
    for (const Comparator& c : comparators_) {
        if (!(c.lo < c.hi && c.hi < size_)) {
            throw RangeError("comparator (" + std::to_string(c.lo) + "," +
                             std::to_string(c.hi) + ") invalid for network of size " +
                             std::to_string(size_));
        }
    }
}

Network best_network(std::size_t n) {
    if (n < 2 || n > 16)
        throw SizeError("best network available for 2..16 elements, got " + std::to_string(n));
    const auto table = detail::best_comparators(n);
    return Network(n, std::vector<Comparator>(table.begin(), table.end()), NetworkKind::Best);
}

Network generate_bose_nelson(std::size_t n, NetworkKind order) {
    if (n < 2 || n > kMaxGeneratedChannels)
        throw SizeError("Bose-Nelson generation supports 2..32 elements, got " + std::to_string(n));
    if (order == NetworkKind::Best)
        throw ParameterError("Bose-Nelson order must be locality or parallelism");

    const auto channels = static_cast<std::uint32_t>(n);
    const detail::StaticBuffer buffer = order == NetworkKind::BoseNelsonLocality
        ? detail::bose_nelson_locality(channels)
        : detail::bose_nelson_parallelism(channels);
    const auto view = buffer.view();
    return Network(n, std::vector<Comparator>(view.begin(), view.end()), order);
}

Network make_network(NetworkKind kind, std::size_t n) {
    return kind == NetworkKind::Best ? best_network(n) : generate_bose_nelson(n, kind);
}

LevelDecomposition compute_levels(const Network& net) {
    const auto comparators = net.comparators();
    std::vector<std::uint32_t> channel_level(net.size(), 0);
    std::vector<std::uint32_t> level_of(comparators.size(), 0);
    const std::size_t depth = detail::assign_levels(comparators, channel_level, level_of);

    LevelDecomposition result;
    result.levels.resize(depth);
    for (std::size_t k = 0; k < comparators.size(); ++k)
        result.levels[level_of[k] - 1].push_back(comparators[k]);
    return result;
}

bool validate_network(const Network& net) {
    const std::size_t n = net.size();
    if (n > kMaxValidationChannels)
        throw CapacityError("exhaustive validation is capped at 24 channels, got " +
                            std::to_string(n));
    if (n < 2) return true;

    // Bit-sliced evaluation: bit t of lane[c] is channel c of input (base + t).
    static constexpr std::uint64_t kPattern[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    const std::uint64_t inputs = std::uint64_t{1} << n;
    const std::uint64_t valid = inputs >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << inputs) - 1;
    const auto comparators = net.comparators();

    std::uint64_t lane[kMaxValidationChannels];
    for (std::uint64_t base = 0; base < inputs; base += 64) {
        for (std::size_t c = 0; c < n; ++c) {
            lane[c] = c < 6 ? kPattern[c]
                            : (((base >> c) & 1) ? ~std::uint64_t{0} : std::uint64_t{0});
        }
        for (const Comparator& cmp : comparators) {
            const std::uint64_t lo = lane[cmp.lo], hi = lane[cmp.hi];
            lane[cmp.lo] = lo & hi;
            lane[cmp.hi] = lo | hi;
        }
        for (std::size_t c = 0; c + 1 < n; ++c) {
            if ((lane[c] & ~lane[c + 1]) & valid) return false;
        }
    }
    return true;
}

std::string emit_network(const Network& net) {
    std::string out = "n " + std::to_string(net.size()) + "\n";
    for (const Comparator& c : net.comparators()) {
        out += std::to_string(c.lo);
        out += ' ';
        out += std::to_string(c.hi);
        out += '\n';
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Parses exactly `count` whitespace-separated unsigned integers.
bool parse_fields(std::string_view line, std::uint64_t* out, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
        line = trim(line);
        if (line.empty()) return false;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), out[k]);
        if (ec != std::errc() || ptr == line.data()) return false;
        line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
        if (!line.empty() && line.front() != ' ' && line.front() != '\t') return false;
    }
    return trim(line).empty();
}

} // namespace

Network parse_network(std::string_view text) {
    std::optional<std::size_t> size;
    std::vector<Comparator> comparators;
    std::size_t line_no = 0;

    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const auto fail = [&] {
            throw ParseError("line " + std::to_string(line_no) + ": malformed '" +
                             std::string(line) + "'");
        };
        if (!size) {
            if (line.size() < 2 || line[0] != 'n' || (line[1] != ' ' && line[1] != '\t')) fail();
            std::uint64_t value = 0;
            if (!parse_fields(line.substr(1), &value, 1)) fail();
            size = static_cast<std::size_t>(value);
            continue;
        }
        std::uint64_t fields[2];
        if (!parse_fields(line, fields, 2)) fail();
        if (fields[0] >= *size || fields[1] >= *size || fields[0] >= fields[1]) {
            throw RangeError("line " + std::to_string(line_no) + ": comparator (" +
                             std::to_string(fields[0]) + "," + std::to_string(fields[1]) +
                             ") out of range for size " + std::to_string(*size));
        }
        comparators.push_back(Comparator{static_cast<std::uint32_t>(fields[0]),
                                         static_cast<std::uint32_t>(fields[1])});
    }
    if (!size) throw ParseError("missing 'n <size>' header");
    return Network(*size, std::move(comparators));
}

} // namespace smallsort
