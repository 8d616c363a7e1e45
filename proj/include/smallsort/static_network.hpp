#pragma once

// Networks for 2..16 channels baked into constant tables. Executing one
// expands to a flat, fully inlined sequence of compare-exchanges with constant
// channel offsets, so the strategy type is the only thing left to vary.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>

#include "smallsort/best_networks.hpp"
#include "smallsort/bose_nelson.hpp"
#include "smallsort/element.hpp"
#include "smallsort/error.hpp"
#include "smallsort/network.hpp"

namespace smallsort {

inline constexpr std::size_t kMaxNetworkSize = 16;

namespace detail {

template <NetworkKind Kind, std::size_t N>
constexpr StaticBuffer static_buffer() {
    if constexpr (Kind == NetworkKind::Best) {
        StaticBuffer out;
        for (const Comparator& c : best_comparators(N)) out(c);
        return out;
    }
    else if constexpr (Kind == NetworkKind::BoseNelsonLocality) {
        return bose_nelson_locality(N);
    }
    else {
        return bose_nelson_parallelism(N);
    }
}

template <NetworkKind Kind, std::size_t N>
constexpr auto make_static_comparators() {
    constexpr StaticBuffer buffer = static_buffer<Kind, N>();
    std::array<Comparator, buffer.count> out{};
    for (std::size_t k = 0; k < buffer.count; ++k) out[k] = buffer.items[k];
    return out;
}

template <NetworkKind Kind, std::size_t N>
inline constexpr auto kStaticComparators = make_static_comparators<Kind, N>();

template <const auto& Comparators, typename CSwap, std::size_t... I>
inline void run_unrolled(Element* a, const CSwap& cswap, std::index_sequence<I...>) {
    (cswap(a[Comparators[I].lo], a[Comparators[I].hi]), ...);
}

} // namespace detail

//! Comparator table of the compile-time network (Kind, N).
template <NetworkKind Kind, std::size_t N>
constexpr std::span<const Comparator> static_comparators() {
    return detail::kStaticComparators<Kind, N>;
}

//! Sorts exactly N elements starting at a.
template <NetworkKind Kind, std::size_t N, typename CSwap>
inline void sort_network_fixed(Element* a, const CSwap& cswap) {
    constexpr const auto& comparators = detail::kStaticComparators<Kind, N>;
    detail::run_unrolled<comparators>(
        a, cswap, std::make_index_sequence<comparators.size()>{});
}

//! Sorts 0..16 elements with the size-matched network of the given kind.
template <NetworkKind Kind, typename CSwap>
inline void sort_network(std::span<Element> data, const CSwap& cswap) {
    Element* a = data.data();
    switch (data.size()) {
    case 0:
    case 1: return;
    case 2: return sort_network_fixed<Kind, 2>(a, cswap);
    case 3: return sort_network_fixed<Kind, 3>(a, cswap);
    case 4: return sort_network_fixed<Kind, 4>(a, cswap);
    case 5: return sort_network_fixed<Kind, 5>(a, cswap);
    case 6: return sort_network_fixed<Kind, 6>(a, cswap);
    case 7: return sort_network_fixed<Kind, 7>(a, cswap);
    case 8: return sort_network_fixed<Kind, 8>(a, cswap);
    case 9: return sort_network_fixed<Kind, 9>(a, cswap);
    case 10: return sort_network_fixed<Kind, 10>(a, cswap);
    case 11: return sort_network_fixed<Kind, 11>(a, cswap);
    case 12: return sort_network_fixed<Kind, 12>(a, cswap);
    case 13: return sort_network_fixed<Kind, 13>(a, cswap);
    case 14: return sort_network_fixed<Kind, 14>(a, cswap);
    case 15: return sort_network_fixed<Kind, 15>(a, cswap);
    case 16: return sort_network_fixed<Kind, 16>(a, cswap);
    default:
        throw SizeError("sorting networks cover up to 16 elements, got " +
                        std::to_string(data.size()));
    }
}

//! Calls f(std::integral_constant<NetworkKind, kind>{}).
template <typename F>
decltype(auto) dispatch_network_kind(NetworkKind kind, F&& f) {
    switch (kind) {
    case NetworkKind::Best:
        return f(std::integral_constant<NetworkKind, NetworkKind::Best>{});
    case NetworkKind::BoseNelsonLocality:
        return f(std::integral_constant<NetworkKind, NetworkKind::BoseNelsonLocality>{});
    case NetworkKind::BoseNelsonParallelism:
        break;
    }
    return f(std::integral_constant<NetworkKind, NetworkKind::BoseNelsonParallelism>{});
}

} // namespace smallsort
