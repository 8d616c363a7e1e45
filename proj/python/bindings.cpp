#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smallsort/bench/fingerprint.hpp"
#include "smallsort/bench/rng.hpp"
#include "smallsort/bench/stats.hpp"
#include "smallsort/error.hpp"
#include "smallsort/network.hpp"
#include "smallsort/quicksort.hpp"
#include "smallsort/sample_sort.hpp"
#include "smallsort/small_sort.hpp"

namespace py = pybind11;
using namespace smallsort;

namespace {

//! Views an (n, 2) C-contiguous uint64 array as Elements without copying.
std::span<Element> element_view(py::array& arr) {
    if (!arr.dtype().is(py::dtype::of<std::uint64_t>()))
        throw py::type_error("expected a uint64 array");
    if (arr.ndim() != 2 || arr.shape(1) != 2)
        throw py::value_error("expected shape (n, 2): columns key, reference");
    if (!(arr.flags() & py::array::c_style)) throw py::value_error("array must be C-contiguous");
    if (!arr.writeable()) throw py::value_error("array must be writeable");
    return {static_cast<Element*>(arr.mutable_data()), static_cast<std::size_t>(arr.shape(0))};
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> as_pairs(const Network& net) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (const Comparator& c : net.comparators()) out.emplace_back(c.lo, c.hi);
    return out;
}

Network from_pairs(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& p) {
    std::vector<Comparator> comps;
    for (const auto& [lo, hi] : p) comps.push_back({lo, hi});
    return Network(n, std::move(comps));
}

} // namespace

PYBIND11_MODULE(_smallsort, m) {
    m.doc() = "Sorting networks, branchless compare-exchange and small-array sorts";

    py::register_exception<Error>(m, "SmallsortError", PyExc_ValueError);

    m.def("swap_codes", [] {
        std::vector<std::string> out;
        for (SwapStrategy s : kAllSwapStrategies) out.emplace_back(swap_code(s));
        return out;
    });

    m.def(
        "network",
        [](const std::string& kind, std::size_t n) {
            return as_pairs(make_network(parse_network_kind(kind), n));
        },
        py::arg("kind"), py::arg("n"), "comparators of a best|bnl|bnp network as (lo, hi) pairs");
    m.def(
        "network_depth",
        [](std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& comps) {
            return compute_levels(from_pairs(n, comps)).depth();
        },
        py::arg("n"), py::arg("comparators"));
    m.def(
        "validate_network",
        [](std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& comps) {
            return validate_network(from_pairs(n, comps));
        },
        py::arg("n"), py::arg("comparators"));
    m.def(
        "emit_network",
        [](const std::string& kind, std::size_t n) {
            return emit_network(make_network(parse_network_kind(kind), n));
        },
        py::arg("kind"), py::arg("n"));
    m.def(
        "parse_network",
        [](const std::string& text) {
            const Network net = parse_network(text);
            return py::make_tuple(net.size(), as_pairs(net));
        },
        py::arg("text"));

    m.def(
        "sort_small",
        [](py::array arr, const std::string& network, const std::string& strategy) {
            sort_small(element_view(arr), parse_network_kind(network), parse_swap_code(strategy));
        },
        py::arg("arr"), py::arg("network") = "best", py::arg("strategy") = "4CS",
        "sort an (n, 2) uint64 array in place by its key column");
    m.def(
        "insertion_sort",
        [](py::array arr, bool guarded) {
            const auto data = element_view(arr);
            guarded ? insertion_sort_guarded(data) : insertion_sort_unguarded(data);
        },
        py::arg("arr"), py::arg("guarded") = true);
    m.def(
        "sample_sort",
        [](py::array arr, const std::string& config, const std::string& base,
           const std::string& strategy) {
            const SmallSorterChoice choice =
                base == "insertion"
                    ? SmallSorterChoice{SmallSorterId::InsertionGuarded}
                    : SmallSorterChoice{small_sorter_for(parse_network_kind(base)),
                                      parse_swap_code(strategy)};
            sample_sort(element_view(arr), parse_sample_sort_config(config), choice);
        },
        py::arg("arr"), py::arg("config") = "332", py::arg("base") = "bnl",
        py::arg("strategy") = "4CS", "base: insertion|best|bnl|bnp");
    m.def(
        "quicksort",
        [](py::array arr, const std::string& policy, const std::string& network,
           const std::string& strategy) {
            BaseCaseKind kind;
            if (policy == "final")
                kind.policy = BaseCasePolicy::InsertionFinalPass;
            else if (policy == "insertion")
                kind.policy = BaseCasePolicy::InsertionPerPartition;
            else if (policy == "network")
                kind = {BaseCasePolicy::NetworkPerPartition, parse_network_kind(network),
                        parse_swap_code(strategy)};
            else
                throw ParseError("unknown base-case policy '" + policy + "'");
            QuicksortTrace trace;
            quicksort(element_view(arr), kind, &trace);
            py::dict out;
            out["depth_limit"] = trace.depth_limit;
            out["max_depth"] = trace.max_depth;
            out["heap_fallbacks"] = trace.heap_fallbacks;
            out["base_case_calls"] = trace.base_case_calls;
            out["min_base_case"] = trace.base_case_calls ? trace.min_base_case : 0;
            out["max_base_case"] = trace.max_base_case;
            return out;
        },
        py::arg("arr"), py::arg("policy") = "network", py::arg("network") = "best",
        py::arg("strategy") = "Cla", "policy: final|insertion|network; returns a trace dict");

    py::class_<bench::Minstd>(m, "Minstd")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("next", &bench::Minstd::next)
        .def("set_seed", &bench::Minstd::set_seed)
        .def_property_readonly("seed", &bench::Minstd::seed);

    m.def(
        "permutation_fingerprint",
        [](py::array arr, std::uint64_t z, std::uint64_t p) {
            return bench::permutation_fingerprint(element_view(arr), z, p);
        },
        py::arg("arr"), py::arg("z"), py::arg("p") = bench::kFingerprintPrime);
    m.def(
        "check_sorted", [](py::array arr) { return bench::check_sorted(element_view(arr)); },
        py::arg("arr"));

    m.def(
        "boxplot",
        [](const std::vector<double>& values) {
            const bench::BoxplotStats st = bench::boxplot_stats(values);
            py::dict out;
            out["count"] = st.count;
            out["mean"] = st.mean;
            out["q1"] = st.q1;
            out["median"] = st.median;
            out["q3"] = st.q3;
            out["iqr"] = st.iqr;
            out["whisker_lo"] = st.whisker_lo;
            out["whisker_hi"] = st.whisker_hi;
            out["outliers"] = st.outliers;
            return out;
        },
        py::arg("values"));
    m.def(
        "aggregate_ranks",
        [](const std::vector<std::tuple<std::string, std::size_t, double>>& rows) {
            std::vector<bench::MeasurementRecord> records;
            for (const auto& [id, size, cost] : rows)
                records.push_back({id, size, 0, cost, bench::CostUnit::Cycles});
            const bench::RankTable t = bench::aggregate_ranks(records);
            py::list out;
            for (const bench::RankRow& r : t.rows) {
                py::dict d;
                d["sorter"] = r.sorter_id;
                d["rank"] = r.rank;
                d["geomean"] = r.geomean;
                d["sizes"] = t.sizes;
                d["means"] = r.means;
                d["relatives"] = r.relatives;
                out.append(d);
            }
            return out;
        },
        py::arg("records"), "records: (sorter, size, cost) tuples; returns rows in rank order");
}
