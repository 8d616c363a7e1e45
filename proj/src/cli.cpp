#include "smallsort/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include "smallsort/bench/catalog.hpp"
#include "smallsort/bench/counter.hpp"
#include "smallsort/bench/csv.hpp"
#include "smallsort/bench/measure.hpp"
#include "smallsort/bench/stats.hpp"
#include "smallsort/error.hpp"
#include "smallsort/network.hpp"
#include "smallsort/quicksort.hpp"
#include "smallsort/sample_sort.hpp"
#include "smallsort/small_sort.hpp"
#include "smallsort/swaps.hpp"

namespace smallsort::cli {

namespace {

constexpr std::size_t kMaxSmallBenchSize = 4096;
constexpr std::size_t kMaxLargeBenchSize = std::size_t{1} << 26;

struct BenchOptions {
    std::string sizes;
    std::size_t iterations = 100;
    std::size_t measures = 500;
    std::uint64_t seed = 1;
    std::vector<std::string> strategies;
    std::vector<std::string> networks;
    std::string config = "332";
    std::size_t evict_bytes = bench::kDefaultEvictBytes;
    std::string counter = "cycles";
    std::string out;
    CLI::Option* counter_option = nullptr;
};

std::size_t parse_size(std::string_view text) {
    std::size_t value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw ParseError("malformed size '" + std::string(text) + "'");
    return value;
}

//! "A..B" (inclusive) or a single "N".
std::vector<std::size_t> parse_size_range(std::string_view text, std::size_t max_size) {
    std::size_t lo = 0, hi = 0;
    const std::size_t dots = text.find("..");
    if (dots == std::string_view::npos) {
        lo = hi = parse_size(text);
    } else {
        lo = parse_size(text.substr(0, dots));
        hi = parse_size(text.substr(dots + 2));
    }
    if (lo > hi) throw ParseError("empty size range '" + std::string(text) + "'");
    if (hi > max_size) {
        throw RangeError("size " + std::to_string(hi) + " exceeds the limit of " +
                         std::to_string(max_size) + " for this benchmark");
    }
    std::vector<std::size_t> sizes;
    for (std::size_t n = lo; n <= hi; ++n) sizes.push_back(n);
    return sizes;
}

std::vector<SwapStrategy> parse_strategies(const std::vector<std::string>& codes) {
    if (codes.empty())
        return {std::begin(kAllSwapStrategies), std::end(kAllSwapStrategies)};
    std::vector<SwapStrategy> out;
    for (const std::string& c : codes) out.push_back(parse_swap_code(c));
    return out;
}

std::vector<NetworkKind> parse_kinds(const std::vector<std::string>& names) {
    if (names.empty()) {
        return {NetworkKind::Best, NetworkKind::BoseNelsonLocality,
                NetworkKind::BoseNelsonParallelism};
    }
    std::vector<NetworkKind> out;
    for (const std::string& n : names) out.push_back(parse_network_kind(n));
    return out;
}

std::unique_ptr<bench::CostCounter> open_counter(const BenchOptions& opts, std::ostream& err) {
    bench::CounterChoice choice = bench::parse_counter_choice(opts.counter);
    if (opts.counter_option->count() == 0) {
        if (const auto env = bench::counter_choice_from_env()) choice = *env;
    }
    auto counter = bench::make_counter(choice);
    if (choice == bench::CounterChoice::Cycles && counter->unit() != bench::CostUnit::Cycles)
        err << "note: cycle counter unavailable, measuring wall-clock nanoseconds\n";
    return counter;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open output '" + path + "' for writing");
    file << text;
    if (!file.flush()) throw Error("failed writing output '" + path + "'");
}

void add_bench_options(CLI::App* sub, BenchOptions& opts, const std::string& default_sizes,
                       std::size_t iterations, std::size_t measures) {
    opts.sizes = default_sizes;
    opts.iterations = iterations;
    opts.measures = measures;
    sub->add_option("--sizes", opts.sizes, "array sizes, A..B or N")->capture_default_str();
    sub->add_option("--iterations", opts.iterations, "sorts per timed loop")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--measures", opts.measures, "repetitions per size")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", opts.seed, "minstd seed in [1, 2^31-2]")->capture_default_str();
    sub->add_option("--strategy", opts.strategies, "swap codes, comma separated (default all)")
        ->delimiter(',');
    sub->add_option("--network,--kind", opts.networks,
                    "network kinds, comma separated (default all)")
        ->delimiter(',');
    opts.counter_option = sub->add_option("--counter", opts.counter, "cycles|clock|fake")
                              ->capture_default_str();
    sub->add_option("--out", opts.out, "CSV output path (default stdout)");
}

std::string help_footer() {
    std::string text = "\nswap strategy codes:";
    for (SwapStrategy s : kAllSwapStrategies) {
        text += ' ';
        text += swap_code(s);
    }
    text += "\ninsertion sort codes: Grd Ung";
    text += "\nnetwork kinds: best (Best), bnl (BoNeL), bnp (BoNeP)";
    text += "\nsample sort config: 3yz, y = oversampling, z = block size 1..5";
    text += "\nenvironment: SMALLSORT_COUNTER=cycles|clock|fake is used when --counter is absent";
    text += "\npin to one core externally, e.g. taskset 0x1 smallsort bench single";
    return text;
}

std::vector<std::uint64_t> parse_keys(const std::string& text) {
    std::vector<std::uint64_t> keys;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token.front() == '#') {
            std::getline(in, token);
            continue;
        }
        std::uint64_t key = 0;
        const char* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(token.data(), end, key);
        if (ec != std::errc{} || ptr != end) throw ParseError("malformed key '" + token + "'");
        keys.push_back(key);
    }
    return keys;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sorting networks, branchless swaps and small-array sort benchmarks",
                 "smallsort"};
    app.footer(help_footer());
    app.require_subcommand(1);

    // networks
    CLI::App* networks = app.add_subcommand("networks", "emit or check sorting networks");
    networks->require_subcommand(1);
    std::string net_kind = "best";
    std::size_t net_n = 0;
    std::string net_in;
    std::string net_out;
    CLI::App* emit = networks->add_subcommand("emit", "print a network in text form");
    emit->add_option("--kind,--network", net_kind, "best|bnl|bnp")->capture_default_str();
    emit->add_option("--n", net_n, "number of channels")->required();
    emit->add_option("--out", net_out, "output path (default stdout)");
    CLI::App* check = networks->add_subcommand(
        "check", "validate a network file, or a generated network when --in is absent");
    check->add_option("--in", net_in, "network text file, - for stdin");
    check->add_option("--kind,--network", net_kind, "best|bnl|bnp")->capture_default_str();
    check->add_option("--n", net_n, "number of channels");

    // sort
    CLI::App* sort = app.add_subcommand("sort", "sort a whitespace-separated key file");
    std::string sort_in;
    std::string sort_out;
    std::string sort_algorithm = "small";
    std::string sort_network = "best";
    std::string sort_strategy = "4CS";
    std::string sort_config = "332";
    sort->add_option("--in", sort_in, "key file, - for stdin")->required();
    sort->add_option("--out", sort_out, "output path (default stdout)");
    sort->add_option("--algorithm", sort_algorithm, "small|sample|quick")
        ->capture_default_str()
        ->check(CLI::IsMember({"small", "sample", "quick"}));
    sort->add_option("--network,--kind", sort_network, "best|bnl|bnp")->capture_default_str();
    sort->add_option("--strategy", sort_strategy, "swap code")->capture_default_str();
    sort->add_option("--config", sort_config, "sample sort config")->capture_default_str();

    // bench
    CLI::App* bench_cmd = app.add_subcommand("bench", "run a benchmark and write a CSV");
    bench_cmd->require_subcommand(1);
    BenchOptions single_opts, inrow_opts, quick_opts, sample_opts;
    CLI::App* single = bench_cmd->add_subcommand("single", "one array sorted repeatedly");
    add_bench_options(single, single_opts, "2..16", 100, 500);
    CLI::App* inrow = bench_cmd->add_subcommand("inrow", "many arrays sorted in one pass");
    add_bench_options(inrow, inrow_opts, "2..16", 1, 500);
    inrow->add_option("--evict-bytes", inrow_opts.evict_bytes,
                      "region must exceed this many bytes")
        ->capture_default_str();
    CLI::App* quick = bench_cmd->add_subcommand("quicksort", "quicksort base-case variants");
    add_bench_options(quick, quick_opts, "16384", 50, 200);
    CLI::App* sample = bench_cmd->add_subcommand("samplesort", "register sample sort variants");
    add_bench_options(sample, sample_opts, "256", 50, 200);
    sample->add_option("--config", sample_opts.config, "3yz")->capture_default_str();

    // rank
    CLI::App* rank = app.add_subcommand("rank", "aggregate a measurement CSV into ranks");
    std::string rank_in;
    std::string rank_out;
    rank->add_option("--in", rank_in, "measurement CSV, - for stdin")->required();
    rank->add_option("--out", rank_out, "output path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (emit->parsed()) {
            const Network net = make_network(parse_network_kind(net_kind), net_n);
            write_output(net_out, emit_network(net), out);
            return 0;
        }
        if (check->parsed()) {
            Network net = net_in.empty()
                              ? make_network(parse_network_kind(net_kind), net_n)
                              : parse_network(read_input(net_in));
            const bool ok = validate_network(net);
            const LevelDecomposition levels = compute_levels(net);
            out << (ok ? "valid" : "invalid") << " n=" << net.size()
                << " length=" << net.length() << " depth=" << levels.depth() << '\n';
            return ok ? 0 : kExitInvalidNetwork;
        }
        if (sort->parsed()) {
            const std::vector<std::uint64_t> keys = parse_keys(read_input(sort_in));
            std::vector<Element> data(keys.size());
            for (std::size_t i = 0; i < keys.size(); ++i) data[i] = {keys[i], i};
            const NetworkKind kind = parse_network_kind(sort_network);
            const SwapStrategy strategy = parse_swap_code(sort_strategy);
            if (sort_algorithm == "small") {
                sort_small(data, kind, strategy);
            } else if (sort_algorithm == "sample") {
                sample_sort(data, parse_sample_sort_config(sort_config),
                            SmallSorterChoice{small_sorter_for(kind), strategy});
            } else {
                quicksort(data, BaseCaseKind{BaseCasePolicy::NetworkPerPartition, kind, strategy});
            }
            if (!bench::check_sorted(data)) throw CorrectnessError("output is not sorted");
            std::string text;
            for (const Element& e : data) text += std::to_string(e.key) + '\n';
            write_output(sort_out, text, out);
            return 0;
        }
        if (rank->parsed()) {
            std::istringstream in(read_input(rank_in));
            const std::vector<bench::MeasurementRecord> records = bench::read_records(in);
            std::ostringstream text;
            bench::write_rank_table(text, bench::aggregate_ranks(records));
            write_output(rank_out, text.str(), out);
            return 0;
        }

        const BenchOptions* opts = nullptr;
        std::vector<bench::BenchSorter> sorters;
        std::vector<std::size_t> sizes;
        bool use_inrow = false;
        if (single->parsed()) {
            opts = &single_opts;
            sizes = parse_size_range(opts->sizes, kMaxSmallBenchSize);
            sorters = bench::small_sorters(parse_kinds(opts->networks),
                                           parse_strategies(opts->strategies), "-N");
        } else if (inrow->parsed()) {
            opts = &inrow_opts;
            use_inrow = true;
            sizes = parse_size_range(opts->sizes, kMaxSmallBenchSize);
            sorters = bench::small_sorters(parse_kinds(opts->networks),
                                           parse_strategies(opts->strategies), "-I");
        } else if (quick->parsed()) {
            opts = &quick_opts;
            sizes = parse_size_range(opts->sizes, kMaxLargeBenchSize);
            sorters = bench::quicksort_sorters(parse_kinds(opts->networks),
                                               parse_strategies(opts->strategies));
        } else {
            opts = &sample_opts;
            sizes = parse_size_range(opts->sizes, kMaxLargeBenchSize);
            sorters = bench::sample_sorters(parse_sample_sort_config(opts->config),
                                            parse_kinds(opts->networks),
                                            parse_strategies(opts->strategies));
        }
        if (use_inrow && sizes.front() == 0) throw RangeError("in-row sizes must be at least 1");

        const auto counter = open_counter(*opts, err);
        const std::vector<bench::MeasurementRecord> records =
            use_inrow ? bench::run_inrow(sorters, sizes, opts->measures, opts->seed, *counter,
                                         opts->evict_bytes)
                      : bench::run_single(sorters, sizes, opts->iterations, opts->measures,
                                          opts->seed, *counter);
        std::ostringstream text;
        bench::write_records(text, records);
        write_output(opts->out, text.str(), out);
        return 0;
    } catch (const CorrectnessError& e) {
        err << "correctness check failed: " << e.what() << '\n';
        return kExitCorrectness;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

} // namespace smallsort::cli
