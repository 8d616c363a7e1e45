#include "smallsort/bench/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace smallsort::bench {

namespace {

template <typename T>
T parse_number(std::string_view text, std::string_view what, std::size_t line_no) {
    T value{};
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed " + std::string(what) +
                         " '" + std::string(text) + "'");
    }
    return value;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    fields.back() += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field");
    return fields;
}

void write_records(std::ostream& out, std::span<const MeasurementRecord> records) {
    out << kRecordsHeader << '\n';
    for (const MeasurementRecord& r : records) {
        out << csv_field(r.sorter_id) << ',' << r.array_size << ',' << r.measure_index << ','
            << format_double(r.cost) << ',' << unit_name(r.unit) << '\n';
    }
}

std::vector<MeasurementRecord> read_records(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty input, expected a CSV header");
    strip_cr(line);
    if (line != kRecordsHeader)
        throw ParseError("expected header '" + std::string(kRecordsHeader) + "'");

    std::vector<MeasurementRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 5) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 5 fields, got " +
                             std::to_string(f.size()));
        }
        MeasurementRecord r;
        r.sorter_id = f[0];
        r.array_size = parse_number<std::size_t>(f[1], "size", line_no);
        r.measure_index = parse_number<std::size_t>(f[2], "measure", line_no);
        r.cost = parse_number<double>(f[3], "cost", line_no);
        r.unit = parse_unit(f[4]);
        records.push_back(std::move(r));
    }
    return records;
}

void write_rank_table(std::ostream& out, const RankTable& table) {
    out << "sorter,geomean,rank";
    for (std::size_t size : table.sizes) out << ',' << size;
    out << '\n';
    for (const RankRow& row : table.rows) {
        out << csv_field(row.sorter_id) << ',' << format_double(row.geomean) << ',' << row.rank;
        for (double mean : row.means) out << ',' << format_double(mean);
        out << '\n';
    }
}

} // namespace smallsort::bench
