#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smallsort/bench/measure.hpp"
#include "smallsort/bench/stats.hpp"

namespace smallsort::bench {

inline constexpr std::string_view kRecordsHeader = "sorter,size,measure,cost,unit";

//! Shortest decimal that reads back to the same double.
std::string format_double(double value);

//! Quotes a field if it contains a comma, quote or line break.
std::string csv_field(std::string_view text);

//! Splits one CSV line into fields; ParseError on unbalanced quotes.
std::vector<std::string> split_csv_line(std::string_view line);

void write_records(std::ostream& out, std::span<const MeasurementRecord> records);

//! ParseError on a wrong header, wrong field count or malformed number.
std::vector<MeasurementRecord> read_records(std::istream& in);

//! Header `sorter,geomean,rank,<size>...`, one row per sorter in rank order
//! with the per-size means.
void write_rank_table(std::ostream& out, const RankTable& table);

} // namespace smallsort::bench
