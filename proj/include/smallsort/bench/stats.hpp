#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "smallsort/bench/measure.hpp"

namespace smallsort::bench {

//! Five-number summary with whiskers at the most extreme points inside
//! [q1 - 1.5 iqr, q3 + 1.5 iqr].
struct BoxplotStats {
    std::size_t count = 0;
    double mean = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double iqr = 0.0;
    double whisker_lo = 0.0;
    double whisker_hi = 0.0;
    std::vector<double> outliers; //!< ascending
};

//! Quantile of sorted data by linear interpolation between closest ranks.
double quantile_linear(std::span<const double> sorted, double q);

//! ParameterError on empty input.
BoxplotStats boxplot_stats(std::span<const double> values);

struct RankRow {
    std::string sorter_id;
    std::vector<double> means;     //!< one per size, same order as RankTable::sizes
    std::vector<double> relatives; //!< mean / best mean of the column
    double geomean = 1.0;
    std::size_t rank = 0; //!< 1-based
};

struct RankTable {
    std::vector<std::size_t> sizes; //!< ascending
    std::vector<RankRow> rows;      //!< ordered by rank
};

//! Per (sorter, size) mean, relative to the smallest mean of each size, then
//! the geometric mean over sizes. Ranks ascend with geomean, ties by id.
//! IncompleteDataError if a sorter lacks a size that another sorter has;
//! ParameterError if a column's best mean is not positive.
RankTable aggregate_ranks(std::span<const MeasurementRecord> records);

} // namespace smallsort::bench
