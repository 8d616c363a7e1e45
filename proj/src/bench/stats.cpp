#include "smallsort/bench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace smallsort::bench {

double quantile_linear(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw ParameterError("quantile of empty data");
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

BoxplotStats boxplot_stats(std::span<const double> values) {
    if (values.empty()) throw ParameterError("box plot of empty data");
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());

    BoxplotStats st;
    st.count = v.size();
    st.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    st.q1 = quantile_linear(v, 0.25);
    st.median = quantile_linear(v, 0.5);
    st.q3 = quantile_linear(v, 0.75);
    st.iqr = st.q3 - st.q1;
    const double fence_lo = st.q1 - 1.5 * st.iqr;
    const double fence_hi = st.q3 + 1.5 * st.iqr;

    st.whisker_lo = st.q1;
    st.whisker_hi = st.q3;
    bool have_inside = false;
    for (double x : v) {
        if (x < fence_lo || x > fence_hi) {
            st.outliers.push_back(x);
            continue;
        }
        if (!have_inside) {
            st.whisker_lo = x;
            have_inside = true;
        }
        st.whisker_hi = x;
    }
    return st;
}

RankTable aggregate_ranks(std::span<const MeasurementRecord> records) {
    struct Cell {
        double sum = 0.0;
        std::size_t count = 0;
    };
    std::map<std::string, std::map<std::size_t, Cell>> cells;
    std::map<std::size_t, bool> all_sizes;
    for (const MeasurementRecord& r : records) {
        Cell& c = cells[r.sorter_id][r.array_size];
        c.sum += r.cost;
        ++c.count;
        all_sizes[r.array_size] = true;
    }

    RankTable table;
    for (const auto& [size, unused] : all_sizes) table.sizes.push_back(size);

    std::vector<double> best(table.sizes.size(), 0.0);
    for (const auto& [id, by_size] : cells) {
        RankRow row;
        row.sorter_id = id;
        for (std::size_t k = 0; k < table.sizes.size(); ++k) {
            const auto it = by_size.find(table.sizes[k]);
            if (it == by_size.end()) {
                throw IncompleteDataError("sorter '" + id + "' has no records for size " +
                                          std::to_string(table.sizes[k]));
            }
            const double mean = it->second.sum / static_cast<double>(it->second.count);
            row.means.push_back(mean);
            if (table.rows.empty() || mean < best[k]) best[k] = mean;
        }
        table.rows.push_back(std::move(row));
    }

    for (std::size_t k = 0; k < table.sizes.size(); ++k) {
        if (!(best[k] > 0.0)) {
            throw ParameterError("best mean for size " + std::to_string(table.sizes[k]) +
                                 " is not positive; relative costs are undefined");
        }
    }

    for (RankRow& row : table.rows) {
        // relatives are >= 1, so the plain product cannot underflow
        double product = 1.0;
        for (std::size_t k = 0; k < table.sizes.size(); ++k) {
            row.relatives.push_back(row.means[k] / best[k]);
            product *= row.relatives.back();
        }
        row.geomean = table.sizes.empty()
                          ? 1.0
                          : std::pow(product, 1.0 / static_cast<double>(table.sizes.size()));
    }

    // cells is keyed by id, so a stable sort keeps ties in id order
    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const RankRow& a, const RankRow& b) { return a.geomean < b.geomean; });
    for (std::size_t i = 0; i < table.rows.size(); ++i) table.rows[i].rank = i + 1;
    return table;
}

} // namespace smallsort::bench
