#include "dashgrid/gridfit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dashgrid/error.hpp"

namespace dashgrid {

namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

std::size_t nearest_index(std::span<const double> sorted, double v) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.begin()) return 0;
    if (it == sorted.end()) return sorted.size() - 1;
    const auto hi = static_cast<std::size_t>(it - sorted.begin());
    const auto lo = hi - 1;
    return (v - sorted[lo] <= sorted[hi] - v) ? lo : hi;
}

}  // namespace

void validate(const FitConfig& cfg) {
    if (!positive(cfg.row_dist_threshold)) {
        throw ArgumentError("row_dist_threshold must be > 0");
    }
    if (!positive(cfg.col_dist_factor)) {
        throw ArgumentError("col_dist_factor must be > 0");
    }
}

std::vector<double> cluster_1d(std::span<const double> values, double gap_threshold) {
    if (!positive(gap_threshold)) throw ArgumentError("gap threshold must be > 0");

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<double> means;
    std::size_t first = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > first && sorted[i] - sorted[i - 1] >= gap_threshold) {
            means.push_back(sum / static_cast<double>(i - first));
            first = i;
            sum = 0.0;
        }
        sum += sorted[i];
    }
    if (!sorted.empty()) means.push_back(sum / static_cast<double>(sorted.size() - first));
    return means;
}

std::vector<double> cluster_rows(std::span<const MatchHit> hits, const FitConfig& cfg) {
    std::vector<double> ys;
    ys.reserve(hits.size());
    for (const auto& h : hits) ys.push_back(h.y);
    return cluster_1d(ys, cfg.row_dist_threshold);
}

ColumnStats column_stats(std::span<const MatchHit> hits, std::span<const double> row_positions) {
    std::vector<std::vector<int>> per_row(row_positions.size());
    std::vector<int> all;
    all.reserve(hits.size());
    for (const auto& h : hits) {
        if (!row_positions.empty()) per_row[nearest_index(row_positions, h.y)].push_back(h.x);
        all.push_back(h.x);
    }

    double gap_sum = 0.0;
    std::size_t gap_count = 0;
    for (auto& xs : per_row) {
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        for (std::size_t i = 1; i < xs.size(); ++i) {
            gap_sum += xs[i] - xs[i - 1];
            ++gap_count;
        }
    }
    if (gap_count == 0) {
        throw ProcessingError("insufficient columns: no row has two distinct hit columns");
    }

    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    ColumnStats stats;
    stats.avg_col_spacing = gap_sum / static_cast<double>(gap_count);
    stats.unique_cols.assign(all.begin(), all.end());
    return stats;
}

std::vector<double> cluster_cols(std::span<const double> unique_cols, double avg_col_spacing,
                                 const FitConfig& cfg) {
    if (!positive(avg_col_spacing)) throw ArgumentError("avg_col_spacing must be > 0");
    return cluster_1d(unique_cols, avg_col_spacing * cfg.col_dist_factor);
}

GridModel fit_grid(std::span<const MatchHit> hits, const ReferenceTile& tile,
                   const FitConfig& cfg) {
    validate(cfg);
    if (hits.empty()) throw ProcessingError("no hits: the scan matched no window");

    GridModel grid;
    grid.row_positions = cluster_rows(hits, cfg);
    const ColumnStats stats = column_stats(hits, grid.row_positions);
    grid.avg_col_spacing = stats.avg_col_spacing;
    grid.col_positions = cluster_cols(stats.unique_cols, stats.avg_col_spacing, cfg);
    grid.tile_width = tile.width();
    grid.tile_height = tile.height();
    return grid;
}

}  // namespace dashgrid
