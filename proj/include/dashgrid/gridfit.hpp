#pragma once

#include <span>
#include <vector>

#include "dashgrid/scan.hpp"

namespace dashgrid {

/// Idealized dash layout: every (row, column) pair is one dash, anchored at
/// the dash's top-left corner. Positions stay fractional until stamping.
struct GridModel {
    std::vector<double> row_positions;  // strictly ascending
    std::vector<double> col_positions;  // strictly ascending
    double avg_col_spacing = 0.0;
    int tile_width = 0;
    int tile_height = 0;

    friend bool operator==(const GridModel&, const GridModel&) = default;
};

struct FitConfig {
    /// Row clustering gap, in pixels.
    double row_dist_threshold = 0.0;
    /// Column clustering gap as a multiple of the average column spacing.
    double col_dist_factor = 0.0;
};

/// Throws ArgumentError naming the offending field.
void validate(const FitConfig& cfg);

/// 1-D single-linkage clustering. Distinct values are sorted and walked in
/// order; a gap >= `gap_threshold` starts a new cluster. Returns the
/// arithmetic mean of each cluster, ascending.
std::vector<double> cluster_1d(std::span<const double> values, double gap_threshold);

std::vector<double> cluster_rows(std::span<const MatchHit> hits, const FitConfig& cfg);

struct ColumnStats {
    double avg_col_spacing = 0.0;
    std::vector<double> unique_cols;  // ascending, deduplicated hit x values
};

/// Assigns each hit to its nearest refined row (ties go to the lower row),
/// pools the gaps between adjacent distinct x values of every row and
/// averages them. Throws ProcessingError when no row has two distinct
/// columns.
ColumnStats column_stats(std::span<const MatchHit> hits, std::span<const double> row_positions);

std::vector<double> cluster_cols(std::span<const double> unique_cols, double avg_col_spacing,
                                 const FitConfig& cfg);

/// cluster_rows -> column_stats -> cluster_cols. Throws ProcessingError on
/// empty hits or undefined column spacing.
GridModel fit_grid(std::span<const MatchHit> hits, const ReferenceTile& tile,
                   const FitConfig& cfg);

}  // namespace dashgrid
