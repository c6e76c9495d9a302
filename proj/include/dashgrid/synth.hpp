#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dashgrid/gridfit.hpp"
#include "dashgrid/raster.hpp"
#include "dashgrid/reconstruct.hpp"

namespace dashgrid {

/// Uniform dash grid drawn with solid rectangular dashes.
struct SynthSpec {
    int width = 0;
    int height = 0;
    int tile_width = 0;
    int tile_height = 0;
    int row_start = 0;
    int col_start = 0;
    int row_spacing = 0;
    int col_spacing = 0;
    int n_rows = 0;
    int n_cols = 0;
    /// Each dash moves by an independent uniform integer in [-jitter, jitter]
    /// along x and y.
    int jitter = 0;
    std::uint64_t seed = 0;
};

/// Degradations applied to a generated mask: whole-dash deletion, erosion
/// of the survivors and salt noise on the background.
struct CorruptionSpec {
    double drop_prob = 0.0;
    int erode_px = 0;
    double noise_density = 0.0;
    std::uint64_t seed = 0;
};

struct SynthResult {
    BinaryMask mask;
    std::vector<DashRecord> truth;  // jittered positions, id order = row-major
    GridModel truth_grid;           // unjittered
};

/// Throws ArgumentError naming the first invalid field, including a grid
/// that does not fit the canvas.
void validate(const SynthSpec& spec);
void validate(const CorruptionSpec& spec, std::span<const DashRecord> truth);

SynthResult generate(const SynthSpec& spec);

/// Draw order: one drop draw per dash in id order, then (after erosion) one
/// noise draw per pixel in row-major order when noise_density > 0.
BinaryMask corrupt(const BinaryMask& mask, std::span<const DashRecord> truth,
                   const CorruptionSpec& spec);

/// Erosion with a (2r+1)x(2r+1) square; pixels beyond the border count as
/// background.
BinaryMask erode(const BinaryMask& mask, int radius);

struct DetectionMetrics {
    double precision = 1.0;
    double recall = 1.0;
    double rmse = 0.0;
    std::size_t matched = 0;
};

/// Greedy matching of predicted to truth origins. Candidate pairs within
/// `tolerance` (Euclidean) are taken in order of increasing distance, ties
/// broken by predicted id then truth id; each record is used at most once.
/// Empty predictions give precision 1; empty truth gives recall 1.
DetectionMetrics detection_metrics(std::span<const DashRecord> predicted,
                                   std::span<const DashRecord> truth, double tolerance);

/// |a & b| / |a | b|, 1.0 when both are empty.
double pixel_iou(const BinaryMask& a, const BinaryMask& b);

}  // namespace dashgrid
