#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dashgrid/error.hpp"
#include "dashgrid/gridfit.hpp"
#include "dashgrid/synth.hpp"
#include "support/oracles.hpp"

namespace dashgrid {
namespace {

using V = std::vector<double>;

// Hits of the worked example: y in {10, 11, 12, 40, 41}; the row near 11
// has columns 10, 30, 50 and the row near 40.5 has 12, 32.
std::vector<MatchHit> worked_hits() {
    return {{10, 10, 1.0}, {30, 11, 1.0}, {50, 12, 1.0}, {12, 40, 1.0}, {32, 41, 1.0}};
}

TEST(Cluster1d, Singleton) { EXPECT_EQ(cluster_1d(V{7}, 3.0), V{7.0}); }

TEST(Cluster1d, Empty) { EXPECT_TRUE(cluster_1d(V{}, 1.0).empty()); }

TEST(Cluster1d, ChainsSmallGaps) {
    EXPECT_EQ(cluster_1d(V{10, 11, 12, 40, 41}, 5.0), (V{11.0, 40.5}));
    EXPECT_EQ(cluster_1d(V{41, 10, 40, 12, 11}, 5.0), (V{11.0, 40.5}));
}

TEST(Cluster1d, GapEqualToThresholdSplits) {
    EXPECT_EQ(cluster_1d(V{0, 5}, 5.0), (V{0.0, 5.0}));
    EXPECT_EQ(cluster_1d(V{0, 4.5}, 5.0), (V{2.25}));
}

TEST(Cluster1d, DuplicatesAreCollapsedBeforeAveraging) {
    // Distinct positions {0, 3} -> mean 1.5 regardless of multiplicity.
    EXPECT_EQ(cluster_1d(V{0, 0, 0, 3}, 5.0), (V{1.5}));
}

TEST(Cluster1d, RejectsNonPositiveThreshold) {
    EXPECT_THROW(cluster_1d(V{1, 2}, 0.0), ArgumentError);
    EXPECT_THROW(cluster_1d(V{1, 2}, -1.0), ArgumentError);
}

TEST(Cluster1d, MatchesTransitiveClosureOracle) {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> size(0, 50);
    std::uniform_int_distribution<int> coord(0, 300);
    std::uniform_real_distribution<double> thr(0.5, 25.0);
    for (int i = 0; i < 200; ++i) {
        V values(static_cast<std::size_t>(size(rng)));
        for (auto& v : values) v = coord(rng);
        const double t = i % 5 == 0 ? std::floor(thr(rng)) + 1 : thr(rng);
        const V got = cluster_1d(values, t);
        ASSERT_EQ(got, testing::closure_single_linkage(values, t)) << "case " << i;

        // Idempotent.
        ASSERT_EQ(cluster_1d(got, t), got);
        // Permutation invariant.
        V shuffled = values;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        ASSERT_EQ(cluster_1d(shuffled, t), got);
        // Means ascending and at least one threshold apart.
        for (std::size_t k = 1; k < got.size(); ++k) ASSERT_GE(got[k] - got[k - 1], t);
    }
}

TEST(Cluster1d, MeansLieInsideTheirClusters) {
    std::mt19937 rng(78);
    std::uniform_real_distribution<double> coord(0.0, 100.0);
    for (int i = 0; i < 50; ++i) {
        V values(30);
        for (auto& v : values) v = coord(rng);
        const V means = cluster_1d(values, 4.0);
        std::sort(values.begin(), values.end());
        // Walk the sorted values alongside the clusters.
        std::size_t c = 0;
        double lo = values[0];
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (k > 0 && values[k] - values[k - 1] >= 4.0) {
                ASSERT_GE(means[c], lo);
                ASSERT_LE(means[c], values[k - 1]);
                ++c;
                lo = values[k];
            }
        }
        ASSERT_EQ(c + 1, means.size());
        ASSERT_GE(means[c], lo);
        ASSERT_LE(means[c], values.back());
    }
}

TEST(ClusterRows, WorkedExample) {
    const FitConfig cfg{5.0, 0.3};
    EXPECT_EQ(cluster_rows(worked_hits(), cfg), (V{11.0, 40.5}));
}

TEST(ClusterRows, SingleRowAndEmpty) {
    const FitConfig cfg{5.0, 0.3};
    const std::vector<MatchHit> same_row{{1, 20, 1.0}, {9, 20, 1.0}, {30, 20, 0.8}};
    EXPECT_EQ(cluster_rows(same_row, cfg), V{20.0});
    EXPECT_TRUE(cluster_rows({}, cfg).empty());
}

TEST(ColumnStats, WorkedExample) {
    const ColumnStats s = column_stats(worked_hits(), V{11.0, 40.5});
    EXPECT_DOUBLE_EQ(s.avg_col_spacing, 20.0);
    EXPECT_EQ(s.unique_cols, (V{10, 12, 30, 32, 50}));
}

TEST(ColumnStats, SingleGap) {
    const std::vector<MatchHit> hits{{0, 5, 1.0}, {100, 5, 1.0}};
    const ColumnStats s = column_stats(hits, V{5.0});
    EXPECT_DOUBLE_EQ(s.avg_col_spacing, 100.0);
    EXPECT_EQ(s.unique_cols, (V{0, 100}));
}

TEST(ColumnStats, PoolsAllGapsRatherThanAveragingRowMeans) {
    // Row 0 gaps {10, 10, 10}, row 1 gap {40}: pooled 70/4 = 17.5, whereas
    // the mean of per-row means would be 25.
    const std::vector<MatchHit> hits{{0, 0, 1},  {10, 0, 1}, {20, 0, 1},
                                     {30, 0, 1}, {0, 50, 1}, {40, 50, 1}};
    EXPECT_DOUBLE_EQ(column_stats(hits, V{0.0, 50.0}).avg_col_spacing, 17.5);
}

TEST(ColumnStats, TiesGoToTheLowerRow) {
    // y = 10 is equidistant from rows 0 and 20; it joins row 0, so row 0
    // sees columns {0, 7} and row 20 only {100}.
    const std::vector<MatchHit> hits{{0, 0, 1}, {7, 10, 1}, {100, 20, 1}};
    EXPECT_DOUBLE_EQ(column_stats(hits, V{0.0, 20.0}).avg_col_spacing, 7.0);
}

TEST(ColumnStats, OneHitPerRowIsInsufficient) {
    const std::vector<MatchHit> hits{{5, 0, 1}, {40, 50, 1}};
    EXPECT_THROW(column_stats(hits, V{0.0, 50.0}), ProcessingError);
}

TEST(ClusterCols, WorkedExample) {
    const FitConfig cfg{5.0, 0.3};
    EXPECT_EQ(cluster_cols(V{10, 12, 30, 32, 50}, 20.0, cfg), (V{11.0, 31.0, 50.0}));
}

TEST(ClusterCols, SingletonAndHugeFactor) {
    EXPECT_EQ(cluster_cols(V{5}, 3.0, {1.0, 2.0}), V{5.0});
    EXPECT_EQ(cluster_cols(V{10, 12, 30, 32, 50}, 20.0, {1.0, 100.0}), V{26.8});
}

TEST(FitGrid, WorkedExample) {
    const ReferenceTile tile(BinaryMask(2, 2, true));
    const GridModel g = fit_grid(worked_hits(), tile, {5.0, 0.3});
    EXPECT_EQ(g.row_positions, (V{11.0, 40.5}));
    EXPECT_EQ(g.col_positions, (V{11.0, 31.0, 50.0}));
    EXPECT_DOUBLE_EQ(g.avg_col_spacing, 20.0);
    EXPECT_EQ(g.tile_width, 2);
    EXPECT_EQ(g.tile_height, 2);
}

TEST(FitGrid, SingleDashHasUndefinedColumnSpacing) {
    const ReferenceTile tile(BinaryMask(20, 6, true));
    BinaryMask mask(60, 30);
    for (int y = 10; y < 16; ++y)
        for (int x = 20; x < 40; ++x) mask.set(x, y, true);
    // Only the exact placement clears 0.99, leaving one column per row.
    const auto hits = scan_locations(mask, tile, 0.99);
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_EQ(cluster_rows(hits, {5.0, 0.5}), V{10.0});
    EXPECT_THROW(fit_grid(hits, tile, {5.0, 0.5}), ProcessingError);
}

TEST(FitGrid, EmptyHitsAndBadConfig) {
    const ReferenceTile tile(BinaryMask(2, 2, true));
    EXPECT_THROW(fit_grid({}, tile, {5.0, 0.3}), ProcessingError);
    EXPECT_THROW(fit_grid(worked_hits(), tile, {0.0, 0.3}), ArgumentError);
    EXPECT_THROW(fit_grid(worked_hits(), tile, {5.0, -1.0}), ArgumentError);
}

TEST(FitGrid, RecoversJitterFreeSyntheticGridExactly) {
    SynthSpec spec;
    spec.width = 300;
    spec.height = 200;
    spec.tile_width = 16;
    spec.tile_height = 5;
    // Far enough from the border that no hit block is clipped.
    spec.row_start = 12;
    spec.col_start = 20;
    spec.row_spacing = 45;
    spec.col_spacing = 40;
    spec.n_rows = 4;
    spec.n_cols = 6;
    const SynthResult truth = generate(spec);
    const ReferenceTile tile(BinaryMask(16, 5, true));
    for (const double t : {0.3, 0.6, 0.9}) {
        const auto hits = scan_locations(truth.mask, tile, t);
        const GridModel g = fit_grid(hits, tile, {10.0, 1.0});
        EXPECT_EQ(g.row_positions, truth.truth_grid.row_positions) << t;
        EXPECT_EQ(g.col_positions, truth.truth_grid.col_positions) << t;
    }
}

TEST(FitGrid, JitteredGridStaysWithinTwoPixels) {
    SynthSpec spec;
    spec.width = 400;
    spec.height = 300;
    spec.tile_width = 20;
    spec.tile_height = 6;
    spec.row_start = 20;
    spec.col_start = 15;
    spec.row_spacing = 60;
    spec.col_spacing = 50;
    spec.n_rows = 4;
    spec.n_cols = 7;
    spec.jitter = 1;
    spec.seed = 5;
    const SynthResult truth = generate(spec);
    const ReferenceTile tile(BinaryMask(20, 6, true));
    const GridModel g = fit_grid(scan_locations(truth.mask, tile, 0.6), tile, {15.0, 1.0});
    ASSERT_EQ(g.row_positions.size(), 4u);
    ASSERT_EQ(g.col_positions.size(), 7u);
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_NEAR(g.row_positions[i], truth.truth_grid.row_positions[i], 2.0);
    for (std::size_t i = 0; i < 7; ++i)
        EXPECT_NEAR(g.col_positions[i], truth.truth_grid.col_positions[i], 2.0);
}

}  // namespace
}  // namespace dashgrid
