#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dashgrid/error.hpp"
#include "dashgrid/pgm.hpp"
#include "dashgrid/rng.hpp"
#include "dashgrid/synth.hpp"
#include "support/oracles.hpp"

namespace dashgrid {
namespace {

SynthSpec small_spec() {
    SynthSpec s;
    s.width = 40;
    s.height = 30;
    s.tile_width = 2;
    s.tile_height = 2;
    s.row_start = 5;
    s.col_start = 4;
    s.row_spacing = 10;
    s.col_spacing = 12;
    s.n_rows = 2;
    s.n_cols = 3;
    return s;
}

TEST(DeterministicRng, SequenceIsPinned) {
    // mt19937_64's 10000th output is fixed by the C++ standard.
    std::mt19937_64 ref(5489u);
    ref.discard(9999);
    EXPECT_EQ(ref(), 9981545732273789042ull);

    DeterministicRng a(123);
    DeterministicRng b(123);
    for (int i = 0; i < 1000; ++i) {
        const auto v = a.uniform_int(-3, 3);
        ASSERT_EQ(v, b.uniform_int(-3, 3));
        ASSERT_GE(v, -3);
        ASSERT_LE(v, 3);
        const double u = a.uniform();
        ASSERT_EQ(u, b.uniform());
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(Generate, SmallGridArithmetic) {
    const SynthResult r = generate(small_spec());
    EXPECT_EQ(r.mask.count(), 24u);
    ASSERT_EQ(r.truth.size(), 6u);
    EXPECT_EQ(r.truth[0], (DashRecord{0, 4, 5, 2, 2}));
    EXPECT_EQ(r.truth[2], (DashRecord{2, 28, 5, 2, 2}));
    EXPECT_EQ(r.truth[3], (DashRecord{3, 4, 15, 2, 2}));
    EXPECT_EQ(r.truth[5], (DashRecord{5, 28, 15, 2, 2}));
    EXPECT_EQ(r.truth_grid.row_positions, (std::vector<double>{5, 15}));
    EXPECT_EQ(r.truth_grid.col_positions, (std::vector<double>{4, 16, 28}));
    EXPECT_DOUBLE_EQ(r.truth_grid.avg_col_spacing, 12.0);
}

TEST(Generate, MinimalGrid) {
    SynthSpec s = small_spec();
    s.n_rows = 1;
    s.n_cols = 1;
    const SynthResult r = generate(s);
    EXPECT_EQ(r.truth.size(), 1u);
    EXPECT_EQ(r.truth_grid.row_positions.size(), 1u);
    EXPECT_EQ(r.truth_grid.col_positions.size(), 1u);
}

TEST(Generate, SameSpecSameBytes) {
    SynthSpec s = small_spec();
    s.width = 200;
    s.height = 120;
    s.row_start = 10;
    s.col_start = 10;
    s.row_spacing = 30;
    s.col_spacing = 40;
    s.jitter = 3;
    s.seed = 99;
    const auto a = generate(s);
    const auto b = generate(s);
    EXPECT_EQ(save_pgm(a.mask), save_pgm(b.mask));
    EXPECT_EQ(a.truth, b.truth);
    s.seed = 100;
    EXPECT_NE(generate(s).truth, a.truth);
}

TEST(Generate, JitterStaysInRange) {
    SynthSpec s = small_spec();
    s.width = 300;
    s.height = 300;
    s.row_start = 20;
    s.col_start = 20;
    s.row_spacing = 40;
    s.col_spacing = 40;
    s.n_rows = 6;
    s.n_cols = 6;
    s.jitter = 4;
    s.seed = 3;
    const auto r = generate(s);
    for (const auto& d : r.truth) {
        const int row = d.id / 6;
        const int col = d.id % 6;
        EXPECT_LE(std::abs(d.y - (20 + 40 * row)), 4);
        EXPECT_LE(std::abs(d.x - (20 + 40 * col)), 4);
    }
}

TEST(Generate, RejectsGridThatDoesNotFit) {
    SynthSpec s = small_spec();
    s.n_cols = 4;  // 4 + 3 * 12 + 2 = 42 > 40
    EXPECT_THROW(generate(s), ArgumentError);
    s = small_spec();
    s.jitter = 6;  // col_start 4 - 6 < 0
    EXPECT_THROW(generate(s), ArgumentError);
    s = small_spec();
    s.row_spacing = 0;
    EXPECT_THROW(generate(s), ArgumentError);
}

TEST(Corrupt, DropEverything) {
    const auto r = generate(small_spec());
    EXPECT_EQ(corrupt(r.mask, r.truth, {1.0, 0, 0.0, 1}).count(), 0u);
}

TEST(Corrupt, ZeroCorruptionIsIdentity) {
    const auto r = generate(small_spec());
    EXPECT_EQ(corrupt(r.mask, r.truth, {0.0, 0, 0.0, 1}), r.mask);
}

TEST(Corrupt, ErodeShrinksSquareDash) {
    SynthSpec s = small_spec();
    s.tile_width = 4;
    s.tile_height = 4;
    s.n_rows = 1;
    s.n_cols = 1;
    const auto r = generate(s);
    const BinaryMask c = corrupt(r.mask, r.truth, {0.0, 1, 0.0, 0});
    EXPECT_EQ(c.count(), 4u);
    EXPECT_TRUE(c.at(5, 6));
    EXPECT_TRUE(c.at(6, 7));
}

TEST(Corrupt, DroppedDashesStayEmptyWithoutNoise) {
    SynthSpec s = small_spec();
    s.width = 200;
    s.height = 200;
    s.row_spacing = 20;
    s.col_spacing = 20;
    s.n_rows = 8;
    s.n_cols = 8;
    const auto r = generate(s);
    const BinaryMask c = corrupt(r.mask, r.truth, {0.5, 0, 0.0, 11});
    std::size_t dropped = 0;
    for (const auto& d : r.truth) {
        bool any = false;
        for (int y = 0; y < d.height; ++y)
            for (int x = 0; x < d.width; ++x) any |= c.at(d.x + x, d.y + y);
        dropped += any ? 0 : 1;
    }
    EXPECT_GT(dropped, 0u);
    EXPECT_LT(dropped, r.truth.size());
    EXPECT_EQ(c.count(), (r.truth.size() - dropped) * 4);
}

TEST(Corrupt, NoiseOnlyAddsBackgroundPixelsAndIsSeeded) {
    const auto r = generate(small_spec());
    const CorruptionSpec spec{0.0, 0, 0.2, 8};
    const BinaryMask a = corrupt(r.mask, r.truth, spec);
    EXPECT_EQ(a, corrupt(r.mask, r.truth, spec));
    EXPECT_GT(a.count(), r.mask.count());
    for (int y = 0; y < 30; ++y)
        for (int x = 0; x < 40; ++x)
            if (r.mask.at(x, y)) ASSERT_TRUE(a.at(x, y));
}

TEST(Corrupt, RejectsInvalidSpec) {
    const auto r = generate(small_spec());
    EXPECT_THROW(corrupt(r.mask, r.truth, {1.5, 0, 0.0, 0}), ArgumentError);
    EXPECT_THROW(corrupt(r.mask, r.truth, {0.0, 0, -0.1, 0}), ArgumentError);
    EXPECT_THROW(corrupt(r.mask, r.truth, {0.0, 1, 0.0, 0}), ArgumentError);  // 2*1 >= 2
    EXPECT_THROW(corrupt(r.mask, r.truth, {0.0, -1, 0.0, 0}), ArgumentError);
}

TEST(Erode, MatchesNaiveSquareErosion) {
    std::mt19937 rng(12);
    for (int radius = 0; radius <= 3; ++radius) {
        const BinaryMask m = testing::random_mask(rng, 25, 19, 0.8);
        const BinaryMask e = erode(m, radius);
        for (int y = 0; y < 19; ++y) {
            for (int x = 0; x < 25; ++x) {
                bool all = true;
                for (int dy = -radius; dy <= radius; ++dy)
                    for (int dx = -radius; dx <= radius; ++dx)
                        all &= m.contains(x + dx, y + dy) && m.at(x + dx, y + dy);
                ASSERT_EQ(e.at(x, y), all) << radius << " " << x << "," << y;
            }
        }
    }
}

TEST(DetectionMetrics, Perfect) {
    const auto truth = generate(small_spec()).truth;
    const auto m = detection_metrics(truth, truth, 2.0);
    EXPECT_DOUBLE_EQ(m.precision, 1.0);
    EXPECT_DOUBLE_EQ(m.recall, 1.0);
    EXPECT_DOUBLE_EQ(m.rmse, 0.0);
}

TEST(DetectionMetrics, SinglePairDistance) {
    const std::vector<DashRecord> pred{{0, 11, 11, 2, 2}};
    const std::vector<DashRecord> truth{{0, 10, 10, 2, 2}};
    const auto m = detection_metrics(pred, truth, 3.0);
    EXPECT_DOUBLE_EQ(m.precision, 1.0);
    EXPECT_DOUBLE_EQ(m.recall, 1.0);
    EXPECT_DOUBLE_EQ(m.rmse, std::sqrt(2.0));
    EXPECT_EQ(detection_metrics(pred, truth, 1.0).matched, 0u);
}

TEST(DetectionMetrics, EmptyConventions) {
    const std::vector<DashRecord> some{{0, 1, 1, 2, 2}};
    auto m = detection_metrics({}, some, 2.0);
    EXPECT_EQ(m.precision, 1.0);
    EXPECT_EQ(m.recall, 0.0);
    EXPECT_EQ(m.rmse, 0.0);
    m = detection_metrics({}, {}, 2.0);
    EXPECT_EQ(m.precision, 1.0);
    EXPECT_EQ(m.recall, 1.0);
    m = detection_metrics(some, {}, 2.0);
    EXPECT_EQ(m.precision, 0.0);
    EXPECT_EQ(m.recall, 1.0);
    EXPECT_THROW(detection_metrics(some, some, 0.0), ArgumentError);
}

TEST(DetectionMetrics, GreedyClosestPairFirst) {
    // p1 sits on t0 and wins it; p0 then falls back to t1 at sqrt(5).
    const std::vector<DashRecord> pred{{0, 2, 0, 1, 1}, {1, 0, 0, 1, 1}};
    const std::vector<DashRecord> truth{{0, 0, 0, 1, 1}, {1, 3, 2, 1, 1}};
    const auto m = detection_metrics(pred, truth, 2.5);
    EXPECT_EQ(m.matched, 2u);
    EXPECT_DOUBLE_EQ(m.rmse, std::sqrt((0.0 + 5.0) / 2.0));
}

TEST(DetectionMetrics, TieGoesToSmallerPredictedId) {
    const std::vector<DashRecord> pred{{0, 1, 0, 1, 1}, {1, -1, 0, 1, 1}};
    const std::vector<DashRecord> truth{{0, 0, 0, 1, 1}};
    const auto m = detection_metrics(pred, truth, 2.0);
    EXPECT_EQ(m.matched, 1u);
    EXPECT_DOUBLE_EQ(m.precision, 0.5);
}

TEST(DetectionMetrics, RangesOnRandomInputs) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coord(0, 60);
    std::uniform_int_distribution<int> count(0, 12);
    for (int i = 0; i < 100; ++i) {
        std::vector<DashRecord> a(static_cast<std::size_t>(count(rng)));
        std::vector<DashRecord> b(static_cast<std::size_t>(count(rng)));
        for (std::size_t k = 0; k < a.size(); ++k) a[k] = {int(k), coord(rng), coord(rng), 1, 1};
        for (std::size_t k = 0; k < b.size(); ++k) b[k] = {int(k), coord(rng), coord(rng), 1, 1};
        const auto m = detection_metrics(a, b, 6.0);
        ASSERT_GE(m.precision, 0.0);
        ASSERT_LE(m.precision, 1.0);
        ASSERT_GE(m.recall, 0.0);
        ASSERT_LE(m.recall, 1.0);
        ASSERT_LE(m.rmse, 6.0);
    }
}

TEST(PixelIou, Cases) {
    const BinaryMask a(6, 6);
    EXPECT_EQ(pixel_iou(a, a), 1.0);
    BinaryMask p(6, 6);
    BinaryMask q(6, 6);
    for (int x = 0; x < 4; ++x) p.set(x, 0, true);
    EXPECT_EQ(pixel_iou(p, p), 1.0);
    for (int x = 0; x < 4; ++x) q.set(x, 5, true);
    EXPECT_EQ(pixel_iou(p, q), 0.0);
    BinaryMask r(6, 6);
    for (int x = 2; x < 6; ++x) r.set(x, 0, true);
    EXPECT_DOUBLE_EQ(pixel_iou(p, r), 1.0 / 3.0);
    EXPECT_THROW(pixel_iou(p, BinaryMask(5, 6)), ArgumentError);
}

}  // namespace
}  // namespace dashgrid
