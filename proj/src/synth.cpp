#include "dashgrid/synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "dashgrid/error.hpp"
#include "dashgrid/rng.hpp"

namespace dashgrid {

namespace {

void require(bool ok, const std::string& field, const std::string& rule) {
    if (!ok) throw ArgumentError(field + " " + rule);
}

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

void fill_rect(BinaryMask& mask, int x0, int y0, int w, int h, bool value) {
    const int x1 = std::min(mask.width(), x0 + w);
    const int y1 = std::min(mask.height(), y0 + h);
    for (int y = std::max(0, y0); y < y1; ++y) {
        for (int x = std::max(0, x0); x < x1; ++x) mask.set(x, y, value);
    }
}

// Marks pixels whose whole run [i - r, i + r] along one axis is foreground.
// `get(i)` reads the line, `n` is its length.
template <typename Get, typename Set>
void erode_line(int n, int r, Get get, Set set) {
    // run[i]: number of consecutive foreground pixels ending at i.
    std::vector<int> run(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) run[i] = get(i) ? (i > 0 ? run[i - 1] : 0) + 1 : 0;
    for (int i = 0; i < n; ++i) {
        const int end = i + r;
        set(i, end < n && run[end] >= 2 * r + 1);
    }
}

}  // namespace

void validate(const SynthSpec& s) {
    require(s.width >= 1, "width", "must be >= 1");
    require(s.height >= 1, "height", "must be >= 1");
    require(s.tile_width >= 1, "tile_width", "must be >= 1");
    require(s.tile_height >= 1, "tile_height", "must be >= 1");
    require(s.n_rows >= 1, "n_rows", "must be >= 1");
    require(s.n_cols >= 1, "n_cols", "must be >= 1");
    require(s.row_spacing > 0, "row_spacing", "must be > 0");
    require(s.col_spacing > 0, "col_spacing", "must be > 0");
    require(s.jitter >= 0, "jitter", "must be >= 0");
    require(s.row_start - s.jitter >= 0, "row_start", "minus jitter must be >= 0");
    require(s.col_start - s.jitter >= 0, "col_start", "minus jitter must be >= 0");

    const long long last_row = static_cast<long long>(s.row_start) +
                               static_cast<long long>(s.n_rows - 1) * s.row_spacing +
                               s.jitter + s.tile_height;
    const long long last_col = static_cast<long long>(s.col_start) +
                               static_cast<long long>(s.n_cols - 1) * s.col_spacing +
                               s.jitter + s.tile_width;
    require(last_row <= s.height, "n_rows",
            "grid does not fit: needs height " + std::to_string(last_row));
    require(last_col <= s.width, "n_cols",
            "grid does not fit: needs width " + std::to_string(last_col));
}

void validate(const CorruptionSpec& c, std::span<const DashRecord> truth) {
    require(is_probability(c.drop_prob), "drop_prob", "must lie in [0, 1]");
    require(is_probability(c.noise_density), "noise_density", "must lie in [0, 1]");
    require(c.erode_px >= 0, "erode_px", "must be >= 0");
    for (const auto& d : truth) {
        require(2 * c.erode_px < std::min(d.width, d.height), "erode_px",
                "must be less than half the smaller dash dimension");
    }
}

SynthResult generate(const SynthSpec& spec) {
    validate(spec);
    DeterministicRng rng(spec.seed);

    SynthResult out{BinaryMask(spec.width, spec.height), {}, {}};
    for (int r = 0; r < spec.n_rows; ++r) {
        for (int c = 0; c < spec.n_cols; ++c) {
            int x = spec.col_start + c * spec.col_spacing;
            int y = spec.row_start + r * spec.row_spacing;
            if (spec.jitter > 0) {
                x += static_cast<int>(rng.uniform_int(-spec.jitter, spec.jitter));
                y += static_cast<int>(rng.uniform_int(-spec.jitter, spec.jitter));
            }
            fill_rect(out.mask, x, y, spec.tile_width, spec.tile_height, true);
            out.truth.push_back({static_cast<int>(out.truth.size()), x, y, spec.tile_width,
                                 spec.tile_height});
        }
    }

    auto& grid = out.truth_grid;
    for (int r = 0; r < spec.n_rows; ++r) grid.row_positions.push_back(spec.row_start + r * spec.row_spacing);
    for (int c = 0; c < spec.n_cols; ++c) grid.col_positions.push_back(spec.col_start + c * spec.col_spacing);
    grid.avg_col_spacing = spec.col_spacing;
    grid.tile_width = spec.tile_width;
    grid.tile_height = spec.tile_height;
    return out;
}

BinaryMask erode(const BinaryMask& mask, int radius) {
    if (radius < 0) throw ArgumentError("erosion radius must be >= 0");
    if (radius == 0) return mask;
    const int w = mask.width();
    const int h = mask.height();

    BinaryMask horizontal(w, h);
    for (int y = 0; y < h; ++y) {
        erode_line(
            w, radius, [&](int i) { return mask.at(i, y); },
            [&](int i, bool v) { horizontal.set(i, y, v); });
    }
    BinaryMask out(w, h);
    for (int x = 0; x < w; ++x) {
        erode_line(
            h, radius, [&](int i) { return horizontal.at(x, i); },
            [&](int i, bool v) { out.set(x, i, v); });
    }
    return out;
}

BinaryMask corrupt(const BinaryMask& mask, std::span<const DashRecord> truth,
                   const CorruptionSpec& spec) {
    validate(spec, truth);
    DeterministicRng rng(spec.seed);

    BinaryMask out = mask;
    for (const auto& d : truth) {
        if (rng.bernoulli(spec.drop_prob)) fill_rect(out, d.x, d.y, d.width, d.height, false);
    }
    out = erode(out, spec.erode_px);
    if (spec.noise_density > 0.0) {
        for (int y = 0; y < out.height(); ++y) {
            for (int x = 0; x < out.width(); ++x) {
                if (rng.bernoulli(spec.noise_density) && !out.at(x, y)) out.set(x, y, true);
            }
        }
    }
    return out;
}

DetectionMetrics detection_metrics(std::span<const DashRecord> predicted,
                                   std::span<const DashRecord> truth, double tolerance) {
    if (!(tolerance > 0.0)) throw ArgumentError("tolerance must be > 0");

    struct Candidate {
        double dist;
        std::size_t p;
        std::size_t t;
    };
    std::vector<Candidate> candidates;
    for (std::size_t p = 0; p < predicted.size(); ++p) {
        for (std::size_t t = 0; t < truth.size(); ++t) {
            const double d = std::hypot(predicted[p].x - truth[t].x, predicted[p].y - truth[t].y);
            if (d <= tolerance) candidates.push_back({d, p, t});
        }
    }
    std::sort(candidates.begin(), candidates.end(), [&](const Candidate& a, const Candidate& b) {
        return std::tuple(a.dist, predicted[a.p].id, truth[a.t].id) <
               std::tuple(b.dist, predicted[b.p].id, truth[b.t].id);
    });

    std::vector<bool> p_used(predicted.size());
    std::vector<bool> t_used(truth.size());
    DetectionMetrics m;
    double sq_sum = 0.0;
    for (const auto& c : candidates) {
        if (p_used[c.p] || t_used[c.t]) continue;
        p_used[c.p] = true;
        t_used[c.t] = true;
        ++m.matched;
        sq_sum += c.dist * c.dist;
    }
    const auto matched = static_cast<double>(m.matched);
    m.precision = predicted.empty() ? 1.0 : matched / static_cast<double>(predicted.size());
    m.recall = truth.empty() ? 1.0 : matched / static_cast<double>(truth.size());
    m.rmse = m.matched == 0 ? 0.0 : std::sqrt(sq_sum / matched);
    return m;
}

double pixel_iou(const BinaryMask& a, const BinaryMask& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw ArgumentError("pixel_iou: mask dimensions differ (" + std::to_string(a.width()) +
                            "x" + std::to_string(a.height()) + " vs " +
                            std::to_string(b.width()) + "x" + std::to_string(b.height()) + ")");
    }
    std::size_t inter = 0;
    std::size_t uni = 0;
    for (int y = 0; y < a.height(); ++y) {
        const auto ra = a.row(y);
        const auto rb = b.row(y);
        for (std::size_t x = 0; x < ra.size(); ++x) {
            inter += ra[x] & rb[x];
            uni += ra[x] | rb[x];
        }
    }
    return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace dashgrid
