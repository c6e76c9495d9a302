#include "dashgrid/scan.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "dashgrid/error.hpp"

namespace dashgrid {

ReferenceTile::ReferenceTile(BinaryMask mask) : mask_(std::move(mask)) {
    row_starts_.reserve(static_cast<std::size_t>(mask_.height()) + 1);
    for (int y = 0; y < mask_.height(); ++y) {
        row_starts_.push_back(offsets_.size());
        for (int x = 0; x < mask_.width(); ++x) {
            if (mask_.at(x, y)) offsets_.push_back({x, y});
        }
    }
    row_starts_.push_back(offsets_.size());
    on_count_ = offsets_.size();
    if (on_count_ == 0) throw ArgumentError("reference tile has no foreground pixels");
}

namespace {

void check_fits(const BinaryMask& mask, const ReferenceTile& tile) {
    if (tile.width() > mask.width() || tile.height() > mask.height()) {
        throw ArgumentError("tile " + std::to_string(tile.width()) + "x" +
                            std::to_string(tile.height()) + " is larger than the " +
                            std::to_string(mask.width()) + "x" +
                            std::to_string(mask.height()) + " mask");
    }
}

// Counts matched tile pixels for the window at (x, y). Returns false early
// once the window can no longer exceed `threshold`; the bound uses the same
// division as the final score, so pruning never changes a decision.
bool score_window(const BinaryMask& mask, const ReferenceTile& tile, int x, int y,
                  double threshold, double& overlap) {
    const auto& offsets = tile.offsets();
    const double on = static_cast<double>(tile.on_count());
    std::size_t matched = 0;
    for (int r = 0; r < tile.height(); ++r) {
        const auto row = mask.row(y + r);
        const std::size_t end = tile.row_begin(r + 1);
        for (std::size_t i = tile.row_begin(r); i < end; ++i) {
            matched += row[static_cast<std::size_t>(x + offsets[i].dx)];
        }
        const std::size_t remaining = tile.on_count() - end;
        if (static_cast<double>(matched + remaining) / on <= threshold) return false;
    }
    overlap = static_cast<double>(matched) / on;
    return overlap > threshold;
}

void scan_rows(const BinaryMask& mask, const ReferenceTile& tile, double threshold,
               int y_begin, int y_end, std::vector<MatchHit>& out) {
    const int x_last = mask.width() - tile.width();
    for (int y = y_begin; y < y_end; ++y) {
        for (int x = 0; x <= x_last; ++x) {
            double overlap = 0.0;
            if (score_window(mask, tile, x, y, threshold, overlap)) {
                out.push_back({x, y, overlap});
            }
        }
    }
}

}  // namespace

double overlap_fraction(const BinaryMask& mask, int x, int y, const ReferenceTile& tile) {
    if (x < 0 || y < 0 || x > mask.width() - tile.width() ||
        y > mask.height() - tile.height()) {
        throw ArgumentError("window at (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") does not fit inside the mask");
    }
    std::size_t matched = 0;
    for (const auto& o : tile.offsets()) {
        if (mask.at(x + o.dx, y + o.dy)) ++matched;
    }
    return static_cast<double>(matched) / static_cast<double>(tile.on_count());
}

std::vector<MatchHit> scan_locations(const BinaryMask& mask, const ReferenceTile& tile,
                                     double threshold, ScanOptions options) {
    check_fits(mask, tile);
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw ArgumentError("overlap threshold must lie in [0, 1]");
    }

    const int rows = mask.height() - tile.height() + 1;
    unsigned threads = options.threads != 0 ? options.threads
                                            : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(rows));

    std::vector<MatchHit> hits;
    if (threads <= 1) {
        scan_rows(mask, tile, threshold, 0, rows, hits);
        return hits;
    }

    // Contiguous row bands, concatenated in band order to keep row-major order.
    std::vector<std::vector<MatchHit>> bands(threads);
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned b = 0; b < threads; ++b) {
            const int begin = static_cast<int>(static_cast<long long>(rows) * b / threads);
            const int end = static_cast<int>(static_cast<long long>(rows) * (b + 1) / threads);
            workers.emplace_back([&, b, begin, end] {
                scan_rows(mask, tile, threshold, begin, end, bands[b]);
            });
        }
    }
    for (auto& band : bands) hits.insert(hits.end(), band.begin(), band.end());
    return hits;
}

}  // namespace dashgrid
