#pragma once

#include <cstddef>
#include <vector>

#include "dashgrid/raster.hpp"

namespace dashgrid {

/// Template depicting one well-formed dash. Used both to score scan windows
/// and as the stamp when the grid is redrawn.
class ReferenceTile {
public:
    /// Throws ArgumentError if `mask` has no foreground.
    explicit ReferenceTile(BinaryMask mask);

    const BinaryMask& mask() const { return mask_; }
    int width() const { return mask_.width(); }
    int height() const { return mask_.height(); }
    std::size_t on_count() const { return on_count_; }

    /// Foreground pixel offsets grouped by tile row: row r spans
    /// [row_begin(r), row_begin(r + 1)) in `offsets()`.
    struct Offset {
        int dx;
        int dy;
    };
    const std::vector<Offset>& offsets() const { return offsets_; }
    std::size_t row_begin(int r) const { return row_starts_[static_cast<std::size_t>(r)]; }

private:
    BinaryMask mask_;
    std::size_t on_count_ = 0;
    std::vector<Offset> offsets_;
    std::vector<std::size_t> row_starts_;
};

/// One accepted scan window, identified by its top-left corner.
struct MatchHit {
    int x = 0;
    int y = 0;
    double overlap = 0.0;

    friend bool operator==(const MatchHit&, const MatchHit&) = default;
};

/// Fraction of the tile's foreground pixels that land on mask foreground when
/// the tile's top-left is placed at (x, y). Tile background is ignored.
double overlap_fraction(const BinaryMask& mask, int x, int y, const ReferenceTile& tile);

struct ScanOptions {
    /// Worker threads for the row bands; 0 picks the hardware concurrency.
    /// The result is identical for every value.
    unsigned threads = 0;
};

/// Slides the tile over every full window at stride 1, y outer and x inner,
/// and returns each window whose overlap is strictly greater than
/// `threshold`, in visit order.
std::vector<MatchHit> scan_locations(const BinaryMask& mask, const ReferenceTile& tile,
                                     double threshold, ScanOptions options = {});

}  // namespace dashgrid
