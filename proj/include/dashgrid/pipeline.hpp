#pragma once

#include <optional>
#include <vector>

#include "dashgrid/gridfit.hpp"
#include "dashgrid/raster.hpp"
#include "dashgrid/reconstruct.hpp"
#include "dashgrid/scan.hpp"

namespace dashgrid {

struct RefineParams {
    double rotation_degrees = 0.0;
    std::optional<RectRegion> crop;
    double overlap_threshold = 0.6;
    FitConfig fit;
    /// Stamp onto the preprocessed input instead of a blank canvas.
    bool overlay = false;
    ScanOptions scan;
};

struct RefineResult {
    BinaryMask preprocessed;  // after rotate and crop; what was scanned
    std::vector<MatchHit> hits;
    GridModel grid;
    Reconstruction reconstruction;
};

/// rotate -> crop -> scan -> fit_grid -> reconstruct, all in memory.
RefineResult refine(const BinaryMask& input, const ReferenceTile& tile,
                    const RefineParams& params);

}  // namespace dashgrid
