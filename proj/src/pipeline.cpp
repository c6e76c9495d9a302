#include "dashgrid/pipeline.hpp"

namespace dashgrid {

RefineResult refine(const BinaryMask& input, const ReferenceTile& tile,
                    const RefineParams& params) {
    validate(params.fit);
    BinaryMask work = rotate(input, params.rotation_degrees);
    if (params.crop) work = crop(work, *params.crop);

    auto hits = scan_locations(work, tile, params.overlap_threshold, params.scan);
    auto grid = fit_grid(hits, tile, params.fit);
    auto recon = params.overlay ? reconstruct_onto(work, grid, tile)
                                : reconstruct_mask(grid, tile, work.width(), work.height());
    return {std::move(work), std::move(hits), std::move(grid), std::move(recon)};
}

}  // namespace dashgrid
