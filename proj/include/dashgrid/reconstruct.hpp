#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dashgrid/gridfit.hpp"
#include "dashgrid/raster.hpp"
#include "dashgrid/scan.hpp"

namespace dashgrid {

/// One placed dash: top-left corner plus the stamp size.
struct DashRecord {
    int id = 0;
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;

    friend bool operator==(const DashRecord&, const DashRecord&) = default;
};

/// ORs the tile's foreground onto `canvas` with its top-left at (x, y).
/// Pixels falling outside the canvas are dropped.
void stamp_tile(BinaryMask& canvas, const ReferenceTile& tile, int x, int y);

/// Half-up rounding used for every grid-to-pixel conversion.
int round_position(double v);

struct Reconstruction {
    BinaryMask mask;
    std::vector<DashRecord> records;
};

/// Stamps the tile at every (row, column) of the grid, rows outer, onto
/// `canvas`. Records are numbered in stamping order.
Reconstruction reconstruct_onto(BinaryMask canvas, const GridModel& grid,
                                const ReferenceTile& tile);

/// reconstruct_onto a blank width x height canvas.
Reconstruction reconstruct_mask(const GridModel& grid, const ReferenceTile& tile, int width,
                                int height);

// Coordinate exports.
std::string export_csv(std::span<const DashRecord> records);
std::string export_json(std::span<const DashRecord> records);

/// Entity-only ASCII DXF with one closed LWPOLYLINE rectangle per record.
/// The y axis is flipped against `image_height` so CAD y grows upwards.
std::string export_dxf(std::span<const DashRecord> records, int image_height);

/// Parses the export_csv format. Throws FormatError with the line number.
std::vector<DashRecord> parse_csv(std::string_view text);

}  // namespace dashgrid
