#include "dashgrid/reconstruct.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "dashgrid/error.hpp"

namespace dashgrid {

void stamp_tile(BinaryMask& canvas, const ReferenceTile& tile, int x, int y) {
    for (const auto& o : tile.offsets()) {
        const int px = x + o.dx;
        const int py = y + o.dy;
        if (canvas.contains(px, py)) canvas.set(px, py, true);
    }
}

int round_position(double v) { return static_cast<int>(std::floor(v + 0.5)); }

Reconstruction reconstruct_onto(BinaryMask canvas, const GridModel& grid,
                                const ReferenceTile& tile) {
    Reconstruction out{std::move(canvas), {}};
    out.records.reserve(grid.row_positions.size() * grid.col_positions.size());
    for (const double r : grid.row_positions) {
        const int y = round_position(r);
        for (const double c : grid.col_positions) {
            const int x = round_position(c);
            stamp_tile(out.mask, tile, x, y);
            out.records.push_back({static_cast<int>(out.records.size()), x, y, tile.width(),
                                   tile.height()});
        }
    }
    return out;
}

Reconstruction reconstruct_mask(const GridModel& grid, const ReferenceTile& tile, int width,
                                int height) {
    if (width < tile.width() || height < tile.height()) {
        throw ArgumentError("canvas is smaller than the reference tile");
    }
    return reconstruct_onto(BinaryMask(width, height), grid, tile);
}

std::string export_csv(std::span<const DashRecord> records) {
    std::string out = "id,x,y,width,height\n";
    for (const auto& r : records) {
        out += std::to_string(r.id) + ',' + std::to_string(r.x) + ',' + std::to_string(r.y) +
               ',' + std::to_string(r.width) + ',' + std::to_string(r.height) + '\n';
    }
    return out;
}

std::string export_json(std::span<const DashRecord> records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        arr.push_back({{"id", r.id},
                       {"x", r.x},
                       {"y", r.y},
                       {"width", r.width},
                       {"height", r.height}});
    }
    return arr.dump(2) + "\n";
}

std::string export_dxf(std::span<const DashRecord> records, int image_height) {
    std::ostringstream out;
    const auto pair = [&out](int code, const auto& value) {
        out << code << '\n' << value << '\n';
    };
    pair(0, "SECTION");
    pair(2, "ENTITIES");
    for (const auto& r : records) {
        const int top = image_height - r.y;
        const int bottom = top - r.height;
        const int corners[4][2] = {
            {r.x, top}, {r.x + r.width, top}, {r.x + r.width, bottom}, {r.x, bottom}};
        pair(0, "LWPOLYLINE");
        pair(100, "AcDbEntity");
        pair(8, "0");
        pair(100, "AcDbPolyline");
        pair(90, 4);
        pair(70, 1);  // closed
        for (const auto& c : corners) {
            pair(10, c[0]);
            pair(20, c[1]);
        }
    }
    pair(0, "ENDSEC");
    pair(0, "EOF");
    return out.str();
}

namespace {

int parse_int(std::string_view field, std::size_t line) {
    int v = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw FormatError("csv: line " + std::to_string(line) + ": bad integer '" +
                          std::string(field) + "'");
    }
    return v;
}

}  // namespace

std::vector<DashRecord> parse_csv(std::string_view text) {
    std::vector<DashRecord> records;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "id,x,y,width,height") {
                throw FormatError("csv: line 1: expected header id,x,y,width,height");
            }
            header_seen = true;
            continue;
        }
        int fields[5];
        for (int i = 0; i < 5; ++i) {
            const auto comma = line.find(',');
            if ((i < 4) == (comma == std::string_view::npos)) {
                throw FormatError("csv: line " + std::to_string(line_no) +
                                  ": expected 5 fields");
            }
            fields[i] = parse_int(line.substr(0, comma), line_no);
            line = i < 4 ? line.substr(comma + 1) : std::string_view{};
        }
        records.push_back({fields[0], fields[1], fields[2], fields[3], fields[4]});
    }
    if (!header_seen) throw FormatError("csv: missing header");
    return records;
}

}  // namespace dashgrid
