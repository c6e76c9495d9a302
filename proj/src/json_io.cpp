#include "dashgrid/json_io.hpp"

#include <json.hpp>

#include "dashgrid/error.hpp"

namespace dashgrid {

using nlohmann::ordered_json;

namespace {

ordered_json parse(std::string_view text, const char* what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

std::string grid_to_json(const GridModel& grid) {
    ordered_json j;
    j["row_positions"] = grid.row_positions;
    j["col_positions"] = grid.col_positions;
    j["avg_col_spacing"] = grid.avg_col_spacing;
    j["tile_width"] = grid.tile_width;
    j["tile_height"] = grid.tile_height;
    return j.dump(2) + "\n";
}

GridModel grid_from_json(std::string_view text) {
    const auto j = parse(text, "grid json");
    try {
        GridModel grid;
        grid.row_positions = j.at("row_positions").get<std::vector<double>>();
        grid.col_positions = j.at("col_positions").get<std::vector<double>>();
        grid.avg_col_spacing = j.at("avg_col_spacing").get<double>();
        grid.tile_width = j.at("tile_width").get<int>();
        grid.tile_height = j.at("tile_height").get<int>();
        return grid;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("grid json: ") + e.what());
    }
}

std::string hits_to_json(std::span<const MatchHit> hits) {
    ordered_json arr = ordered_json::array();
    for (const auto& h : hits) arr.push_back({{"x", h.x}, {"y", h.y}, {"overlap", h.overlap}});
    return arr.dump() + "\n";
}

std::vector<MatchHit> hits_from_json(std::string_view text) {
    const auto j = parse(text, "hits json");
    try {
        std::vector<MatchHit> hits;
        for (const auto& h : j) {
            hits.push_back({h.at("x").get<int>(), h.at("y").get<int>(),
                            h.at("overlap").get<double>()});
        }
        return hits;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("hits json: ") + e.what());
    }
}

}  // namespace dashgrid
