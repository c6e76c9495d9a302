#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dashgrid/gridfit.hpp"
#include "dashgrid/scan.hpp"

namespace dashgrid {

// Intermediate artifacts written between CLI stages. Parsers throw
// FormatError on malformed documents.

std::string grid_to_json(const GridModel& grid);
GridModel grid_from_json(std::string_view text);

std::string hits_to_json(std::span<const MatchHit> hits);
std::vector<MatchHit> hits_from_json(std::string_view text);

}  // namespace dashgrid
