#pragma once

#include <string>
#include <vector>

#include "narayana_lab/aztec.hpp"
#include "narayana_lab/nipaths.hpp"
#include "narayana_lab/paths.hpp"

namespace nlab {

// SVG 1.1 documents, 20px per lattice unit, y-axis pointing up.
std::string render_paths_svg(const std::vector<SchroederPath>& paths);
std::string render_tuple_svg(const PathTuple& tuple);
// Four domino styles (horizontal/vertical by even/odd); with overlay the
// tiling's path tuple is drawn through the domino centres.
std::string render_tiling_svg(const Tiling& tiling, bool overlay = true);

}  // namespace nlab
