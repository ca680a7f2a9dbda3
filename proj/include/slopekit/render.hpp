#pragma once

#include <string>
#include <vector>

#include "slopekit/core.hpp"

namespace slopekit {

// Fixed palette for the classic two-tile names, a stable name hash otherwise.
std::string tile_color(const std::string& name);

// One rect per present cell, row y drawn upward from the bottom. Byte-stable.
std::string render_svg(const std::vector<std::string>& names, const Pattern& window,
                       int cell_size = 16);

}  // namespace slopekit
