#pragma once

#include <array>

#include "slopekit/core.hpp"

namespace slopekit {

// Edge order: north, east, south, west.
enum EdgeSide { kNorth = 0, kEast = 1, kSouth = 2, kWest = 3 };

struct WangTile {
  std::string name;
  std::array<int, 4> edge{};
};

struct WangSystem {
  std::vector<WangTile> tiles;
};

// Mismatched shared edges become forbidden dominoes: horizontal [a|b] when
// east(a) != west(b), vertical [b over a] when north(a) != south(b).
// Alphabet order follows the tile list.
TilingSystem wang_to_patterns(const WangSystem& w);

}  // namespace slopekit
