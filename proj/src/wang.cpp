#include "slopekit/wang.hpp"

namespace slopekit {

TilingSystem wang_to_patterns(const WangSystem& w) {
  std::vector<std::string> names;
  for (const auto& t : w.tiles) names.push_back(t.name);
  std::vector<Pattern> forb;
  int n = (int)w.tiles.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (w.tiles[a].edge[kEast] != w.tiles[b].edge[kWest]) forb.push_back(Pattern::domino_h(a, b));
      if (w.tiles[a].edge[kNorth] != w.tiles[b].edge[kSouth]) forb.push_back(Pattern::domino_v(a, b));
    }
  return TilingSystem::make(std::move(names), std::move(forb));
}

}  // namespace slopekit
