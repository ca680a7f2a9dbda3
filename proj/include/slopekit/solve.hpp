#pragma once

#include <optional>

#include "slopekit/core.hpp"

namespace slopekit {

// Edge-matching grid problem: adjacent tiles must agree on the shared edge
// label; the rectangle's outer boundary may pin labels per side (-1 = free).
struct GridTile {
  int n = 0, e = 0, s = 0, w = 0;
};

struct GridProblem {
  int width = 0, height = 0;
  std::vector<GridTile> tiles;
  int north = -1, east = -1, south = -1, west = -1;
  // optional per-cell candidate lists, index y*width+x (y=0 bottom); empty = all
  std::vector<std::vector<int>> domains;
  long long max_cells = 1 << 16;
  long long max_steps = 4'000'000;
};

// First solution in bottom-up row-major cell order with ascending tile ids,
// found by arc-consistency propagation + depth-first search.
std::optional<std::vector<int>> solve_grid(const GridProblem& p);

// Every complete width x height patch of the system (pattern/rule semantics),
// in lexicographic cell order. pinned may fix cells (-1 = free, empty = none).
// Stops with BudgetExceeded when results or search steps pass the caps.
std::vector<std::vector<int>> enumerate_patches(const TilingSystem& sys, int width, int height,
                                                const std::vector<int>& pinned,
                                                long long max_results, long long max_steps);

}  // namespace slopekit
