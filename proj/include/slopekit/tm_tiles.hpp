#pragma once

#include "slopekit/machine.hpp"
#include "slopekit/solve.hpp"
#include "slopekit/wang.hpp"

namespace slopekit {

enum class TmTileClass {
  kComputeL,
  kComputeS,
  kComputeR,
  kPassLeft,
  kPassRight,
  kTape,
  kInitHead,  // initial-row tiles touching the head: start variants and transit
  kInitTape,
  kBorderCorner,  // bottom-left tile emitting the initial state
  kBorderEdge,
  kHalt,
};

// Edge labels are interned strings: "-" none, "#" border, "s:<state>",
// "a:<letter>", "p:<state>,<letter>". Vertical edges carry tape content,
// horizontal edges carry travelling states.
struct TmTile {
  std::string name;
  int n = 0, e = 0, s = 0, w = 0;
  TmTileClass cls = TmTileClass::kTape;
  int letter = -1;  // letter this tile writes into its row (input pinning)
};

struct TmTileSet {
  TuringMachine machine;
  std::vector<std::string> labels;
  std::vector<TmTile> tiles;
  int lab_none = -1, lab_border = -1;

  int label_id(const std::string& text) const;  // -1 when absent
  int tile_id(const std::string& name) const;
  WangSystem as_wang() const;  // colors are label ids
};

// One row of tiles per machine step: the bottom row applies the first
// transition, halting pairs ride to the top border. Tile count is
//   |delta| + #delta(s0,.) with move in {R,S} + 3|S||A| + 3|A| + 2|H||A| + 3.
TmTileSet compile_tm(const TuringMachine& m);

struct RectangleInstance {
  int width = 0, height = 0;  // width = w + 2 border columns, height = t
  std::vector<int> input;     // letter ids, written left-aligned in the bottom row
};

// Exact search for a bordered rectangle whose bottom row spells the input.
// Returns the row-major (bottom-up) tile assignment, or nullopt.
std::optional<std::vector<int>> rectangle_tileable(const TmTileSet& ts,
                                                   const RectangleInstance& inst,
                                                   long long max_cells = 1 << 16,
                                                   long long max_steps = 4'000'000);

// Agreement bit between the two halting tests: the machine accepts the input
// within time < t and space <= w iff the (w+2) x t rectangle tiles.
bool check_simulation_equivalence(const TuringMachine& m, const std::vector<int>& input, int t,
                                  int w, long long max_steps = 4'000'000);

// Transducer rows: west/east edges chain states, south/north carry the letter
// rewritten by one application; delimiter columns close each row.
struct TransducerTiles {
  std::vector<std::string> labels;
  std::vector<std::string> names;
  std::vector<GridTile> tiles;
  int lab_delim = -1;

  int label_id(const std::string& text) const;
};

TransducerTiles transducer_to_tiles(const Transducer& t);

}  // namespace slopekit
