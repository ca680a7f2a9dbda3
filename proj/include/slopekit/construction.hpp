#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slopekit/core.hpp"
#include "slopekit/machine.hpp"

namespace slopekit {

// Product systems expose one fixed feature schema; layer generators write
// rules against these indices so any layer subset fuses without renumbering.
enum ConstructionFeature : int {
  kFCClass = 0,   // white / black / leftmost / betweenrl / rightmost / betweenlr
  kFBgTile = 1,   // background tile under whites; bg count elsewhere
  kFRTile = 2,    // square-forcing tile
  kFWd1 = 3,      // dotted row prolongation (east from rightmost)
  kFWe1 = 4,      // dashed row prolongation (west from leftmost)
  kFWA = 5,       // descending arm of the reflecting offset signal
  kFWB = 6,       // returning arm of the reflecting offset signal
  kFWkO = 7,      // extremity signal toward the next leftmost
  kFWkB = 8,      // extremity signal toward the previous rightmost
  kFSArrow = 9,   // background transmission arrow
  kFSCopy = 10,   // transmitted background value
  kFPa = 11,      // first counter track cell kind
  kFPb = 12,      // second counter track cell kind
  kFPdead = 13,   // stripped-column marker
  kFAColor = 14,  // square color
  kFeatureCount = 15,
};

enum CClass : int { kCWhite = 0, kCBlack = 1, kCLm = 2, kCRl = 3, kCRm = 4, kCLr = 5 };
enum RTile : int {
  kRVert = 0,
  kRHoriz = 1,
  kRDroite = 2,
  kRGauche = 3,
  kRDiag = 4,
  kRJointG = 5,
  kRJointD = 6,
};
enum SArrow : int { kSAr = 0, kSAd = 1, kSGr = 2, kSGd = 3 };

struct Background {
  std::string name;
  TilingSystem system;  // forbidden patterns must be dominoes (they lift to rules)
  enum class Det { kEast, kNone } determinism = Det::kNone;
};

Background placeholder_background();   // one free tile
Background checkerboard_background();  // two tiles forced to alternate horizontally

struct LayerSpec {
  std::string name;
  std::vector<std::string> alphabet;  // layer symbols
  std::vector<CompiledRule> rules;    // over the fixed construction schema
  // allowed_on[cclass] bit t set => layer symbol t may ride that class
  std::array<uint64_t, 6> allowed_on{};
  std::string notes;
};

LayerSpec gen_component_C(const Background& bg);
LayerSpec gen_component_R();
LayerSpec gen_component_W();
LayerSpec gen_component_S(const Background& bg);
LayerSpec gen_component_P_TM(const TuringMachine& machine);
LayerSpec gen_component_A();

// The grid-aligned variants the slopes 0, +-1 and the vertical slope need are
// sketches only; this keeps the API total while the rule sets stay out of
// scope.
LayerSpec special_slope_stub(Slope slope);

struct LayerMask {
  bool r = true, w = true, s = true, p = true, a = true;  // C is always present
};

struct AssembleOptions {
  LayerMask layers;
  long long max_tiles = 200000;
};

struct AssembleStats {
  long long tiles = 0;
  long long rules = 0;
  std::map<std::string, long long> layer_rules;
  std::map<std::string, long long> class_tiles;
};

// Product alphabet filtered by the layers' allowed_on masks, all layer rules
// concatenated. Tile count is audited in closed form before enumeration; a
// count beyond max_tiles raises the budget error carrying the count.
TilingSystem assemble_tau(const TuringMachine& machine, const Background& bg,
                          const AssembleOptions& opt = {}, AssembleStats* stats = nullptr);

// Quadrant variants of the construction rotate the finished system.
TilingSystem quadrant_variant(const TilingSystem& sys, int quarter_turns);

struct SkeletonReport {
  std::vector<std::pair<Cell, int>> squares;  // interior lower-left corner, size
  std::vector<int> offsets;                   // per interior column, west-to-east
  std::map<int, int> colors;                  // square index -> color value
  std::vector<std::string> violations;
  bool inconclusive = false;  // window shows no complete square
};

SkeletonReport check_skeleton(const Pattern& patch, const TilingSystem& sys);

// Hand-built size-4 offset-2 band over the C,R,W,A product, stacked three
// vertical periods so the periodic check sees every adjacency residue.
PeriodicConfig reference_band(const TilingSystem& sys);

}  // namespace slopekit
