#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slopekit/errors.hpp"

namespace slopekit {

constexpr int floordiv(int a, int b) {  // b > 0
  int d = a / b;
  return d * b > a ? d - 1 : d;
}
constexpr int floormod(int a, int b) { return a - floordiv(a, b) * b; }

struct Cell {
  int x = 0, y = 0;
  auto operator<=>(const Cell&) const = default;
};
constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
constexpr Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }

// Finite set of (cell, tile) constraints, kept sorted (x,y)-lex and translated
// so min x == 0 and min y == 0. Forbidden patterns and witnesses both use this.
struct Pattern {
  std::vector<std::pair<Cell, int>> cells;

  static Pattern of(std::vector<std::pair<Cell, int>> cells);
  static Pattern domino_h(int west, int east);
  static Pattern domino_v(int south, int north);
  // rows are bottom-up; entries < 0 are holes
  static Pattern from_grid(const std::vector<std::vector<int>>& rows);

  int width() const;
  int height() const;
  std::optional<int> at(Cell c) const;
  Pattern translated(Cell d) const;   // not renormalized; cells move by d
  Pattern transposed() const;         // (x,y) -> (y,x)
  Pattern reflected_y() const;        // (x,y) -> (x,-y), renormalized
  Pattern rotated90() const;          // (x,y) -> (-y,x), renormalized
  uint64_t hash() const;
  bool operator==(const Pattern&) const = default;
  auto operator<=>(const Pattern&) const = default;
};

struct Tile {
  int id = 0;
  std::string name;
};

// Feature-space rules let one rule stand for a family of concrete patterns;
// tile products would otherwise explode the forbidden set. A tile satisfies a
// RuleCell when every listed feature value hits its mask bit. Feature values
// must stay below 64.
struct FeatureNeed {
  int feature = 0;
  uint64_t mask = 0;
};
struct RuleCell {
  Cell at;
  std::vector<FeatureNeed> need;
};
struct CompiledRule {
  std::vector<RuleCell> cells;  // same normalization as Pattern
  std::string note;

  int width() const;
  int height() const;
  static CompiledRule of(std::vector<RuleCell> cells, std::string note = "");
};

struct FeatureSchema {
  std::vector<std::string> names;  // feature 0 is the coarse tile class
  int index(const std::string& name) const;
};

struct TilingSystem {
  std::vector<Tile> alphabet;
  std::vector<Pattern> forbidden;      // concrete forbidden patterns
  std::vector<CompiledRule> rules;     // feature-space forbidden patterns
  FeatureSchema schema;
  std::vector<std::vector<int>> features;  // [tile][feature]

  int tile_count() const { return (int)alphabet.size(); }
  int tile_id(const std::string& name) const;  // -1 when absent
  std::vector<std::string> tile_names() const;
  // Max rule bbox extent minus one, clamped to >= 1: two vertically adjacent
  // height-(d+1) windows see every forbidden occurrence.
  int diameter() const;
  bool tile_matches(int tile, const RuleCell& rc) const;

  static TilingSystem make(std::vector<std::string> names, std::vector<Pattern> forbidden);
};

TilingSystem transposed_system(const TilingSystem& s);
TilingSystem reflected_y_system(const TilingSystem& s);
TilingSystem rotated90_system(const TilingSystem& s);

struct Violation {
  int rule = -1;             // index into forbidden, or into rules when feature_rule
  bool feature_rule = false;
  Cell anchor;               // absolute placement of the normalized rule
  Pattern matched;           // concrete content found there
};

struct Patch {
  int width = 0, height = 0;
  std::vector<int> cells;  // row-major, y * width + x, y = 0 is the bottom row

  int at(int x, int y) const { return cells[(size_t)y * width + x]; }
};

struct PeriodVector {
  int p = 0, q = 0;  // never both zero
  auto operator<=>(const PeriodVector&) const = default;
};

// Slope of a period vector (p,q) is q/p; vertical vectors give the infinite slope.
struct Slope {
  long long num = 0;
  long long den = 1;  // > 0 for finite slopes, 0 when infinite
  bool infinite = false;

  static Slope finite(long long q, long long p);
  static Slope vertical() { return {1, 0, true}; }
  static Slope of(PeriodVector v);
  static Slope parse(const std::string& text);
  std::string str() const;  // "num/den" reduced, or "inf"
  auto operator<=>(const Slope&) const = default;
};

// A configuration supported on the skew band generated by translating the
// base rectangle [0,width) x [0,height) by integer multiples of `period`.
// For p != 0 the width must equal p and height >= max(|q|,1) so consecutive
// translates abut or overlap; for p == 0 the band is the vertical strip
// [0,width) x Z and height must equal q.
struct PeriodicConfig {
  PeriodVector period;
  int width = 0, height = 0;
  std::vector<int> cells;  // row-major like Patch

  PeriodicConfig(PeriodVector v, int w, int h, std::vector<int> cells_);
  std::optional<int> at(int x, int y) const;
};

std::vector<Violation> validate_patch(const TilingSystem& sys, const Patch& patch);
std::vector<Violation> periodic_violations(const TilingSystem& sys, const PeriodicConfig& cfg);
bool validate_periodic(const TilingSystem& sys, const PeriodicConfig& cfg);

// True when (west, northwest) determines the tile at a cell: for every pair
// (w, nw) at most one t admits the L-shape  nw .
//                                           w  t
// Only defined for rule bboxes within 2x2; larger shapes throw InputError.
bool check_east_deterministic(const TilingSystem& sys);

namespace detail {

// look(cell) -> tile id, or -1 for free/outside. A rule placement "fires" only
// when every cell is known and matches; unknowns never fire.
template <class Look>
bool pattern_fires(const Pattern& f, Cell anchor, Look&& look) {
  for (const auto& [c, want] : f.cells) {
    if (look(anchor + c) != want) return false;
  }
  return true;
}

template <class Look>
bool rule_fires(const TilingSystem& sys, const CompiledRule& r, Cell anchor, Look&& look) {
  for (const auto& rc : r.cells) {
    int t = look(anchor + rc.at);
    if (t < 0 || !sys.tile_matches(t, rc)) return false;
  }
  return true;
}

}  // namespace detail

// True when placing `tile` at `at` completes no forbidden occurrence among
// already-known cells. Unknown neighbours cannot complete an occurrence.
template <class Look>
bool placement_ok(const TilingSystem& sys, Cell at, int tile, Look&& look) {
  auto look2 = [&](Cell c) { return c == at ? tile : look(c); };
  for (const auto& f : sys.forbidden) {
    for (const auto& [c, want] : f.cells) {
      if (want != tile) continue;
      if (detail::pattern_fires(f, at - c, look2)) return false;
    }
  }
  for (const auto& r : sys.rules) {
    for (const auto& rc : r.cells) {
      if (!sys.tile_matches(tile, rc)) continue;
      if (detail::rule_fires(sys, r, at - rc.at, look2)) return false;
    }
  }
  return true;
}

// Scan every anchor in [lo, hi] (inclusive) and record completed occurrences.
template <class Look>
void scan_violations(const TilingSystem& sys, Cell lo, Cell hi, Look&& look,
                     std::vector<Violation>& out) {
  auto record = [&](int rule, bool feat, Cell a, auto cell_span) {
    Violation v;
    v.rule = rule;
    v.feature_rule = feat;
    v.anchor = a;
    std::vector<std::pair<Cell, int>> got;
    for (const auto& rc : cell_span) got.push_back({rc, look(a + rc)});
    v.matched = Pattern::of(std::move(got));
    out.push_back(std::move(v));
  };
  for (int ay = lo.y; ay <= hi.y; ++ay)
    for (int ax = lo.x; ax <= hi.x; ++ax) {
      Cell a{ax, ay};
      for (size_t i = 0; i < sys.forbidden.size(); ++i)
        if (detail::pattern_fires(sys.forbidden[i], a, look)) {
          std::vector<Cell> at;
          for (const auto& [c, _] : sys.forbidden[i].cells) at.push_back(c);
          record((int)i, false, a, at);
        }
      for (size_t i = 0; i < sys.rules.size(); ++i)
        if (detail::rule_fires(sys, sys.rules[i], a, look)) {
          std::vector<Cell> at;
          for (const auto& rc : sys.rules[i].cells) at.push_back(rc.at);
          record((int)i, true, a, at);
        }
    }
}

}  // namespace slopekit
