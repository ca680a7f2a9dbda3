#include <map>
#include <set>

#include "slopekit/construction.hpp"
#include "slopekit/errors.hpp"

namespace slopekit {

// Diagnostic read-back of a window over a product system: find the column
// grid, measure square sizes and row offsets, and check color uniformity plus
// the upper-right diagonal link. Purely observational; geometry the window
// truncates is left to the validity check.
SkeletonReport check_skeleton(const Pattern& patch, const TilingSystem& sys) {
  int fcls = sys.schema.index("cclass");
  if (fcls < 0) throw InputError("check_skeleton wants an assembled product system");
  int fcol = sys.schema.index("a_color");

  SkeletonReport rep;
  const int w = patch.width(), h = patch.height();
  auto cls_at = [&](int x, int y) -> int {
    auto t = patch.at({x, y});
    return t ? sys.features[*t][fcls] : -1;
  };
  auto is_col = [](int c) {
    return c == kCLm || c == kCRl || c == kCRm || c == kCLr;
  };

  std::vector<int> cols;
  for (int x = 0; x < w; ++x) {
    bool all = h > 0;
    for (int y = 0; y < h && all; ++y) all = is_col(cls_at(x, y));
    if (all) cols.push_back(x);
  }

  struct Band {
    int west, east;             // column x on each side
    std::vector<int> blacks;    // full black rows
  };
  std::vector<Band> bands;
  for (size_t i = 0; i + 1 < cols.size(); ++i) {
    Band b{cols[i], cols[i + 1], {}};
    if (b.east - b.west < 2) {
      rep.violations.push_back("columns at x=" + std::to_string(b.west) + "," +
                               std::to_string(b.east) + " leave no interior");
      continue;
    }
    for (int y = 0; y < h; ++y) {
      bool black = true;
      for (int x = b.west + 1; x < b.east && black; ++x) black = cls_at(x, y) == kCBlack;
      if (black) b.blacks.push_back(y);
    }
    bands.push_back(std::move(b));
  }

  std::set<int> sizes;
  struct Sq {
    Cell corner;
    int size;
    int band;
  };
  std::vector<Sq> squares;
  for (size_t bi = 0; bi < bands.size(); ++bi) {
    const Band& b = bands[bi];
    int width = b.east - b.west;
    for (size_t j = 0; j + 1 < b.blacks.size(); ++j) {
      int y1 = b.blacks[j], y2 = b.blacks[j + 1];
      if (y2 - y1 != width) {
        rep.violations.push_back("square at x=" + std::to_string(b.west + 1) +
                                 " y=" + std::to_string(y1 + 1) + " is " +
                                 std::to_string(width) + "x" + std::to_string(y2 - y1));
        continue;
      }
      bool clean = true;
      for (int y = y1 + 1; y < y2 && clean; ++y)
        for (int x = b.west + 1; x < b.east && clean; ++x)
          clean = cls_at(x, y) == kCWhite;
      if (!clean) {
        rep.violations.push_back("square at x=" + std::to_string(b.west + 1) + " y=" +
                                 std::to_string(y1 + 1) + " has a stained interior");
        continue;
      }
      sizes.insert(width);
      squares.push_back({{b.west + 1, y1 + 1}, width, (int)bi});
    }
  }
  if (sizes.size() > 1) rep.violations.push_back("squares disagree in size");

  for (size_t i = 0; i + 1 < bands.size(); ++i) {
    if (bands[i].east != bands[i + 1].west) continue;
    if (bands[i].blacks.empty() || bands[i + 1].blacks.empty() || sizes.empty()) continue;
    int m = *sizes.begin();
    rep.offsets.push_back(floormod(bands[i + 1].blacks[0] - bands[i].blacks[0], m));
  }
  for (size_t i = 1; i < rep.offsets.size(); ++i)
    if (rep.offsets[i] != rep.offsets[0]) {
      rep.violations.push_back("offsets disagree between columns");
      break;
    }

  for (size_t k = 0; k < squares.size(); ++k) {
    rep.squares.push_back({squares[k].corner, squares[k].size});
    if (fcol < 0) continue;
    std::set<int> seen;
    for (int y = squares[k].corner.y; y < squares[k].corner.y + squares[k].size - 1; ++y)
      for (int x = squares[k].corner.x; x < squares[k].corner.x + squares[k].size - 1; ++x) {
        auto t = patch.at({x, y});
        if (t) seen.insert(sys.features[*t][fcol]);
      }
    if (seen.size() > 1)
      rep.violations.push_back("square " + std::to_string(k) + " mixes colors");
    if (!seen.empty()) rep.colors[(int)k] = *seen.begin();
  }

  // a square and its upper-right neighbour share their color through the
  // betweenrl cell between them
  if (fcol >= 0 && !rep.offsets.empty()) {
    for (size_t k = 0; k < squares.size(); ++k)
      for (size_t j = 0; j < squares.size(); ++j) {
        if (squares[j].band != squares[k].band + 1) continue;
        if (squares[j].corner.x != squares[k].corner.x + squares[k].size) continue;
        if (squares[j].corner.y != squares[k].corner.y + rep.offsets[0]) continue;
        auto a = rep.colors.find((int)k), b = rep.colors.find((int)j);
        if (a != rep.colors.end() && b != rep.colors.end() && a->second != b->second)
          rep.violations.push_back("squares " + std::to_string(k) + " and " +
                                   std::to_string(j) + " break the diagonal color link");
      }
  }

  rep.inconclusive = squares.empty();
  return rep;
}

}  // namespace slopekit
