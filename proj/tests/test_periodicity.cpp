#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "slopekit/periodicity.hpp"

using namespace slopekit;
using namespace slopekit::testing;

namespace {

// blocks for (1,0) strips are 1 x 2 columns; key them by (bottom, top)
std::pair<int, int> column_key(const Pattern& b) {
  REQUIRE(b.cells.size() == 2);
  return {b.cells[0].second, b.cells[1].second};
}

}  // namespace

TEST_CASE("strip parameter covers every rule span") {
  TilingSystem yb = yb_system();
  CHECK(yb.diameter() == 1);
  CHECK(strip_k(yb, {1, 0}) == 2);
  CHECK(strip_k(single_tile_system(), {1, 0}) == 2);
}

TEST_CASE("strip nodes for the two-tile order system") {
  TilingSystem yb = yb_system();
  auto nodes = build_strip_nodes(yb, {1, 0}, 2);
  REQUIRE(nodes.size() == 3);
  std::vector<std::pair<int, int>> keys;
  for (const auto& s : nodes) {
    CHECK(s.vector == PeriodVector{1, 0});
    keys.push_back(column_key(s.block));
  }
  std::sort(keys.begin(), keys.end());
  // Y|Y, Y|B, B|B stack; B|Y violates the vertical order
  CHECK(keys == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("strip graph edges follow the vertical order") {
  TilingSystem yb = yb_system();
  StripGraph g = build_strip_graph(yb, {1, 0});
  CHECK(g.k == 2);
  CHECK(g.band_height == 2);
  REQUIRE(g.nodes.size() == 3);
  std::map<std::pair<int, int>, int> at;
  for (int i = 0; i < 3; ++i) at[column_key(g.nodes[i].block)] = i;
  int yy = at[{0, 0}], yb_ = at[{0, 1}], bb = at[{1, 1}];

  auto sorted = [&](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(g.edges[yy] == sorted({yy, yb_, bb}));
  CHECK(g.edges[yb_] == std::vector<int>{bb});
  CHECK(g.edges[bb] == std::vector<int>{bb});
  for (const auto& e : g.edges) CHECK(std::is_sorted(e.begin(), e.end()));
}

TEST_CASE("horizontal period admits strictly aperiodic-in-y tilings") {
  TilingSystem yb = yb_system();
  PeriodicDecision dec = decide_periodic(yb, {1, 0});
  CHECK(dec.verdict == PeriodicVerdict::kDirectionOnly);
  REQUIRE(dec.witness.has_value());
  const PeriodicWitness& w = *dec.witness;
  CHECK(w.vector == PeriodVector{1, 0});
  CHECK(w.kind == PeriodicKind::kDirectionOnly);
  CHECK(w.transform == 0);
  CHECK(w.block_width == 1);
  CHECK(w.band_height == 2);

  // the walk crosses the color boundary through the mixed column
  REQUIRE(w.connector.size() == 3);
  CHECK(w.blocks[w.connector[0]] == std::vector<int>{0, 0});
  CHECK(w.blocks[w.connector[1]] == std::vector<int>{0, 1});
  CHECK(w.blocks[w.connector[2]] == std::vector<int>{1, 1});
  REQUIRE(w.cycle_a.size() == 1);
  REQUIRE(w.cycle_b.size() == 1);
  CHECK(w.blocks[w.cycle_a[0]] == std::vector<int>{0, 0});
  CHECK(w.blocks[w.cycle_b[0]] == std::vector<int>{1, 1});

  Pattern win = realize_witness_patch(yb, w, 5, 12, {-2, -2});
  CHECK(win.cells.size() == 60);
  CHECK(validate_patch(yb, Patch(5, 12, [&] {
                         std::vector<int> c(60, -1);
                         for (const auto& [cell, t] : win.cells)
                           c[(size_t)cell.y * 5 + cell.x] = t;
                         return c;
                       }()))
            .empty());
  // window rows are rebased to 0; absolute row -2+4=2 is the last yellow one
  for (const auto& [cell, t] : win.cells) CHECK(t == (cell.y >= 5 ? 1 : 0));
}

TEST_CASE("skewed and vertical directions only close up biperiodically") {
  TilingSystem yb = yb_system();
  for (PeriodVector v : {PeriodVector{1, 1}, PeriodVector{2, 1}, PeriodVector{1, -1}}) {
    CAPTURE(v.p);
    CAPTURE(v.q);
    PeriodicDecision dec = decide_periodic(yb, v);
    CHECK(dec.verdict == PeriodicVerdict::kBiperiodicOnly);
    REQUIRE(dec.witness.has_value());
    CHECK(dec.witness->kind == PeriodicKind::kBiperiodicPossible);
    CHECK(dec.witness->cycle_a == dec.witness->cycle_b);
  }
  // (1,-1) is handled by reflecting into the upper half plane
  CHECK(decide_periodic(yb, {1, -1}).witness->transform == kTransformReflected);

  PeriodicDecision vert = decide_periodic(yb, {0, 1});
  CHECK(vert.verdict == PeriodicVerdict::kBiperiodicOnly);
  CHECK(vert.witness->transform == kTransformTransposed);
  CHECK(vert.witness->vector == PeriodVector{0, 1});
}

TEST_CASE("transposing the system swaps the special direction") {
  TilingSystem t = transposed_system(yb_system());
  PeriodicDecision dec = decide_periodic(t, {0, 1});
  CHECK(dec.verdict == PeriodicVerdict::kDirectionOnly);
  REQUIRE(dec.witness.has_value());
  CHECK(dec.witness->transform == kTransformTransposed);
  CHECK(dec.witness->connector.size() == 3);
  Pattern win = realize_witness_patch(t, *dec.witness, 8, 8, {-4, -4});
  std::vector<int> cells(64, -1);
  for (const auto& [cell, tile] : win.cells) cells[(size_t)cell.y * 8 + cell.x] = tile;
  CHECK(validate_patch(t, Patch(8, 8, cells)).empty());
  // the transposed order runs west to east instead of south to north
  std::map<int, std::vector<int>> by_x;
  for (const auto& [cell, tile] : win.cells) by_x[cell.x].push_back(tile);
  for (auto& [x, col] : by_x) {
    std::sort(col.begin(), col.end());
    CHECK(col.front() == col.back());  // columns are monochrome
  }

  CHECK(decide_periodic(t, {1, 0}).verdict == PeriodicVerdict::kBiperiodicOnly);
}

TEST_CASE("negative direction vectors canonicalize") {
  TilingSystem yb = yb_system();
  PeriodicDecision dec = decide_periodic(yb, {-1, 0});
  CHECK(dec.verdict == PeriodicVerdict::kDirectionOnly);
  CHECK(dec.witness->vector == PeriodVector{1, 0});
}

TEST_CASE("free and blocked extremes") {
  PeriodicDecision one = decide_periodic(single_tile_system(), {1, 0});
  CHECK(one.verdict == PeriodicVerdict::kBiperiodicOnly);
  REQUIRE(one.witness.has_value());
  Pattern win = realize_witness_patch(single_tile_system(), *one.witness, 3, 3, {0, 0});
  for (const auto& [cell, t] : win.cells) CHECK(t == 0);

  PeriodicDecision none = decide_periodic(forbid_every_tile_system(), {1, 0});
  CHECK(none.verdict == PeriodicVerdict::kNone);
  CHECK_FALSE(none.witness.has_value());
}

TEST_CASE("budgets interrupt the strip search") {
  TilingSystem yb = yb_system();
  StripBudget nodes_cap;
  nodes_cap.max_nodes = 1;
  CHECK_THROWS_AS((void)decide_periodic(yb, {1, 0}, nodes_cap), BudgetExceeded);
  try {
    (void)decide_periodic(yb, {1, 0}, nodes_cap);
  } catch (const BudgetExceeded& e) {
    CHECK(e.what_hit == "nodes");
    CHECK(e.limit == 1);
  }

  StripBudget space_cap;
  space_cap.max_space = 3.0;  // 2 tiles over a 1x2 block: 4 fills
  try {
    (void)decide_periodic(yb, {1, 0}, space_cap);
    FAIL("space cap did not fire");
  } catch (const BudgetExceeded& e) {
    CHECK(e.what_hit == "space");
  }
}

TEST_CASE("verdicts agree with the row-cycle oracle") {
  using namespace slopekit::testing;
  int checked = 0;
  for (const auto& sys : mismatch_subset_systems(2, 2)) {
    for (int n = 1; n <= 2; ++n) {
      bool oracle = horizontal_period_tileable(sys, n);
      bool found = decide_periodic(sys, {n, 0}).verdict != PeriodicVerdict::kNone;
      CHECK(oracle == found);
      ++checked;
    }
  }
  CHECK(checked == 74);  // 1 + 8 + 28 subset systems, two directions each

  for (unsigned seed = 1; seed <= 40; ++seed) {
    TilingSystem sys = random_mismatch_system(seed, 3);
    for (int n = 1; n <= 2; ++n) {
      CAPTURE(seed);
      CAPTURE(n);
      CHECK(horizontal_period_tileable(sys, n) ==
            (decide_periodic(sys, {n, 0}).verdict != PeriodicVerdict::kNone));
    }
  }
}

TEST_CASE("witnesses realize to valid patches whenever present") {
  using namespace slopekit::testing;
  for (unsigned seed = 50; seed <= 70; ++seed) {
    TilingSystem sys = random_mismatch_system(seed, 2);
    PeriodicDecision dec = decide_periodic(sys, {2, 0});
    if (!dec.witness) continue;
    Pattern win = realize_witness_patch(sys, *dec.witness, 6, 10, {-3, -4});
    std::vector<int> cells(60, -1);
    for (const auto& [cell, t] : win.cells) cells[(size_t)cell.y * 6 + cell.x] = t;
    CAPTURE(seed);
    CHECK(validate_patch(sys, Patch(6, 10, cells)).empty());
  }
}
