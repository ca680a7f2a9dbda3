#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "slopekit/core.hpp"

using namespace slopekit;
using namespace slopekit::testing;

TEST_CASE("floor division and modulus") {
  CHECK(floordiv(7, 2) == 3);
  CHECK(floordiv(-7, 2) == -4);
  CHECK(floordiv(-4, 2) == -2);
  CHECK(floormod(-7, 2) == 1);
  CHECK(floormod(6, 3) == 0);
}

TEST_CASE("pattern normalization and shape") {
  Pattern p = Pattern::of({{{3, 5}, 1}, {{2, 5}, 0}});
  CHECK(p.cells[0].first == Cell{0, 0});
  CHECK(p.cells[0].second == 0);
  CHECK(p.cells[1].first == Cell{1, 0});
  CHECK(p.width() == 2);
  CHECK(p.height() == 1);
  CHECK(p == Pattern::domino_h(0, 1));
  CHECK(Pattern::domino_v(0, 1).height() == 2);
  CHECK(p.at({1, 0}) == 1);
  CHECK(!p.at({0, 1}).has_value());
}

TEST_CASE("pattern transforms compose back to the identity") {
  Pattern p = Pattern::from_grid({{0, 1, 2}, {2, -1, 0}});
  CHECK(p.transposed().transposed() == p);
  CHECK(p.reflected_y().reflected_y() == p);
  CHECK(p.rotated90().rotated90().rotated90().rotated90() == p);
  CHECK(p.rotated90().width() == p.height());
  CHECK(p.rotated90().height() == p.width());
}

TEST_CASE("from_grid lays rows bottom-up") {
  Pattern p = Pattern::from_grid({{0, 1}, {1, 0}});
  CHECK(p.at({0, 0}) == 0);
  CHECK(p.at({1, 0}) == 1);
  CHECK(p.at({0, 1}) == 1);
  CHECK(p.at({1, 1}) == 0);
}

TEST_CASE("system construction and lookups") {
  TilingSystem yb = yb_system();
  CHECK(yb.tile_count() == 2);
  CHECK(yb.tile_id("Y") == 0);
  CHECK(yb.tile_id("B") == 1);
  CHECK(yb.tile_id("nope") == -1);
  CHECK(yb.forbidden.size() == 3);
  CHECK(yb.diameter() == 1);

  TilingSystem dup = TilingSystem::make(
      {"a"}, {Pattern::domino_h(0, 0), Pattern::domino_h(0, 0)});
  CHECK(dup.forbidden.size() == 1);

  CHECK_THROWS_AS(TilingSystem::make({"a"}, {Pattern::domino_h(0, 1)}), InputError);
}

TEST_CASE("patch validation finds each violation with its anchor") {
  TilingSystem yb = yb_system();
  Patch good{2, 2, {0, 0, 1, 1}};  // Y row under B row
  CHECK(validate_patch(yb, good).empty());

  Patch bad{2, 1, {0, 1}};  // Y west of B
  auto vs = validate_patch(yb, bad);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].rule == 0);
  CHECK(!vs[0].feature_rule);
  CHECK(vs[0].anchor == Cell{0, 0});
  CHECK(vs[0].matched == Pattern::domino_h(0, 1));

  Patch drop{1, 2, {1, 0}};  // Y on top of B
  CHECK(validate_patch(yb, drop).size() == 1);
}

TEST_CASE("placement_ok sees only known neighbours") {
  TilingSystem yb = yb_system();
  std::vector<int> grid{-1, -1};
  auto look = [&](Cell c) {
    return c.y == 0 && c.x >= 0 && c.x < 2 ? grid[c.x] : -1;
  };
  CHECK(placement_ok(yb, {0, 0}, 0, look));
  grid[0] = 0;
  CHECK(placement_ok(yb, {1, 0}, 0, look));
  CHECK(!placement_ok(yb, {1, 0}, 1, look));
}

TEST_CASE("periodic config geometry") {
  // horizontal period: a skew band, no vertical wrap
  PeriodicConfig cfg({1, 1}, 1, 1, {0});
  CHECK(cfg.at(0, 0) == 0);
  CHECK(cfg.at(5, 5) == 0);
  CHECK(!cfg.at(5, 4).has_value());

  PeriodicConfig wide({2, 0}, 2, 1, {0, 1});
  CHECK(wide.at(-2, 0) == 0);
  CHECK(wide.at(3, 0) == 1);

  // vertical period: wraps vertically inside the strip
  PeriodicConfig vert({0, 2}, 1, 2, {0, 1});
  CHECK(vert.at(0, 0) == 0);
  CHECK(vert.at(0, 3) == 1);
  CHECK(!vert.at(1, 0).has_value());

  CHECK_THROWS_AS(PeriodicConfig({1, 0}, 2, 1, std::vector<int>(2, 0)), InputError);
  SUBCASE("sign canonicalization") {
    PeriodicConfig c2({-1, 1}, 1, 1, {0});
    CHECK(c2.period.p == 1);
    CHECK(c2.period.q == -1);
  }
}

TEST_CASE("periodic validation wraps where the band does") {
  TilingSystem yb = yb_system();
  CHECK(validate_periodic(yb, PeriodicConfig({1, 0}, 1, 1, {0})));
  CHECK(validate_periodic(yb, PeriodicConfig({1, 1}, 1, 1, {0})));
  // vertical stack alternating Y/B wraps B under Y: forbidden
  CHECK(!validate_periodic(yb, PeriodicConfig({0, 2}, 1, 2, {0, 1})));
  // the same two rows as a horizontal band never wrap vertically
  CHECK(validate_periodic(yb, PeriodicConfig({1, 0}, 1, 2, {0, 1})));
  auto vs = periodic_violations(yb, PeriodicConfig({0, 2}, 1, 2, {0, 1}));
  CHECK(!vs.empty());
}

TEST_CASE("east determinism of the fixture") {
  CHECK(check_east_deterministic(yb_system()));
  CHECK(check_east_deterministic(single_tile_system()));
  CHECK(!check_east_deterministic(TilingSystem::make({"a", "b"}, {})));
}

TEST_CASE("system transforms carry forbidden patterns and rules") {
  TilingSystem yb = yb_system();
  TilingSystem t = transposed_system(yb);
  // horizontal mismatches become vertical ones
  CHECK(std::count_if(t.forbidden.begin(), t.forbidden.end(),
                      [](const Pattern& p) { return p.height() == 2; }) == 2);
  CHECK(transposed_system(t).forbidden.size() == yb.forbidden.size());

  TilingSystem sys = TilingSystem::make({"a", "b"}, {});
  sys.schema.names = {"v"};
  sys.features = {{0}, {1}};
  sys.rules.push_back(CompiledRule::of(
      {{{0, 0}, {{0, 0b01}}}, {{1, 0}, {{0, 0b10}}}}, "a then b"));
  TilingSystem r = rotated90_system(sys);
  REQUIRE(r.rules.size() == 1);
  CHECK(r.rules[0].width() == 1);
  CHECK(r.rules[0].height() == 2);
  Patch stacked{1, 2, {0, 1}};
  CHECK(validate_patch(sys, Patch{2, 1, {0, 1}}).size() == 1);
  CHECK(validate_patch(r, stacked).size() == 1);
  CHECK(validate_patch(r, Patch{2, 1, {0, 1}}).empty());
}

TEST_CASE("slopes reduce and classify") {
  CHECK(Slope::finite(2, 4).str() == "1/2");
  CHECK(Slope::finite(-2, 4).str() == "-1/2");
  CHECK(Slope::finite(2, -4).str() == "-1/2");
  CHECK(Slope::finite(0, 3).str() == "0/1");
  CHECK(Slope::vertical().str() == "inf");
  CHECK(Slope::of({0, 5}) == Slope::vertical());
  CHECK(Slope::of({2, 1}) == Slope::finite(1, 2));
  CHECK_THROWS_AS(Slope::of({0, 0}), InputError);
  CHECK(Slope::parse("3/6") == Slope::finite(1, 2));
  CHECK(Slope::parse("inf") == Slope::vertical());
  CHECK(Slope::parse("-2") == Slope::finite(-2, 1));
  CHECK_THROWS_AS(Slope::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Slope::parse("x"), ParseError);
}
