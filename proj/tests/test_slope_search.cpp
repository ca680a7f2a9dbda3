#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "slopekit/slope_search.hpp"

using namespace slopekit;
using namespace slopekit::testing;

TEST_CASE("the slope schedule is fixed") {
  auto order = canonical_slopes(2);
  std::vector<Slope> want = {Slope::finite(0, 1),  Slope::finite(1, 1),
                             Slope::finite(1, 2),  Slope::finite(2, 1),
                             Slope::finite(-1, 1), Slope::finite(-1, 2),
                             Slope::finite(-2, 1), Slope::vertical()};
  CHECK(order == want);

  auto small = canonical_slopes(1);
  CHECK(small == std::vector<Slope>{Slope::finite(0, 1), Slope::finite(1, 1),
                                    Slope::finite(-1, 1), Slope::vertical()});

  // bound 3 inserts the new mediants in breadth-first order
  auto wide = canonical_slopes(3);
  REQUIRE(wide.size() == 16);
  CHECK(wide[0] == Slope::finite(0, 1));
  CHECK(wide[1] == Slope::finite(1, 1));
  CHECK(wide[2] == Slope::finite(1, 2));
  CHECK(wide[3] == Slope::finite(2, 1));
  CHECK(wide[4] == Slope::finite(1, 3));
  CHECK(wide[5] == Slope::finite(2, 3));
  CHECK(wide[6] == Slope::finite(3, 2));
  CHECK(wide[7] == Slope::finite(3, 1));
  CHECK(wide[8] == Slope::finite(-1, 1));
  CHECK(wide[14] == Slope::finite(-3, 1));
  CHECK(wide.back() == Slope::vertical());
}

TEST_CASE("semidecision finds the horizontal slope of the order system") {
  TilingSystem yb = yb_system();
  SlopeQuery q;
  q.slope = Slope::finite(0, 1);
  SemidecideResult r = slope_semidecide(yb, q);
  REQUIRE(r.witness.has_value());
  CHECK(r.vector == PeriodVector{1, 0});
  CHECK_FALSE(r.budget_exceeded);
  CHECK(Slope::of(r.vector) == q.slope);

  q.slope = Slope::finite(1, 1);
  SemidecideResult miss = slope_semidecide(yb, q);
  CHECK_FALSE(miss.witness.has_value());
  CHECK_FALSE(miss.budget_exceeded);
}

TEST_CASE("biperiodic directions never count as slopes") {
  SlopeQuery q;
  q.slope = Slope::finite(0, 1);
  SemidecideResult r = slope_semidecide(single_tile_system(), q);
  CHECK_FALSE(r.witness.has_value());
  CHECK_FALSE(r.budget_exceeded);
}

TEST_CASE("enumeration over the order system and its transpose") {
  TilingSystem yb = yb_system();
  SlopeReport rep = enumerate_slopes(yb, 2, 2);
  REQUIRE(rep.found.size() == 1);
  CHECK(rep.found[0].slope == Slope::finite(0, 1));
  CHECK(rep.found[0].vector == PeriodVector{1, 0});
  CHECK(rep.found[0].witness.kind == PeriodicKind::kDirectionOnly);
  CHECK(rep.exhausted.size() == 7);
  CHECK(rep.blocked.empty());

  SlopeReport tr = enumerate_slopes(transposed_system(yb), 2, 2);
  REQUIRE(tr.found.size() == 1);
  CHECK(tr.found[0].slope == Slope::vertical());
  CHECK(tr.found[0].vector == PeriodVector{0, 1});

  SlopeReport free_sys = enumerate_slopes(single_tile_system(), 2, 2);
  CHECK(free_sys.found.empty());
  CHECK(free_sys.exhausted.size() == 8);
}

TEST_CASE("found witnesses certify their slope") {
  TilingSystem yb = yb_system();
  SlopeReport rep = enumerate_slopes(yb, 2, 3);
  for (const auto& h : rep.found) {
    CHECK(Slope::of(h.vector) == h.slope);
    Pattern win = realize_witness_patch(yb, h.witness, 4, 8, {0, -4});
    std::vector<int> cells(32, -1);
    for (const auto& [cell, t] : win.cells) cells[(size_t)cell.y * 4 + cell.x] = t;
    CHECK(validate_patch(yb, Patch(4, 8, cells)).empty());
  }
}

TEST_CASE("raising the multiple bound only adds answers") {
  TilingSystem yb = yb_system();
  SlopeReport lo = enumerate_slopes(yb, 2, 2);
  SlopeReport hi = enumerate_slopes(yb, 2, 3);
  for (const auto& h : lo.found) {
    bool still = false;
    for (const auto& h2 : hi.found) still |= h2.slope == h.slope;
    CHECK(still);
  }
}

TEST_CASE("report lines are stable text") {
  TilingSystem yb = yb_system();
  SlopeReport rep = enumerate_slopes(yb, 1, 2);
  CHECK(report_lines(rep) ==
        "SLOPE 0/1 FOUND vector=(1,0)\n"
        "SLOPE 1/1 UNKNOWN budget=multiples<=2\n"
        "SLOPE -1/1 UNKNOWN budget=multiples<=2\n"
        "SLOPE inf UNKNOWN budget=multiples<=2\n");
  CHECK(report_lines(rep) == report_lines(enumerate_slopes(yb, 1, 2)));
}

TEST_CASE("budget trips mark slopes unknown instead of failing the scan") {
  TilingSystem yb = yb_system();
  StripBudget tight;
  tight.max_space = 3.0;  // every direction trips the space pre-check
  SlopeReport rep = enumerate_slopes(yb, 1, 1, tight);
  CHECK(rep.found.empty());
  CHECK(rep.exhausted.empty());
  CHECK(rep.blocked.size() == 4);
  for (const auto& [s, cap] : rep.blocked) CHECK(cap == "space");
  std::string text = report_lines(rep);
  CHECK(text.find("SLOPE 0/1 UNKNOWN budget=space") != std::string::npos);
  CHECK(text.find("FOUND") == std::string::npos);
}
