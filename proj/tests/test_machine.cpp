#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "slopekit/machine.hpp"

using namespace slopekit;
using namespace slopekit::testing;

TEST_CASE("halting needs strictly fewer steps than the time bound") {
  TuringMachine m = tm_immediate_halt();
  // one step to reach h; at max_time=1 the bound fires before we can see it
  RunTrace t1 = run_tm(m, {}, 1, 4);
  CHECK_FALSE(t1.halted);
  CHECK(t1.time == 1);
  RunTrace t2 = run_tm(m, {}, 2, 4);
  CHECK(t2.halted);
  CHECK(t2.time == 1);
  CHECK(t2.configs.size() == 2);
  CHECK(t2.configs.back().state == m.state_id("h"));
}

TEST_CASE("a looper never halts and burns the whole budget") {
  TuringMachine m = tm_looper();
  RunTrace t = run_tm(m, {}, 50, 4);
  CHECK_FALSE(t.halted);
  CHECK_FALSE(t.space_exceeded);
  CHECK(t.time == 50);
  CHECK(t.configs.size() == 51);
}

TEST_CASE("right scanner halts on the first 1") {
  TuringMachine m = tm_right_scanner();
  RunTrace t = run_tm(m, {1}, 100, 8);
  CHECK(t.halted);
  CHECK(t.time == 1);
  RunTrace t2 = run_tm(m, {}, 30, 4);
  CHECK_FALSE(t2.halted);  // all blank: walks off the window
  CHECK(t2.space_exceeded);
  CHECK(t2.time == 4);
}

TEST_CASE("left mover exits the window immediately") {
  TuringMachine m = tm_left_mover();
  RunTrace t = run_tm(m, {}, 10, 4);
  CHECK(t.space_exceeded);
  CHECK_FALSE(t.halted);
  CHECK(t.time == 1);
}

TEST_CASE("halting is monotone in the time bound") {
  TuringMachine m = tm_zigzag();
  int first_halt = -1;
  for (int tb = 1; tb <= 12; ++tb) {
    RunTrace t = run_tm(m, {}, tb, 8);
    if (t.halted && first_halt < 0) first_halt = tb;
    if (first_halt >= 0 && tb >= first_halt) CHECK(t.halted);
  }
  // right, left, then the halting read: three steps, seen once the bound is 4
  CHECK(first_halt == 4);
}

TEST_CASE("input validation") {
  TuringMachine m = tm_right_scanner();
  CHECK_THROWS_AS((void)run_tm(m, {0}, 10, 4), InputError);   // blank in input
  CHECK_THROWS_AS((void)run_tm(m, {7}, 10, 4), InputError);   // out of alphabet
  CHECK_THROWS_AS((void)run_tm(m, {}, 0, 4), InputError);
  RunTrace t = run_tm(m, {1, 1, 1}, 10, 2);  // input wider than the window
  CHECK(t.space_exceeded);
  CHECK(t.time == 0);
}

TEST_CASE("machine structural checks") {
  TuringMachine bad = tm_immediate_halt();
  bad.delta[1][0] = TuringMachine::Step{0, 0, kStay};  // transition out of halting
  CHECK_THROWS_AS(bad.check(), InputError);
  TuringMachine bad2 = tm_immediate_halt();
  bad2.initial = 9;
  CHECK_THROWS_AS(bad2.check(), InputError);
}

TEST_CASE("increment transducer computes +1 on fixed-width binary") {
  Transducer inc = increment_transducer();
  CHECK(apply_transducer(inc, "0110") == std::vector<std::string>{"0111"});
  CHECK(apply_transducer(inc, "0111") == std::vector<std::string>{"1000"});
  CHECK(apply_transducer(inc, "111").empty());  // overflow rejects
  CHECK(apply_transducer(inc, "").empty());

  // exhaustive: every width-<=6 input has exactly the arithmetic image
  for (int w = 1; w <= 6; ++w) {
    for (int n = 0; n < (1 << w); ++n) {
      std::string in;
      for (int b = w - 1; b >= 0; --b) in += ((n >> b) & 1) ? '1' : '0';
      auto out = apply_transducer(inc, in);
      if (n + 1 < (1 << w)) {
        REQUIRE(out.size() == 1);
        std::string want;
        for (int b = w - 1; b >= 0; --b) want += (((n + 1) >> b) & 1) ? '1' : '0';
        CHECK(out[0] == want);
      } else {
        CHECK(out.empty());
      }
    }
  }
}

TEST_CASE("transducer outputs come back sorted and deduplicated") {
  Transducer t;
  t.states = {"p", "q"};
  t.initial = {true, true};
  t.accepting = {true, true};
  // two accepting paths produce the same word, one produces another
  t.rules = {{0, 'a', 'x', 0}, {1, 'a', 'x', 1}, {0, 'a', 'w', 1}};
  auto out = apply_transducer(t, "a");
  CHECK(out == std::vector<std::string>{"w", "x"});
}

TEST_CASE("iterated increment is binary counting") {
  CHECK(increment_iterate(4, 0) == "0000");
  CHECK(increment_iterate(4, 5) == "0101");
  CHECK(increment_iterate(4, 15) == "1111");
  CHECK(increment_iterate(1, 1) == "1");
  CHECK_THROWS_AS((void)increment_iterate(4, 16), InputError);
  CHECK_THROWS_AS((void)increment_iterate(0, 0), InputError);
}

TEST_CASE("binary strings are MSB first with no padding") {
  CHECK(binary_string(0) == "0");
  CHECK(binary_string(1) == "1");
  CHECK(binary_string(6) == "110");
  CHECK(binary_string(1023) == "1111111111");
}

TEST_CASE("binary pair reduction strips common trailing zeros") {
  CHECK(reduce_binary_pair(8, 4) == std::pair<long long, long long>(2, 1));
  CHECK(reduce_binary_pair(4, 8) == std::pair<long long, long long>(1, 2));
  CHECK(reduce_binary_pair(3, 6) == std::pair<long long, long long>(3, 6));
  CHECK(reduce_binary_pair(12, 8) == std::pair<long long, long long>(3, 2));
  CHECK_THROWS_AS((void)reduce_binary_pair(0, 4), InputError);
  // ratio is preserved whenever both survive
  auto [p, q] = reduce_binary_pair(40, 16);
  CHECK(p * 16 == q * 40);
}

TEST_CASE("time scaling dominates the bound and keeps the slope") {
  auto [p, q] = scale_for_time(2, 1, 10);
  CHECK(p == 32);
  CHECK(q == 16);
  CHECK(p >= 10);
  auto [p2, q2] = scale_for_time(1, 3, 3);
  CHECK(p2 == 4);
  CHECK(q2 == 12);
  auto [p3, q3] = scale_for_time(1, 1, 1);
  CHECK(p3 == 1);
  CHECK(q3 == 1);
}

TEST_CASE("pair encoding fixes the tape layout") {
  CHECK(encode_pair_input(2, 1) == "10#1");
  CHECK(encode_pair_input(0, 1) == "0#1");
  CHECK(encode_pair_input(5, 12) == "101#1100");
}
