#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slopekit/core.hpp"
#include "slopekit/machine.hpp"

namespace slopekit::testing {

// Two tiles, B may never sit east of Y or vice versa, and Y may never sit
// on top of B: every tiling is rows of Y below rows of B.
inline TilingSystem yb_system() {
  return TilingSystem::make(
      {"Y", "B"},
      {Pattern::domino_h(0, 1), Pattern::domino_h(1, 0), Pattern::domino_v(1, 0)});
}

inline TilingSystem single_tile_system() { return TilingSystem::make({"a"}, {}); }

inline TilingSystem forbid_every_tile_system() {
  return TilingSystem::make({"a"}, {Pattern::of({{{0, 0}, 0}})});
}

inline TuringMachine tm_base(std::vector<std::string> states, int initial,
                             std::vector<int> halting, std::vector<std::string> letters,
                             int blank) {
  TuringMachine m;
  m.states = std::move(states);
  m.initial = initial;
  m.halting.assign(m.states.size(), false);
  for (int h : halting) m.halting[h] = true;
  m.letters = std::move(letters);
  m.blank = blank;
  m.delta.assign(m.states.size(),
                 std::vector<std::optional<TuringMachine::Step>>(m.letters.size()));
  return m;
}

inline TuringMachine tm_immediate_halt() {
  TuringMachine m = tm_base({"s0", "h"}, 0, {1}, {"0"}, 0);
  m.set("s0", "0", "h", "0", kStay);
  return m;
}

inline TuringMachine tm_looper() {
  TuringMachine m = tm_base({"s0"}, 0, {}, {"0"}, 0);
  m.set("s0", "0", "s0", "0", kStay);
  return m;
}

inline TuringMachine tm_right_scanner() {
  TuringMachine m = tm_base({"s0", "h"}, 0, {1}, {"0", "1"}, 0);
  m.set("s0", "0", "s0", "0", kRight);
  m.set("s0", "1", "h", "1", kStay);
  return m;
}

inline TuringMachine tm_left_mover() {
  TuringMachine m = tm_base({"s0", "h"}, 0, {1}, {"0", "1"}, 0);
  m.set("s0", "0", "s0", "0", kLeft);
  m.set("s0", "1", "h", "1", kStay);
  return m;
}

inline TuringMachine tm_zigzag() {
  TuringMachine m = tm_base({"s0", "s1", "h"}, 0, {2}, {"0", "1"}, 0);
  m.set("s0", "0", "s1", "1", kRight);
  m.set("s0", "1", "h", "1", kStay);
  m.set("s1", "0", "s0", "1", kLeft);
  m.set("s1", "1", "s0", "1", kRight);
  return m;
}

inline TuringMachine tm_flipper() {
  TuringMachine m = tm_base({"s0", "s1", "h"}, 0, {2}, {"0", "1"}, 0);
  m.set("s0", "0", "s1", "1", kStay);
  m.set("s0", "1", "s1", "0", kStay);
  m.set("s1", "0", "h", "0", kRight);
  m.set("s1", "1", "s0", "1", kRight);
  return m;
}

inline std::vector<std::pair<std::string, TuringMachine>> tm_corpus() {
  return {{"immediate-halt", tm_immediate_halt()}, {"looper", tm_looper()},
          {"right-scanner", tm_right_scanner()},   {"left-mover", tm_left_mover()},
          {"zigzag", tm_zigzag()},                 {"flipper", tm_flipper()}};
}

}  // namespace slopekit::testing
