#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopekit/errors.hpp"

namespace slopekit {

enum Move { kLeft = -1, kStay = 0, kRight = 1 };

// Deterministic single-tape machine. Halting states carry no transitions;
// acceptance is reaching any state in the halting set.
struct TuringMachine {
  std::vector<std::string> states;
  int initial = 0;
  std::vector<bool> halting;
  std::vector<std::string> letters;
  int blank = 0;

  struct Step {
    int state = 0, letter = 0;
    int move = kStay;
  };
  // delta[state][letter]; halting rows must stay empty
  std::vector<std::vector<std::optional<Step>>> delta;

  int state_id(const std::string& name) const;
  int letter_id(const std::string& name) const;
  void set(const std::string& s, const std::string& a, const std::string& s2,
           const std::string& a2, int move);
  void check() const;
};

struct Config {
  std::vector<int> tape;
  int head = 0;
  int state = 0;
};

struct RunTrace {
  std::vector<Config> configs;  // configs[0] is the initial configuration
  bool halted = false;
  bool space_exceeded = false;
  int time = 0;   // steps applied
  int space = 0;  // extent of the head's visited window
};

// Head starts on cell 0; allowed window is [0, max_space). Stepping out of the
// window or an input longer than the window records space_exceeded. A missing
// transition stops the run unhalted.
RunTrace run_tm(const TuringMachine& m, const std::vector<int>& input, int max_time,
                int max_space);

// Letter-to-letter nondeterministic transducer over char alphabets.
struct Transducer {
  std::vector<std::string> states;
  std::vector<bool> initial, accepting;

  struct Rule {
    int from = 0;
    char in = 0, out = 0;
    int to = 0;
  };
  std::vector<Rule> rules;

  int state_id(const std::string& name) const;
};

// All outputs of accepting runs, sorted and deduplicated. Empty means rejection.
std::vector<std::string> apply_transducer(const Transducer& t, const std::string& input);

// MSB-first binary increment: guess the last 0, flip it, zero the tail.
Transducer increment_transducer();

// count applications of the increment transducer to 0^width; each step must
// have exactly one image. Overflow throws.
std::string increment_iterate(int width, long long count);

std::string binary_string(long long n);  // MSB-first, no padding, "0" for 0

// Strip common trailing binary zeros: (p,q) / 2^min(tz(p),tz(q)).
std::pair<long long, long long> reduce_binary_pair(long long p, long long q);

// 2^ceil(log2 t) * (p,q): the scaled pair dominates t while keeping the slope.
std::pair<long long, long long> scale_for_time(long long p, long long q, long long t);

// Tape layout for slope inputs, fixed here: bin(p) '#' bin(q), MSB first.
std::string encode_pair_input(long long p, long long q);

}  // namespace slopekit
