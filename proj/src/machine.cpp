#include "slopekit/machine.hpp"

#include <algorithm>
#include <set>

namespace slopekit {

int TuringMachine::state_id(const std::string& name) const {
  for (int i = 0; i < (int)states.size(); ++i)
    if (states[i] == name) return i;
  return -1;
}

int TuringMachine::letter_id(const std::string& name) const {
  for (int i = 0; i < (int)letters.size(); ++i)
    if (letters[i] == name) return i;
  return -1;
}

void TuringMachine::set(const std::string& s, const std::string& a, const std::string& s2,
                        const std::string& a2, int move) {
  int si = state_id(s), ai = letter_id(a), s2i = state_id(s2), a2i = letter_id(a2);
  if (si < 0 || ai < 0 || s2i < 0 || a2i < 0) throw InputError("transition names unknown");
  if (delta.empty()) delta.assign(states.size(), std::vector<std::optional<Step>>(letters.size()));
  if (delta[si][ai]) throw InputError("duplicate transition for (" + s + "," + a + ")");
  delta[si][ai] = Step{s2i, a2i, move};
}

void TuringMachine::check() const {
  if (states.empty() || letters.empty()) throw InputError("machine needs states and letters");
  if (initial < 0 || initial >= (int)states.size()) throw InputError("bad initial state");
  if (halting.size() != states.size()) throw InputError("halting flags size mismatch");
  if (blank < 0 || blank >= (int)letters.size()) throw InputError("bad blank letter");
  if (!delta.empty()) {
    if (delta.size() != states.size()) throw InputError("delta size mismatch");
    for (size_t s = 0; s < delta.size(); ++s) {
      if (delta[s].size() != letters.size()) throw InputError("delta row size mismatch");
      for (const auto& st : delta[s])
        if (st && halting[s]) throw InputError("transition defined from a halting state");
    }
  }
}

RunTrace run_tm(const TuringMachine& m, const std::vector<int>& input, int max_time,
                int max_space) {
  m.check();
  if (max_time < 1 || max_space < 1) throw InputError("bounds must be >= 1");
  for (int a : input)
    if (a < 0 || a >= (int)m.letters.size() || a == m.blank)
      throw InputError("input must avoid blank and stay in the alphabet");
  RunTrace tr;
  Config c;
  c.tape.assign(std::max<size_t>(max_space, input.size()), m.blank);
  std::copy(input.begin(), input.end(), c.tape.begin());
  c.head = 0;
  c.state = m.initial;
  tr.configs.push_back(c);
  int lo = 0, hi = 0;  // visited head window
  if ((int)input.size() > max_space) {
    tr.space_exceeded = true;  // the input alone does not fit the window
    tr.space = (int)input.size();
    return tr;
  }
  for (;;) {
    // time bound first: halting at step max_time or later counts as a bound
    // hit, so halted means "halts in fewer than max_time steps"
    if (tr.time >= max_time) break;
    if (m.halting[c.state]) {
      tr.halted = true;
      break;
    }
    const auto& st = m.delta.empty() ? std::optional<TuringMachine::Step>{}
                                     : m.delta[c.state][c.tape[c.head]];
    if (!st) break;  // stuck, not accepted
    c.tape[c.head] = st->letter;
    c.state = st->state;
    c.head += st->move;
    ++tr.time;
    lo = std::min(lo, c.head);
    hi = std::max(hi, c.head);
    tr.configs.push_back(c);
    if (c.head < 0 || c.head >= max_space) {
      tr.space_exceeded = true;  // any bound hit leaves halted false
      break;
    }
  }
  tr.space = std::max(hi - lo + 1, (int)input.size());
  return tr;
}

int Transducer::state_id(const std::string& name) const {
  for (int i = 0; i < (int)states.size(); ++i)
    if (states[i] == name) return i;
  return -1;
}

std::vector<std::string> apply_transducer(const Transducer& t, const std::string& input) {
  std::set<std::string> out;
  // (position, state, output prefix) depth-first; alphabets are tiny here
  std::vector<std::tuple<size_t, int, std::string>> stack;
  for (int s = 0; s < (int)t.states.size(); ++s)
    if (t.initial[s]) stack.push_back({0, s, ""});
  while (!stack.empty()) {
    auto [pos, s, pref] = std::move(stack.back());
    stack.pop_back();
    if (pos == input.size()) {
      if (t.accepting[s]) out.insert(pref);
      continue;
    }
    for (const auto& r : t.rules)
      if (r.from == s && r.in == input[pos]) stack.push_back({pos + 1, r.to, pref + r.out});
  }
  return {out.begin(), out.end()};
}

Transducer increment_transducer() {
  Transducer t;
  t.states = {"q0", "q1"};
  t.initial = {true, false};
  t.accepting = {false, true};
  t.rules = {{0, '1', '1', 0}, {0, '0', '0', 0}, {0, '0', '1', 1}, {1, '1', '0', 1}};
  return t;
}

std::string increment_iterate(int width, long long count) {
  if (width < 1) throw InputError("width must be >= 1");
  Transducer inc = increment_transducer();
  std::string w(width, '0');
  for (long long i = 0; i < count; ++i) {
    auto next = apply_transducer(inc, w);
    if (next.empty()) throw InputError("increment overflow at width " + std::to_string(width));
    if (next.size() != 1) throw InputError("increment image not unique");
    w = next[0];
  }
  return w;
}

std::string binary_string(long long n) {
  if (n == 0) return "0";
  std::string s;
  for (; n > 0; n >>= 1) s += char('0' + (n & 1));
  std::reverse(s.begin(), s.end());
  return s;
}

std::pair<long long, long long> reduce_binary_pair(long long p, long long q) {
  if (p < 1 || q < 1) throw InputError("reduce_binary_pair needs positive inputs");
  while (p % 2 == 0 && q % 2 == 0) {
    p /= 2;
    q /= 2;
  }
  return {p, q};
}

std::pair<long long, long long> scale_for_time(long long p, long long q, long long t) {
  if (t < 1) throw InputError("time must be >= 1");
  long long f = 1;
  while (f < t) f *= 2;  // f = 2^ceil(log2 t)
  return {f * p, f * q};
}

std::string encode_pair_input(long long p, long long q) {
  return binary_string(p) + "#" + binary_string(q);
}

}  // namespace slopekit
