#include "slopekit/slope_search.hpp"

#include <array>
#include <deque>
#include <sstream>

#include "slopekit/errors.hpp"

namespace slopekit {

namespace {

PeriodVector base_vector(Slope s) {
  if (s.infinite) return {0, 1};
  return {(int)s.den, (int)s.num};
}

}  // namespace

SemidecideResult slope_semidecide(const TilingSystem& sys, const SlopeQuery& q) {
  if (q.max_multiple < 1) throw InputError("max_multiple must be >= 1");
  SemidecideResult r;
  PeriodVector base = base_vector(q.slope);
  for (int m = 1; m <= q.max_multiple; ++m) {
    PeriodVector v{base.p * m, base.q * m};
    try {
      PeriodicDecision d = decide_periodic(sys, v, q.budget);
      if (d.verdict == PeriodicVerdict::kDirectionOnly) {
        r.witness = d.witness;
        r.vector = v;
        return r;
      }
    } catch (const BudgetExceeded& e) {
      if (!r.budget_exceeded) r.budget_what = e.what_hit;
      r.budget_exceeded = true;
    }
  }
  return r;
}

std::vector<Slope> canonical_slopes(int slope_bound) {
  if (slope_bound < 1) throw InputError("slope_bound must be >= 1");
  std::vector<Slope> order;
  order.push_back(Slope::finite(0, 1));
  // Stern-Brocot breadth-first walk; num and den both grow along any descent,
  // so pruning at the bound loses nothing.
  std::vector<Slope> pos;
  std::deque<std::array<long long, 4>> fringe{{0, 1, 1, 0}};  // (a/b, c/d) bounds
  while (!fringe.empty()) {
    auto [a, b, c, d] = fringe.front();
    fringe.pop_front();
    long long num = a + c, den = b + d;
    if (num > slope_bound || den > slope_bound) continue;
    pos.push_back(Slope::finite(num, den));
    fringe.push_back({a, b, num, den});
    fringe.push_back({num, den, c, d});
  }
  for (const Slope& s : pos) order.push_back(s);
  for (const Slope& s : pos) order.push_back(Slope::finite(-s.num, s.den));
  order.push_back(Slope::vertical());
  return order;
}

SlopeReport enumerate_slopes(const TilingSystem& sys, int slope_bound, int max_multiple,
                             const StripBudget& budget) {
  if (max_multiple < 1) throw InputError("max_multiple must be >= 1");
  SlopeReport rep;
  rep.slope_bound = slope_bound;
  rep.max_multiple = max_multiple;
  rep.budget = budget;
  std::vector<Slope> order = canonical_slopes(slope_bound);
  size_t n = order.size();
  std::vector<int> state(n, 0);  // 0 = open, 1 = found
  std::vector<std::string> trip(n);
  std::vector<SlopeHit> hits(n);
  // round-robin: multiple-major so every slope gets its m=1 probe before any
  // slope spends the budget on m=2
  for (int m = 1; m <= max_multiple; ++m) {
    for (size_t i = 0; i < n; ++i) {
      if (state[i]) continue;
      PeriodVector base = base_vector(order[i]);
      PeriodVector v{base.p * m, base.q * m};
      try {
        PeriodicDecision d = decide_periodic(sys, v, budget);
        if (d.verdict == PeriodicVerdict::kDirectionOnly) {
          state[i] = 1;
          hits[i] = {order[i], v, *d.witness};
        }
      } catch (const BudgetExceeded& e) {
        if (trip[i].empty()) trip[i] = e.what_hit;
      }
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (state[i]) rep.found.push_back(hits[i]);
    else if (trip[i].empty()) rep.exhausted.push_back(order[i]);
    else rep.blocked.push_back({order[i], trip[i]});
  }
  return rep;
}

std::string report_lines(const SlopeReport& report) {
  std::ostringstream out;
  std::vector<Slope> order = canonical_slopes(report.slope_bound);
  for (const Slope& s : order) {
    bool done = false;
    for (const auto& h : report.found) {
      if (h.slope != s) continue;
      out << "SLOPE " << s.str() << " FOUND vector=(" << h.vector.p << ',' << h.vector.q
          << ")\n";
      done = true;
      break;
    }
    if (done) continue;
    for (const auto& [bs, cap] : report.blocked) {
      if (bs != s) continue;
      out << "SLOPE " << s.str() << " UNKNOWN budget=" << cap << "\n";
      done = true;
      break;
    }
    if (!done)
      out << "SLOPE " << s.str() << " UNKNOWN budget=multiples<=" << report.max_multiple
          << "\n";
  }
  return out.str();
}

}  // namespace slopekit
