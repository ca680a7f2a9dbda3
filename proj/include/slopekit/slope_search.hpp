#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopekit/core.hpp"
#include "slopekit/periodicity.hpp"

namespace slopekit {

struct SlopeQuery {
  Slope slope;
  int max_multiple = 2;
  StripBudget budget;
};

// witness set iff some multiple gave a direction-only verdict. A budget trip
// on one multiple does not stop the others; it only flags the unknown.
struct SemidecideResult {
  std::optional<PeriodicWitness> witness;
  PeriodVector vector{1, 0};
  bool budget_exceeded = false;
  std::string budget_what;  // cap that tripped first
};

// Tests m*(p,q) for m = 1..max_multiple in increasing order; only
// direction-only witnesses count (a biperiodic tiling has every slope).
SemidecideResult slope_semidecide(const TilingSystem& sys, const SlopeQuery& q);

struct SlopeHit {
  Slope slope;
  PeriodVector vector;
  PeriodicWitness witness;
};

struct SlopeReport {
  std::vector<SlopeHit> found;
  std::vector<Slope> exhausted;  // every multiple tried, no witness, no budget trip
  std::vector<std::pair<Slope, std::string>> blocked;  // some probe hit this cap
  int slope_bound = 0, max_multiple = 0;
  StripBudget budget;
};

// All reduced slopes with |num|,|den| <= slope_bound plus the vertical slope:
// zero, then positives in Stern-Brocot (breadth-first) order, then their
// negatives, then infinity. The fixed order keeps every report reproducible.
std::vector<Slope> canonical_slopes(int slope_bound);

// Dovetails slope_semidecide across slopes, round-robin over multiples so an
// expensive slope cannot starve the rest. Partial results always returned.
SlopeReport enumerate_slopes(const TilingSystem& sys, int slope_bound, int max_multiple,
                             const StripBudget& budget = {});

// One line per slope in schedule order:
//   SLOPE q/p FOUND vector=(p',q')
//   SLOPE q/p UNKNOWN budget=...
std::string report_lines(const SlopeReport& report);

}  // namespace slopekit
