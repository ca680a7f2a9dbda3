#pragma once

#include <optional>

#include "slopekit/core.hpp"

namespace slopekit {

// A block whose skewed periodic extension (by `vector`) is valid. For p != 0
// the support is [0,|p|) x [0, k*max(|q|,1)); for p == 0 axes swap roles and
// the stored block lives in the transposed frame.
struct Strip {
  PeriodVector vector;
  Pattern block;
  uint64_t index = 0;  // canonical hash of the block
};

struct StripGraph {
  PeriodVector vector;
  int k = 0, band_height = 0;
  std::vector<Strip> nodes;                // sorted by (index, block)
  std::vector<std::vector<int>> edges;     // edges[v] = sorted targets w: w stacks above v
};

struct StripBudget {
  long long max_nodes = 2'000'000;
  long long max_edge_checks = 100'000'000;
  long long max_steps = 200'000'000;   // node-enumeration backtracking steps
  double max_space = 1e30;             // |T|^area pre-check bound
};

enum class PeriodicKind { kBiperiodicPossible, kDirectionOnly };
enum : int { kTransformTransposed = 1, kTransformReflected = 2 };

// Walk description: bands below the connector repeat cycle_a, bands above
// repeat cycle_b; connector[0] closes cycle_a and connector.back() opens
// cycle_b. Blocks are stored in the normalized frame (p >= 1, q >= 0); the
// transform maps original-frame cells into that frame.
struct PeriodicWitness {
  PeriodVector vector;  // original orientation, sign-canonical
  PeriodicKind kind = PeriodicKind::kBiperiodicPossible;
  int k = 0, band_height = 0;
  int transform = 0;  // kTransformTransposed / kTransformReflected bits
  int block_width = 0;
  std::vector<std::vector<int>> blocks;  // row-major block_width x band_height
  std::vector<int> cycle_a, connector, cycle_b;
};

enum class PeriodicVerdict { kNone, kBiperiodicOnly, kDirectionOnly };

struct PeriodicDecision {
  PeriodicVerdict verdict = PeriodicVerdict::kNone;
  std::optional<PeriodicWitness> witness;
};

// Smallest sound block parameter: at least diameter+1, raised so that every
// rule placement in a stacked extension spans at most two consecutive bands
// of height k*max(|q|,1).
int strip_k(const TilingSystem& sys, PeriodVector v);

std::vector<Strip> build_strip_nodes(const TilingSystem& sys, PeriodVector v, int k,
                                     const StripBudget& budget = {});

StripGraph build_strip_graph(const TilingSystem& sys, PeriodVector v,
                             const StripBudget& budget = {});

// none: no cycle (no periodic tiling along v). direction-only: two distinct
// cycles with one reachable from the other (witness attached). Otherwise a
// cycle exists but every walk is eventually a single simple cycle, so each
// periodic tiling along v is in fact biperiodic.
PeriodicDecision decide_periodic(const TilingSystem& sys, PeriodVector v,
                                 const StripBudget& budget = {});

// Window of the tiling encoded by the witness. origin is the cell of the
// window's lower-left corner; (0,0) sits at the first connector band, so
// negative rows sample cycle_a and high rows sample cycle_b.
Pattern realize_witness_patch(const TilingSystem& sys, const PeriodicWitness& w, int width,
                              int height, Cell origin = {0, 0});

}  // namespace slopekit
