#include "oracles.hpp"

#include <bit>
#include <random>
#include <string>

#include "slopekit/errors.hpp"

namespace slopekit::testing {

bool torus_tileable(const TilingSystem& sys, int w, int h, long long max_steps) {
  std::vector<int> grid((size_t)w * h, -1);
  auto look = [&](Cell c) { return grid[(size_t)floormod(c.y, h) * w + floormod(c.x, w)]; };
  long long steps = 0;
  auto dfs = [&](auto&& self, int idx) -> bool {
    if (idx == w * h) return true;
    Cell at{idx % w, idx / w};
    for (int t = 0; t < sys.tile_count(); ++t) {
      if (++steps > max_steps) throw BudgetExceeded("steps", max_steps);
      // place before checking so wrapped coordinates read the candidate
      grid[idx] = t;
      if (placement_ok(sys, at, t, look) && self(self, idx + 1)) return true;
      grid[idx] = -1;
    }
    return false;
  };
  return dfs(dfs, 0);
}

bool horizontal_period_tileable(const TilingSystem& sys, int n) {
  for (const auto& f : sys.forbidden)
    if (f.width() > 2 || f.height() > 2)
      throw InputError("row-transfer oracle wants patterns within 2x2");
  if (!sys.rules.empty()) throw InputError("row-transfer oracle wants concrete patterns");

  const int t = sys.tile_count();
  std::vector<std::vector<int>> rows;
  std::vector<int> row(n, 0);
  // all cyclically valid rows, counting in base t
  for (;;) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (const auto& f : sys.forbidden) {
        if (f.height() != 1) continue;
        bool fire = true;
        for (const auto& [c, want] : f.cells)
          if (row[floormod(x + c.x, n)] != want) {
            fire = false;
            break;
          }
        if (fire) {
          ok = false;
          break;
        }
      }
    if (ok) rows.push_back(row);
    int i = 0;
    while (i < n && ++row[i] == t) row[i++] = 0;
    if (i == n) break;
  }

  auto stackable = [&](const std::vector<int>& lo, const std::vector<int>& hi) {
    for (int x = 0; x < n; ++x)
      for (const auto& f : sys.forbidden) {
        if (f.height() != 2) continue;
        bool fire = true;
        for (const auto& [c, want] : f.cells) {
          int got = c.y == 0 ? lo[floormod(x + c.x, n)] : hi[floormod(x + c.x, n)];
          if (got != want) {
            fire = false;
            break;
          }
        }
        if (fire) return false;
      }
    return true;
  };

  // cycle detection over the implicit digraph
  const int m = (int)rows.size();
  std::vector<int> color(m, 0);  // 0 new, 1 on stack, 2 done
  auto dfs = [&](auto&& self, int v) -> bool {
    color[v] = 1;
    for (int u = 0; u < m; ++u) {
      if (!stackable(rows[v], rows[u])) continue;
      if (color[u] == 1) return true;
      if (color[u] == 0 && self(self, u)) return true;
    }
    color[v] = 2;
    return false;
  };
  for (int v = 0; v < m; ++v)
    if (color[v] == 0 && dfs(dfs, v)) return true;
  return false;
}

namespace {

std::vector<Pattern> mismatch_dominoes(int tiles) {
  std::vector<Pattern> out;
  for (int a = 0; a < tiles; ++a)
    for (int b = 0; b < tiles; ++b) {
      out.push_back(Pattern::domino_h(a, b));
      out.push_back(Pattern::domino_v(a, b));
    }
  return out;
}

std::vector<std::string> tile_names(int tiles) {
  std::vector<std::string> names;
  for (int i = 0; i < tiles; ++i) names.push_back(std::string(1, (char)('a' + i)));
  return names;
}

}  // namespace

std::vector<TilingSystem> mismatch_subset_systems(int tiles, int max_rules) {
  auto cand = mismatch_dominoes(tiles);
  std::vector<TilingSystem> out;
  for (uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
    if (std::popcount(mask) > max_rules) continue;
    std::vector<Pattern> forb;
    for (size_t i = 0; i < cand.size(); ++i)
      if (mask >> i & 1) forb.push_back(cand[i]);
    out.push_back(TilingSystem::make(tile_names(tiles), std::move(forb)));
  }
  return out;
}

TilingSystem random_mismatch_system(uint32_t seed, int tiles) {
  auto cand = mismatch_dominoes(tiles);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<Pattern> forb;
  for (const auto& p : cand)
    if (coin(rng) == 0) forb.push_back(p);
  return TilingSystem::make(tile_names(tiles), std::move(forb));
}

}  // namespace slopekit::testing
