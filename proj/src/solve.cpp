#include "slopekit/solve.hpp"

#include <cstring>
#include <map>

namespace slopekit {

namespace {

struct Bits {
  std::vector<uint64_t> w;
  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  bool intersects(const Bits& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  void and_with(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
  }
  int first() const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i]) return (int)(i * 64 + __builtin_ctzll(w[i]));
    return -1;
  }
};

}  // namespace

std::optional<std::vector<int>> solve_grid(const GridProblem& p) {
  const int W = p.width, H = p.height, T = (int)p.tiles.size();
  if (W < 1 || H < 1) throw InputError("grid must be non-empty");
  if ((long long)W * H > p.max_cells) throw BudgetExceeded("cells", p.max_cells);
  if (T == 0) return std::nullopt;

  // label -> tiles carrying it on a given side (for support tests)
  std::map<int, Bits> by_n, by_e, by_s, by_w;
  for (int t = 0; t < T; ++t) {
    auto add = [&](std::map<int, Bits>& m, int lab) {
      auto [it, _] = m.try_emplace(lab, Bits(T));
      it->second.set(t);
    };
    add(by_n, p.tiles[t].n);
    add(by_e, p.tiles[t].e);
    add(by_s, p.tiles[t].s);
    add(by_w, p.tiles[t].w);
  }
  Bits none(T);
  auto lookup = [&](const std::map<int, Bits>& m, int lab) -> const Bits& {
    auto it = m.find(lab);
    return it == m.end() ? none : it->second;
  };

  std::vector<Bits> dom((size_t)W * H, Bits(T));
  for (int y = 0; y < H; ++y)
    for (int x = 0; x < W; ++x) {
      Bits& d = dom[(size_t)y * W + x];
      if (!p.domains.empty() && !p.domains[(size_t)y * W + x].empty()) {
        for (int t : p.domains[(size_t)y * W + x]) d.set(t);
      } else {
        for (int t = 0; t < T; ++t) d.set(t);
      }
      if (y == 0 && p.south >= 0) d.and_with(lookup(by_s, p.south));
      if (y == H - 1 && p.north >= 0) d.and_with(lookup(by_n, p.north));
      if (x == 0 && p.west >= 0) d.and_with(lookup(by_w, p.west));
      if (x == W - 1 && p.east >= 0) d.and_with(lookup(by_e, p.east));
    }

  // revise(c, d, dir): drop values of c without a matching partner in d
  auto revise = [&](int cx, int cy, int dx, int dy) {
    Bits& c = dom[(size_t)cy * W + cx];
    const Bits& d = dom[(size_t)dy * W + dx];
    bool changed = false;
    for (int t = 0; t < T; ++t) {
      if (!c.get(t)) continue;
      const Bits* sup = nullptr;
      if (dx == cx + 1) sup = &lookup(by_w, p.tiles[t].e);
      else if (dx == cx - 1) sup = &lookup(by_e, p.tiles[t].w);
      else if (dy == cy + 1) sup = &lookup(by_s, p.tiles[t].n);
      else sup = &lookup(by_n, p.tiles[t].s);
      if (!d.intersects(*sup)) {
        c.w[t >> 6] &= ~(1ull << (t & 63));
        changed = true;
      }
    }
    return changed;
  };

  long long steps = 0;
  auto propagate = [&](int sx, int sy) {
    std::vector<std::pair<int, int>> queue;  // cells whose domain changed
    queue.push_back({sx, sy});
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      const int nb[4][2] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
      for (auto& [nx, ny] : nb) {
        if (nx < 0 || nx >= W || ny < 0 || ny >= H) continue;
        if (revise(nx, ny, x, y)) {
          if (!dom[(size_t)ny * W + nx].any()) return false;
          queue.push_back({nx, ny});
        }
      }
    }
    return true;
  };

  // initial full pass
  for (int y = 0; y < H; ++y)
    for (int x = 0; x < W; ++x)
      if (!dom[(size_t)y * W + x].any() || !propagate(x, y)) return std::nullopt;

  std::vector<int> out((size_t)W * H, -1);
  std::vector<std::vector<Bits>> trail;
  auto dfs = [&](auto&& self, int cell) -> bool {
    if (cell == W * H) return true;
    int x = cell % W, y = cell / W;
    Bits cand = dom[cell];
    for (int t = cand.first(); t != -1;) {
      if (++steps > p.max_steps) throw BudgetExceeded("steps", p.max_steps);
      trail.push_back(dom);
      Bits single(T);
      single.set(t);
      dom[cell] = single;
      if (propagate(x, y) && self(self, cell + 1)) {
        out[cell] = t;
        return true;
      }
      dom = std::move(trail.back());
      trail.pop_back();
      // next candidate above t
      int nt = -1;
      for (int u = t + 1; u < T; ++u)
        if (cand.get(u)) {
          nt = u;
          break;
        }
      t = nt;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  for (int cell = 0; cell < W * H; ++cell)
    if (out[cell] < 0) out[cell] = dom[cell].first();
  return out;
}

std::vector<std::vector<int>> enumerate_patches(const TilingSystem& sys, int width, int height,
                                                const std::vector<int>& pinned,
                                                long long max_results, long long max_steps) {
  if (width < 1 || height < 1) throw InputError("patch must be non-empty");
  if (!pinned.empty() && pinned.size() != (size_t)width * height)
    throw InputError("pinned size mismatch");
  std::vector<std::vector<int>> results;
  std::vector<int> cur((size_t)width * height, -1);
  auto look = [&](Cell c) {
    if (c.x < 0 || c.x >= width || c.y < 0 || c.y >= height) return -1;
    return cur[(size_t)c.y * width + c.x];
  };
  long long steps = 0;
  int T = sys.tile_count();
  auto dfs = [&](auto&& self, int cell) -> void {
    if (cell == width * height) {
      results.push_back(cur);
      if ((long long)results.size() > max_results)
        throw BudgetExceeded("results", max_results);
      return;
    }
    int x = cell % width, y = cell / width;
    int pin = pinned.empty() ? -1 : pinned[cell];
    for (int t = 0; t < T; ++t) {
      if (pin >= 0 && t != pin) continue;
      if (++steps > max_steps) throw BudgetExceeded("steps", max_steps);
      if (!placement_ok(sys, {x, y}, t, look)) continue;
      cur[cell] = t;
      self(self, cell + 1);
      cur[cell] = -1;
    }
  };
  dfs(dfs, 0);
  return results;
}

}  // namespace slopekit
