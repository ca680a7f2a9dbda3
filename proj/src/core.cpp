#include "slopekit/core.hpp"

#include <numeric>

namespace slopekit {

static std::vector<std::pair<Cell, int>> normalize_cells(std::vector<std::pair<Cell, int>> cells,
                                                         const char* what) {
  if (cells.empty()) throw InputError(std::string(what) + " has no cells");
  std::sort(cells.begin(), cells.end());
  for (size_t i = 1; i < cells.size(); ++i)
    if (cells[i].first == cells[i - 1].first) {
      if (cells[i].second == cells[i - 1].second) continue;  // collapsed below
      throw InputError(std::string(what) + " repeats a cell with conflicting tiles");
    }
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  int mnx = cells[0].first.x, mny = cells[0].first.y;
  for (const auto& [c, _] : cells) {
    mnx = std::min(mnx, c.x);
    mny = std::min(mny, c.y);
  }
  for (auto& [c, _] : cells) c = c - Cell{mnx, mny};
  std::sort(cells.begin(), cells.end());
  return cells;
}

Pattern Pattern::of(std::vector<std::pair<Cell, int>> cells) {
  Pattern p;
  p.cells = normalize_cells(std::move(cells), "pattern");
  return p;
}

Pattern Pattern::domino_h(int west, int east) {
  return of({{{0, 0}, west}, {{1, 0}, east}});
}
Pattern Pattern::domino_v(int south, int north) {
  return of({{{0, 0}, south}, {{0, 1}, north}});
}

Pattern Pattern::from_grid(const std::vector<std::vector<int>>& rows) {
  std::vector<std::pair<Cell, int>> cells;
  for (int y = 0; y < (int)rows.size(); ++y)
    for (int x = 0; x < (int)rows[y].size(); ++x)
      if (rows[y][x] >= 0) cells.push_back({{x, y}, rows[y][x]});
  return of(std::move(cells));
}

int Pattern::width() const {
  int m = 0;
  for (const auto& [c, _] : cells) m = std::max(m, c.x);
  return m + 1;
}
int Pattern::height() const {
  int m = 0;
  for (const auto& [c, _] : cells) m = std::max(m, c.y);
  return m + 1;
}

std::optional<int> Pattern::at(Cell c) const {
  for (const auto& [cc, t] : cells)
    if (cc == c) return t;
  return std::nullopt;
}

Pattern Pattern::translated(Cell d) const {
  Pattern p = *this;
  for (auto& [c, _] : p.cells) c = c + d;
  return p;
}

Pattern Pattern::transposed() const {
  auto cs = cells;
  for (auto& [c, _] : cs) c = {c.y, c.x};
  return of(std::move(cs));
}
Pattern Pattern::reflected_y() const {
  auto cs = cells;
  for (auto& [c, _] : cs) c = {c.x, -c.y};
  return of(std::move(cs));
}
Pattern Pattern::rotated90() const {
  auto cs = cells;
  for (auto& [c, _] : cs) c = {-c.y, c.x};
  return of(std::move(cs));
}

uint64_t Pattern::hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (const auto& [c, t] : cells) {
    mix((uint64_t)(uint32_t)c.x);
    mix((uint64_t)(uint32_t)c.y);
    mix((uint64_t)(uint32_t)t);
  }
  return h;
}

int CompiledRule::width() const {
  int m = 0;
  for (const auto& rc : cells) m = std::max(m, rc.at.x);
  return m + 1;
}
int CompiledRule::height() const {
  int m = 0;
  for (const auto& rc : cells) m = std::max(m, rc.at.y);
  return m + 1;
}

CompiledRule CompiledRule::of(std::vector<RuleCell> cells, std::string note) {
  if (cells.empty()) throw InputError("rule has no cells");
  int mnx = cells[0].at.x, mny = cells[0].at.y;
  for (const auto& rc : cells) {
    mnx = std::min(mnx, rc.at.x);
    mny = std::min(mny, rc.at.y);
  }
  for (auto& rc : cells) rc.at = rc.at - Cell{mnx, mny};
  std::sort(cells.begin(), cells.end(),
            [](const RuleCell& a, const RuleCell& b) { return a.at < b.at; });
  CompiledRule r;
  r.cells = std::move(cells);
  r.note = std::move(note);
  return r;
}

int FeatureSchema::index(const std::string& name) const {
  for (int i = 0; i < (int)names.size(); ++i)
    if (names[i] == name) return i;
  return -1;
}

int TilingSystem::tile_id(const std::string& name) const {
  for (const auto& t : alphabet)
    if (t.name == name) return t.id;
  return -1;
}

std::vector<std::string> TilingSystem::tile_names() const {
  std::vector<std::string> names;
  names.reserve(alphabet.size());
  for (const auto& t : alphabet) names.push_back(t.name);
  return names;
}

int TilingSystem::diameter() const {
  int d = 1;
  for (const auto& f : forbidden) d = std::max({d, f.width() - 1, f.height() - 1});
  for (const auto& r : rules) d = std::max({d, r.width() - 1, r.height() - 1});
  return d;
}

bool TilingSystem::tile_matches(int tile, const RuleCell& rc) const {
  for (const auto& n : rc.need) {
    int v = features[tile][n.feature];
    if (v >= 64 || !((n.mask >> v) & 1)) return false;
  }
  return true;
}

TilingSystem TilingSystem::make(std::vector<std::string> names, std::vector<Pattern> forb) {
  TilingSystem s;
  for (int i = 0; i < (int)names.size(); ++i) s.alphabet.push_back({i, std::move(names[i])});
  for (auto& f : forb) {
    if (std::find(s.forbidden.begin(), s.forbidden.end(), f) == s.forbidden.end())
      s.forbidden.push_back(std::move(f));
  }
  s.schema.names = {"tile"};
  for (int i = 0; i < (int)s.alphabet.size(); ++i) s.features.push_back({i});
  for (const auto& f : s.forbidden)
    for (const auto& [c, t] : f.cells)
      if (t < 0 || t >= s.tile_count()) throw InputError("forbidden pattern uses unknown tile");
  return s;
}

template <class F>
static TilingSystem transform_system(const TilingSystem& s, F&& f) {
  TilingSystem out = s;
  out.forbidden.clear();
  out.rules.clear();
  for (const auto& p : s.forbidden) out.forbidden.push_back(f(p));
  for (const auto& r : s.rules) {
    std::vector<RuleCell> cs = r.cells;
    // reuse Pattern normalization by mapping offsets through a dummy pattern
    std::vector<std::pair<Cell, int>> probe;
    for (int i = 0; i < (int)cs.size(); ++i) probe.push_back({cs[i].at, i});
    Pattern moved = f(Pattern::of(std::move(probe)));
    std::vector<RuleCell> ncs(cs.size());
    for (const auto& [c, i] : moved.cells) ncs[i] = {c, cs[i].need};
    out.rules.push_back(CompiledRule::of(std::move(ncs), r.note));
  }
  return out;
}

TilingSystem transposed_system(const TilingSystem& s) {
  return transform_system(s, [](const Pattern& p) { return p.transposed(); });
}
TilingSystem reflected_y_system(const TilingSystem& s) {
  return transform_system(s, [](const Pattern& p) { return p.reflected_y(); });
}
TilingSystem rotated90_system(const TilingSystem& s) {
  return transform_system(s, [](const Pattern& p) { return p.rotated90(); });
}

Slope Slope::finite(long long q, long long p) {
  if (p == 0) throw InputError("finite slope needs p != 0");
  long long g = std::gcd(q < 0 ? -q : q, p < 0 ? -p : p);
  if (g == 0) g = 1;
  q /= g;
  p /= g;
  if (p < 0) {
    p = -p;
    q = -q;
  }
  return {q, p, false};
}

Slope Slope::of(PeriodVector v) {
  if (v.p == 0 && v.q == 0) throw InputError("period vector is zero");
  if (v.p == 0) return vertical();
  return finite(v.q, v.p);
}

Slope Slope::parse(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return vertical();
  auto bad = [&] { return ParseError("bad slope '" + text + "'"); };
  size_t slash = text.find('/');
  try {
    size_t used = 0;
    long long q = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw bad();
    long long p = 1;
    if (slash != std::string::npos) {
      p = std::stoll(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1) throw bad();
    }
    if (p == 0) throw bad();
    return finite(q, p);
  } catch (const std::logic_error&) {
    throw bad();
  }
}

std::string Slope::str() const {
  if (infinite) return "inf";
  return std::to_string(num) + "/" + std::to_string(den);
}

PeriodicConfig::PeriodicConfig(PeriodVector v, int w, int h, std::vector<int> cells_)
    : period(v), width(w), height(h), cells(std::move(cells_)) {
  if (v.p == 0 && v.q == 0) throw InputError("period vector is zero");
  if (v.p < 0 || (v.p == 0 && v.q < 0)) period = {-v.p, -v.q};
  if (width <= 0 || height <= 0) throw InputError("band must be non-empty");
  if ((size_t)width * height != cells.size()) throw InputError("band size mismatch");
  if (period.p != 0) {
    if (width != period.p) throw InputError("band width must equal the period's x step");
    int need = std::max(period.q < 0 ? -period.q : period.q, 1);
    if (height < need) throw InputError("band height smaller than required overlap");
  } else {
    if (height != period.q) throw InputError("band height must equal the vertical period");
  }
  for (int t : cells)
    if (t < 0) throw InputError("band has an unset cell");
}

std::optional<int> PeriodicConfig::at(int x, int y) const {
  if (period.p != 0) {
    int n = floordiv(x, period.p);
    int by = y - n * period.q;
    if (by < 0 || by >= height) return std::nullopt;
    return cells[(size_t)by * width + (x - n * period.p)];
  }
  if (x < 0 || x >= width) return std::nullopt;
  return cells[(size_t)floormod(y, period.q) * width + x];
}

std::vector<Violation> validate_patch(const TilingSystem& sys, const Patch& patch) {
  for (int t : patch.cells)
    if (t < 0 || t >= sys.tile_count()) throw InputError("patch uses unknown tile");
  std::vector<Violation> out;
  auto look = [&](Cell c) {
    if (c.x < 0 || c.x >= patch.width || c.y < 0 || c.y >= patch.height) return -1;
    return patch.at(c.x, c.y);
  };
  scan_violations(sys, {0, 0}, {patch.width - 1, patch.height - 1}, look, out);
  return out;
}

bool validate_periodic(const TilingSystem& sys, const PeriodicConfig& cfg) {
  return periodic_violations(sys, cfg).empty();
}

std::vector<Violation> periodic_violations(const TilingSystem& sys, const PeriodicConfig& cfg) {
  for (int t : cfg.cells)
    if (t >= sys.tile_count()) throw InputError("band uses unknown tile");
  std::vector<Violation> out;
  auto look = [&](Cell c) { return cfg.at(c.x, c.y).value_or(-1); };
  int d = sys.diameter();
  const auto& v = cfg.period;
  if (v.p != 0) {
    // One representative anchor column per orbit of the period translation.
    // Cells reach x up to ax + d, so the unreduced offset n stays within
    // [0, d/p + 1]; widen the anchor rows accordingly.
    int span = (v.q < 0 ? -v.q : v.q) * (d / v.p + 2);
    scan_violations(sys, {0, -d - span}, {v.p - 1, cfg.height - 1 + d + span}, look, out);
  } else {
    scan_violations(sys, {0, 0}, {cfg.width - 1, cfg.height - 1}, look, out);
  }
  return out;
}

bool check_east_deterministic(const TilingSystem& sys) {
  for (const auto& f : sys.forbidden)
    if (f.width() > 2 || f.height() > 2)
      throw InputError("east-determinism needs forbidden patterns within 2x2");
  for (const auto& r : sys.rules)
    if (r.width() > 2 || r.height() > 2)
      throw InputError("east-determinism needs forbidden patterns within 2x2");
  int n = sys.tile_count();
  auto empty = [](Cell) { return -1; };
  for (int w = 0; w < n; ++w) {
    if (!placement_ok(sys, {0, 0}, w, empty)) continue;
    auto just_w = [&](Cell c) { return c == Cell{0, 0} ? w : -1; };
    for (int nw = 0; nw < n; ++nw) {
      // contexts that are themselves forbidden never occur in a valid tiling
      if (!placement_ok(sys, {0, 1}, nw, just_w)) continue;
      auto look = [&](Cell c) {
        if (c == Cell{0, 0}) return w;
        if (c == Cell{0, 1}) return nw;
        return -1;
      };
      int fits = 0;
      for (int t = 0; t < n && fits <= 1; ++t)
        if (placement_ok(sys, {1, 0}, t, look)) ++fits;
      if (fits > 1) return false;
    }
  }
  return true;
}

}  // namespace slopekit
