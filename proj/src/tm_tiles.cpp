#include "slopekit/tm_tiles.hpp"

namespace slopekit {

int TmTileSet::label_id(const std::string& text) const {
  for (int i = 0; i < (int)labels.size(); ++i)
    if (labels[i] == text) return i;
  return -1;
}

int TmTileSet::tile_id(const std::string& name) const {
  for (int i = 0; i < (int)tiles.size(); ++i)
    if (tiles[i].name == name) return i;
  return -1;
}

WangSystem TmTileSet::as_wang() const {
  WangSystem w;
  for (const auto& t : tiles) w.tiles.push_back({t.name, {t.n, t.e, t.s, t.w}});
  return w;
}

TmTileSet compile_tm(const TuringMachine& m) {
  m.check();
  TmTileSet ts;
  ts.machine = m;
  auto intern = [&](const std::string& s) {
    for (int i = 0; i < (int)ts.labels.size(); ++i)
      if (ts.labels[i] == s) return i;
    ts.labels.push_back(s);
    return (int)ts.labels.size() - 1;
  };
  ts.lab_none = intern("-");
  ts.lab_border = intern("#");
  auto st = [&](int s) { return intern("s:" + m.states[s]); };
  auto let = [&](int a) { return intern("a:" + m.letters[a]); };
  auto pair = [&](int s, int a) { return intern("p:" + m.states[s] + "," + m.letters[a]); };
  const int none = ts.lab_none, bord = ts.lab_border;
  const int S = (int)m.states.size(), A = (int)m.letters.size();

  auto step = [&](int s, int a) -> const std::optional<TuringMachine::Step>& {
    static const std::optional<TuringMachine::Step> nil;
    return m.delta.empty() ? nil : m.delta[s][a];
  };
  auto add = [&](std::string name, int n, int e, int s_, int w, TmTileClass cls, int letter) {
    ts.tiles.push_back({std::move(name), n, e, s_, w, cls, letter});
  };

  for (int s = 0; s < S; ++s)
    for (int a = 0; a < A; ++a) {
      const auto& d = step(s, a);
      if (!d) continue;
      std::string key = "(" + m.states[s] + "," + m.letters[a] + ")";
      if (d->move == kLeft)
        add("cL" + key, let(d->letter), none, pair(s, a), st(d->state), TmTileClass::kComputeL,
            d->letter);
      else if (d->move == kStay)
        add("cS" + key, pair(d->state, d->letter), none, pair(s, a), none, TmTileClass::kComputeS,
            d->letter);
      else
        add("cR" + key, let(d->letter), st(d->state), pair(s, a), none, TmTileClass::kComputeR,
            d->letter);
    }
  for (int a = 0; a < A; ++a) {
    const auto& d = step(m.initial, a);
    if (!d || d->move == kLeft) continue;  // no leftward start tile exists
    std::string key = "(" + m.letters[a] + ")";
    if (d->move == kStay)
      add("iHS" + key, pair(d->state, d->letter), none, bord, st(m.initial),
          TmTileClass::kInitHead, a);
    else
      add("iHR" + key, let(d->letter), st(d->state), bord, st(m.initial), TmTileClass::kInitHead,
          a);
  }
  for (int s = 0; s < S; ++s)
    for (int a = 0; a < A; ++a) {
      std::string key = "(" + m.states[s] + "," + m.letters[a] + ")";
      add("pR" + key, pair(s, a), none, let(a), st(s), TmTileClass::kPassRight, a);
      add("pL" + key, pair(s, a), st(s), let(a), none, TmTileClass::kPassLeft, a);
      add("iP" + key, pair(s, a), none, bord, st(s), TmTileClass::kInitHead, a);
    }
  for (int a = 0; a < A; ++a) {
    std::string key = "(" + m.letters[a] + ")";
    add("tape" + key, let(a), none, let(a), none, TmTileClass::kTape, a);
    add("iT" + key, let(a), none, bord, none, TmTileClass::kInitTape, a);
    add("tTop" + key, bord, none, let(a), none, TmTileClass::kTape, a);
  }
  for (int s = 0; s < S; ++s) {
    if (!m.halting[s]) continue;
    for (int a = 0; a < A; ++a) {
      std::string key = "(" + m.states[s] + "," + m.letters[a] + ")";
      add("hPass" + key, pair(s, a), none, pair(s, a), none, TmTileClass::kHalt, a);
      add("hAbs" + key, bord, none, pair(s, a), none, TmTileClass::kHalt, a);
    }
  }
  add("bL", bord, none, bord, bord, TmTileClass::kBorderEdge, -1);
  add("bR", bord, bord, bord, none, TmTileClass::kBorderEdge, -1);
  add("bS", bord, st(m.initial), bord, bord, TmTileClass::kBorderCorner, -1);
  return ts;
}

std::optional<std::vector<int>> rectangle_tileable(const TmTileSet& ts,
                                                   const RectangleInstance& inst,
                                                   long long max_cells, long long max_steps) {
  const int W = inst.width, H = inst.height;
  if (W < 2) throw InputError("rectangle needs the two border columns");
  if (H < 1) throw InputError("rectangle needs at least one row");
  if ((int)inst.input.size() > W - 2) throw InputError("input does not fit the rectangle");
  for (int a : inst.input)
    if (a < 0 || a >= (int)ts.machine.letters.size()) throw InputError("input letter unknown");

  GridProblem gp;
  gp.width = W;
  gp.height = H;
  gp.north = gp.south = gp.east = gp.west = ts.lab_border;
  gp.max_cells = max_cells;
  gp.max_steps = max_steps;
  for (const auto& t : ts.tiles) gp.tiles.push_back({t.n, t.e, t.s, t.w});
  gp.domains.assign((size_t)W * H, {});

  int bL = ts.tile_id("bL"), bR = ts.tile_id("bR"), bS = ts.tile_id("bS");
  for (int y = 0; y < H; ++y) {
    gp.domains[(size_t)y * W] = {y == 0 ? bS : bL};
    gp.domains[(size_t)y * W + W - 1] = {bR};
  }
  for (int x = 1; x < W - 1; ++x) {
    int want = x - 1 < (int)inst.input.size() ? inst.input[x - 1] : ts.machine.blank;
    auto& d = gp.domains[x];
    for (int i = 0; i < (int)ts.tiles.size(); ++i) {
      const auto& t = ts.tiles[i];
      bool init = t.cls == TmTileClass::kInitHead || t.cls == TmTileClass::kInitTape;
      if (init && t.letter == want) d.push_back(i);
    }
    for (int y = 1; y < H; ++y) {
      auto& dy = gp.domains[(size_t)y * W + x];
      for (int i = 0; i < (int)ts.tiles.size(); ++i) {
        switch (ts.tiles[i].cls) {
          case TmTileClass::kInitHead:
          case TmTileClass::kInitTape:
          case TmTileClass::kBorderCorner:
          case TmTileClass::kBorderEdge:
            break;
          default:
            dy.push_back(i);
        }
      }
    }
  }
  return solve_grid(gp);
}

bool check_simulation_equivalence(const TuringMachine& m, const std::vector<int>& input, int t,
                                  int w, long long max_steps) {
  bool accepts = run_tm(m, input, t, w).halted;
  bool tiles = false;
  if ((int)input.size() <= w) {
    TmTileSet ts = compile_tm(m);
    RectangleInstance inst{w + 2, t, input};
    tiles = rectangle_tileable(ts, inst, 1 << 16, max_steps).has_value();
  }
  return accepts == tiles;
}

int TransducerTiles::label_id(const std::string& text) const {
  for (int i = 0; i < (int)labels.size(); ++i)
    if (labels[i] == text) return i;
  return -1;
}

TransducerTiles transducer_to_tiles(const Transducer& t) {
  TransducerTiles out;
  auto intern = [&](const std::string& s) {
    for (int i = 0; i < (int)out.labels.size(); ++i)
      if (out.labels[i] == s) return i;
    out.labels.push_back(s);
    return (int)out.labels.size() - 1;
  };
  out.lab_delim = intern("|");
  auto st = [&](int s) { return intern("t:" + t.states[s]); };
  auto ch = [&](char c) { return intern(std::string("c:") + c); };
  for (size_t i = 0; i < t.rules.size(); ++i) {
    const auto& r = t.rules[i];
    out.names.push_back("rule" + std::to_string(i));
    out.tiles.push_back({ch(r.out), st(r.to), ch(r.in), st(r.from)});
  }
  for (int s = 0; s < (int)t.states.size(); ++s) {
    if (t.initial[s]) {
      out.names.push_back("ldelim(" + t.states[s] + ")");
      out.tiles.push_back({out.lab_delim, st(s), out.lab_delim, out.lab_delim});
    }
    if (t.accepting[s]) {
      out.names.push_back("rdelim(" + t.states[s] + ")");
      out.tiles.push_back({out.lab_delim, out.lab_delim, out.lab_delim, st(s)});
    }
  }
  return out;
}

}  // namespace slopekit
