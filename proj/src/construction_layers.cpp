#include <algorithm>

#include "slopekit/construction.hpp"
#include "slopekit/errors.hpp"

namespace slopekit {

namespace {

constexpr uint64_t kAllC = 0b111111;
constexpr uint64_t kColMask =
    (1u << kCLm) | (1u << kCRl) | (1u << kCRm) | (1u << kCLr);

constexpr uint64_t one(int v) { return 1ull << v; }

FeatureNeed cls(uint64_t mask) { return {kFCClass, mask}; }
FeatureNeed not_cls(uint64_t mask) { return {kFCClass, kAllC & ~mask}; }
FeatureNeed sig_on(int feature) { return {feature, 0b10}; }
FeatureNeed sig_off(int feature) { return {feature, 0b01}; }

RuleCell rc(int x, int y, std::vector<FeatureNeed> need) { return {{x, y}, std::move(need)}; }

CompiledRule rule(std::vector<RuleCell> cells, std::string note) {
  return CompiledRule::of(std::move(cells), std::move(note));
}

}  // namespace

Background placeholder_background() {
  Background bg;
  bg.name = "mono";
  bg.system = TilingSystem::make({"mono"}, {});
  bg.determinism = Background::Det::kEast;  // one tile: trivially forced
  return bg;
}

Background checkerboard_background() {
  Background bg;
  bg.name = "checker";
  bg.system = TilingSystem::make(
      {"cka", "ckb"}, {Pattern::domino_h(0, 0), Pattern::domino_h(1, 1)});
  bg.determinism = Background::Det::kEast;
  return bg;
}

LayerSpec gen_component_C(const Background& bg) {
  if (bg.determinism == Background::Det::kEast && !check_east_deterministic(bg.system))
    throw InputError("background claims east determinism but is not east deterministic");
  const int bgn = bg.system.tile_count();
  LayerSpec c;
  c.name = "C";
  for (int i = 0; i < bgn; ++i) c.alphabet.push_back("w" + std::to_string(i));
  c.alphabet.insert(c.alphabet.end(), {"bk", "lm", "rl", "rm", "lr"});
  uint64_t whites = (one(bgn) - 1);
  c.allowed_on[kCWhite] = whites;
  c.allowed_on[kCBlack] = one(bgn);
  c.allowed_on[kCLm] = one(bgn + 1);
  c.allowed_on[kCRl] = one(bgn + 2);
  c.allowed_on[kCRm] = one(bgn + 3);
  c.allowed_on[kCLr] = one(bgn + 4);

  c.rules.push_back(rule({rc(0, 0, {not_cls(one(kCBlack) | one(kCLm))}),
                          rc(1, 0, {cls(one(kCBlack))})},
                         "west of black is black or leftmost"));
  c.rules.push_back(rule({rc(0, 0, {cls(one(kCBlack))}),
                          rc(1, 0, {not_cls(one(kCBlack) | one(kCRm))})},
                         "east of black is black or rightmost"));
  c.rules.push_back(rule({rc(0, 0, {cls(one(kCBlack))}), rc(0, 1, {not_cls(one(kCWhite))})},
                         "above black is white"));
  c.rules.push_back(rule({rc(0, 0, {not_cls(one(kCWhite))}), rc(0, 1, {cls(one(kCBlack))})},
                         "below black is white"));
  c.rules.push_back(rule({rc(0, 0, {cls(one(kCLm))}), rc(0, 1, {not_cls(one(kCRl))})},
                         "above leftmost is betweenrl"));
  c.rules.push_back(
      rule({rc(0, 0, {cls(one(kCRl))}), rc(0, 1, {not_cls(one(kCRl) | one(kCRm))})},
           "above betweenrl is betweenrl or rightmost"));
  c.rules.push_back(rule({rc(0, 0, {cls(one(kCRm))}), rc(0, 1, {not_cls(one(kCLr))})},
                         "above rightmost is betweenlr"));
  c.rules.push_back(
      rule({rc(0, 0, {cls(one(kCLr))}), rc(0, 1, {not_cls(one(kCLr) | one(kCLm))})},
           "above betweenlr is betweenlr or leftmost"));

  // Background adjacencies hold between whites and jump over single black
  // rows; columns break them (the next square is a shifted copy instead).
  for (const Pattern& f : bg.system.forbidden) {
    if (f.cells.size() != 2) throw InputError("background rules must be dominoes");
    int a = f.cells[0].second, b = f.cells[1].second;
    bool horiz = f.width() == 2 && f.height() == 1;
    bool vert = f.width() == 1 && f.height() == 2;
    if (!horiz && !vert) throw InputError("background rules must be dominoes");
    FeatureNeed fa{kFBgTile, one(a)}, fb{kFBgTile, one(b)};
    if (horiz) {
      c.rules.push_back(rule({rc(0, 0, {cls(one(kCWhite)), fa}),
                              rc(1, 0, {cls(one(kCWhite)), fb})},
                             "background pair"));
    } else {
      c.rules.push_back(rule({rc(0, 0, {cls(one(kCWhite)), fa}),
                              rc(0, 1, {cls(one(kCWhite)), fb})},
                             "background pair"));
      c.rules.push_back(rule({rc(0, 0, {cls(one(kCWhite)), fa}), rc(0, 1, {cls(one(kCBlack))}),
                              rc(0, 2, {cls(one(kCWhite)), fb})},
                             "background pair jumps the row"));
    }
  }
  c.notes = "background " + bg.name + " on whites; column classes read upward as "
            "rightmost, betweenlr*, leftmost, betweenrl*";
  return c;
}

namespace {

// edge labels: 0 l, 1 r, 2 v, 3 h; order W, E, S, N
struct REdges {
  const char* code;
  int w, e, s, n;
};
constexpr REdges kR[7] = {
    {"v", 0, 1, 2, 2},   // vert
    {"h", 3, 3, 0, 1},   // horiz
    {"dr", 1, 1, 1, 1},  // droite
    {"dg", 0, 0, 0, 0},  // gauche
    {"di", 1, 0, 1, 0},  // diag
    {"jg", 0, 3, 2, 2},  // jointure gauche
    {"jd", 3, 1, 2, 2},  // jointure droite
};

}  // namespace

LayerSpec gen_component_R() {
  LayerSpec r;
  r.name = "R";
  for (const auto& t : kR) r.alphabet.push_back(t.code);
  r.allowed_on[kCWhite] = one(kRDroite) | one(kRGauche) | one(kRDiag);
  r.allowed_on[kCBlack] = one(kRHoriz);
  r.allowed_on[kCLm] = one(kRJointG);
  r.allowed_on[kCRm] = one(kRJointD);
  r.allowed_on[kCRl] = one(kRVert);
  r.allowed_on[kCLr] = one(kRVert);
  for (int a = 0; a < 7; ++a) {
    uint64_t east_bad = 0, north_bad = 0;
    for (int b = 0; b < 7; ++b) {
      if (kR[b].w != kR[a].e) east_bad |= one(b);
      if (kR[b].s != kR[a].n) north_bad |= one(b);
    }
    r.rules.push_back(rule({rc(0, 0, {{kFRTile, one(a)}}), rc(1, 0, {{kFRTile, east_bad}})},
                           std::string("east edge of ") + kR[a].code));
    r.rules.push_back(rule({rc(0, 0, {{kFRTile, one(a)}}), rc(0, 1, {{kFRTile, north_bad}})},
                           std::string("north edge of ") + kR[a].code));
  }
  r.notes = "joins sit at row heights, the diagonal restarts above each row";
  return r;
}

LayerSpec gen_component_W() {
  LayerSpec w;
  w.name = "W";
  w.alphabet = {"d1", "e1", "A", "B", "kO", "kB"};
  w.allowed_on[kCWhite] = 0b111111;
  w.allowed_on[kCBlack] = 0b110000;  // only the extremity signals cross rows

  auto& rs = w.rules;
  // dotted prolongation of the left band's rows
  rs.push_back(rule({rc(0, 0, {cls(one(kCRm))}),
                     rc(1, 0, {cls(one(kCWhite)), sig_off(kFWd1)})},
                    "dotted row starts east of rightmost"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWd1)}),
                     rc(1, 0, {cls(one(kCWhite)), sig_off(kFWd1)})},
                    "dotted row runs east"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWd1)}),
                     rc(-1, 0, {cls(one(kCWhite)), sig_off(kFWd1)})},
                    "dotted row is unbroken"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWd1)}), rc(-1, 0, {cls(kColMask & ~one(kCRm))})},
                    "dotted row springs from rightmost"));
  // dashed prolongation of the right band's rows
  rs.push_back(rule({rc(0, 0, {cls(one(kCWhite)), sig_off(kFWe1)}),
                     rc(1, 0, {cls(one(kCLm))})},
                    "dashed row starts west of leftmost"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWe1)}),
                     rc(-1, 0, {cls(one(kCWhite)), sig_off(kFWe1)})},
                    "dashed row runs west"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWe1)}),
                     rc(1, 0, {cls(one(kCWhite)), sig_off(kFWe1)})},
                    "dashed row is unbroken"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWe1)}), rc(1, 0, {cls(kColMask & ~one(kCLm))})},
                    "dashed row springs from leftmost"));
  // descending arm: launched where the dashed row is absorbed, reflected on
  // the row below into the returning arm, which must land on a rightmost
  rs.push_back(rule({rc(0, 0, {sig_on(kFWe1), sig_off(kFWA)}), rc(-1, 0, {cls(kColMask)})},
                    "descending arm launches at the dashed absorption"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWA)}), rc(0, -1, {not_cls(one(kCBlack))}),
                     rc(1, -1, {sig_off(kFWA)})},
                    "descending arm steps southeast"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWA), sig_off(kFWe1)}), rc(-1, 1, {sig_off(kFWA)})},
                    "descending arm comes from the northwest"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWA), sig_on(kFWe1)}), rc(-1, 1, {sig_off(kFWA)}),
                     rc(-1, 0, {not_cls(kColMask)})},
                    "descending arm without predecessor is a launch"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWA)}), rc(0, -1, {cls(one(kCBlack))}),
                     rc(-1, -2, {sig_off(kFWB)})},
                    "the arm reflects under the row"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWB)}),
                     rc(-1, -1, {cls(one(kCWhite)), sig_off(kFWB)})},
                    "returning arm steps southwest"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWB)}), rc(-1, -1, {cls(kColMask & ~one(kCRm))})},
                    "returning arm may only land on a rightmost"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWB)}), rc(-1, -1, {cls(one(kCBlack))})},
                    "returning arm stays above the next row"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWB)}),
                     rc(1, 1, {cls(one(kCWhite)), sig_off(kFWB)})},
                    "returning arm comes from the northeast"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWB)}), rc(1, 1, {cls(one(kCBlack))}),
                     rc(1, 2, {sig_off(kFWA)})},
                    "returning arm starts under the reflection"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWB)}), rc(1, 1, {cls(kColMask)})},
                    "returning arm never hugs a column"));
  rs.push_back(rule({rc(0, 0, {cls(one(kCRm))}),
                     rc(1, 1, {cls(one(kCWhite)), sig_off(kFWB)})},
                    "every rightmost receives a returning arm"));
  // extremity signals: absorbed prolongations reflect toward the opposite
  // corner, forcing the spacing to match the column period
  rs.push_back(rule({rc(0, 1, {sig_on(kFWe1)}), rc(-1, 1, {cls(kColMask)}),
                     rc(0, 0, {sig_off(kFWkO)})},
                    "left extremity launches under the dashed absorption"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWkO)}),
                     rc(1, -1, {sig_off(kFWkO), not_cls(one(kCLm))})},
                    "left extremity steps southeast into a leftmost"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWkO)}),
                     rc(-1, 1, {sig_off(kFWkO), not_cls(kColMask)})},
                    "left extremity comes from the northwest"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWkO)}), rc(-1, 1, {cls(kColMask)}),
                     rc(0, 1, {sig_off(kFWe1)})},
                    "left extremity may only start at an absorption"));
  rs.push_back(rule({rc(0, 1, {sig_on(kFWd1)}), rc(1, 1, {cls(kColMask)}),
                     rc(0, 0, {sig_off(kFWkB)})},
                    "right extremity launches under the dotted absorption"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWkB)}),
                     rc(-1, -1, {sig_off(kFWkB), not_cls(one(kCRm))})},
                    "right extremity steps southwest into a rightmost"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWkB)}),
                     rc(1, 1, {sig_off(kFWkB), not_cls(kColMask)})},
                    "right extremity comes from the northeast"));
  rs.push_back(rule({rc(0, 0, {sig_on(kFWkB)}), rc(1, 1, {cls(kColMask)}),
                     rc(0, 1, {sig_off(kFWd1)})},
                    "right extremity may only start at an absorption"));
  w.notes = "six independent signal bits; prolongations pin the offsets, the "
            "reflected arm equates them, the extremity pair equates spacings";
  return w;
}

LayerSpec gen_component_S(const Background& bg) {
  if (bg.determinism != Background::Det::kEast)
    throw InputError("transmission needs an east-deterministic background");
  if (!check_east_deterministic(bg.system))
    throw InputError("background claims east determinism but is not east deterministic");
  const int bgn = bg.system.tile_count();
  const uint64_t all_arrows = 0b1111;
  LayerSpec s;
  s.name = "S";
  s.alphabet = {"ar", "ad", "gr", "gd"};
  s.allowed_on[kCWhite] = all_arrows;
  for (int c : {kCBlack, kCLm, kCRl, kCRm, kCLr}) s.allowed_on[c] = one(kSAr);

  auto arrow = [](uint64_t mask) { return FeatureNeed{kFSArrow, mask}; };
  const uint64_t diag = one(kSAd) | one(kSGd);
  for (Cell off : {Cell{1, 0}, Cell{0, 1}, Cell{0, -1}}) {
    s.rules.push_back(rule({rc(0, 0, {arrow(one(kSAd))}),
                            rc(off.x, off.y, {cls(one(kCWhite)), arrow(all_arrows & ~diag)})},
                           "the diagonal neighbourhood stays diagonal"));
  }
  s.rules.push_back(rule({rc(0, 0, {cls(one(kCWhite)), arrow(all_arrows & ~one(kSGd))}),
                          rc(1, 0, {cls(one(kCLm))})},
                         "the cell west of a leftmost closes the diagonal"));
  s.rules.push_back(
      rule({rc(0, 0, {arrow(one(kSGd))}),
            rc(-1, -1, {cls(one(kCWhite)), arrow(all_arrows & ~(one(kSGd) | one(kSGr)))})},
           "the gray diagonal descends to the gray row"));
  s.rules.push_back(rule({rc(0, 0, {cls(one(kCWhite)), arrow(all_arrows & ~one(kSGr))}),
                          rc(-1, 0, {cls(kColMask)}), rc(0, -1, {cls(one(kCBlack))})},
                         "the square corner starts the gray row"));
  s.rules.push_back(rule({rc(0, 0, {arrow(one(kSGr))}), rc(0, -1, {not_cls(one(kCBlack))})},
                         "the gray row hugs its row"));
  s.rules.push_back(
      rule({rc(0, 0, {arrow(one(kSGr))}),
            rc(1, 0, {cls(one(kCWhite)), arrow(all_arrows & ~(one(kSGr) | one(kSAd)))})},
           "the gray row runs to the diagonal"));
  // transmitted value: sourced right of a column, rides arrows west/southwest
  const uint64_t copy_dom = one(bgn) - 1;
  for (int b = 0; b < bgn; ++b) {
    s.rules.push_back(rule({rc(0, 0, {cls(one(kCWhite)), {kFBgTile, one(b)},
                                      {kFSCopy, copy_dom & ~one(b)}}),
                            rc(-1, 0, {cls(kColMask)})},
                           "the source column carries its own background"));
    s.rules.push_back(rule({rc(0, 0, {arrow(one(kSAr) | one(kSGr)), {kFSCopy, one(b)}}),
                            rc(1, 0, {{kFSCopy, copy_dom & ~one(b)}})},
                           "right arrows pull the value east"));
    s.rules.push_back(rule({rc(0, 0, {arrow(diag), {kFSCopy, one(b)}}),
                            rc(1, 1, {{kFSCopy, copy_dom & ~one(b)}})},
                           "diagonal arrows pull the value northeast"));
  }
  s.notes = "corner conventions: the gray row sits on the square floor and the "
            "gray diagonal ends one cell west of the leftmost";
  return s;
}

namespace {

// counter cell kinds (west state, south bit, north bit, east state);
// states: 0 q0, 1 q1 for the increment rows, 2 the copy rows
struct PCell {
  int w, s, n, e;
};
constexpr PCell kPa[4] = {{0, 1, 1, 0}, {0, 0, 0, 0}, {0, 0, 1, 1}, {1, 1, 0, 1}};
constexpr PCell kPb[6] = {{0, 1, 1, 0}, {0, 0, 0, 0}, {0, 0, 1, 1},
                          {1, 1, 0, 1}, {2, 0, 0, 2}, {2, 1, 1, 2}};

template <int N>
uint64_t pmask(const PCell (&tab)[N], auto&& pick) {
  uint64_t m = 0;
  for (int i = 0; i < N; ++i)
    if (pick(tab[i])) m |= 1ull << i;
  return m;
}

}  // namespace

LayerSpec gen_component_P_TM(const TuringMachine& machine) {
  machine.check();
  LayerSpec p;
  p.name = "P";
  p.alphabet = {"a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3", "b4", "b5", "dead"};
  p.allowed_on[kCWhite] = (1ull << p.alphabet.size()) - 1;

  auto track = [&](int feat, auto& tab, const char* tag) {
    auto m = [&](auto&& pick) { return pmask(tab, pick); };
    std::string t(tag);
    p.rules.push_back(rule({rc(0, 0, {cls(one(kCBlack))}),
                            rc(0, 1, {cls(one(kCWhite)),
                                      {feat, m([](PCell c) { return c.s != 0; })}})},
                           t + " restarts at zero above each row"));
    p.rules.push_back(
        rule({rc(0, 0, {{feat, m([](PCell c) { return c.n == 1; })}}),
              rc(0, 1, {cls(one(kCWhite)), {feat, m([](PCell c) { return c.s == 0; })}})},
             t + " carries one up"));
    p.rules.push_back(
        rule({rc(0, 0, {{feat, m([](PCell c) { return c.n == 0; })}}),
              rc(0, 1, {cls(one(kCWhite)), {feat, m([](PCell c) { return c.s == 1; })}})},
             t + " carries zero up"));
    for (int st = 0; st < 3; ++st) {
      uint64_t out = m([&](PCell c) { return c.e == st; });
      uint64_t in_bad = m([&](PCell c) { return c.w != st; });
      if (!out || !in_bad) continue;
      p.rules.push_back(rule({rc(0, 0, {{feat, out}}),
                              rc(1, 0, {cls(one(kCWhite)), {feat, in_bad}})},
                             t + " chains its state east"));
    }
    p.rules.push_back(
        rule({rc(0, 0, {cls(kColMask)}),
              rc(1, 0, {cls(one(kCWhite)), {feat, m([](PCell c) { return c.w == 1; })}})},
             t + " enters rows fresh"));
    p.rules.push_back(
        rule({rc(0, 0, {cls(one(kCWhite)), {feat, m([](PCell c) { return c.e == 0; })}}),
              rc(1, 0, {cls(kColMask)})},
             t + " must flip before the column"));
  };
  track(kFPa, kPa, "first track");
  track(kFPb, kPb, "second track");
  p.rules.push_back(rule({rc(0, 0, {sig_on(kFWA),
                                    {kFPb, pmask(kPb, [](PCell c) { return c.w == 2; })}})},
                         "the descending arm makes the second track count"));
  p.rules.push_back(rule({rc(0, 0, {{kFPdead, 0b10},
                                    {kFPa, pmask(kPa, [](PCell c) { return c.n == 1; })}})},
                         "stripped columns hold no first-track ones"));
  p.rules.push_back(rule({rc(0, 0, {{kFPdead, 0b10},
                                    {kFPb, pmask(kPb, [](PCell c) { return c.n == 1; })}})},
                         "stripped columns hold no second-track ones"));
  p.rules.push_back(rule({rc(0, 0, {{kFPdead, 0b10}}),
                          rc(1, 0, {cls(one(kCWhite)), {kFPdead, 0b01}})},
                         "stripping grows from the east"));
  p.notes = "machine " + machine.states[machine.initial] +
            "-initial: the interior halting run is checked through the bordered "
            "rectangle reduction; rows realize one increment step each";
  return p;
}

LayerSpec gen_component_A() {
  LayerSpec a;
  a.name = "A";
  a.alphabet = {"yellow", "blue"};
  a.allowed_on[kCWhite] = 0b11;
  a.allowed_on[kCRl] = 0b11;  // betweenrl bridges a square to its upper right
  const uint64_t y = one(1), b = one(2);
  a.rules.push_back(rule({rc(0, 0, {{kFAColor, y}}), rc(1, 0, {{kFAColor, b}})},
                         "colors agree east"));
  a.rules.push_back(rule({rc(0, 0, {{kFAColor, b}}), rc(1, 0, {{kFAColor, y}})},
                         "colors agree east"));
  a.rules.push_back(rule({rc(0, 0, {{kFAColor, y}}), rc(0, 1, {{kFAColor, b}})},
                         "colors agree north"));
  a.rules.push_back(rule({rc(0, 0, {{kFAColor, b}}), rc(0, 1, {{kFAColor, y}})},
                         "colors agree north"));
  a.notes = "betweenlr carries no color, so only the upper-right link exists";
  return a;
}

LayerSpec special_slope_stub(Slope slope) {
  bool degenerate = slope.infinite || slope.num == 0 ||
                    (slope.den == 1 && (slope.num == 1 || slope.num == -1));
  if (!degenerate) throw InputError("only the axis and diagonal slopes have a special variant");
  LayerSpec s;
  s.name = "special:" + slope.str();
  s.notes = "grid-aligned variant with squares facing one another; the offset "
            "machinery degenerates, no rules are generated";
  return s;
}

}  // namespace slopekit
