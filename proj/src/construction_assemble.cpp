#include <bit>
#include <optional>

#include "slopekit/construction.hpp"
#include "slopekit/errors.hpp"

namespace slopekit {

namespace {

constexpr const char* kClassLabel[6] = {"white",     "black",    "leftmost",
                                        "betweenrl", "rightmost", "betweenlr"};
constexpr const char* kClassPart[6] = {"w", "bk", "lm", "rl", "rm", "lr"};
constexpr const char* kWBitName[6] = {"d1", "e1", "A", "B", "kO", "kB"};

std::vector<int> bits_of(uint64_t m) {
  std::vector<int> v;
  for (int i = 0; i < 64; ++i)
    if (m >> i & 1) v.push_back(i);
  return v;
}

std::vector<uint64_t> subsets_of(uint64_t m) {  // ascending numeric order
  std::vector<uint64_t> v;
  for (uint64_t s = 0; s < 64; ++s)
    if ((s & ~m) == 0) v.push_back(s);
  return v;
}

std::string combo_name(uint64_t combo) {
  if (!combo) return "o";
  std::string n;
  for (int i = 0; i < 6; ++i)
    if (combo >> i & 1) n += kWBitName[i];
  return n;
}

}  // namespace

TilingSystem assemble_tau(const TuringMachine& machine, const Background& bg,
                          const AssembleOptions& opt, AssembleStats* stats) {
  const int bgn = bg.system.tile_count();
  LayerSpec lc = gen_component_C(bg);
  std::optional<LayerSpec> lr, lw, ls, lp, la;
  if (opt.layers.r) lr = gen_component_R();
  if (opt.layers.w) lw = gen_component_W();
  if (opt.layers.s) ls = gen_component_S(bg);
  if (opt.layers.p) lp = gen_component_P_TM(machine);
  if (opt.layers.a) la = gen_component_A();

  AssembleStats st;
  long long total = 0;
  for (int cls = 0; cls < 6; ++cls) {
    long long n = cls == kCWhite ? bgn : 1;
    if (lr) n *= std::popcount(lr->allowed_on[cls]);
    if (lw) n *= 1ll << std::popcount(lw->allowed_on[cls]);
    if (ls) n *= std::popcount(ls->allowed_on[cls]) * (long long)bgn;
    if (lp && cls == kCWhite) n *= 4 * 6 * 2;
    if (la && la->allowed_on[cls]) n *= std::popcount(la->allowed_on[cls]);
    st.class_tiles[kClassLabel[cls]] = n;
    total += n;
  }
  if (total > opt.max_tiles)
    throw BudgetExceeded("tiles(" + std::to_string(total) + ")", opt.max_tiles);

  TilingSystem sys;
  sys.schema.names = {"cclass", "bgtile", "rtile", "w_d1",  "w_e1",
                      "w_A",    "w_B",    "w_kO",  "w_kB",  "s_arrow",
                      "s_copy", "p_a",    "p_b",   "p_dead", "a_color"};

  for (int cls = 0; cls < 6; ++cls) {
    for (int bgv = 0; bgv < (cls == kCWhite ? bgn : 1); ++bgv) {
      std::string head =
          cls == kCWhite ? "w" + std::to_string(bgv) : std::string(kClassPart[cls]);
      std::vector<int> rv = lr ? bits_of(lr->allowed_on[cls]) : std::vector<int>{0};
      std::vector<uint64_t> wv =
          lw ? subsets_of(lw->allowed_on[cls]) : std::vector<uint64_t>{0};
      std::vector<int> sv = ls ? bits_of(ls->allowed_on[cls]) : std::vector<int>{0};
      int copies = ls ? bgn : 1;
      std::vector<std::array<int, 3>> pv;
      if (lp && cls == kCWhite) {
        for (int pa = 0; pa < 4; ++pa)
          for (int pb = 0; pb < 6; ++pb)
            for (int dead = 0; dead < 2; ++dead) pv.push_back({pa, pb, dead});
      } else {
        pv.push_back({4, 6, 0});
      }
      std::vector<int> av{0};
      if (la && la->allowed_on[cls]) {
        av.clear();
        for (int b : bits_of(la->allowed_on[cls])) av.push_back(b + 1);
      }
      for (int r : rv)
        for (uint64_t combo : wv)
          for (int arrow : sv)
            for (int copy = 0; copy < copies; ++copy)
              for (auto [pa, pb, dead] : pv)
                for (int color : av) {
                  std::string name = head;
                  if (lr) name += "." + lr->alphabet[r];
                  if (lw && lw->allowed_on[cls]) name += "." + combo_name(combo);
                  if (ls) name += "." + ls->alphabet[arrow] + "c" + std::to_string(copy);
                  if (lp && cls == kCWhite)
                    name += ".a" + std::to_string(pa) + "b" + std::to_string(pb) +
                            (dead ? "x" : "");
                  if (la && la->allowed_on[cls]) name += color == 1 ? ".Y" : ".B";
                  std::vector<int> f(kFeatureCount, 0);
                  f[kFCClass] = cls;
                  f[kFBgTile] = cls == kCWhite ? bgv : bgn;
                  f[kFRTile] = r;
                  for (int i = 0; i < 6; ++i) f[kFWd1 + i] = (int)(combo >> i & 1);
                  f[kFSArrow] = arrow;
                  f[kFSCopy] = copy;
                  f[kFPa] = pa;
                  f[kFPb] = pb;
                  f[kFPdead] = dead;
                  f[kFAColor] = color;
                  sys.alphabet.push_back({(int)sys.alphabet.size(), std::move(name)});
                  sys.features.push_back(std::move(f));
                }
    }
  }

  for (const LayerSpec* l : {&lc, lr ? &*lr : nullptr, lw ? &*lw : nullptr,
                             ls ? &*ls : nullptr, lp ? &*lp : nullptr,
                             la ? &*la : nullptr}) {
    if (!l) continue;
    st.layer_rules[l->name] = (long long)l->rules.size();
    sys.rules.insert(sys.rules.end(), l->rules.begin(), l->rules.end());
  }
  st.tiles = (long long)sys.alphabet.size();
  st.rules = (long long)sys.rules.size();
  if (stats) *stats = st;
  return sys;
}

TilingSystem quadrant_variant(const TilingSystem& sys, int quarter_turns) {
  TilingSystem out = sys;
  for (int i = 0, k = floormod(quarter_turns, 4); i < k; ++i) out = rotated90_system(out);
  return out;
}

PeriodicConfig reference_band(const TilingSystem& sys) {
  // size-4 squares, offset 2; plane periods (4,2) and (0,4)
  static const char* kBand[4][4] = {
      {"lm.jg", "bk.h.o", "bk.h.kOkB", "bk.h.o"},
      {"rl.v.Y", "w0.dr.kO.Y", "w0.dr.A.Y", "w0.di.kB.Y"},
      {"rm.jd", "w0.dr.d1e1A.Y", "w0.di.d1e1.Y", "w0.dg.d1e1.Y"},
      {"lr.v", "w0.di.BkB.Y", "w0.dg.o.Y", "w0.dg.kO.Y"},
  };
  std::vector<int> cells;
  for (int rep = 0; rep < 3; ++rep)
    for (int y = 0; y < 4; ++y)
      for (int x = 0; x < 4; ++x) {
        int id = sys.tile_id(kBand[y][x]);
        if (id < 0)
          throw InputError(std::string("reference band needs the C,R,W,A product: no tile ") +
                           kBand[y][x]);
        cells.push_back(id);
      }
  return PeriodicConfig({4, 2}, 4, 12, std::move(cells));
}

}  // namespace slopekit
