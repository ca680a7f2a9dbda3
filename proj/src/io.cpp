#include "slopekit/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "slopekit/errors.hpp"

namespace slopekit {

namespace {

// Lines keep their 1-based source index so every error can point home.
struct Line {
  int no;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    Line line{no, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

void expect_header(const std::vector<Line>& lines, const std::string& kind) {
  if (lines.empty()) throw ParseError("empty file, expected slopekit-" + kind + " v1 header");
  const auto& h = lines[0];
  if (h.tokens.size() != 2 || h.tokens[0] != "slopekit-" + kind || h.tokens[1] != "v1")
    throw ParseError("expected header: slopekit-" + kind + " v1", h.no);
}

int parse_int(const std::string& tok, int line) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected integer, got '" + tok + "'", line);
  }
  if (used != tok.size()) throw ParseError("expected integer, got '" + tok + "'", line);
  return v;
}

// "(dx,dy)=NAME" items, originally ';'-separated; tokenization may have split
// them, so rejoin and rescan.
std::vector<std::pair<Cell, std::string>> parse_forbid_items(const Line& line) {
  std::string body;
  for (size_t i = 1; i < line.tokens.size(); ++i) body += line.tokens[i];
  std::vector<std::pair<Cell, std::string>> items;
  size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad forbid item: " + why, line.no);
  };
  while (pos < body.size()) {
    if (body[pos] != '(') throw fail("expected '('");
    size_t comma = body.find(',', pos);
    size_t close = body.find(')', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw fail("expected '(dx,dy)'");
    Cell c{parse_int(body.substr(pos + 1, comma - pos - 1), line.no),
           parse_int(body.substr(comma + 1, close - comma - 1), line.no)};
    if (close + 1 >= body.size() || body[close + 1] != '=') throw fail("expected '='");
    size_t semi = body.find(';', close);
    std::string name = body.substr(close + 2, semi == std::string::npos
                                                  ? std::string::npos
                                                  : semi - close - 2);
    if (name.empty()) throw fail("missing tile name");
    items.push_back({c, std::move(name)});
    pos = semi == std::string::npos ? body.size() : semi + 1;
  }
  if (items.empty()) throw fail("no cells");
  return items;
}

std::string cell_key(Cell c) {
  return std::to_string(c.x) + "," + std::to_string(c.y);
}

// "(dx,dy):feat=HEXMASK,feat=HEXMASK" items, ';'-separated like forbid items.
std::vector<RuleCell> parse_rule_items(const Line& line,
                                       const std::map<std::string, int>& feats) {
  std::string body;
  for (size_t i = 1; i < line.tokens.size(); ++i) body += line.tokens[i];
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad rule item: " + why, line.no);
  };
  std::vector<RuleCell> cells;
  size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] != '(') throw fail("expected '('");
    size_t comma = body.find(',', pos);
    size_t close = body.find(')', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw fail("expected '(dx,dy)'");
    RuleCell rc;
    rc.at = {parse_int(body.substr(pos + 1, comma - pos - 1), line.no),
             parse_int(body.substr(comma + 1, close - comma - 1), line.no)};
    if (close + 1 >= body.size() || body[close + 1] != ':') throw fail("expected ':'");
    size_t semi = body.find(';', close);
    size_t end = semi == std::string::npos ? body.size() : semi;
    size_t p = close + 2;
    while (p < end) {
      size_t eq = body.find('=', p);
      if (eq == std::string::npos || eq >= end) throw fail("expected 'feature=mask'");
      std::string fname = body.substr(p, eq - p);
      auto it = feats.find(fname);
      if (it == feats.end()) throw fail("unknown feature '" + fname + "'");
      size_t stop = body.find(',', eq);
      if (stop == std::string::npos || stop > end) stop = end;
      std::string hex = body.substr(eq + 1, stop - eq - 1);
      uint64_t mask = 0;
      try {
        size_t used = 0;
        mask = std::stoull(hex, &used, 16);
        if (used != hex.size() || hex.empty()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw fail("bad mask '" + hex + "'");
      }
      rc.need.push_back({it->second, mask});
      p = stop + 1;
    }
    if (rc.need.empty()) throw fail("cell lists no features");
    cells.push_back(std::move(rc));
    pos = semi == std::string::npos ? body.size() : semi + 1;
  }
  if (cells.empty()) throw fail("no cells");
  return cells;
}

}  // namespace

TilingSystem parse_tileset(const std::string& text) {
  auto lines = tokenize(text);
  expect_header(lines, "tileset");
  std::vector<std::string> names;
  std::map<std::string, int> by_name;
  std::vector<Pattern> forbidden;
  std::vector<WangTile> wang;
  std::vector<std::string> feat_names;
  std::map<std::string, int> feat_by_name;
  std::map<int, std::vector<int>> tile_feats;
  std::vector<CompiledRule> rules;
  bool saw_plain = false, saw_wang = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const std::string& kw = l.tokens[0];
    if (kw == "alphabet" || kw == "forbid" || kw == "features" || kw == "tile" ||
        kw == "rule") {
      saw_plain = true;
      if (saw_wang) throw ParseError("wang and alphabet/forbid sections cannot mix", l.no);
    } else if (kw == "wang") {
      saw_wang = true;
      if (saw_plain) throw ParseError("wang and alphabet/forbid sections cannot mix", l.no);
    } else {
      throw ParseError("unknown directive '" + kw + "'", l.no);
    }
    if (kw == "features") {
      if (!feat_names.empty()) throw ParseError("second features line", l.no);
      if (l.tokens.size() < 2) throw ParseError("features line lists no names", l.no);
      for (size_t t = 1; t < l.tokens.size(); ++t) {
        if (feat_by_name.count(l.tokens[t]))
          throw ParseError("duplicate feature name '" + l.tokens[t] + "'", l.no);
        feat_by_name[l.tokens[t]] = (int)feat_names.size();
        feat_names.push_back(l.tokens[t]);
      }
    } else if (kw == "tile") {
      if (feat_names.empty()) throw ParseError("tile line before features", l.no);
      if (l.tokens.size() != 2 + feat_names.size())
        throw ParseError("tile line needs " + std::to_string(feat_names.size()) + " values",
                         l.no);
      auto it = by_name.find(l.tokens[1]);
      if (it == by_name.end())
        throw ParseError("unknown tile name '" + l.tokens[1] + "'", l.no);
      if (tile_feats.count(it->second))
        throw ParseError("second tile line for '" + l.tokens[1] + "'", l.no);
      std::vector<int> vals;
      for (size_t t = 2; t < l.tokens.size(); ++t) {
        int v = parse_int(l.tokens[t], l.no);
        if (v < 0 || v >= 64) throw ParseError("feature values must stay below 64", l.no);
        vals.push_back(v);
      }
      tile_feats[it->second] = std::move(vals);
    } else if (kw == "rule") {
      if (feat_names.empty()) throw ParseError("rule line before features", l.no);
      rules.push_back(CompiledRule::of(parse_rule_items(l, feat_by_name)));
    } else if (kw == "alphabet") {
      if (l.tokens.size() < 2) throw ParseError("alphabet line lists no tiles", l.no);
      for (size_t t = 1; t < l.tokens.size(); ++t) {
        if (by_name.count(l.tokens[t]))
          throw ParseError("duplicate tile name '" + l.tokens[t] + "'", l.no);
        by_name[l.tokens[t]] = (int)names.size();
        names.push_back(l.tokens[t]);
      }
    } else if (kw == "forbid") {
      std::map<std::string, int> seen;
      std::vector<std::pair<Cell, int>> cells;
      for (auto& [c, name] : parse_forbid_items(l)) {
        auto it = by_name.find(name);
        if (it == by_name.end()) throw ParseError("unknown tile name '" + name + "'", l.no);
        if (!seen.emplace(cell_key(c), it->second).second)
          throw ParseError("cell (" + cell_key(c) + ") repeated in one pattern", l.no);
        cells.push_back({c, it->second});
      }
      forbidden.push_back(Pattern::of(std::move(cells)));
    } else {
      if (l.tokens.size() != 6) throw ParseError("expected: wang NAME N E S W", l.no);
      if (by_name.count(l.tokens[1]))
        throw ParseError("duplicate tile name '" + l.tokens[1] + "'", l.no);
      by_name[l.tokens[1]] = (int)wang.size();
      WangTile t;
      t.name = l.tokens[1];
      for (int s = 0; s < 4; ++s) t.edge[s] = parse_int(l.tokens[2 + s], l.no);
      wang.push_back(std::move(t));
    }
  }
  if (saw_wang) return wang_to_patterns(WangSystem{std::move(wang)});
  if (names.empty()) throw ParseError("tileset has no alphabet");
  int n = (int)names.size();
  TilingSystem sys = TilingSystem::make(std::move(names), std::move(forbidden));
  if (!feat_names.empty()) {
    sys.schema.names = std::move(feat_names);
    sys.features.assign(n, std::vector<int>(sys.schema.names.size(), 0));
    for (auto& [t, vals] : tile_feats) sys.features[t] = std::move(vals);
    sys.rules = std::move(rules);
  }
  return sys;
}

std::string write_tileset(const TilingSystem& sys) {
  if (!sys.rules.empty() && sys.schema.names.empty())
    throw InputError("feature rules without a schema have no file form");
  std::ostringstream out;
  out << "slopekit-tileset v1\n";
  out << "alphabet";
  for (const auto& t : sys.alphabet) out << ' ' << t.name;
  out << '\n';
  for (const auto& f : sys.forbidden) {
    out << "forbid ";
    for (size_t i = 0; i < f.cells.size(); ++i) {
      const auto& [c, t] = f.cells[i];
      if (i) out << "; ";
      out << '(' << c.x << ',' << c.y << ")=" << sys.alphabet[t].name;
    }
    out << '\n';
  }
  if (!sys.rules.empty()) {
    out << "features";
    for (const auto& n : sys.schema.names) out << ' ' << n;
    out << '\n';
    for (const auto& t : sys.alphabet) {
      out << "tile " << t.name;
      for (int v : sys.features[t.id]) out << ' ' << v;
      out << '\n';
    }
    for (const auto& r : sys.rules) {
      out << "rule ";
      for (size_t i = 0; i < r.cells.size(); ++i) {
        const auto& rc = r.cells[i];
        if (i) out << " ; ";
        out << '(' << rc.at.x << ',' << rc.at.y << "):";
        for (size_t j = 0; j < rc.need.size(); ++j) {
          if (j) out << ',';
          out << sys.schema.names[rc.need[j].feature] << '=' << std::hex
              << rc.need[j].mask << std::dec;
        }
      }
      if (!r.note.empty()) out << "  # " << r.note;
      out << '\n';
    }
  }
  return out.str();
}

std::string write_wang_tileset(const WangSystem& w) {
  std::ostringstream out;
  out << "slopekit-tileset v1\n";
  for (const auto& t : w.tiles) {
    out << "wang " << t.name << ' ' << t.edge[kNorth] << ' ' << t.edge[kEast] << ' '
        << t.edge[kSouth] << ' ' << t.edge[kWest] << '\n';
  }
  return out.str();
}

TuringMachine parse_tm(const std::string& text) {
  auto lines = tokenize(text);
  expect_header(lines, "tm");
  TuringMachine m;
  m.initial = -1;
  m.blank = -1;
  std::map<std::string, int> states, letters;
  auto state_of = [&](const std::string& s, int line) {
    auto it = states.find(s);
    if (it == states.end()) throw ParseError("unknown state '" + s + "'", line);
    return it->second;
  };
  auto letter_of = [&](const std::string& s, int line) {
    auto it = letters.find(s);
    if (it == letters.end()) throw ParseError("unknown letter '" + s + "'", line);
    return it->second;
  };
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const std::string& kw = l.tokens[0];
    if (kw == "state") {
      if (l.tokens.size() < 2) throw ParseError("state line needs a name", l.no);
      if (states.count(l.tokens[1]))
        throw ParseError("duplicate state '" + l.tokens[1] + "'", l.no);
      int id = (int)m.states.size();
      states[l.tokens[1]] = id;
      m.states.push_back(l.tokens[1]);
      m.halting.push_back(false);
      for (size_t t = 2; t < l.tokens.size(); ++t) {
        if (l.tokens[t] == "initial") {
          if (m.initial >= 0) throw ParseError("second initial state", l.no);
          m.initial = id;
        } else if (l.tokens[t] == "halting") {
          m.halting[id] = true;
        } else {
          throw ParseError("unknown state marker '" + l.tokens[t] + "'", l.no);
        }
      }
    } else if (kw == "letter") {
      if (l.tokens.size() < 2) throw ParseError("letter line needs a name", l.no);
      if (l.tokens[1].size() != 1)
        throw ParseError("letter names are single characters", l.no);
      if (letters.count(l.tokens[1]))
        throw ParseError("duplicate letter '" + l.tokens[1] + "'", l.no);
      int id = (int)m.letters.size();
      letters[l.tokens[1]] = id;
      m.letters.push_back(l.tokens[1]);
      if (l.tokens.size() > 2) {
        if (l.tokens.size() > 3 || l.tokens[2] != "blank")
          throw ParseError("unknown letter marker", l.no);
        if (m.blank >= 0) throw ParseError("second blank letter", l.no);
        m.blank = id;
      }
    } else if (kw == "delta") {
      if (l.tokens.size() != 7 || l.tokens[3] != "->")
        throw ParseError("expected: delta FROM LETTER -> TO LETTER MOVE", l.no);
      int from = state_of(l.tokens[1], l.no);
      int in = letter_of(l.tokens[2], l.no);
      int to = state_of(l.tokens[4], l.no);
      int out = letter_of(l.tokens[5], l.no);
      int move;
      if (l.tokens[6] == "L") move = kLeft;
      else if (l.tokens[6] == "S") move = kStay;
      else if (l.tokens[6] == "R") move = kRight;
      else throw ParseError("move must be L, S or R", l.no);
      if (m.halting[from])
        throw ParseError("transition leaves halting state '" + l.tokens[1] + "'", l.no);
      if (m.delta.size() < m.states.size()) m.delta.resize(m.states.size());
      auto& row = m.delta[from];
      if (row.size() < m.letters.size()) row.resize(m.letters.size());
      if (row[in]) throw ParseError("duplicate transition", l.no);
      row[in] = TuringMachine::Step{to, out, move};
    } else {
      throw ParseError("unknown directive '" + kw + "'", l.no);
    }
  }
  if (m.initial < 0) throw ParseError("no initial state");
  if (m.blank < 0) throw ParseError("no blank letter");
  m.delta.resize(m.states.size());
  for (auto& row : m.delta) row.resize(m.letters.size());
  m.check();
  return m;
}

std::string write_tm(const TuringMachine& m) {
  std::ostringstream out;
  out << "slopekit-tm v1\n";
  for (size_t s = 0; s < m.states.size(); ++s) {
    out << "state " << m.states[s];
    if ((int)s == m.initial) out << " initial";
    if (m.halting[s]) out << " halting";
    out << '\n';
  }
  for (size_t a = 0; a < m.letters.size(); ++a) {
    out << "letter " << m.letters[a];
    if ((int)a == m.blank) out << " blank";
    out << '\n';
  }
  for (size_t s = 0; s < m.delta.size(); ++s)
    for (size_t a = 0; a < m.delta[s].size(); ++a) {
      if (!m.delta[s][a]) continue;
      const auto& st = *m.delta[s][a];
      out << "delta " << m.states[s] << ' ' << m.letters[a] << " -> " << m.states[st.state]
          << ' ' << m.letters[st.letter] << ' '
          << (st.move == kLeft ? 'L' : st.move == kStay ? 'S' : 'R') << '\n';
    }
  return out.str();
}

namespace {

std::vector<int> parse_index_list(const Line& l, int max, size_t from = 1) {
  std::vector<int> out;
  for (size_t i = from; i < l.tokens.size(); ++i) {
    int v = parse_int(l.tokens[i], l.no);
    if (v < 0 || v >= max) throw ParseError("node index " + l.tokens[i] + " out of range", l.no);
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty index list", l.no);
  return out;
}

}  // namespace

WitnessFile parse_witness(const std::string& text) {
  auto lines = tokenize(text);
  expect_header(lines, "witness");
  WitnessFile f;
  PeriodicWitness& w = f.witness;
  std::map<std::string, int> by_name;
  bool saw_vector = false, saw_kind = false;
  int expect_blocks = -1;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const std::string& kw = l.tokens[0];
    auto one_int = [&]() {
      if (l.tokens.size() != 2) throw ParseError("expected: " + kw + " N", l.no);
      return parse_int(l.tokens[1], l.no);
    };
    if (kw == "vector") {
      if (l.tokens.size() != 3) throw ParseError("expected: vector p q", l.no);
      w.vector = {parse_int(l.tokens[1], l.no), parse_int(l.tokens[2], l.no)};
      saw_vector = true;
    } else if (kw == "kind") {
      if (l.tokens.size() != 2) throw ParseError("expected: kind NAME", l.no);
      if (l.tokens[1] == "biperiodic") w.kind = PeriodicKind::kBiperiodicPossible;
      else if (l.tokens[1] == "direction-only") w.kind = PeriodicKind::kDirectionOnly;
      else throw ParseError("kind must be biperiodic or direction-only", l.no);
      saw_kind = true;
    } else if (kw == "k") {
      w.k = one_int();
    } else if (kw == "band-height") {
      w.band_height = one_int();
    } else if (kw == "block-width") {
      w.block_width = one_int();
    } else if (kw == "transform") {
      w.transform = one_int();
      if (w.transform & ~(kTransformTransposed | kTransformReflected))
        throw ParseError("unknown transform bits", l.no);
    } else if (kw == "alphabet") {
      if (l.tokens.size() < 2) throw ParseError("alphabet line lists no tiles", l.no);
      for (size_t t = 1; t < l.tokens.size(); ++t) {
        if (by_name.count(l.tokens[t]))
          throw ParseError("duplicate tile name '" + l.tokens[t] + "'", l.no);
        by_name[l.tokens[t]] = (int)f.alphabet.size();
        f.alphabet.push_back(l.tokens[t]);
      }
    } else if (kw == "block") {
      if (w.block_width < 1 || w.band_height < 1)
        throw ParseError("block before block-width/band-height", l.no);
      if (l.tokens.size() < 2) throw ParseError("expected: block I NAME...", l.no);
      int idx = parse_int(l.tokens[1], l.no);
      if (idx != (int)w.blocks.size()) throw ParseError("blocks must appear in order", l.no);
      size_t want = (size_t)w.block_width * w.band_height;
      if (l.tokens.size() != 2 + want)
        throw ParseError("block needs " + std::to_string(want) + " tiles", l.no);
      std::vector<int> cells;
      for (size_t t = 2; t < l.tokens.size(); ++t) {
        auto it = by_name.find(l.tokens[t]);
        if (it == by_name.end())
          throw ParseError("unknown tile name '" + l.tokens[t] + "'", l.no);
        cells.push_back(it->second);
      }
      w.blocks.push_back(std::move(cells));
      expect_blocks = (int)w.blocks.size();
    } else if (kw == "cycle-a") {
      w.cycle_a = parse_index_list(l, expect_blocks);
    } else if (kw == "connector") {
      w.connector = parse_index_list(l, expect_blocks);
    } else if (kw == "cycle-b") {
      w.cycle_b = parse_index_list(l, expect_blocks);
    } else {
      throw ParseError("unknown directive '" + kw + "'", l.no);
    }
  }
  if (!saw_vector) throw ParseError("witness lacks a vector");
  if (!saw_kind) throw ParseError("witness lacks a kind");
  if (w.blocks.empty()) throw ParseError("witness lacks blocks");
  if (w.cycle_a.empty() || w.connector.empty() || w.cycle_b.empty())
    throw ParseError("witness lacks a walk");
  return f;
}

std::string write_witness(const std::vector<std::string>& alphabet, const PeriodicWitness& w) {
  std::ostringstream out;
  out << "slopekit-witness v1\n";
  out << "vector " << w.vector.p << ' ' << w.vector.q << '\n';
  out << "kind " << (w.kind == PeriodicKind::kDirectionOnly ? "direction-only" : "biperiodic")
      << '\n';
  out << "k " << w.k << '\n';
  out << "band-height " << w.band_height << '\n';
  out << "block-width " << w.block_width << '\n';
  out << "transform " << w.transform << '\n';
  out << "alphabet";
  for (const auto& n : alphabet) out << ' ' << n;
  out << '\n';
  for (size_t b = 0; b < w.blocks.size(); ++b) {
    out << "block " << b;
    for (int t : w.blocks[b]) out << ' ' << alphabet.at(t);
    out << '\n';
  }
  auto list = [&](const char* kw, const std::vector<int>& xs) {
    out << kw;
    for (int x : xs) out << ' ' << x;
    out << '\n';
  };
  list("cycle-a", w.cycle_a);
  list("connector", w.connector);
  list("cycle-b", w.cycle_b);
  return out.str();
}

PatchFile parse_patch(const std::string& text) {
  auto lines = tokenize(text);
  expect_header(lines, "patch");
  PatchFile f;
  std::map<std::string, int> by_name;
  int width = -1, height = -1;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const std::string& kw = l.tokens[0];
    if (kw == "width" || kw == "height") {
      if (l.tokens.size() != 2) throw ParseError("expected: " + kw + " N", l.no);
      int v = parse_int(l.tokens[1], l.no);
      if (v < 1) throw ParseError(kw + " must be positive", l.no);
      (kw == "width" ? width : height) = v;
    } else if (kw == "alphabet") {
      if (l.tokens.size() < 2) throw ParseError("alphabet line lists no tiles", l.no);
      for (size_t t = 1; t < l.tokens.size(); ++t) {
        if (by_name.count(l.tokens[t]))
          throw ParseError("duplicate tile name '" + l.tokens[t] + "'", l.no);
        by_name[l.tokens[t]] = (int)f.alphabet.size();
        f.alphabet.push_back(l.tokens[t]);
      }
    } else if (kw == "row") {
      if (width < 1) throw ParseError("row before width", l.no);
      if ((int)l.tokens.size() != 1 + width)
        throw ParseError("row needs " + std::to_string(width) + " tiles", l.no);
      for (size_t t = 1; t < l.tokens.size(); ++t) {
        auto it = by_name.find(l.tokens[t]);
        if (it == by_name.end())
          throw ParseError("unknown tile name '" + l.tokens[t] + "'", l.no);
        f.patch.cells.push_back(it->second);
      }
    } else {
      throw ParseError("unknown directive '" + kw + "'", l.no);
    }
  }
  if (width < 1 || height < 1) throw ParseError("patch lacks width/height");
  f.patch.width = width;
  f.patch.height = height;
  if ((int)f.patch.cells.size() != width * height)
    throw ParseError("expected " + std::to_string(height) + " rows");
  return f;
}

std::string write_patch(const std::vector<std::string>& alphabet, const Patch& patch) {
  std::ostringstream out;
  out << "slopekit-patch v1\n";
  out << "width " << patch.width << '\n';
  out << "height " << patch.height << '\n';
  out << "alphabet";
  for (const auto& n : alphabet) out << ' ' << n;
  out << '\n';
  // rows from the bottom up, matching Patch's row-major order
  for (int y = 0; y < patch.height; ++y) {
    out << "row";
    for (int x = 0; x < patch.width; ++x) out << ' ' << alphabet.at(patch.at(x, y));
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out.flush()) throw InputError("cannot write " + path);
}

}  // namespace slopekit
