#include <climits>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "slopekit/construction.hpp"
#include "slopekit/io.hpp"
#include "slopekit/render.hpp"
#include "slopekit/slope_search.hpp"
#include "slopekit/tm_tiles.hpp"

namespace sk = slopekit;

namespace {

void emit(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty())
    std::cout << text;
  else
    sk::write_file(path, text);
}

std::string first_token(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::string tok;
    if (ls >> tok) return tok;
  }
  return "";
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
  return buf;
}

int run(int argc, char** argv) {
  CLI::App app{"slope analysis for tilings of the plane"};
  app.require_subcommand(1);

  sk::StripBudget budget;
  if (const char* env = std::getenv("SLOPEKIT_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) budget.max_nodes = v;
  }

  std::string in_path, patch_path, out_path = "-";

  auto* validate = app.add_subcommand("validate", "check a patch against a tileset");
  validate->add_option("tileset", in_path)->required();
  validate->add_option("patch", patch_path)->required();

  auto* periodic = app.add_subcommand("periodic", "decide periodicity along a vector");
  int vp = 0, vq = 0;
  periodic->add_option("tileset", in_path)->required();
  periodic->add_option("p", vp)->required();
  periodic->add_option("q", vq)->required();
  periodic->add_option("--max-nodes", budget.max_nodes, "strip node budget");

  auto* slopes = app.add_subcommand("slopes", "search slopes of periodicity");
  int slope_bound = 2, multiple_bound = 2;
  bool as_json = false;
  slopes->add_option("tileset", in_path)->required();
  slopes->add_option("--slope-bound", slope_bound)->check(CLI::PositiveNumber);
  slopes->add_option("--multiple-bound", multiple_bound)->check(CLI::PositiveNumber);
  slopes->add_option("--max-nodes", budget.max_nodes, "strip node budget");
  slopes->add_flag("--json", as_json, "machine-readable report");

  auto* compile = app.add_subcommand("compile-tm", "turn a machine into wang tiles");
  compile->add_option("tm", in_path)->required();
  compile->add_option("--out", out_path);

  auto* rect = app.add_subcommand("rect", "tile the bordered rectangle of a run");
  std::string rect_input;
  int rect_time = 4, rect_space = 2;
  rect->add_option("tm", in_path)->required();
  rect->add_option("--input", rect_input, "letters written on the bottom row");
  rect->add_option("--time", rect_time)->check(CLI::PositiveNumber);
  rect->add_option("--space", rect_space)->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "assemble the product system");
  std::string bg_name = "mono", layers = "crwspa";
  long long max_tiles = 200000;
  construct->add_option("tm", in_path)->required();
  construct->add_option("--background", bg_name)->check(CLI::IsMember({"mono", "checker"}));
  construct->add_option("--layers", layers, "subset of crwspa");
  construct->add_option("--max-tiles", max_tiles)->check(CLI::PositiveNumber);
  construct->add_option("--out", out_path);

  auto* render = app.add_subcommand("render", "draw a patch or witness as svg");
  int cell_size = 16, rw = 8, rh = 8, ox = 0;
  int oy = INT_MIN;  // default centers the window on the connector band
  std::string svg_path;
  render->add_option("input", in_path)->required();
  render->add_option("out", svg_path)->required();
  render->add_option("--cell-size", cell_size);
  render->add_option("--width", rw)->check(CLI::PositiveNumber);
  render->add_option("--height", rh)->check(CLI::PositiveNumber);
  render->add_option("--origin-x", ox);
  render->add_option("--origin-y", oy);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // every command-line problem is an input error
  }

  if (*validate) {
    sk::TilingSystem sys = sk::parse_tileset(sk::read_file(in_path));
    sk::PatchFile pf = sk::parse_patch(sk::read_file(patch_path));
    if (pf.alphabet.size() != (size_t)sys.tile_count())
      throw sk::InputError("patch alphabet does not match the tileset");
    for (size_t i = 0; i < pf.alphabet.size(); ++i)
      if (pf.alphabet[i] != sys.alphabet[i].name)
        throw sk::InputError("patch alphabet does not match the tileset");
    auto vs = sk::validate_patch(sys, pf.patch);
    if (vs.empty()) {
      std::cout << "VALID\n";
    } else {
      std::cout << "INVALID " << vs.size() << " violations\n";
      for (const auto& v : vs)
        std::cout << "violation " << (v.feature_rule ? "rule=" : "forbidden=") << v.rule
                  << " at=(" << v.anchor.x << ',' << v.anchor.y << ")\n";
    }
    return 0;
  }
  if (*periodic) {
    sk::TilingSystem sys = sk::parse_tileset(sk::read_file(in_path));
    auto dec = sk::decide_periodic(sys, {vp, vq}, budget);
    switch (dec.verdict) {
      case sk::PeriodicVerdict::kNone: std::cout << "NONE\n"; break;
      case sk::PeriodicVerdict::kBiperiodicOnly: std::cout << "BIPERIODIC-ONLY\n"; break;
      case sk::PeriodicVerdict::kDirectionOnly: std::cout << "DIRECTION-ONLY\n"; break;
    }
    if (dec.witness) {
      std::vector<std::string> names;
      for (const auto& t : sys.alphabet) names.push_back(t.name);
      std::cout << sk::write_witness(names, *dec.witness);
    }
    return 0;
  }
  if (*slopes) {
    sk::TilingSystem sys = sk::parse_tileset(sk::read_file(in_path));
    sk::SlopeReport rep = sk::enumerate_slopes(sys, slope_bound, multiple_bound, budget);
    if (!as_json) {
      std::cout << sk::report_lines(rep);
    } else {
      nlohmann::ordered_json j;
      j["slope_bound"] = rep.slope_bound;
      j["multiple_bound"] = rep.max_multiple;
      j["found"] = nlohmann::ordered_json::array();
      for (const auto& h : rep.found)
        j["found"].push_back({{"slope", h.slope.str()},
                              {"vector", {h.vector.p, h.vector.q}}});
      j["exhausted"] = nlohmann::ordered_json::array();
      for (const auto& s : rep.exhausted) j["exhausted"].push_back(s.str());
      j["blocked"] = nlohmann::ordered_json::array();
      for (const auto& [s, what] : rep.blocked)
        j["blocked"].push_back({{"slope", s.str()}, {"cap", what}});
      std::cout << j.dump(2) << '\n';
    }
    return 0;
  }
  if (*compile) {
    sk::TuringMachine m = sk::parse_tm(sk::read_file(in_path));
    sk::TmTileSet ts = sk::compile_tm(m);
    std::string text;
    for (size_t i = 0; i < ts.labels.size(); ++i)
      text += "# label " + std::to_string(i) + " = " + ts.labels[i] + "\n";
    text += sk::write_wang_tileset(ts.as_wang());
    emit(out_path, text);
    return 0;
  }
  if (*rect) {
    sk::TuringMachine m = sk::parse_tm(sk::read_file(in_path));
    sk::TmTileSet ts = sk::compile_tm(m);
    sk::RectangleInstance inst;
    inst.width = rect_space + 2;
    inst.height = rect_time;
    for (char c : rect_input) {
      int a = m.letter_id(std::string(1, c));
      if (a < 0) throw sk::InputError(std::string("unknown letter '") + c + "'");
      inst.input.push_back(a);
    }
    auto cells = sk::rectangle_tileable(ts, inst);
    if (!cells) {
      std::cout << "NOT-TILEABLE\n";
      return 0;
    }
    std::cout << "TILEABLE\n";
    std::vector<std::string> names;
    for (const auto& t : ts.tiles) names.push_back(t.name);
    sk::Patch patch{inst.width, inst.height, *cells};
    std::cout << sk::write_patch(names, patch);
    return 0;
  }
  if (*construct) {
    sk::TuringMachine m = sk::parse_tm(sk::read_file(in_path));
    sk::Background bg =
        bg_name == "mono" ? sk::placeholder_background() : sk::checkerboard_background();
    sk::AssembleOptions opt;
    opt.max_tiles = max_tiles;
    opt.layers = {false, false, false, false, false};
    for (char c : layers) {
      switch (c) {
        case 'c': break;  // always present
        case 'r': opt.layers.r = true; break;
        case 'w': opt.layers.w = true; break;
        case 's': opt.layers.s = true; break;
        case 'p': opt.layers.p = true; break;
        case 'a': opt.layers.a = true; break;
        default: throw sk::InputError(std::string("unknown layer '") + c + "'");
      }
    }
    sk::AssembleStats stats;
    sk::TilingSystem sys = sk::assemble_tau(m, bg, opt, &stats);
    std::string text = "# assembled product system\n";
    text += "# machine " + hex64(fnv1a(sk::write_tm(m))) + "\n";
    text += "# background " + bg.name + "\n";
    text += "# layers " + layers + "\n";
    text += "# tiles " + std::to_string(stats.tiles) + " rules " +
            std::to_string(stats.rules) + "\n";
    for (const auto& [cls, n] : stats.class_tiles)
      text += "# class " + cls + " " + std::to_string(n) + "\n";
    for (const auto& [layer, n] : stats.layer_rules)
      text += "# layer " + layer + " rules " + std::to_string(n) + "\n";
    text += sk::write_tileset(sys);
    emit(out_path, text);
    return 0;
  }
  if (*render) {
    std::string text = sk::read_file(in_path);
    std::string kind = first_token(text);
    sk::Pattern window;
    std::vector<std::string> names;
    if (kind == "slopekit-patch") {
      sk::PatchFile pf = sk::parse_patch(text);
      names = pf.alphabet;
      std::vector<std::vector<int>> rows;
      for (int y = 0; y < pf.patch.height; ++y) {
        rows.emplace_back();
        for (int x = 0; x < pf.patch.width; ++x) rows.back().push_back(pf.patch.at(x, y));
      }
      window = sk::Pattern::from_grid(rows);
    } else if (kind == "slopekit-witness") {
      sk::WitnessFile wf = sk::parse_witness(text);
      names = wf.alphabet;
      sk::TilingSystem sys = sk::TilingSystem::make(names, {});
      if (oy == INT_MIN) oy = -rh / 2;
      window = sk::realize_witness_patch(sys, wf.witness, rw, rh, {ox, oy});
    } else {
      throw sk::InputError("render wants a patch or witness file");
    }
    emit(svg_path, sk::render_svg(names, window, cell_size));
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sk::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const sk::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const sk::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
