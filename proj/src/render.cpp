#include <cstdio>

#include "slopekit/errors.hpp"
#include "slopekit/render.hpp"

namespace slopekit {

std::string tile_color(const std::string& name) {
  if (name == "Y") return "#e8d44d";
  if (name == "B") return "#4d7be8";
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  // keep channels off the extremes so strokes and text stay readable
  int r = 70 + (int)(h % 156);
  int g = 70 + (int)((h >> 21) % 156);
  int b = 70 + (int)((h >> 42) % 156);
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

std::string render_svg(const std::vector<std::string>& names, const Pattern& window,
                       int cell_size) {
  if (cell_size <= 0) throw InputError("cell size must be positive");
  const int w = window.width(), h = window.height();
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(w * cell_size) + "\" height=\"" + std::to_string(h * cell_size) +
         "\" shape-rendering=\"crispEdges\">\n";
  for (int y = h - 1; y >= 0; --y)
    for (int x = 0; x < w; ++x) {
      auto t = window.at({x, y});
      if (!t) continue;
      if (*t < 0 || *t >= (int)names.size()) throw InputError("tile id out of range");
      out += "<rect x=\"" + std::to_string(x * cell_size) + "\" y=\"" +
             std::to_string((h - 1 - y) * cell_size) + "\" width=\"" +
             std::to_string(cell_size) + "\" height=\"" + std::to_string(cell_size) +
             "\" fill=\"" + tile_color(names[*t]) + "\"/>\n";
    }
  out += "</svg>\n";
  return out;
}

}  // namespace slopekit
