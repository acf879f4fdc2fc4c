#include "quasitile/svg.hpp"

#include "quasitile/delzant.hpp"
#include "quasitile/moment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace quasitile {

namespace {

std::string fixed(double v) {
  if (std::abs(v) < 5e-10) v = 0.0;  // no "-0.000000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

class Canvas {
 public:
  Canvas(double scale, double min_x, double max_y) : scale_(scale), min_x_(min_x), max_y_(max_y) {}
  // SVG y grows downward.
  std::string x(double v) const { return fixed((v - min_x_) * scale_); }
  std::string y(double v) const { return fixed((max_y_ - v) * scale_); }
  std::string point(Vec2 p) const { return x(p.x) + "," + y(p.y); }

 private:
  double scale_, min_x_, max_y_;
};

Vec2 lerp(Vec2 a, Vec2 b, double t) { return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t}; }

}  // namespace

std::string render_svg(const Patch& p, const SvgOptions& options) {
  if (options.overlay_tile && *options.overlay_tile >= p.tiles.size()) {
    throw std::out_of_range("overlay tile " + std::to_string(*options.overlay_tile) + " does not exist (patch has " +
                            std::to_string(p.tiles.size()) + " tiles)");
  }
  const MergeResult merged{p.tiles, p.tiles.empty() ? p.triangles : merge_rhombi(p.triangles).unpaired};

  double min_x = std::numeric_limits<double>::max(), min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
  const auto extend = [&](const QuasiPoint& q) {
    const Vec2 v = embed_float(q);
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  };
  for (const auto& t : p.triangles) {
    extend(t.apex);
    extend(t.base1);
    extend(t.base2);
  }
  if (p.triangles.empty()) min_x = min_y = max_x = max_y = 0.0;
  const double margin = 0.5 * std::pow(kPhi, p.scale_power);
  min_x -= margin;
  min_y -= margin;
  max_x += margin;
  max_y += margin;
  const double s = options.pixels_per_unit;
  const Canvas c(s, min_x, max_y);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed((max_x - min_x) * s) + "\" height=\"" +
         fixed((max_y - min_y) * s) + "\" viewBox=\"0 0 " + fixed((max_x - min_x) * s) + " " + fixed((max_y - min_y) * s) +
         "\">\n";
  out += "<style>.thick{fill:#e8a33d}.thin{fill:#3d7be8}.half{fill:#cccccc}"
         "polygon{stroke:#222222;stroke-width:0.8;stroke-linejoin:round}"
         ".arrow{fill:none;stroke:#aa0000;stroke-width:1}.moment{fill:#000000}"
         ".outline{fill:none;stroke:#00aa00;stroke-width:2}</style>\n";

  out += "<g id=\"tiles\">\n";
  for (std::size_t i = 0; i < merged.tiles.size(); ++i) {
    const auto& t = merged.tiles[i];
    std::string pts;
    for (const auto& v : t.vertices()) pts += (pts.empty() ? "" : " ") + c.point(embed_float(v));
    out += "<polygon id=\"tile-" + std::to_string(i) + "\" class=\"tile " + std::string(to_string(t.kind)) +
           "\" points=\"" + pts + "\"/>\n";
  }
  for (const auto& t : merged.unpaired) {
    out += "<polygon class=\"half " + std::string(t.type == TriangleType::Obtuse ? "thick" : "thin") + "\" points=\"" +
           c.point(embed_float(t.apex)) + " " + c.point(embed_float(t.base1)) + " " + c.point(embed_float(t.base2)) + "\"/>\n";
  }
  out += "</g>\n";

  if (options.decorations) {
    out += "<g id=\"decorations\">\n";
    const double size = 0.08 * std::pow(kPhi, p.scale_power);
    for (const auto& m : p.decorations) {
      Vec2 a = embed_float(m.from);
      Vec2 b = embed_float(m.to);
      if (m.dir < 0) std::swap(a, b);
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      const Vec2 d{(b.x - a.x) / len, (b.y - a.y) / len};
      const Vec2 n{-d.y, d.x};
      for (int k = 0; k < m.arrows; ++k) {
        const Vec2 tip = lerp(a, b, 0.5 + 0.06 * k);
        const Vec2 back{tip.x - d.x * size, tip.y - d.y * size};
        const Vec2 l{back.x + n.x * size * 0.6, back.y + n.y * size * 0.6};
        const Vec2 r{back.x - n.x * size * 0.6, back.y - n.y * size * 0.6};
        out += "<polyline class=\"arrow\" points=\"" + c.point(l) + " " + c.point(tip) + " " + c.point(r) + "\"/>\n";
      }
    }
    out += "</g>\n";
  }

  if (options.overlay_tile) {
    const RhombusTile& t = p.tiles[*options.overlay_tile];
    const QuasifoldDescriptor desc = raw_descriptor(t);
    const MomentImage img = moment_image(desc, options.grid);
    out += "<g id=\"moment\">\n";
    std::string pts;
    for (const auto& v : polytope_vertices(desc.spec)) pts += (pts.empty() ? "" : " ") + c.point(embed_float(v));
    out += "<polygon class=\"outline\" points=\"" + pts + "\"/>\n";
    for (const auto& q : img.points) {
      out += "<circle class=\"moment\" cx=\"" + c.x(q.x) + "\" cy=\"" + c.y(q.y) + "\" r=\"1.5\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace quasitile
