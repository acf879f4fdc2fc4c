#include "quasitile/validate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

namespace quasitile {

namespace {

using EdgeKey = std::pair<QuasiPoint, QuasiPoint>;

EdgeKey edge_key(const QuasiPoint& a, const QuasiPoint& b) {
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

struct EdgeUse {
  std::size_t tri;
  int role;  // 0 base, 1 leg to base1, 2 leg to base2
};

// Uniform grid over the float embedding; used only to prune candidates.
class Grid {
 public:
  explicit Grid(double cell) : cell_(cell) {}

  template <class F>
  void for_cells(double x0, double y0, double x1, double y1, F&& f) const {
    const long ix0 = index(x0), ix1 = index(x1);
    const long iy0 = index(y0), iy1 = index(y1);
    for (long ix = ix0; ix <= ix1; ++ix)
      for (long iy = iy0; iy <= iy1; ++iy) f(key(ix, iy));
  }

 private:
  long index(double v) const { return static_cast<long>(std::floor(v / cell_)); }
  static std::uint64_t key(long ix, long iy) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ix)) << 32) |
           static_cast<std::uint32_t>(iy);
  }
  double cell_;
};

struct Box {
  double x0, y0, x1, y1;
};

Box bbox(std::initializer_list<Vec2> pts, double pad) {
  Box b{1e300, 1e300, -1e300, -1e300};
  for (const auto& p : pts) {
    b.x0 = std::min(b.x0, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.x1 = std::max(b.x1, p.x);
    b.y1 = std::max(b.y1, p.y);
  }
  return Box{b.x0 - pad, b.y0 - pad, b.x1 + pad, b.y1 + pad};
}

// v lies strictly inside segment (a, b).
bool strictly_between(const QuasiPoint& a, const QuasiPoint& b, const QuasiPoint& v) {
  if (v == a || v == b) return false;
  if (orient(a, b, v) != 0) return false;
  return inner(v - a, b - a).sign() > 0 && inner(v - b, a - b).sign() > 0;
}

// Some edge line of s weakly separates s from t.
bool has_separating_edge(const RobinsonTriangle& s, const RobinsonTriangle& t) {
  const std::array<QuasiPoint, 3> sv{s.apex, s.base1, s.base2};
  const std::array<QuasiPoint, 3> tv{t.apex, t.base1, t.base2};
  for (std::size_t e = 0; e < 3; ++e) {
    const QuasiPoint& p = sv[e];
    const QuasiPoint& q = sv[(e + 1) % 3];
    const int inside = orient(p, q, sv[(e + 2) % 3]);
    bool separated = true;
    for (const auto& w : tv) {
      if (orient(p, q, w) * inside > 0) {
        separated = false;
        break;
      }
    }
    if (separated) return true;
  }
  return false;
}

bool interiors_overlap(const RobinsonTriangle& s, const RobinsonTriangle& t) {
  return !has_separating_edge(s, t) && !has_separating_edge(t, s);
}

QuasiPoint phi_power(QuasiPoint p, int n) {
  for (int i = 0; i < n; ++i) p = phi_scale(p);
  return p;
}

}  // namespace

ValidationReport validate(const Patch& p) {
  ValidationReport report;
  const auto& tris = p.triangles;
  report.triangle_count = tris.size();

  // Edge incidence.
  std::map<EdgeKey, std::vector<EdgeUse>> edges;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& t = tris[i];
    edges[edge_key(t.base1, t.base2)].push_back({i, 0});
    edges[edge_key(t.apex, t.base1)].push_back({i, 1});
    edges[edge_key(t.apex, t.base2)].push_back({i, 2});
  }
  report.edge_count = edges.size();

  for (const auto& [key, uses] : edges) {
    if (uses.size() > 2) {
      report.edge_issues.push_back({key.first, key.second,
                                    "edge shared by " + std::to_string(uses.size()) + " triangles"});
      continue;
    }
    if (uses.size() != 2) continue;
    const auto& u = uses[0];
    const auto& w = uses[1];
    if ((u.role == 0) != (w.role == 0)) {
      report.edge_issues.push_back({key.first, key.second, "base edge meets leg edge"});
      continue;
    }
    if (u.role == 0) {
      if (tris[u.tri].type != tris[w.tri].type) {
        report.edge_issues.push_back({key.first, key.second, "base edge shared by different types"});
      }
      continue;
    }
    const EdgeMarking mu = leg_markings(tris[u.tri])[static_cast<std::size_t>(u.role - 1)];
    const EdgeMarking mw = leg_markings(tris[w.tri])[static_cast<std::size_t>(w.role - 1)];
    if (mu != mw) report.decoration_mismatches.push_back({mu, mw});
  }

  // Vertices and T-junctions: no vertex may lie inside another edge.
  std::set<QuasiPoint> vertex_set;
  for (const auto& t : tris) vertex_set.insert({t.apex, t.base1, t.base2});
  const std::vector<QuasiPoint> vertices(vertex_set.begin(), vertex_set.end());
  report.vertex_count = vertices.size();

  const double edge_len = std::pow(kPhi, p.scale_power);
  const double pad = 1e-6 * edge_len;
  const Grid grid(edge_len);
  std::vector<Vec2> vpos(vertices.size());
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> vertex_cells;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    vpos[i] = embed_float(vertices[i]);
    grid.for_cells(vpos[i].x, vpos[i].y, vpos[i].x, vpos[i].y,
                   [&](std::uint64_t c) { vertex_cells[c].push_back(i); });
  }
  for (const auto& [key, uses] : edges) {
    const Box b = bbox({embed_float(key.first), embed_float(key.second)}, pad);
    std::set<std::size_t> hits;
    grid.for_cells(b.x0, b.y0, b.x1, b.y1, [&](std::uint64_t c) {
      auto it = vertex_cells.find(c);
      if (it == vertex_cells.end()) return;
      for (std::size_t vi : it->second) {
        const Vec2& q = vpos[vi];
        if (q.x < b.x0 || q.x > b.x1 || q.y < b.y0 || q.y > b.y1) continue;
        if (strictly_between(key.first, key.second, vertices[vi])) hits.insert(vi);
      }
    });
    for (std::size_t vi : hits) {
      report.edge_issues.push_back(
          {key.first, key.second, "T-junction at " + vertices[vi].to_string()});
    }
  }

  // Pairwise interior disjointness.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> tri_cells;
  std::vector<Box> boxes(tris.size());
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& t = tris[i];
    boxes[i] = bbox({embed_float(t.apex), embed_float(t.base1), embed_float(t.base2)}, pad);
    grid.for_cells(boxes[i].x0, boxes[i].y0, boxes[i].x1, boxes[i].y1,
                   [&](std::uint64_t c) { tri_cells[c].push_back(i); });
  }
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (const auto& [cell, members] : tri_cells) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const std::size_t i = std::min(members[a], members[b]);
        const std::size_t j = std::max(members[a], members[b]);
        const Box& bi = boxes[i];
        const Box& bj = boxes[j];
        if (bi.x1 < bj.x0 || bj.x1 < bi.x0 || bi.y1 < bj.y0 || bj.y1 < bi.y0) continue;
        candidates.emplace_back(i, j);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& [i, j] : candidates) {
    if (interiors_overlap(tris[i], tris[j])) report.overlaps.push_back({i, j});
  }

  // Quasilattice: every leg is +-phi^scale Y*_k and triangles are well formed.
  std::array<QuasiPoint, 5> scaled;
  for (int k = 0; k < 5; ++k) scaled[static_cast<std::size_t>(k)] = phi_power(dual_star(StarIndex(k)), p.scale_power);
  for (const auto& t : tris) {
    if (!has_valid_shape(t)) {
      report.lattice_issues.push_back({t.base1, t.base2, "malformed Robinson triangle"});
      continue;
    }
    for (const QuasiPoint* b : {&t.base1, &t.base2}) {
      const QuasiPoint d = *b - t.apex;
      const bool on_star = std::any_of(scaled.begin(), scaled.end(),
                                       [&](const QuasiPoint& s) { return d == s || d == -s; });
      if (!on_star) report.lattice_issues.push_back({t.apex, *b, "leg is not a scaled star vector"});
    }
  }
  return report;
}

}  // namespace quasitile
