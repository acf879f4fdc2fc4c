#include "quasitile/tiling.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace quasitile {

std::string_view to_string(TriangleType t) { return t == TriangleType::Acute ? "acute" : "obtuse"; }
std::string_view to_string(Chirality c) { return c == Chirality::Left ? "left" : "right"; }
std::string_view to_string(TileKind k) { return k == TileKind::Thick ? "thick" : "thin"; }

std::array<StarIndex, 2> RhombusTile::spanning() const {
  return {k, k + (kind == TileKind::Thick ? 1 : 2)};
}

std::array<QuasiPoint, 4> RhombusTile::vertices() const {
  const auto [a, b] = spanning();
  const QuasiPoint u = dual_star(a);
  const QuasiPoint v = dual_star(b);
  return {anchor, anchor + u, anchor + u + v, anchor + v};
}

namespace {

QuasiPoint phi_power(QuasiPoint p, int n) {
  for (int i = 0; i < n; ++i) p = phi_scale(p);
  return p;
}

// phi^m = F(m-1) + F(m) phi.
GoldenRat phi_pow(int m) {
  Integer f_prev = 1, f = 0;  // F(-1) = 1, F(0) = 0
  for (int i = 0; i < m; ++i) {
    Integer next = f + f_prev;
    f_prev = f;
    f = next;
  }
  return GoldenRat(Rational(f_prev), Rational(f));
}

RobinsonTriangle make_triangle(TriangleType type, QuasiPoint apex, QuasiPoint b1, QuasiPoint b2) {
  const Chirality c = chirality_of(apex, b1, b2);
  return RobinsonTriangle{type, c, std::move(apex), std::move(b1), std::move(b2)};
}

std::pair<QuasiPoint, QuasiPoint> edge_key(const QuasiPoint& a, const QuasiPoint& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

Chirality chirality_of(const QuasiPoint& apex, const QuasiPoint& base1, const QuasiPoint& base2) {
  const int s = orient(apex, base1, base2);
  if (s == 0) throw TilingError("degenerate Robinson triangle (collinear vertices)");
  return s > 0 ? Chirality::Left : Chirality::Right;
}

RobinsonTriangle seed(TriangleType type, Chirality chirality, int n, const QuasiPoint& anchor) {
  if (n < 0) throw std::invalid_argument("seed scale power must be non-negative");
  // Unit legs symmetric about the horizontal axis through the apex, so the
  // base is parallel to Y*_0:
  //   acute:  legs at -18 and +18 degrees (-Y*_1 and Y*_4), base = Y*_0 / phi
  //   obtuse: legs at -54 and +54 degrees (Y*_3 and -Y*_2), base = phi Y*_0
  QuasiPoint b1, b2;
  if (type == TriangleType::Acute) {
    b1 = -dual_star(StarIndex(1));
    b2 = dual_star(StarIndex(4));
  } else {
    b1 = dual_star(StarIndex(3));
    b2 = -dual_star(StarIndex(2));
  }
  if (chirality == Chirality::Right) std::swap(b1, b2);
  b1 = anchor + phi_power(b1, n);
  b2 = anchor + phi_power(b2, n);
  return make_triangle(type, anchor, std::move(b1), std::move(b2));
}

std::optional<int> leg_scale(const RobinsonTriangle& t) {
  if (!has_valid_shape(t)) return std::nullopt;
  const GoldenRat leg_sq = inner(t.base1 - t.apex, t.base1 - t.apex);
  // |leg|^2 = phi^(2m); phi^(2m) grows monotonically.
  for (int m = 0; m < 128; ++m) {
    const GoldenRat target = phi_pow(2 * m);
    if (target == leg_sq) return m;
    if (target > leg_sq) break;
  }
  return std::nullopt;
}

bool has_valid_shape(const RobinsonTriangle& t) {
  const QuasiPoint l1 = t.base1 - t.apex;
  const QuasiPoint l2 = t.base2 - t.apex;
  const QuasiPoint base = t.base2 - t.base1;
  const GoldenRat l1_sq = inner(l1, l1);
  const GoldenRat l2_sq = inner(l2, l2);
  const GoldenRat base_sq = inner(base, base);
  if (l1_sq != l2_sq || base_sq.is_zero()) return false;
  const GoldenRat phi_sq = GoldenRat::phi() * GoldenRat::phi();
  const bool ratio_ok = t.type == TriangleType::Acute ? l1_sq == phi_sq * base_sq
                                                      : l1_sq * phi_sq == base_sq;
  if (!ratio_ok) return false;
  const int s = orient(t.apex, t.base1, t.base2);
  return s == (t.chirality == Chirality::Left ? 1 : -1);
}

std::vector<RobinsonTriangle> deflate(const RobinsonTriangle& t) {
  const auto scale = leg_scale(t);
  if (!scale) throw TilingError("deflate: input is not a Robinson triangle at integral phi-scale");
  if (*scale < 1) throw TilingError("deflate: unit-scale triangle cannot be deflated within R");
  const QuasiPoint& a = t.apex;
  const QuasiPoint& b = t.base1;
  const QuasiPoint& c = t.base2;
  std::vector<RobinsonTriangle> out;
  if (t.type == TriangleType::Acute) {
    const QuasiPoint p = a + phi_inverse_scale(b - a);
    out.reserve(2);
    out.push_back(make_triangle(TriangleType::Acute, c, p, b));
    out.push_back(make_triangle(TriangleType::Obtuse, p, c, a));
  } else {
    const QuasiPoint q = b + phi_inverse_scale(a - b);
    const QuasiPoint r = b + phi_inverse_scale(c - b);
    out.reserve(3);
    out.push_back(make_triangle(TriangleType::Obtuse, r, c, a));
    out.push_back(make_triangle(TriangleType::Obtuse, q, r, b));
    out.push_back(make_triangle(TriangleType::Acute, r, q, a));
  }
  return out;
}

GoldenExt triangle_area(const RobinsonTriangle& t) {
  GoldenExt twice = cross(t.base1 - t.apex, t.base2 - t.apex);
  if (twice.sign() < 0) twice = -twice;
  return GoldenRat(Rational(1, 2)) * twice;
}

GoldenExt total_area(std::span<const RobinsonTriangle> triangles) {
  GoldenExt sum;
  for (const auto& t : triangles) sum += triangle_area(t);
  return sum;
}

// --- presets ------------------------------------------------------------------

std::optional<SeedPreset> parse_seed_preset(std::string_view name) {
  if (name == "acute") return SeedPreset::Acute;
  if (name == "obtuse") return SeedPreset::Obtuse;
  if (name == "sun") return SeedPreset::Sun;
  if (name == "thick") return SeedPreset::Thick;
  if (name == "thin") return SeedPreset::Thin;
  return std::nullopt;
}

std::string_view to_string(SeedPreset preset) {
  switch (preset) {
    case SeedPreset::Acute: return "acute";
    case SeedPreset::Obtuse: return "obtuse";
    case SeedPreset::Sun: return "sun";
    case SeedPreset::Thick: return "thick";
    case SeedPreset::Thin: return "thin";
  }
  return "?";
}

std::vector<RobinsonTriangle> preset_triangles(SeedPreset preset, int n) {
  if (n < 0) throw std::invalid_argument("seed scale power must be non-negative");
  const QuasiPoint origin;
  switch (preset) {
    case SeedPreset::Acute:
      return {seed(TriangleType::Acute, Chirality::Left, n, origin)};
    case SeedPreset::Obtuse:
      return {seed(TriangleType::Obtuse, Chirality::Left, n, origin)};
    case SeedPreset::Thick:
    case SeedPreset::Thin: {
      // Mirror the left half across its base.
      const TriangleType type = preset == SeedPreset::Thick ? TriangleType::Obtuse : TriangleType::Acute;
      const RobinsonTriangle left = seed(type, Chirality::Left, n, origin);
      const QuasiPoint mirrored_apex = left.base1 + left.base2 - left.apex;
      return {left, make_triangle(type, mirrored_apex, left.base1, left.base2)};
    }
    case SeedPreset::Sun: {
      // Rhombus k spans Y*_k, Y*_{k+1}; its halves have apexes at the 108
      // degree corners and share the long diagonal from the origin.
      std::vector<RobinsonTriangle> out;
      for (int k = 0; k < 5; ++k) {
        const QuasiPoint u = phi_power(dual_star(StarIndex(k)), n);
        const QuasiPoint v = phi_power(dual_star(StarIndex(k + 1)), n);
        const QuasiPoint far = u + v;
        out.push_back(make_triangle(TriangleType::Obtuse, u, origin, far));
        out.push_back(make_triangle(TriangleType::Obtuse, v, origin, far));
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown seed preset");
}

Patch seed_patch(SeedPreset preset, int n) { return Patch::from_triangles(n, preset_triangles(preset, n)); }

Patch Patch::from_triangles(int scale_power, std::vector<RobinsonTriangle> triangles) {
  Patch p;
  p.scale_power = scale_power;
  std::sort(triangles.begin(), triangles.end());
  p.triangles = std::move(triangles);
  if (scale_power == 0) p.tiles = merge_rhombi(p.triangles).tiles;
  p.decorations = decorate(p.triangles);
  return p;
}

Patch deflate_patch(const Patch& p, int steps) {
  if (steps < 0) throw std::invalid_argument("deflate_patch: negative step count");
  if (steps > p.scale_power) {
    throw TilingError("deflate_patch: " + std::to_string(steps) + " steps exceed scale power " +
                      std::to_string(p.scale_power));
  }
  if (steps == 0) return p;
  std::vector<RobinsonTriangle> current = p.triangles;
  for (int s = 0; s < steps; ++s) {
    std::vector<RobinsonTriangle> next;
    next.reserve(current.size() * 3);
    for (const auto& t : current) {
      auto children = deflate(t);
      next.insert(next.end(), children.begin(), children.end());
    }
    current = std::move(next);
  }
  return Patch::from_triangles(p.scale_power - steps, std::move(current));
}

Patch generate(SeedPreset preset, int depth) { return deflate_patch(seed_patch(preset, depth), depth); }

TriangleCounts count_types(std::span<const RobinsonTriangle> triangles) {
  TriangleCounts c;
  for (const auto& t : triangles) (t.type == TriangleType::Acute ? c.acute : c.obtuse)++;
  return c;
}

// --- merging and classification -------------------------------------------------

MergeResult merge_rhombi(std::span<const RobinsonTriangle> triangles) {
  std::map<std::pair<QuasiPoint, QuasiPoint>, std::vector<std::size_t>> by_base;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    by_base[edge_key(triangles[i].base1, triangles[i].base2)].push_back(i);
  }
  std::vector<bool> used(triangles.size(), false);
  MergeResult out;
  for (const auto& [key, idx] : by_base) {
    if (idx.size() != 2) continue;
    const auto& s = triangles[idx[0]];
    const auto& t = triangles[idx[1]];
    if (s.type != t.type) continue;
    if (orient(key.first, key.second, s.apex) * orient(key.first, key.second, t.apex) >= 0) continue;
    const Classification c = classify({s.apex, key.first, t.apex, key.second});
    const TileKind expected = s.type == TriangleType::Obtuse ? TileKind::Thick : TileKind::Thin;
    if (c.kind != expected) continue;
    out.tiles.push_back(RhombusTile{c.kind, c.k, c.anchor});
    used[idx[0]] = used[idx[1]] = true;
  }
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    if (!used[i]) out.unpaired.push_back(triangles[i]);
  }
  std::sort(out.tiles.begin(), out.tiles.end());
  return out;
}

Classification classify(const std::array<QuasiPoint, 4>& vertices) {
  std::array<QuasiPoint, 4> v = vertices;
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw ClassificationError("classify: repeated vertex");
  }
  // From the smallest vertex, two differences are unit edge vectors and the
  // third is their sum (rhombus diagonals are never unit length).
  std::vector<SignedIndex> edges;
  std::vector<QuasiPoint> others;
  for (std::size_t i = 1; i < 4; ++i) {
    const QuasiPoint d = v[i] - v[0];
    if (auto e = as_dual_star(d)) {
      edges.push_back(*e);
    } else {
      others.push_back(d);
    }
  }
  if (edges.size() != 2 || others.size() != 1) {
    throw ClassificationError("classify: vertices are not a unit rhombus with star edges");
  }
  const QuasiPoint u = edges[0].sign * dual_star(edges[0].k);
  const QuasiPoint w = edges[1].sign * dual_star(edges[1].k);
  if (others[0] != u + w) throw ClassificationError("classify: vertices are not a parallelogram");

  const int i = edges[0].k.value();
  const int j = edges[1].k.value();
  const int diff = ((j - i) % 5 + 5) % 5;
  Classification c{};
  switch (diff) {
    case 1: c = {TileKind::Thick, StarIndex(i), {}}; break;
    case 4: c = {TileKind::Thick, StarIndex(j), {}}; break;
    case 2: c = {TileKind::Thin, StarIndex(i), {}}; break;
    case 3: c = {TileKind::Thin, StarIndex(j), {}}; break;
    default: throw ClassificationError("classify: parallel edge directions");
  }
  // A reversed spanning vector is absorbed into the anchor.
  QuasiPoint anchor = v[0];
  for (const auto& e : edges) {
    if (e.sign < 0) anchor -= dual_star(e.k);
  }
  c.anchor = anchor;
  return c;
}

// --- decorations ------------------------------------------------------------------

namespace {

EdgeMarking marking(const QuasiPoint& a, const QuasiPoint& b, int arrows, const QuasiPoint& target) {
  auto [lo, hi] = edge_key(a, b);
  return EdgeMarking{lo, hi, arrows, target == hi ? 1 : -1};
}

}  // namespace

std::array<EdgeMarking, 2> leg_markings(const RobinsonTriangle& t) {
  // Leg to base1 carries a single arrow, leg to base2 a double arrow. Double
  // arrows point away from the apex; single arrows point away from the apex
  // on acute halves and toward it on obtuse halves.
  const bool acute = t.type == TriangleType::Acute;
  return {marking(t.apex, t.base1, 1, acute ? t.base1 : t.apex),
          marking(t.apex, t.base2, 2, t.base2)};
}

std::vector<EdgeMarking> decorate(std::span<const RobinsonTriangle> triangles) {
  std::vector<EdgeMarking> out;
  out.reserve(triangles.size() * 2);
  for (const auto& t : triangles) {
    const auto m = leg_markings(t);
    out.insert(out.end(), m.begin(), m.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexWalks vertex_walks(const Patch& p) {
  VertexWalks result;
  if (p.triangles.empty()) return result;
  // Unit steps scaled to the patch's edge length.
  std::array<QuasiPoint, 5> scaled;
  for (int k = 0; k < 5; ++k) scaled[static_cast<std::size_t>(k)] = phi_power(dual_star(StarIndex(k)), p.scale_power);

  std::map<QuasiPoint, std::vector<std::pair<QuasiPoint, WalkStep>>> adj;
  for (const auto& t : p.triangles) {
    for (const QuasiPoint* b : {&t.base1, &t.base2}) {
      const QuasiPoint d = *b - t.apex;
      for (int k = 0; k < 5; ++k) {
        const auto& s = scaled[static_cast<std::size_t>(k)];
        if (d == s || d == -s) {
          const int sign = d == s ? 1 : -1;
          adj[t.apex].push_back({*b, WalkStep{sign, StarIndex(k)}});
          adj[*b].push_back({t.apex, WalkStep{-sign, StarIndex(k)}});
          break;
        }
      }
    }
  }
  std::set<QuasiPoint> all;
  for (const auto& t : p.triangles) all.insert({t.apex, t.base1, t.base2});
  result.root = *all.begin();
  result.walks[result.root] = {};
  std::deque<QuasiPoint> queue{result.root};
  while (!queue.empty()) {
    const QuasiPoint cur = queue.front();
    queue.pop_front();
    for (const auto& [next, step] : adj[cur]) {
      if (result.walks.count(next)) continue;
      auto walk = result.walks[cur];
      walk.push_back(step);
      result.walks.emplace(next, std::move(walk));
      queue.push_back(next);
    }
  }
  return result;
}

}  // namespace quasitile
