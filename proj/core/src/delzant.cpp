#include "quasitile/delzant.hpp"

#include "linalg.hpp"

#include <algorithm>

namespace quasitile {

namespace {

using detail::IMatrix;
using detail::RMatrix;

// <Y*_i, X> = rho * h_i(X) with h_i in Q(phi), for basis indices i = 1..4.
std::array<GoldenRat, 4> pairing_row(const QVector& x) {
  std::array<GoldenRat, 4> h;
  for (int i = 0; i < 4; ++i) {
    const GoldenExt p = pair(dual_star(StarIndex(i + 1)), x);
    if (!p.u().is_zero()) throw UnsupportedSpec("pairing outside Q(phi) rho");
    h[static_cast<std::size_t>(i)] = p.v();
  }
  return h;
}

// Rational 4x4 system whose solution q gives mu = sum q_i Y*_i with
// <mu, X_a> = rho g_a and <mu, X_b> = rho g_b.
RMatrix intersection_matrix(const QVector& xa, const QVector& xb) {
  RMatrix m;
  for (const QVector* x : {&xa, &xb}) {
    const auto h = pairing_row(*x);
    std::vector<Rational> ra, rb;
    for (const auto& hi : h) {
      ra.push_back(hi.a());
      rb.push_back(hi.b());
    }
    m.push_back(std::move(ra));
    m.push_back(std::move(rb));
  }
  return m;
}

std::vector<Rational> intersection_rhs(const GoldenRat& ga, const GoldenRat& gb) {
  return {ga.a(), ga.b(), gb.a(), gb.b()};
}

GoldenQuasiPoint point_from_rationals(const std::vector<Rational>& q) {
  return GoldenQuasiPoint(std::array<GoldenRat, 4>{GoldenRat(q[0]), GoldenRat(q[1]), GoldenRat(q[2]), GoldenRat(q[3])});
}

GoldenRat rho_part(const GoldenExt& x) {
  if (!x.u().is_zero()) throw UnsupportedSpec("lambda must be a Q(phi)-multiple of rho");
  return x.v();
}

Integer lcm_of_denominators(const std::vector<std::vector<Rational>>& rows) {
  Integer d = 1;
  for (const auto& r : rows)
    for (const auto& x : r) d = lcm(d, x.get_den());
  return d;
}

// Lattice L of (u, v) in Q(phi)^2 with u X_1 + v X_3 in Q, plus Z^2 (trivial
// mod Z^4). Rows are (u.b, v.b, u.a, v.a): phi-parts first, so the Hermite
// form isolates the purely rational sublattice in trailing rows.
std::vector<std::vector<Rational>> lattice_rows(const PolytopeSpec& spec) {
  const QVector& x1 = spec.facets[0].normal;
  const QVector& x3 = spec.facets[2].normal;
  const GoldenExt c13 = cross(x1, x3);
  std::vector<std::vector<Rational>> rows;
  for (int i = 1; i <= 4; ++i) {
    const QVector y = star(StarIndex(i));
    const GoldenExt alpha_x = cross(y, x3) / c13;
    const GoldenExt beta_x = cross(x1, y) / c13;
    if (!alpha_x.v().is_zero() || !beta_x.v().is_zero()) {
      throw UnsupportedSpec("normals do not span Q over Z[phi]-coefficients");
    }
    const GoldenRat& alpha = alpha_x.u();
    const GoldenRat& beta = beta_x.u();
    rows.push_back({alpha.b(), beta.b(), alpha.a(), beta.a()});
  }
  rows.push_back({0, 0, 1, 0});
  rows.push_back({0, 0, 0, 1});
  return rows;
}

// Hermite-reduced generators of the lattice modulo Z^2, as (u, v) pairs.
std::vector<std::array<GoldenRat, 2>> reduced_generators(std::vector<std::vector<Rational>> rows) {
  const Integer d = lcm_of_denominators(rows);
  IMatrix ints;
  for (const auto& r : rows) {
    std::vector<Integer> ir;
    for (const auto& x : r) {
      const Rational scaled = x * d;
      ir.push_back(scaled.get_num());
    }
    ints.push_back(std::move(ir));
  }
  const IMatrix hnf = detail::hermite_normal_form(std::move(ints));
  std::vector<std::array<GoldenRat, 2>> gens;
  for (const auto& r : hnf) {
    const Rational ub(r[0], d), vb(r[1], d), ua(r[2], d), va(r[3], d);
    Rational ubc = ub, vbc = vb, uac = ua, vac = va;
    ubc.canonicalize();
    vbc.canonicalize();
    uac.canonicalize();
    vac.canonicalize();
    const bool integral = ubc == 0 && vbc == 0 && uac.get_den() == 1 && vac.get_den() == 1;
    if (integral) continue;
    gens.push_back({GoldenRat(uac, ubc), GoldenRat(vac, vbc)});
  }
  return gens;
}

GoldenExt abs_ext(const GoldenExt& x) { return x.sign() < 0 ? -x : x; }

void require_rhombic(const PolytopeSpec& spec) {
  const GoldenExt w1 = -(spec.facets[0].lambda + spec.facets[1].lambda);
  const GoldenExt w3 = -(spec.facets[2].lambda + spec.facets[3].lambda);
  if (w1 != w3) throw UnsupportedSpec("facet pairs have different widths; only rhombi are supported");
}

std::array<QVector, 4> tile_normals(const RhombusTile& t) {
  const int k = t.k.value();
  const StarIndex first = t.kind == TileKind::Thick ? StarIndex(k) : StarIndex(k + 2);
  const StarIndex second = t.kind == TileKind::Thick ? StarIndex(k + 1) : StarIndex(k);
  return {star(first), -star(first), star(second), -star(second)};
}

QVector apply_op(const QVector& x, const SymmetryOp& op) {
  const QVector r = rotate(x, op.shift);
  return op.flip ? -r : r;
}

}  // namespace

PolytopeSpec polytope_of_tile(const RhombusTile& t) {
  const auto normals = tile_normals(t);
  const auto verts = t.vertices();
  PolytopeSpec spec;
  for (const auto& x : normals) {
    GoldenExt lo = pair(verts[0], x);
    for (std::size_t i = 1; i < verts.size(); ++i) lo = std::min(lo, pair(verts[i], x));
    spec.facets.push_back(Facet{x, lo});
  }
  return spec;
}

void require_parallelogram(const PolytopeSpec& spec) {
  if (spec.d() != 4) throw UnsupportedSpec("expected 4 facets, got " + std::to_string(spec.d()));
  const auto& f = spec.facets;
  if (f[1].normal != -f[0].normal || f[3].normal != -f[2].normal) {
    throw UnsupportedSpec("facets must come in opposite pairs X_2 = -X_1, X_4 = -X_3");
  }
  if (cross(f[0].normal, f[2].normal).is_zero()) throw UnsupportedSpec("parallel facet pairs");
  for (const auto& facet : f) rho_part(facet.lambda);
  if ((f[0].lambda + f[1].lambda).sign() >= 0 || (f[2].lambda + f[3].lambda).sign() >= 0) {
    throw UnsupportedSpec("empty or degenerate polytope");
  }
}

GoldenQuasiPoint facet_intersection(const PolytopeSpec& spec, std::size_t a, std::size_t b) {
  const auto& fa = spec.facets.at(a);
  const auto& fb = spec.facets.at(b);
  auto sol = detail::solve(intersection_matrix(fa.normal, fb.normal),
                           intersection_rhs(rho_part(fa.lambda), rho_part(fb.lambda)));
  if (!sol) throw UnsupportedSpec("facets " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " are parallel");
  return point_from_rationals(*sol);
}

std::vector<GoldenQuasiPoint> polytope_vertices(const PolytopeSpec& spec) {
  require_parallelogram(spec);
  std::vector<GoldenQuasiPoint> v{facet_intersection(spec, 0, 2), facet_intersection(spec, 0, 3),
                                  facet_intersection(spec, 1, 3), facet_intersection(spec, 1, 2)};
  for (const auto& p : v) {
    for (const auto& f : spec.facets) {
      if ((pair(p, f.normal) - f.lambda).sign() < 0) throw DelzantError("vertex violates a facet inequality");
    }
  }
  return v;
}

std::vector<RationalVec4> kernel_basis(const PolytopeSpec& spec) {
  require_parallelogram(spec);
  return {RationalVec4{1, 1, 0, 0}, RationalVec4{0, 0, 1, 1}};
}

NDescriptor group_N(const PolytopeSpec& spec) {
  NDescriptor n;
  n.continuous_basis = kernel_basis(spec);
  // x = (s, s + u, t, t + v) with (u, v) in the lattice.
  for (const auto& [u, v] : reduced_generators(lattice_rows(spec))) {
    n.discrete_gens.push_back(GoldenVec4{GoldenRat(0), u, GoldenRat(0), v});
  }
  return n;
}

std::vector<ChartData> chart_groups(const PolytopeSpec& spec, const NDescriptor& kernel) {
  require_parallelogram(spec);
  require_rhombic(spec);
  if (kernel.continuous_basis != kernel_basis(spec)) throw DelzantError("kernel does not match spec");
  const GoldenExt radius_sq = -(spec.facets[0].lambda + spec.facets[1].lambda);
  const auto rows = lattice_rows(spec);
  std::vector<ChartData> charts;
  for (const auto& [i, j] : {std::array<int, 2>{1, 4}, {1, 3}, {2, 3}, {2, 4}}) {
    // Fixing the non-free slots to integers leaves slot 1 = -u or slot 2 = u,
    // and slot 3 = -v or slot 4 = v.
    const int su = i == 1 ? -1 : 1;
    const int sv = j == 3 ? -1 : 1;
    auto signed_rows = rows;
    for (auto& r : signed_rows) {
      r[0] *= su;
      r[2] *= su;
      r[1] *= sv;
      r[3] *= sv;
    }
    ChartData c;
    c.vertex = facet_intersection(spec, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    c.free_pair = {i, j};
    c.ball_radius_sq = radius_sq;
    for (const auto& [u, v] : reduced_generators(std::move(signed_rows))) {
      GoldenVec4 g{GoldenRat(0), GoldenRat(0), GoldenRat(0), GoldenRat(0)};
      g[static_cast<std::size_t>(i - 1)] = u;
      g[static_cast<std::size_t>(j - 1)] = v;
      c.group_gens.push_back(std::move(g));
    }
    charts.push_back(std::move(c));
  }
  return charts;
}

QuasifoldDescriptor reduced_space(const PolytopeSpec& spec) {
  require_parallelogram(spec);
  require_rhombic(spec);
  QuasifoldDescriptor q;
  q.spec = spec;
  q.kernel = group_N(spec);
  q.gamma_rank = static_cast<int>(q.kernel.discrete_gens.size());
  q.charts = chart_groups(spec, q.kernel);
  q.radius_sq = -(spec.facets[0].lambda + spec.facets[1].lambda);
  const auto v = polytope_vertices(spec);
  q.polytope_area = abs_ext(cross(v[1] - v[0], v[3] - v[0]));
  const int d = static_cast<int>(spec.d());
  q.dimension = 2 * d - 2 * static_cast<int>(q.kernel.continuous_basis.size());
  return q;
}

PolytopeSpec normalize_spec(const PolytopeSpec& spec) {
  require_parallelogram(spec);
  const GoldenQuasiPoint v14 = facet_intersection(spec, 0, 3);
  PolytopeSpec out = spec;
  for (auto& f : out.facets) f.lambda -= pair(v14, f.normal);
  return out;
}

PolytopeSpec apply_symmetry(const PolytopeSpec& spec, const SymmetryOp& op) {
  PolytopeSpec out = spec;
  for (auto& f : out.facets) f.normal = apply_op(f.normal, op);
  return out;
}

RhombusTile apply_symmetry(const RhombusTile& t, const SymmetryOp& op) {
  RhombusTile r{t.kind, t.k + op.shift, rotate(t.anchor, op.shift)};
  if (op.flip) {
    const auto [a, b] = r.spanning();
    r.anchor = -(r.anchor + dual_star(a) + dual_star(b));
  }
  return r;
}

RhombusTile canonical_tile(TileKind kind) {
  if (kind == TileKind::Thick) {
    return RhombusTile{TileKind::Thick, StarIndex(2), -(dual_star(StarIndex(2)) + dual_star(StarIndex(3)))};
  }
  return RhombusTile{TileKind::Thin, StarIndex(4), QuasiPoint{}};
}

SymmetryOp canonical_rotation(const RhombusTile& t) {
  const int target = t.kind == TileKind::Thick ? 2 : 4;
  const SymmetryOp op{target - t.k.value(), false};
  const RhombusTile canon = canonical_tile(t.kind);

  // Normal sets must correspond exactly.
  auto mapped = tile_normals(t);
  for (auto& x : mapped) x = apply_op(x, op);
  if (mapped != tile_normals(canon)) throw DelzantError("canonical_rotation: normal sets do not correspond");

  // The inverse rotation carries the canonical tile onto a translate of t.
  const RhombusTile back = apply_symmetry(canon, SymmetryOp{-op.shift, false});
  if (back.kind != t.kind || back.k != t.k) throw DelzantError("canonical_rotation: dual map mismatch");
  return op;
}

QuasifoldDescriptor normalized_descriptor(const RhombusTile& t) {
  const SymmetryOp op = canonical_rotation(t);
  return reduced_space(normalize_spec(apply_symmetry(polytope_of_tile(t), op)));
}

QuasifoldDescriptor raw_descriptor(const RhombusTile& t) { return reduced_space(polytope_of_tile(t)); }

InvariantsReport invariants_report(const QuasifoldDescriptor& a, const QuasifoldDescriptor& b) {
  InvariantsReport r;
  r.radius_ratio = a.radius_sq / b.radius_sq;
  r.area_ratio = a.polytope_area / b.polytope_area;
  r.same_kernel = a.kernel == b.kernel;
  r.same_chart_groups = a.charts.size() == b.charts.size() &&
                        std::equal(a.charts.begin(), a.charts.end(), b.charts.begin(),
                                   [](const ChartData& x, const ChartData& y) {
                                     return x.free_pair == y.free_pair && x.group_gens == y.group_gens;
                                   });
  const GoldenExt one(GoldenRat(1), GoldenRat(0));
  const GoldenExt phi(GoldenRat::phi(), GoldenRat(0));
  const GoldenExt inv_phi(GoldenRat::phi().inverse(), GoldenRat(0));
  const bool groups_match = r.same_kernel && r.same_chart_groups;
  if (a == b) {
    r.verdict = "identical descriptors";
  } else if (groups_match && r.radius_ratio == one && r.area_ratio == one) {
    r.verdict = "same group data and symplectic volume";
  } else if (groups_match && r.area_ratio == r.radius_ratio && (r.radius_ratio == phi || r.radius_ratio == inv_phi)) {
    r.verdict = "same group data (diffeomorphic); radii squared and areas differ by phi (not symplectomorphic)";
  } else {
    r.verdict = groups_match ? "same group data; symplectic invariants differ" : "group data differ";
  }
  return r;
}

}  // namespace quasitile
