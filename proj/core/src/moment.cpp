#include "quasitile/moment.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace quasitile {

namespace {

using Complex = std::complex<double>;

struct SpherePoint {
  Complex xy;
  double h = 0.0;
};

double distance(const SpherePoint& a, const SpherePoint& b) {
  return std::hypot(std::abs(a.xy - b.xy), a.h - b.h);
}

// Quotient of S^3_R by the diagonal circle: (2 a conj(b), |b|^2 - |a|^2) / R.
SpherePoint hopf(Complex a, Complex b, double r) {
  return {2.0 * a * std::conj(b) / r, (std::norm(b) - std::norm(a)) / r};
}

// Inverse stereographic maps onto S^2_R from the chart coordinate w.
SpherePoint sigma_north(Complex w, double r) {
  const double n = std::norm(w);
  return {r * 2.0 * w / (1.0 + n), r * (1.0 - n) / (1.0 + n)};
}

SpherePoint sigma_south(Complex w, double r) {
  const double n = std::norm(w);
  return {r * 2.0 * w / (1.0 + n), r * (n - 1.0) / (1.0 + n)};
}

}  // namespace

MomentImage moment_image(const QuasifoldDescriptor& desc, int m) {
  if (m < 2) throw std::invalid_argument("moment_image: grid must be at least 2");
  const PolytopeSpec& spec = desc.spec;
  require_parallelogram(spec);
  const auto verts = polytope_vertices(spec);  // V13, V14, V24, V23

  MomentImage img;
  img.grid = m;
  img.exact.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  PolytopeSpec level = spec;
  for (int i = 0; i < m; ++i) {
    const GoldenRat u(Rational(i, m - 1));
    level.facets[0].lambda = spec.facets[0].lambda + u * desc.radius_sq;
    for (int j = 0; j < m; ++j) {
      const GoldenRat v(Rational(j, m - 1));
      level.facets[2].lambda = spec.facets[2].lambda + v * desc.radius_sq;
      GoldenQuasiPoint mu = facet_intersection(level, 0, 2);
      for (const auto& f : spec.facets) {
        if ((pair(mu, f.normal) - f.lambda).sign() < 0) {
          ++img.outside_count;
          break;
        }
      }
      img.points.push_back(embed_float(mu));
      img.exact.push_back(std::move(mu));
    }
  }

  const auto at = [&](int i, int j) { return static_cast<std::size_t>(i * m + j); };
  const std::array<std::pair<std::size_t, std::size_t>, 4> corners{
      std::pair{at(0, 0), std::size_t{0}}, std::pair{at(0, m - 1), std::size_t{1}},
      std::pair{at(m - 1, m - 1), std::size_t{2}}, std::pair{at(m - 1, 0), std::size_t{3}}};
  img.corners_exact = true;
  for (const auto& [sample, vertex] : corners) {
    img.corners_exact = img.corners_exact && img.exact[sample] == verts[vertex];
    const Vec2 a = img.points[sample];
    const Vec2 b = embed_float(verts[vertex]);
    img.corner_max_error = std::max(img.corner_max_error, std::hypot(a.x - b.x, a.y - b.y));
  }
  return img;
}

SliceReport chart_slice_check(const QuasifoldDescriptor& desc, const ChartData& chart, std::size_t samples,
                              std::uint64_t seed) {
  const double r2 = chart.ball_radius_sq.to_double();
  const double r = std::sqrt(r2);
  const double level12 = -(desc.spec.facets[0].lambda + desc.spec.facets[1].lambda).to_double();
  const double level34 = -(desc.spec.facets[2].lambda + desc.spec.facets[3].lambda).to_double();
  const int fi = chart.free_pair[0];
  const int fj = chart.free_pair[1];

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto ball_point = [&](std::size_t n) -> Complex {
    if (n == 0) return {0.0, 0.0};
    const double angle = 2.0 * M_PI * unit(rng);
    // A few samples approach the boundary sphere from inside.
    const double rad = n <= 3 ? r * (1.0 - std::pow(10.0, -3.0 * static_cast<double>(n))) : r * std::sqrt(unit(rng));
    return std::polar(rad, angle);
  };

  SliceReport rep;
  rep.samples = samples;
  for (std::size_t n = 0; n < samples; ++n) {
    const Complex za = ball_point(n);
    const Complex zb = ball_point(n);
    // Free slot gets z, its partner the real root sqrt(R^2 - |z|^2).
    std::array<Complex, 4> z{};
    const auto place = [&](int free_slot, int partner, Complex w) {
      z[static_cast<std::size_t>(free_slot - 1)] = w;
      z[static_cast<std::size_t>(partner - 1)] = std::sqrt(std::max(0.0, r2 - std::norm(w)));
    };
    place(fi, fi == 1 ? 2 : 1, za);
    place(fj, fj == 3 ? 4 : 3, zb);

    const double psi1 = std::norm(z[0]) + std::norm(z[1]) - level12;
    const double psi2 = std::norm(z[2]) + std::norm(z[3]) - level34;
    rep.max_psi = std::max({rep.max_psi, std::abs(psi1), std::abs(psi2)});

    // Chart (1,4) lands in V_n x V_s: a free first slot of a pair maps
    // through the north chart, a free second slot through the south chart.
    const SpherePoint h1 = hopf(z[0], z[1], r);
    const SpherePoint h2 = hopf(z[2], z[3], r);
    const auto chart_coord = [&](Complex w) { return w / std::sqrt(r2 - std::norm(w)); };
    const Complex wa = chart_coord(za);
    const Complex wb = chart_coord(zb);
    const SpherePoint e1 = fi == 1 ? sigma_north(wa, r) : sigma_south(std::conj(wa), r);
    const SpherePoint e2 = fj == 4 ? sigma_south(std::conj(wb), r) : sigma_north(wb, r);
    rep.max_diagram_error = std::max({rep.max_diagram_error, distance(h1, e1), distance(h2, e2)});
  }
  return rep;
}

}  // namespace quasitile
