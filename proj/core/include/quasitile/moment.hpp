// Moment-image sampling and chart-slice checks for a quasifold descriptor.
#pragma once

#include "quasitile/delzant.hpp"

#include <cstdint>
#include <vector>

namespace quasitile {

/// Samples of J on Psi^{-1}(0): |z_1|^2 = R^2 u, |z_2|^2 = R^2 (1 - u),
/// |z_3|^2 = R^2 v, |z_4|^2 = R^2 (1 - v) with u = i / (m - 1), v = j / (m - 1).
struct MomentImage {
  int grid = 0;
  std::vector<GoldenQuasiPoint> exact;  // index i * grid + j
  std::vector<Vec2> points;             // float embedding of `exact`
  std::size_t outside_count = 0;        // samples with a negative facet slack
  bool corners_exact = false;           // corners equal V13, V23, V14, V24
  double corner_max_error = 0.0;        // float distance of corners to the vertices
  bool all_inside() const { return outside_count == 0; }
};

/// Requires m >= 2.
MomentImage moment_image(const QuasifoldDescriptor& desc, int m);

struct SliceReport {
  std::size_t samples = 0;
  double max_psi = 0.0;            // max |Psi(tau(z))|
  double max_diagram_error = 0.0;  // Hopf image vs stereographic chart
  bool passed(double tol) const { return max_psi < tol && max_diagram_error < tol; }
};

/// Evaluates the slice tau(z_i, z_j) of Psi^{-1}(0) for the chart's free
/// pair on `samples` ball points (the centre, near-boundary points, and
/// seeded uniform points) and checks Psi o tau = 0 and that the quotient by
/// S^1 x S^1 agrees with the stereographic sphere charts.
SliceReport chart_slice_check(const QuasifoldDescriptor& desc, const ChartData& chart, std::size_t samples,
                              std::uint64_t seed = 1);

}  // namespace quasitile
