// Generalized Delzant construction for rhombus tiles.
//
// A tile is the halfplane intersection  { mu : <mu, X_j> >= lambda_j },
// j = 1..4, with X_2 = -X_1 and X_4 = -X_3 in the star quasilattice Q.
// Reduction of C^4 by N = { exp(x) : pi(x) in Q }, pi(e_j) = X_j, gives a
// four-dimensional quasifold (S^2 x S^2) / Gamma whose moment image is the
// tile. All data below is exact.
#pragma once

#include "quasitile/golden.hpp"
#include "quasitile/quasilattice.hpp"
#include "quasitile/tiling.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace quasitile {

class DelzantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spec outside the supported opposite-pair form.
class UnsupportedSpec : public DelzantError {
 public:
  using DelzantError::DelzantError;
};

struct Facet {
  QVector normal;   // X_j, inward pointing
  GoldenExt lambda;  // lambda_j
  friend bool operator==(const Facet&, const Facet&) = default;
};

struct PolytopeSpec {
  std::vector<Facet> facets;
  std::size_t d() const { return facets.size(); }
  friend bool operator==(const PolytopeSpec&, const PolytopeSpec&) = default;
};

using RationalVec4 = std::array<Rational, 4>;
using GoldenVec4 = std::array<GoldenRat, 4>;

/// N = exp(n + discrete part). Discrete generators are reduced modulo Z^4
/// and modulo the continuous part.
struct NDescriptor {
  std::vector<RationalVec4> continuous_basis;
  std::vector<GoldenVec4> discrete_gens;
  friend bool operator==(const NDescriptor&, const NDescriptor&) = default;
};

/// Chart at one vertex of the tile. The free slots (i, j) are the facets
/// active at `vertex`; the model is (B x B) / Gamma_{i,j} with balls of
/// squared radius ball_radius_sq.
struct ChartData {
  GoldenQuasiPoint vertex;
  std::array<int, 2> free_pair{};  // 1-based facet indices
  GoldenExt ball_radius_sq;
  std::vector<GoldenVec4> group_gens;
  friend bool operator==(const ChartData&, const ChartData&) = default;
};

struct QuasifoldDescriptor {
  PolytopeSpec spec;
  NDescriptor kernel;
  int gamma_rank = 0;
  std::vector<ChartData> charts;  // free pairs (1,4), (1,3), (2,3), (2,4)
  GoldenExt radius_sq;
  GoldenExt polytope_area;
  int dimension = 0;
  friend bool operator==(const QuasifoldDescriptor&, const QuasifoldDescriptor&) = default;
};

/// Rotation of both stars by 2 pi shift / 5, optionally followed by -1.
struct SymmetryOp {
  int shift = 0;
  bool flip = false;
  friend bool operator==(const SymmetryOp&, const SymmetryOp&) = default;
};

/// Facet data of a tile: thick Delta_R^k has normals (Y_k, -Y_k, Y_{k+1},
/// -Y_{k+1}), thin Delta_r^k has (Y_{k+2}, -Y_{k+2}, Y_k, -Y_k);
/// lambda_j = min over the tile's vertices of <v, X_j>.
PolytopeSpec polytope_of_tile(const RhombusTile& t);

/// Throws UnsupportedSpec unless d = 4, X_2 = -X_1, X_4 = -X_3, X_1 and X_3
/// independent, each lambda a Q(phi)-multiple of rho, and the
/// parallelogram nondegenerate.
void require_parallelogram(const PolytopeSpec& spec);

/// Vertices V13, V14, V24, V23 (Vij: facets i and j active), a cyclic order.
std::vector<GoldenQuasiPoint> polytope_vertices(const PolytopeSpec& spec);

/// Point where facets a and b (0-based) are active.
GoldenQuasiPoint facet_intersection(const PolytopeSpec& spec, std::size_t a, std::size_t b);

/// Basis of ker(pi): {e1 + e2, e3 + e4}.
std::vector<RationalVec4> kernel_basis(const PolytopeSpec& spec);

NDescriptor group_N(const PolytopeSpec& spec);

/// Charts in the order (1,4), (1,3), (2,3), (2,4).
std::vector<ChartData> chart_groups(const PolytopeSpec& spec, const NDescriptor& kernel);

QuasifoldDescriptor reduced_space(const PolytopeSpec& spec);

/// Translates the polytope so that V14 is the origin (lambda_1 = lambda_4 = 0).
PolytopeSpec normalize_spec(const PolytopeSpec& spec);

/// Rotation mapping the tile's normal set onto the canonical one
/// ({+-Y_2, +-Y_3} thick, {+-Y_1, +-Y_4} thin). The inverse rotation is
/// checked to carry the canonical tile onto a translate of t.
SymmetryOp canonical_rotation(const RhombusTile& t);

PolytopeSpec apply_symmetry(const PolytopeSpec& spec, const SymmetryOp& op);
RhombusTile apply_symmetry(const RhombusTile& t, const SymmetryOp& op);

/// The canonical tiles Delta_R^2 and Delta_r^4, positioned so lambda_1 =
/// lambda_4 = 0.
RhombusTile canonical_tile(TileKind kind);

/// reduced_space after rotation to the canonical orientation and
/// translation normalization.
QuasifoldDescriptor normalized_descriptor(const RhombusTile& t);
QuasifoldDescriptor raw_descriptor(const RhombusTile& t);

struct InvariantsReport {
  GoldenExt radius_ratio;  // radius_sq(A) / radius_sq(B)
  GoldenExt area_ratio;    // polytope_area(A) / polytope_area(B)
  bool same_kernel = false;
  bool same_chart_groups = false;
  std::string verdict;
};

InvariantsReport invariants_report(const QuasifoldDescriptor& a, const QuasifoldDescriptor& b);

}  // namespace quasitile
