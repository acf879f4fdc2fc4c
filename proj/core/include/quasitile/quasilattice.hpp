// Exact coordinates over the five-fold stars.
//
// The dual star S* = {Y*_0..Y*_4} (unit edge directions, Y*_k at angle
// pi/2 + 2 pi k / 5) generates the point quasilattice R; the star
// S = {Y_0..Y_4} (unit facet normals, Y_k at angle 2 pi k / 5) generates the
// normal quasilattice Q. In both, the five vectors sum to zero and indices
// 1..4 form a Z-basis, so coordinates over indices 1..4 are unique.
// Points and normals are separate types; pair() is the only bridge.
#pragma once

#include "quasitile/golden.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quasitile {

using Coord = std::int64_t;

/// Index into a five-fold star; arithmetic is mod 5.
class StarIndex {
 public:
  constexpr StarIndex() = default;
  constexpr explicit StarIndex(int k) : k_(((k % 5) + 5) % 5) {}
  constexpr int value() const { return k_; }
  constexpr StarIndex operator+(int s) const { return StarIndex(k_ + s); }
  constexpr StarIndex operator-(int s) const { return StarIndex(k_ - s); }
  friend constexpr auto operator<=>(StarIndex, StarIndex) = default;

 private:
  int k_ = 0;
};

struct DualStarBasis {};  // Y*_1..Y*_4, points of (R^2)*
struct StarBasis {};      // Y_1..Y_4, vectors of R^2

/// Integer combination c_1 B_1 + ... + c_4 B_4 over one of the star bases.
template <class Basis>
class StarCoords {
 public:
  constexpr StarCoords() = default;
  constexpr explicit StarCoords(std::array<Coord, 4> c) : c_(c) {}
  constexpr StarCoords(Coord c1, Coord c2, Coord c3, Coord c4) : c_{c1, c2, c3, c4} {}

  const std::array<Coord, 4>& coords() const { return c_; }
  Coord operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const { return c_ == std::array<Coord, 4>{}; }

  StarCoords operator-() const;
  StarCoords& operator+=(const StarCoords& o);
  StarCoords& operator-=(const StarCoords& o);
  friend StarCoords operator+(StarCoords x, const StarCoords& y) { return x += y; }
  friend StarCoords operator-(StarCoords x, const StarCoords& y) { return x -= y; }
  friend StarCoords operator*(Coord s, const StarCoords& x) { return x.scaled(s); }

  friend bool operator==(const StarCoords&, const StarCoords&) = default;
  friend auto operator<=>(const StarCoords& x, const StarCoords& y) { return x.c_ <=> y.c_; }

  std::string to_string() const;

 private:
  StarCoords scaled(Coord s) const;
  std::array<Coord, 4> c_{};
};

using QuasiPoint = StarCoords<DualStarBasis>;
using QVector = StarCoords<StarBasis>;

/// Q(phi)-combination of Y*_1..Y*_4, stored in its unique rational form
/// (phi-parts folded back through the phi-scaling matrix), so equality is
/// structural and QuasiPoint embeds as the integer sublattice.
class GoldenQuasiPoint {
 public:
  GoldenQuasiPoint() = default;
  explicit GoldenQuasiPoint(const std::array<GoldenRat, 4>& c);
  explicit GoldenQuasiPoint(const QuasiPoint& p);

  const std::array<GoldenRat, 4>& coords() const { return c_; }
  /// Integer point if all coordinates are integers.
  std::optional<QuasiPoint> to_integer() const;

  GoldenQuasiPoint operator-() const;
  GoldenQuasiPoint& operator+=(const GoldenQuasiPoint& o);
  GoldenQuasiPoint& operator-=(const GoldenQuasiPoint& o);
  friend GoldenQuasiPoint operator+(GoldenQuasiPoint x, const GoldenQuasiPoint& y) { return x += y; }
  friend GoldenQuasiPoint operator-(GoldenQuasiPoint x, const GoldenQuasiPoint& y) { return x -= y; }
  friend GoldenQuasiPoint operator*(const GoldenRat& s, const GoldenQuasiPoint& x);

  friend bool operator==(const GoldenQuasiPoint&, const GoldenQuasiPoint&) = default;

  std::string to_string() const;

 private:
  std::array<GoldenRat, 4> c_{};
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// --- basis vectors -------------------------------------------------------

QuasiPoint dual_star(StarIndex k);  // Y*_k
QVector star(StarIndex k);          // Y_k

/// Folds a 5-coefficient combination onto indices 1..4 using sum_k B_k = 0.
QuasiPoint canonicalize_point(const std::array<Coord, 5>& c5);
QVector canonicalize_vector(const std::array<Coord, 5>& c5);

/// If p = sign * Y*_k for a unit star vector, returns (sign, k).
struct SignedIndex {
  int sign;
  StarIndex k;
};
std::optional<SignedIndex> as_dual_star(const QuasiPoint& p);
std::optional<SignedIndex> as_star(const QVector& x);

// --- exact bilinear forms ------------------------------------------------

/// <p, X> from the table <Y*_i, Y_j> = sin(2 pi (j - i) / 5).
GoldenExt pair(const QuasiPoint& p, const QVector& x);
GoldenExt pair(const GoldenQuasiPoint& p, const QVector& x);
/// Euclidean inner product, from <Y*_i, Y*_j> = cos(2 pi (j - i) / 5).
GoldenRat inner(const QuasiPoint& p, const QuasiPoint& q);
GoldenRat inner(const QVector& x, const QVector& y);
/// z-component of the cross product p x q.
GoldenExt cross(const QuasiPoint& p, const QuasiPoint& q);
GoldenExt cross(const GoldenQuasiPoint& p, const GoldenQuasiPoint& q);
GoldenExt cross(const QVector& x, const QVector& y);

/// Exact sign of cross(b - a, c - a): +1 counter-clockwise, -1 clockwise.
int orient(const QuasiPoint& a, const QuasiPoint& b, const QuasiPoint& c);

// --- phi scaling, rotation, walks ---------------------------------------

/// 4x4 integer matrix of multiplication by phi over indices 1..4, derived
/// from phi B_k = -(B_{k+2} + B_{k+3}); identical for both stars.
const std::array<std::array<Coord, 4>, 4>& phi_scale_matrix();
QuasiPoint phi_scale(const QuasiPoint& p);
QVector phi_scale(const QVector& x);
/// p / phi = phi p - p.
QuasiPoint phi_inverse_scale(const QuasiPoint& p);

/// Rotation by 2 pi s / 5: B_k -> B_{k+s}.
QuasiPoint rotate(const QuasiPoint& p, int s);
QVector rotate(const QVector& x, int s);

Vec2 embed_float(const QuasiPoint& p);
Vec2 embed_float(const QVector& x);
Vec2 embed_float(const GoldenQuasiPoint& p);

struct WalkStep {
  int sign;  // +1 or -1
  StarIndex k;
  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

/// Endpoint of the edge walk sum_i sign_i Y*_{k_i} starting at the origin.
QuasiPoint walk_sum(std::span<const WalkStep> steps);

}  // namespace quasitile
