#include "quasitile/quasilattice.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "checked.hpp"

namespace quasitile {

// --- StarCoords ----------------------------------------------------------

template <class Basis>
StarCoords<Basis> StarCoords<Basis>::operator-() const {
  StarCoords r;
  for (std::size_t i = 0; i < 4; ++i) r.c_[i] = detail::checked_neg(c_[i]);
  return r;
}

template <class Basis>
StarCoords<Basis>& StarCoords<Basis>::operator+=(const StarCoords& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] = detail::checked_add(c_[i], o.c_[i]);
  return *this;
}

template <class Basis>
StarCoords<Basis>& StarCoords<Basis>::operator-=(const StarCoords& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] = detail::checked_sub(c_[i], o.c_[i]);
  return *this;
}

template <class Basis>
StarCoords<Basis> StarCoords<Basis>::scaled(Coord s) const {
  StarCoords r;
  for (std::size_t i = 0; i < 4; ++i) r.c_[i] = detail::checked_mul(c_[i], s);
  return r;
}

template <class Basis>
std::string StarCoords<Basis>::to_string() const {
  std::ostringstream os;
  os << "[" << c_[0] << "," << c_[1] << "," << c_[2] << "," << c_[3] << "]";
  return os.str();
}

template class StarCoords<DualStarBasis>;
template class StarCoords<StarBasis>;

namespace {

// Coefficients over indices 1..4 of a star vector B_k.
std::array<Coord, 4> basis_coords(int k) {
  k = ((k % 5) + 5) % 5;
  if (k == 0) return {-1, -1, -1, -1};
  std::array<Coord, 4> c{};
  c[static_cast<std::size_t>(k - 1)] = 1;
  return c;
}

std::array<Coord, 4> fold(const std::array<Coord, 5>& c5) {
  std::array<Coord, 4> c{};
  for (std::size_t i = 0; i < 4; ++i) c[i] = detail::checked_sub(c5[i + 1], c5[0]);
  return c;
}

template <class T>
std::optional<SignedIndex> as_unit(const T& p) {
  for (int k = 0; k < 5; ++k) {
    const T b(basis_coords(k));
    if (p == b) return SignedIndex{1, StarIndex(k)};
    if (p == -b) return SignedIndex{-1, StarIndex(k)};
  }
  return std::nullopt;
}

// Accumulates sum_{i,j} p_i q_j f(j - i mod 5) into bins by residue.
template <class T>
struct ResidueSums {
  std::array<T, 5> bin{};
};

ResidueSums<Coord> residue_sums(const std::array<Coord, 4>& p, const std::array<Coord, 4>& q) {
  ResidueSums<Coord> s;
  for (int i = 0; i < 4; ++i) {
    if (p[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      const Coord prod = detail::checked_mul(p[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)]);
      auto& b = s.bin[static_cast<std::size_t>(((j - i) % 5 + 5) % 5)];
      b = detail::checked_add(b, prod);
    }
  }
  return s;
}

template <class A, class B>
ResidueSums<GoldenRat> residue_sums_exact(const A& p, const B& q) {
  ResidueSums<GoldenRat> s;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      s.bin[static_cast<std::size_t>(((j - i) % 5 + 5) % 5)] +=
          GoldenRat(p[static_cast<std::size_t>(i)]) * GoldenRat(q[static_cast<std::size_t>(j)]);
    }
  }
  return s;
}

// sin(2 pi d / 5): d=1 -> rho/2, d=2 -> rho (phi - 1)/2, d=3,4 negatives.
// With s1 = bin1 - bin4 and s2 = bin2 - bin3 the total is
// rho ((s1 - s2)/2 + (s2/2) phi).
GoldenExt sine_total(const GoldenRat& s1, const GoldenRat& s2) {
  const GoldenRat half(Rational(1, 2));
  return GoldenExt(GoldenRat(), half * (s1 - s2) + half * s2 * GoldenRat::phi());
}

GoldenExt sine_total(const ResidueSums<Coord>& s) {
  const Coord s1 = detail::checked_sub(s.bin[1], s.bin[4]);
  const Coord s2 = detail::checked_sub(s.bin[2], s.bin[3]);
  return sine_total(GoldenRat(s1), GoldenRat(s2));
}

GoldenExt sine_total(const ResidueSums<GoldenRat>& s) {
  return sine_total(s.bin[1] - s.bin[4], s.bin[2] - s.bin[3]);
}

// cos(2 pi d / 5): d=0 -> 1, d=1,4 -> (phi - 1)/2, d=2,3 -> -phi/2.
GoldenRat cosine_total(const GoldenRat& n0, const GoldenRat& n1, const GoldenRat& n2) {
  const GoldenRat half(Rational(1, 2));
  return n0 + half * n1 * (GoldenRat::phi() - GoldenRat(1)) - half * n2 * GoldenRat::phi();
}

GoldenRat cosine_total(const ResidueSums<Coord>& s) {
  return cosine_total(GoldenRat(s.bin[0]), GoldenRat(detail::checked_add(s.bin[1], s.bin[4])),
                      GoldenRat(detail::checked_add(s.bin[2], s.bin[3])));
}

constexpr double kTwoPiOverFive = 2.0 * std::numbers::pi / 5.0;

template <class T>
Vec2 embed_coords(const T& c, double offset) {
  Vec2 v;
  for (int i = 1; i <= 4; ++i) {
    const double a = offset + kTwoPiOverFive * i;
    v.x += static_cast<double>(c[static_cast<std::size_t>(i - 1)]) * std::cos(a);
    v.y += static_cast<double>(c[static_cast<std::size_t>(i - 1)]) * std::sin(a);
  }
  return v;
}

template <class T>
T rotate_impl(const T& x, int s) {
  std::array<Coord, 5> c5{};
  for (int i = 1; i <= 4; ++i) {
    c5[static_cast<std::size_t>(((i + s) % 5 + 5) % 5)] = x[static_cast<std::size_t>(i - 1)];
  }
  return T(fold(c5));
}

std::array<Coord, 4> apply_phi(const std::array<Coord, 4>& c) {
  const auto& m = phi_scale_matrix();
  std::array<Coord, 4> r{};
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < 4; ++col) {
      r[row] = detail::checked_add(r[row], detail::checked_mul(m[row][col], c[col]));
    }
  }
  return r;
}

}  // namespace

// --- GoldenQuasiPoint ------------------------------------------------------

GoldenQuasiPoint::GoldenQuasiPoint(const std::array<GoldenRat, 4>& c) {
  // sum (a_i + b_i phi) Y*_i = sum a_i Y*_i + sum (M b)_i Y*_i.
  const auto& m = phi_scale_matrix();
  for (std::size_t row = 0; row < 4; ++row) {
    Rational v = c[row].a();
    for (std::size_t col = 0; col < 4; ++col) {
      v += Rational(static_cast<long>(m[row][col])) * c[col].b();
    }
    c_[row] = GoldenRat(v);
  }
}

GoldenQuasiPoint::GoldenQuasiPoint(const QuasiPoint& p) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] = GoldenRat(static_cast<long>(p[i]));
}

std::optional<QuasiPoint> GoldenQuasiPoint::to_integer() const {
  std::array<Coord, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational& a = c_[i].a();
    if (a.get_den() != 1 || !a.get_num().fits_slong_p()) return std::nullopt;
    out[i] = a.get_num().get_si();
  }
  return QuasiPoint(out);
}

GoldenQuasiPoint GoldenQuasiPoint::operator-() const {
  GoldenQuasiPoint r;
  for (std::size_t i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

GoldenQuasiPoint& GoldenQuasiPoint::operator+=(const GoldenQuasiPoint& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

GoldenQuasiPoint& GoldenQuasiPoint::operator-=(const GoldenQuasiPoint& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

GoldenQuasiPoint operator*(const GoldenRat& s, const GoldenQuasiPoint& x) {
  std::array<GoldenRat, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = s * x.c_[i];
  return GoldenQuasiPoint(c);
}

std::string GoldenQuasiPoint::to_string() const {
  std::ostringstream os;
  os << "[" << c_[0] << "," << c_[1] << "," << c_[2] << "," << c_[3] << "]";
  return os.str();
}

// --- free functions --------------------------------------------------------

QuasiPoint dual_star(StarIndex k) { return QuasiPoint(basis_coords(k.value())); }
QVector star(StarIndex k) { return QVector(basis_coords(k.value())); }

QuasiPoint canonicalize_point(const std::array<Coord, 5>& c5) { return QuasiPoint(fold(c5)); }
QVector canonicalize_vector(const std::array<Coord, 5>& c5) { return QVector(fold(c5)); }

std::optional<SignedIndex> as_dual_star(const QuasiPoint& p) { return as_unit(p); }
std::optional<SignedIndex> as_star(const QVector& x) { return as_unit(x); }

GoldenExt pair(const QuasiPoint& p, const QVector& x) {
  return sine_total(residue_sums(p.coords(), x.coords()));
}

GoldenExt pair(const GoldenQuasiPoint& p, const QVector& x) {
  return sine_total(residue_sums_exact(p.coords(), x.coords()));
}

GoldenRat inner(const QuasiPoint& p, const QuasiPoint& q) {
  return cosine_total(residue_sums(p.coords(), q.coords()));
}

GoldenRat inner(const QVector& x, const QVector& y) {
  return cosine_total(residue_sums(x.coords(), y.coords()));
}

GoldenExt cross(const QuasiPoint& p, const QuasiPoint& q) {
  return sine_total(residue_sums(p.coords(), q.coords()));
}

GoldenExt cross(const GoldenQuasiPoint& p, const GoldenQuasiPoint& q) {
  return sine_total(residue_sums_exact(p.coords(), q.coords()));
}

GoldenExt cross(const QVector& x, const QVector& y) {
  return sine_total(residue_sums(x.coords(), y.coords()));
}

int orient(const QuasiPoint& a, const QuasiPoint& b, const QuasiPoint& c) {
  const auto s = residue_sums((b - a).coords(), (c - a).coords());
  // cross = (rho / 2) (s1 + s2 (phi - 1)), rho > 0.
  const Coord s1 = detail::checked_sub(s.bin[1], s.bin[4]);
  const Coord s2 = detail::checked_sub(s.bin[2], s.bin[3]);
  return sign_golden(detail::checked_sub(s1, s2), s2);
}

const std::array<std::array<Coord, 4>, 4>& phi_scale_matrix() {
  static const auto matrix = [] {
    std::array<std::array<Coord, 4>, 4> m{};
    for (int k = 1; k <= 4; ++k) {
      std::array<Coord, 5> c5{};
      c5[static_cast<std::size_t>((k + 2) % 5)] -= 1;
      c5[static_cast<std::size_t>((k + 3) % 5)] -= 1;
      const auto col = fold(c5);
      for (std::size_t row = 0; row < 4; ++row) m[row][static_cast<std::size_t>(k - 1)] = col[row];
    }
    return m;
  }();
  return matrix;
}

QuasiPoint phi_scale(const QuasiPoint& p) { return QuasiPoint(apply_phi(p.coords())); }
QVector phi_scale(const QVector& x) { return QVector(apply_phi(x.coords())); }
QuasiPoint phi_inverse_scale(const QuasiPoint& p) { return phi_scale(p) - p; }

QuasiPoint rotate(const QuasiPoint& p, int s) { return rotate_impl(p, s); }
QVector rotate(const QVector& x, int s) { return rotate_impl(x, s); }

Vec2 embed_float(const QuasiPoint& p) { return embed_coords(p.coords(), std::numbers::pi / 2.0); }
Vec2 embed_float(const QVector& x) { return embed_coords(x.coords(), 0.0); }

Vec2 embed_float(const GoldenQuasiPoint& p) {
  std::array<double, 4> c{};
  for (std::size_t i = 0; i < 4; ++i) c[i] = p.coords()[i].to_double();
  return embed_coords(c, std::numbers::pi / 2.0);
}

QuasiPoint walk_sum(std::span<const WalkStep> steps) {
  std::array<Coord, 5> c5{};
  for (const auto& s : steps) {
    if (s.sign != 1 && s.sign != -1) throw std::invalid_argument("walk step sign must be +1 or -1");
    auto& slot = c5[static_cast<std::size_t>(s.k.value())];
    slot = detail::checked_add(slot, s.sign);
  }
  return canonicalize_point(c5);
}

}  // namespace quasitile
