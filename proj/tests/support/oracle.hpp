// 50-digit decimal evaluation used as an independent numeric oracle.
#pragma once

#include "quasitile/golden.hpp"
#include "quasitile/quasilattice.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <array>

namespace oracle {

using Real = boost::multiprecision::cpp_dec_float_50;

inline Real phi() { return (Real(1) + boost::multiprecision::sqrt(Real(5))) / 2; }
inline Real rho() { return boost::multiprecision::sqrt(Real(2) + phi()); }
inline Real pi() { return boost::math::constants::pi<Real>(); }

inline Real value(const quasitile::Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}
inline Real value(const quasitile::GoldenRat& x) { return value(x.a()) + value(x.b()) * phi(); }
inline Real value(const quasitile::GoldenExt& x) { return value(x.u()) + value(x.v()) * rho(); }

inline int sign(const Real& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

struct Vec {
  Real x, y;
};

/// Y*_k at angle pi/2 + 2 pi k / 5.
inline Vec dual_star(int k) {
  const Real a = pi() / 2 + 2 * pi() * k / 5;
  return {boost::multiprecision::cos(a), boost::multiprecision::sin(a)};
}
/// Y_k at angle 2 pi k / 5.
inline Vec star(int k) {
  const Real a = 2 * pi() * k / 5;
  return {boost::multiprecision::cos(a), boost::multiprecision::sin(a)};
}

template <class Basis, class F>
Vec embed(const quasitile::StarCoords<Basis>& p, F basis) {
  Vec v{0, 0};
  for (int i = 0; i < 4; ++i) {
    const Vec b = basis(i + 1);
    v.x += Real(static_cast<long long>(p[static_cast<std::size_t>(i)])) * b.x;
    v.y += Real(static_cast<long long>(p[static_cast<std::size_t>(i)])) * b.y;
  }
  return v;
}
inline Vec embed(const quasitile::QuasiPoint& p) { return embed(p, dual_star); }
inline Vec embed(const quasitile::QVector& x) { return embed(x, star); }
inline Vec embed(const quasitile::GoldenQuasiPoint& p) {
  Vec v{0, 0};
  for (int i = 0; i < 4; ++i) {
    const Vec b = dual_star(i + 1);
    const Real c = value(p.coords()[static_cast<std::size_t>(i)]);
    v.x += c * b.x;
    v.y += c * b.y;
  }
  return v;
}

inline Real dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }
inline Real cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }

inline bool close(const Real& a, const Real& b, const Real& tol = Real("1e-40")) {
  return boost::multiprecision::abs(a - b) < tol;
}

}  // namespace oracle
