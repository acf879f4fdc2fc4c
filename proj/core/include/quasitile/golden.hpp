// Exact arithmetic in the golden field Q(phi) and in its radical extension
// Q(phi)[rho], rho = sqrt(2 + phi).
//
// GoldenRat holds a + b*phi with rational a, b (GMP rationals, always in
// lowest terms), so structural equality is field equality. GoldenExt holds
// u + v*rho with u, v in Q(phi). Signs are decided exactly by integer
// comparisons; floating point is only used by the to_double() helpers.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace quasitile {

using Rational = mpq_class;
using Integer = mpz_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact element a + b*phi of Q(phi), phi = (1 + sqrt 5) / 2.
class GoldenRat {
 public:
  GoldenRat() = default;
  GoldenRat(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  GoldenRat(Rational a, Rational b = 0);
  GoldenRat(long a_num, long a_den, long b_num, long b_den);

  static GoldenRat phi() { return GoldenRat(0, 1); }
  static GoldenRat zero() { return GoldenRat(); }
  static GoldenRat one() { return GoldenRat(1); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Galois conjugate phi -> 1 - phi.
  GoldenRat conj() const;
  /// Field norm x * conj(x), a rational number.
  Rational norm() const;
  GoldenRat inverse() const;

  /// -1, 0 or +1; exact.
  int sign() const;
  double to_double() const;

  GoldenRat operator-() const { return GoldenRat(-a_, -b_); }
  GoldenRat& operator+=(const GoldenRat& o);
  GoldenRat& operator-=(const GoldenRat& o);
  GoldenRat& operator*=(const GoldenRat& o);
  GoldenRat& operator/=(const GoldenRat& o);

  friend GoldenRat operator+(GoldenRat x, const GoldenRat& y) { return x += y; }
  friend GoldenRat operator-(GoldenRat x, const GoldenRat& y) { return x -= y; }
  friend GoldenRat operator*(GoldenRat x, const GoldenRat& y) { return x *= y; }
  friend GoldenRat operator/(GoldenRat x, const GoldenRat& y) { return x /= y; }

  friend bool operator==(const GoldenRat& x, const GoldenRat& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const GoldenRat& x, const GoldenRat& y) { return !(x == y); }

  /// Numeric order (exact), not the structural order.
  friend bool operator<(const GoldenRat& x, const GoldenRat& y) { return (x - y).sign() < 0; }
  friend bool operator>(const GoldenRat& x, const GoldenRat& y) { return y < x; }
  friend bool operator<=(const GoldenRat& x, const GoldenRat& y) { return !(y < x); }
  friend bool operator>=(const GoldenRat& x, const GoldenRat& y) { return !(x < y); }

  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const GoldenRat& x);

/// Exact element u + v*rho of Q(phi)[rho], rho = sqrt(2 + phi).
class GoldenExt {
 public:
  GoldenExt() = default;
  GoldenExt(GoldenRat u, GoldenRat v = GoldenRat()) : u_(std::move(u)), v_(std::move(v)) {}

  static GoldenExt rho() { return GoldenExt(0, 1); }
  /// rho^2 = 2 + phi.
  static GoldenRat rho_squared() { return GoldenRat(2, 1); }

  const GoldenRat& u() const { return u_; }
  const GoldenRat& v() const { return v_; }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  /// Conjugate rho -> -rho.
  GoldenExt conj_rho() const { return GoldenExt(u_, -v_); }
  GoldenExt inverse() const;

  int sign() const;
  double to_double() const;

  GoldenExt operator-() const { return GoldenExt(-u_, -v_); }
  GoldenExt& operator+=(const GoldenExt& o);
  GoldenExt& operator-=(const GoldenExt& o);
  GoldenExt& operator*=(const GoldenExt& o);
  GoldenExt& operator/=(const GoldenExt& o);

  friend GoldenExt operator+(GoldenExt x, const GoldenExt& y) { return x += y; }
  friend GoldenExt operator-(GoldenExt x, const GoldenExt& y) { return x -= y; }
  friend GoldenExt operator*(GoldenExt x, const GoldenExt& y) { return x *= y; }
  friend GoldenExt operator/(GoldenExt x, const GoldenExt& y) { return x /= y; }
  friend GoldenExt operator*(const GoldenRat& s, const GoldenExt& x) {
    return GoldenExt(s * x.u_, s * x.v_);
  }

  friend bool operator==(const GoldenExt& x, const GoldenExt& y) {
    return x.u_ == y.u_ && x.v_ == y.v_;
  }
  friend bool operator!=(const GoldenExt& x, const GoldenExt& y) { return !(x == y); }
  friend bool operator<(const GoldenExt& x, const GoldenExt& y) { return (x - y).sign() < 0; }
  friend bool operator>(const GoldenExt& x, const GoldenExt& y) { return y < x; }
  friend bool operator<=(const GoldenExt& x, const GoldenExt& y) { return !(y < x); }
  friend bool operator>=(const GoldenExt& x, const GoldenExt& y) { return !(x < y); }

  std::string to_string() const;

 private:
  GoldenRat u_;
  GoldenRat v_;
};

std::ostream& operator<<(std::ostream& os, const GoldenExt& x);

/// Exact sign of p + q*sqrt(5) for integers p, q.
int sign_sqrt5(const Integer& p, const Integer& q);
/// Exact sign of a + b*phi for machine integers; no allocation.
int sign_golden(std::int64_t a, std::int64_t b);

/// Structural total order, usable as a map/sort key (not numeric order).
bool structural_less(const GoldenRat& x, const GoldenRat& y);
bool structural_less(const GoldenExt& x, const GoldenExt& y);

inline constexpr double kPhi = 1.6180339887498948482;
inline constexpr double kRho = 1.9021130325903071442;

}  // namespace quasitile
