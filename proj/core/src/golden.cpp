#include "quasitile/golden.hpp"

#include <ostream>
#include <sstream>

namespace quasitile {

namespace {

__extension__ using Int128 = __int128;

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

GoldenRat::GoldenRat(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

GoldenRat::GoldenRat(long a_num, long a_den, long b_num, long b_den)
    : a_(make_rational(a_num, a_den)), b_(make_rational(b_num, b_den)) {}

GoldenRat GoldenRat::conj() const { return GoldenRat(a_ + b_, -b_); }

// (a + b phi)(a + b - b phi) = a^2 + ab - b^2
Rational GoldenRat::norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

GoldenRat GoldenRat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(phi)");
  const Rational n = norm();
  const GoldenRat c = conj();
  return GoldenRat(c.a_ / n, c.b_ / n);
}

GoldenRat& GoldenRat::operator+=(const GoldenRat& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenRat& GoldenRat::operator-=(const GoldenRat& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

// (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi, using phi^2 = phi + 1.
GoldenRat& GoldenRat::operator*=(const GoldenRat& o) {
  const Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_ + bd;
  Rational nb = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

GoldenRat& GoldenRat::operator/=(const GoldenRat& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero in Q(phi)");
  return *this *= o.inverse();
}

int sign_sqrt5(const Integer& p, const Integer& q) {
  const int sp = sgn(p);
  const int sq = sgn(q);
  if (sp >= 0 && sq >= 0) return (sp > 0 || sq > 0) ? 1 : 0;
  if (sp <= 0 && sq <= 0) return -1;
  // Mixed signs: compare p^2 against 5 q^2 (never equal, sqrt 5 irrational).
  const Integer lhs = p * p;
  const Integer rhs = 5 * q * q;
  const int c = cmp(lhs, rhs);
  return sp > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

int sign_golden(std::int64_t a, std::int64_t b) {
  // a + b phi = ((2a + b) + b sqrt 5) / 2
  const Int128 p = static_cast<Int128>(a) * 2 + b;
  const Int128 q = b;
  const int sp = (p > 0) - (p < 0);
  const int sq = (q > 0) - (q < 0);
  if (sp >= 0 && sq >= 0) return (sp > 0 || sq > 0) ? 1 : 0;
  if (sp <= 0 && sq <= 0) return -1;
  const Int128 lhs = p * p;
  const Int128 rhs = q * q * 5;
  return sp > 0 ? (lhs > rhs ? 1 : -1) : (lhs > rhs ? -1 : 1);
}

int GoldenRat::sign() const {
  if (is_zero()) return 0;
  // Clear denominators: a + b phi has the sign of D(2a + b) + D b sqrt 5 for D > 0.
  const Integer den = lcm(a_.get_den(), b_.get_den());
  const Integer a_int = a_.get_num() * (den / a_.get_den());
  const Integer b_int = b_.get_num() * (den / b_.get_den());
  return sign_sqrt5(2 * a_int + b_int, b_int);
}

double GoldenRat::to_double() const { return a_.get_d() + b_.get_d() * kPhi; }

std::string GoldenRat::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenRat& x) {
  const auto phi_term = [&os](const Rational& b) -> std::ostream& {
    return b == 1 ? os << "phi" : os << b << "*phi";
  };
  if (x.b() == 0) return os << x.a();
  if (x.a() == 0) return x.b() == -1 ? os << "-phi" : phi_term(x.b());
  os << "(" << x.a() << (sgn(x.b()) < 0 ? " - " : " + ");
  return phi_term(abs(x.b())) << ")";
}

GoldenExt& GoldenExt::operator+=(const GoldenExt& o) {
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

GoldenExt& GoldenExt::operator-=(const GoldenExt& o) {
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

// (u + v rho)(s + t rho) = us + vt (2 + phi) + (ut + vs) rho
GoldenExt& GoldenExt::operator*=(const GoldenExt& o) {
  GoldenRat nu = u_ * o.u_ + v_ * o.v_ * rho_squared();
  GoldenRat nv = u_ * o.v_ + v_ * o.u_;
  u_ = std::move(nu);
  v_ = std::move(nv);
  return *this;
}

GoldenExt GoldenExt::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(phi)[rho]");
  // (u + v rho)^-1 = (u - v rho) / (u^2 - v^2 (2 + phi)); the denominator
  // vanishes only for zero since rho is not in Q(phi).
  const GoldenRat den = u_ * u_ - v_ * v_ * rho_squared();
  const GoldenRat inv = den.inverse();
  return GoldenExt(u_ * inv, -v_ * inv);
}

GoldenExt& GoldenExt::operator/=(const GoldenExt& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero in Q(phi)[rho]");
  return *this *= o.inverse();
}

int GoldenExt::sign() const {
  const int su = u_.sign();
  const int sv = v_.sign();
  if (su >= 0 && sv >= 0) return (su > 0 || sv > 0) ? 1 : 0;
  if (su <= 0 && sv <= 0) return -1;
  // Mixed signs: |u| versus |v| rho, i.e. u^2 versus v^2 (2 + phi).
  const int c = (u_ * u_ - v_ * v_ * rho_squared()).sign();
  return su > 0 ? c : -c;
}

double GoldenExt::to_double() const { return u_.to_double() + v_.to_double() * kRho; }

std::string GoldenExt::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenExt& x) {
  if (x.v().is_zero()) return os << x.u();
  if (x.u().is_zero()) return x.v() == GoldenRat(1) ? os << "rho" : os << x.v() << "*rho";
  return os << "[" << x.u() << " + " << x.v() << "*rho]";
}

bool structural_less(const GoldenRat& x, const GoldenRat& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  return x.b() < y.b();
}

bool structural_less(const GoldenExt& x, const GoldenExt& y) {
  if (x.u() != y.u()) return structural_less(x.u(), y.u());
  return structural_less(x.v(), y.v());
}

}  // namespace quasitile
