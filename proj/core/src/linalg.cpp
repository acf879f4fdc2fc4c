#include "linalg.hpp"

#include <stdexcept>
#include <utility>

namespace quasitile::detail {

std::optional<std::vector<Rational>> solve(RMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

RMatrix inverse(const RMatrix& a) {
  const std::size_t n = a.size();
  RMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    auto col = solve(a, e);
    if (!col) throw DivisionByZero("inverse of singular matrix");
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = (*col)[i];
  }
  return inv;
}

IMatrix hermite_normal_form(IMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    // Euclid on column c among rows top.. until one nonzero entry remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool reduced = false;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[top][k];
        reduced = true;
      }
      if (!reduced) break;
    }
    if (rows[top][c] == 0) continue;
    if (rows[top][c] < 0) {
      for (auto& x : rows[top]) x = -x;
    }
    for (std::size_t r = 0; r < top; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[top][k];
    }
    ++top;
  }
  rows.resize(top);
  return rows;
}

}  // namespace quasitile::detail
