// Comparison of finitely generated subgroups of Q(phi)^4 modulo Z^4.
#pragma once

#include "linalg.hpp"
#include "quasitile/delzant.hpp"

#include <vector>

namespace groups {

using quasitile::GoldenVec4;
using quasitile::Integer;
using quasitile::Rational;

/// Hermite form of <gens> + Z^4 in coordinates (a_1, b_1, ..., a_4, b_4).
inline quasitile::detail::IMatrix lattice_hnf(const std::vector<GoldenVec4>& gens) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    std::vector<Rational> r;
    for (const auto& x : g) {
      r.push_back(x.a());
      r.push_back(x.b());
    }
    rows.push_back(std::move(r));
  }
  for (int i = 0; i < 4; ++i) {
    std::vector<Rational> r(8, Rational(0));
    r[static_cast<std::size_t>(2 * i)] = 1;
    rows.push_back(std::move(r));
  }
  Integer d = 1;
  for (const auto& r : rows)
    for (const auto& x : r) d = lcm(d, x.get_den());
  quasitile::detail::IMatrix ints;
  for (const auto& r : rows) {
    std::vector<Integer> ir;
    for (const auto& x : r) {
      Rational s = x * d;
      s.canonicalize();
      ir.push_back(s.get_num());
    }
    ints.push_back(std::move(ir));
  }
  // The scale d is folded into the comparison by appending it.
  auto h = quasitile::detail::hermite_normal_form(std::move(ints));
  h.push_back(std::vector<Integer>{d});
  return h;
}

inline bool same_mod_z4(const std::vector<GoldenVec4>& a, const std::vector<GoldenVec4>& b) {
  // Equal lattices give equal Hermite forms once expressed at a common scale.
  std::vector<GoldenVec4> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto hab = lattice_hnf(both);
  return lattice_hnf(a) == hab && lattice_hnf(b) == hab;
}

}  // namespace groups
