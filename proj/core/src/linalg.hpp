// Exact dense linear algebra over Q and Z.
#pragma once

#include "quasitile/golden.hpp"

#include <optional>
#include <vector>

namespace quasitile::detail {

using RMatrix = std::vector<std::vector<Rational>>;
using IMatrix = std::vector<std::vector<Integer>>;

/// Unique solution of A x = b, or nullopt if A is singular.
std::optional<std::vector<Rational>> solve(RMatrix a, std::vector<Rational> b);

/// Inverse of a square matrix; throws DivisionByZero if singular.
RMatrix inverse(const RMatrix& a);

/// Row Hermite normal form of the lattice spanned by the rows: upper
/// echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
IMatrix hermite_normal_form(IMatrix rows);

}  // namespace quasitile::detail
