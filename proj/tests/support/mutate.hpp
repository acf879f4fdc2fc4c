// Patch mutations used to exercise the validator.
#pragma once

#include "quasitile/tiling.hpp"

#include <map>
#include <optional>
#include <utility>

namespace mutate {

/// Indices of the two halves of a rhombus whose four outer edges are all
/// shared with neighbouring triangles.
inline std::optional<std::pair<std::size_t, std::size_t>> interior_rhombus(const quasitile::Patch& p) {
  using quasitile::QuasiPoint;
  std::map<std::pair<QuasiPoint, QuasiPoint>, int> uses;
  const auto key = [](const QuasiPoint& a, const QuasiPoint& b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
  for (const auto& t : p.triangles) {
    ++uses[key(t.apex, t.base1)];
    ++uses[key(t.apex, t.base2)];
    ++uses[key(t.base1, t.base2)];
  }
  std::map<std::pair<QuasiPoint, QuasiPoint>, std::vector<std::size_t>> by_base;
  for (std::size_t i = 0; i < p.triangles.size(); ++i) {
    by_base[key(p.triangles[i].base1, p.triangles[i].base2)].push_back(i);
  }
  for (const auto& [base, idx] : by_base) {
    if (idx.size() != 2) continue;
    bool interior = true;
    for (std::size_t i : idx) {
      const auto& t = p.triangles[i];
      interior = interior && uses[key(t.apex, t.base1)] == 2 && uses[key(t.apex, t.base2)] == 2;
    }
    if (interior) return std::pair{idx[0], idx[1]};
  }
  return std::nullopt;
}

/// Reflects one rhombus in place: same outline, mirrored decorations.
inline quasitile::Patch reflect_tile(const quasitile::Patch& p, std::pair<std::size_t, std::size_t> halves) {
  auto tris = p.triangles;
  for (std::size_t i : {halves.first, halves.second}) {
    auto& t = tris[i];
    std::swap(t.base1, t.base2);
    t.chirality = t.chirality == quasitile::Chirality::Left ? quasitile::Chirality::Right : quasitile::Chirality::Left;
  }
  return quasitile::Patch::from_triangles(p.scale_power, std::move(tris));
}

}  // namespace mutate
