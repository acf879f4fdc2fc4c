#include "mutate.hpp"
#include "quasitile/validate.hpp"

#include <gtest/gtest.h>

using namespace quasitile;

TEST(Validate, GeneratedPatchesAreClean) {
  for (auto preset : {SeedPreset::Acute, SeedPreset::Obtuse, SeedPreset::Sun, SeedPreset::Thick, SeedPreset::Thin}) {
    for (int n = 0; n <= 6; ++n) {
      const ValidationReport r = validate(generate(preset, n));
      EXPECT_TRUE(r.ok()) << to_string(preset) << " depth " << n << ": " << r.violation_count();
    }
  }
}

TEST(Validate, SeedsAtLargeScaleAreClean) {
  EXPECT_TRUE(validate(seed_patch(SeedPreset::Sun, 4)).ok());
  EXPECT_TRUE(validate(deflate_patch(seed_patch(SeedPreset::Sun, 5), 2)).ok());
}

TEST(Validate, EmptyPatch) {
  const ValidationReport r = validate(Patch{});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.triangle_count, 0u);
}

TEST(Validate, CountsMatchEuler) {
  const Patch p = generate(SeedPreset::Sun, 5);
  const ValidationReport r = validate(p);
  // V - E + F = 1 for a triangulated disc.
  EXPECT_EQ(static_cast<long>(r.vertex_count) - static_cast<long>(r.edge_count) + static_cast<long>(r.triangle_count), 1);
}

TEST(Validate, ReflectedTileIsDetected) {
  const Patch p = generate(SeedPreset::Sun, 5);
  const auto halves = mutate::interior_rhombus(p);
  ASSERT_TRUE(halves.has_value());
  const Patch bad = mutate::reflect_tile(p, *halves);
  const ValidationReport r = validate(bad);
  EXPECT_GE(r.decoration_mismatches.size(), 1u);
  EXPECT_TRUE(r.edge_issues.empty());
  EXPECT_TRUE(r.overlaps.empty());
  EXPECT_TRUE(r.lattice_issues.empty());
}

TEST(Validate, DuplicateTriangleOverlaps) {
  auto tris = generate(SeedPreset::Thick, 0).triangles;
  tris.push_back(tris.front());
  const ValidationReport r = validate(Patch::from_triangles(1, tris));
  EXPECT_FALSE(r.overlaps.empty());
}

TEST(Validate, ShiftedTriangleOverlaps) {
  const RobinsonTriangle t = seed(TriangleType::Obtuse, Chirality::Left, 0, QuasiPoint());
  RobinsonTriangle s = t;
  // A lattice vector of length phi^-3 keeps the interiors overlapping.
  const QuasiPoint d = phi_inverse_scale(phi_inverse_scale(phi_inverse_scale(dual_star(StarIndex(0)))));
  s.apex += d;
  s.base1 += d;
  s.base2 += d;
  Patch p;
  p.triangles = {t, s};
  const ValidationReport r = validate(p);
  EXPECT_FALSE(r.overlaps.empty());
}

TEST(Validate, TJunctionIsDetected) {
  // Deflate one half of a large thick rhombus but not the other.
  const auto halves = preset_triangles(SeedPreset::Thick, 1);
  std::vector<RobinsonTriangle> tris{halves[0]};
  for (const auto& c : deflate(halves[1])) tris.push_back(c);
  const ValidationReport r = validate(Patch::from_triangles(1, tris));
  bool t_junction = false;
  for (const auto& e : r.edge_issues) t_junction = t_junction || e.what.starts_with("T-junction");
  EXPECT_TRUE(t_junction);
  EXPECT_FALSE(r.lattice_issues.empty());
}

TEST(Validate, WrongScaleIsALatticeIssue) {
  Patch p;
  p.triangles = preset_triangles(SeedPreset::Acute, 1);
  const ValidationReport r = validate(p);
  EXPECT_EQ(r.lattice_issues.size(), 2u);
}
