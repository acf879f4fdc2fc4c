#include "quasitile/moment.hpp"

#include <gtest/gtest.h>

using namespace quasitile;

TEST(MomentImage, CanonicalTilesOnFineGrid) {
  for (auto kind : {TileKind::Thick, TileKind::Thin}) {
    const QuasifoldDescriptor d = normalized_descriptor(canonical_tile(kind));
    const MomentImage img = moment_image(d, 101);
    EXPECT_EQ(img.exact.size(), 101u * 101u);
    EXPECT_TRUE(img.all_inside());
    EXPECT_TRUE(img.corners_exact);
    EXPECT_LT(img.corner_max_error, 1e-9);
  }
}

TEST(MomentImage, CornersAreVertices) {
  const QuasifoldDescriptor d = raw_descriptor(RhombusTile{TileKind::Thin, StarIndex(2), QuasiPoint(3, -1, 0, 2)});
  const MomentImage img = moment_image(d, 5);
  const auto v = polytope_vertices(d.spec);  // V13, V14, V24, V23
  EXPECT_EQ(img.exact[0], v[0]);
  EXPECT_EQ(img.exact[4], v[1]);
  EXPECT_EQ(img.exact[24], v[2]);
  EXPECT_EQ(img.exact[20], v[3]);
  EXPECT_TRUE(img.all_inside());
}

TEST(MomentImage, CentreIsBarycentre) {
  const QuasifoldDescriptor d = normalized_descriptor(canonical_tile(TileKind::Thick));
  const MomentImage img = moment_image(d, 3);
  const auto v = polytope_vertices(d.spec);
  const GoldenQuasiPoint sum = v[0] + v[1] + v[2] + v[3];
  EXPECT_EQ(GoldenRat(4) * img.exact[4], sum);
}

TEST(MomentImage, RejectsTinyGrid) {
  const QuasifoldDescriptor d = normalized_descriptor(canonical_tile(TileKind::Thick));
  EXPECT_THROW(moment_image(d, 1), std::invalid_argument);
}

TEST(ChartSlice, AllChartsPass) {
  for (auto kind : {TileKind::Thick, TileKind::Thin}) {
    const QuasifoldDescriptor d = normalized_descriptor(canonical_tile(kind));
    for (const auto& c : d.charts) {
      const SliceReport r = chart_slice_check(d, c, 1000, 7);
      EXPECT_EQ(r.samples, 1000u);
      EXPECT_TRUE(r.passed(1e-9)) << r.max_psi << " " << r.max_diagram_error;
    }
  }
}

TEST(ChartSlice, DeterministicForSeed) {
  const QuasifoldDescriptor d = normalized_descriptor(canonical_tile(TileKind::Thin));
  const SliceReport a = chart_slice_check(d, d.charts[1], 200, 3);
  const SliceReport b = chart_slice_check(d, d.charts[1], 200, 3);
  EXPECT_EQ(a.max_psi, b.max_psi);
  EXPECT_EQ(a.max_diagram_error, b.max_diagram_error);
}
