#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace surfcurve;
using namespace testutil;

TEST(Cover, ProjectivePlaneDoubleCoverIsTheSphere) {
  SurfaceMap m = projective_plane();
  SubhomologyCover cov = build_cover(m, EdgeLabeling{1, {1}});
  EXPECT_EQ(cov.map.euler_characteristic(), 2);
  EXPECT_TRUE(cov.map.orientable());
  EXPECT_EQ(cov.map.num_components(), 1);
}

TEST(Cover, KirchhoffViolationIsRejected) {
  SurfaceMap m = word_map({"+1 +2 +3", "-3 -2 -1"});
  try {
    build_cover(m, EdgeLabeling{1, {1, 0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "KirchhoffViolation");
  }
}

TEST(Cover, CountsAndEndpointLaw) {
  std::mt19937 rng(8);
  for (int i = 0; i < 12; ++i) {
    SurfaceMap m = random_refinement(base_word(i % 2, 1 + i % 3), 10, rng);
    LoopSystem ls = standard_loops(m);
    int k = 1 + i % 3;
    Z2Matrix mat(k, ls.genus);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < ls.genus; ++c) mat.set(r, c, rng() % 2);
    RhoMap rho{mat, {}};
    EdgeLabeling a = labeling_from_loops(m, ls, rho);
    SubhomologyCover cov = build_cover(m, a);
    int s = 1 << k;
    EXPECT_EQ(cov.map.num_vertices(), s * m.num_vertices());
    EXPECT_EQ(cov.map.num_edges(), s * m.num_edges());
    EXPECT_EQ(cov.map.num_faces(), s * m.num_faces());
    EXPECT_EQ(cov.map.euler_characteristic(), s * m.euler_characteristic());
    for (int t = 0; t < 20; ++t) {
      ClosedWalk w = random_closed_walk(m, 2 + static_cast<int>(rng() % 10), rng);
      Bits start = static_cast<Bits>(rng() % s);
      LiftedWalk lw = lift_walk(cov, a, m, w, start);
      EXPECT_EQ(lw.end_sheet ^ lw.start_sheet, rho.matrix.apply(walk_signature(ls.parity, w)));
    }
  }
}
