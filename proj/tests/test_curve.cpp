#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace surfcurve;
using namespace testutil;

TEST(Curve, ProjectivePlaneCoreCurve) {
  SurfaceMap m = projective_plane();
  CurveDrawing d = merge_to_simple_cycle(m, {1});
  ASSERT_TRUE(is_simple(m, d));
  CurveClass c = classify_by_cutting(m, d);
  EXPECT_EQ(c.kind, CurveKind::NonseparatingOrienting);
  EXPECT_TRUE(c.one_sided);
  EXPECT_EQ(curve_length(m, d), Rational(1));
}

TEST(Curve, TrivialCurveIsSeparating) {
  SurfaceMap m = klein_bottle();
  CurveDrawing d = drawing_from_crossings(m, {}, true);
  EXPECT_TRUE(d.trivial);
  CurveClass c = classify_by_cutting(m, d);
  EXPECT_EQ(c.kind, CurveKind::Separating);
  EXPECT_FALSE(c.one_sided);
}

TEST(Curve, KleinBottleClasses) {
  SurfaceMap m = klein_bottle();
  CurveClass both = classify_by_cutting(m, merge_to_simple_cycle(m, {1, 1}));
  EXPECT_EQ(both.kind, CurveKind::NonseparatingOrienting);
  EXPECT_FALSE(both.one_sided);
  CurveClass one = classify_by_cutting(m, merge_to_simple_cycle(m, {1, 2}));
  EXPECT_EQ(one.kind, CurveKind::NonseparatingNonorienting);
  EXPECT_TRUE(one.one_sided);
}

TEST(Curve, CrossingSequenceRoundTrip) {
  std::mt19937 rng(9);
  for (int i = 0; i < 30; ++i) {
    SurfaceMap m = random_refinement(base_word(0, 1 + i % 4), 10, rng);
    CurveDrawing d = orienting_curve(m);
    auto seq = crossing_sequence(m, d);
    CurveDrawing back = drawing_from_crossings(m, seq, false);
    EXPECT_EQ(back.count, d.count);
    EXPECT_TRUE(is_simple(m, back));
    EXPECT_EQ(crossing_sequence(m, back).size(), seq.size());
  }
}

TEST(Curve, NonSimpleDrawingIsRejected) {
  SurfaceMap m = projective_plane();
  CurveDrawing d;
  d.count = {2};
  d.chords = {{{0, 2}, {1, 3}}};  // crossing chords
  EXPECT_FALSE(is_simple(m, d));
}

TEST(Curve, SignatureClassification) {
  int g = 4;
  EXPECT_EQ(classify_from_signature({0, g, LoopKind::Canonical}, g).kind, CurveKind::Separating);
  EXPECT_EQ(classify_from_signature({low_mask(g), g, LoopKind::Canonical}, g).kind, CurveKind::NonseparatingOrienting);
  CurveClass c = classify_from_signature({0b0111, g, LoopKind::Canonical}, g);
  EXPECT_EQ(c.kind, CurveKind::NonseparatingNonorienting);
  EXPECT_TRUE(c.one_sided);
  EXPECT_THROW(classify_from_signature({1, g, LoopKind::Standard}, g), Error);
}

TEST(Walk, MuFromWalkCapsAtTwo) {
  ClosedWalk w{0, {{0, 1}, {0, 1}, {0, 1}, {1, 1}, {1, -1}, {1, 1}, {1, -1}}};
  auto mu = mu_from_walk(2, w);
  EXPECT_EQ(mu[0], 1);
  EXPECT_EQ(mu[1], 2);
}
