#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace surfcurve;
using namespace testutil;

TEST(Json, CurveRoundTrip) {
  SurfaceMap m = n3();
  SolveResult r = solve(m, Goal::NonorTwoSided);
  Json j = curve_to_json(m, r.curve);
  CurveDrawing back = curve_from_json(m, Json::parse(j.dump()));
  EXPECT_EQ(back.count, r.curve.count);
  EXPECT_EQ(crossing_sequence(m, back).size(), crossing_sequence(m, r.curve).size());
  EXPECT_EQ(classify_by_cutting(m, back).kind, r.cls.kind);
}

TEST(Json, CurveWithoutChordDataIsInferred) {
  SurfaceMap m = projective_plane();
  CurveDrawing d = curve_from_json(m, Json::parse(R"({"crossings":[{"edge":1,"face":1}]})"));
  EXPECT_EQ(d.count[0], 1);
  EXPECT_TRUE(classify_by_cutting(m, d).one_sided);
}

TEST(Json, MalformedCurve) {
  try {
    curve_from_json(projective_plane(), Json::parse(R"({"crossings":[{"face":1}]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.error_class(), ErrorClass::InvalidInput);
  }
}

TEST(Json, Rho) {
  RhoMap rho = rho_from_json(Json::parse(R"({"k":1,"matrix":[[1,1,0]],"A":[[1]]})"), 3);
  EXPECT_EQ(rho.k(), 1);
  EXPECT_TRUE(rho.accepts(1));
  EXPECT_FALSE(rho.accepts(0));
  EXPECT_EQ(rho.matrix.apply(0b011), Bits{0});
  EXPECT_EQ(rho.matrix.apply(0b001), Bits{1});
  EXPECT_THROW(rho_from_json(Json::parse(R"({"k":1,"matrix":[[1,1]],"A":[]})"), 3), Error);
  EXPECT_THROW(rho_from_json(Json::parse(R"({"k":1,"matrix":[[1,2,0]],"A":[]})"), 3), Error);
}

TEST(Json, LoopsRoundTripParity) {
  SurfaceMap m = klein_bottle();
  LoopSystem ls = standard_loops(m);
  LoopSystem back = loops_from_json(m, Json::parse(loops_to_json(ls).dump()));
  EXPECT_EQ(back.genus, ls.genus);
  EXPECT_EQ(back.parity, ls.parity);
  EXPECT_EQ(back.kind, LoopKind::Standard);
}

TEST(Json, InputHashIsStable) {
  EXPECT_EQ(input_hash(""), "cbf29ce484222325");
  EXPECT_NE(input_hash("a"), input_hash("b"));
}
