#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace surfcurve;
using namespace testutil;

TEST(GoalExpansion, InstanceCounts) {
  EXPECT_EQ(expand_goal(Goal::Orienting, 5).size(), 1u);
  EXPECT_EQ(expand_goal(Goal::OneSidedAny, 5).size(), 1u);
  EXPECT_EQ(expand_goal(Goal::NonorOneSided, 4).size(), 1u);
  EXPECT_EQ(expand_goal(Goal::NonorOneSided, 5).size(), 5u);
  EXPECT_EQ(expand_goal(Goal::NonorTwoSided, 5).size(), 5u);
  EXPECT_EQ(expand_goal(Goal::NonorTwoSided, 4).size(), 12u);
}

TEST(GoalExpansion, AcceptedSignaturesMatchTheGoal) {
  // every canonical signature is accepted by some instance exactly when its
  // class meets the goal
  for (int g = 1; g <= 6; ++g)
    for (Goal goal : {Goal::Orienting, Goal::NonorOneSided, Goal::NonorTwoSided, Goal::OneSidedAny}) {
      auto inst = expand_goal(goal, g);
      for (Bits s = 0; s < (Bits{1} << g); ++s) {
        bool accepted = false;
        for (const auto& r : inst) accepted |= r.accepts(r.matrix.apply(s));
        CurveClass c = classify_from_signature({s, g, LoopKind::Canonical}, g);
        bool want = s != 0 && goal_accepts(goal, c);
        EXPECT_EQ(accepted, want) << goal_name(goal) << " g=" << g << " s=" << s;
      }
    }
}

TEST(Solver, OrientingLengthsOnUnitFixtures) {
  EXPECT_EQ(solve(projective_plane(), Goal::Orienting).length, Rational(1));
  EXPECT_EQ(solve(klein_bottle(), Goal::Orienting).length, Rational(2));
  EXPECT_EQ(solve(n3(), Goal::Orienting).length, Rational(3));
}

TEST(Solver, OtherGoals) {
  EXPECT_EQ(solve(klein_bottle(), Goal::OneSidedAny).length, Rational(1));
  SolveResult r = solve(n3(), Goal::NonorTwoSided);
  EXPECT_EQ(r.length, Rational(2));
  EXPECT_EQ(popcount(r.canonical_signature), 2);
  EXPECT_FALSE(r.cls.one_sided);
}

TEST(Solver, Infeasibility) {
  try {
    solve(klein_bottle(), Goal::NonorTwoSided);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.error_class(), ErrorClass::Infeasible);
  }
  EXPECT_THROW(solve(projective_plane(), Goal::NonorOneSided), Error);
  try {
    solve(torus(), Goal::Orienting);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.error_class(), ErrorClass::InvalidInput);
  }
}

TEST(Solver, CustomRhoWithZeroTargetGivesTheTrivialCurve) {
  Z2Matrix m(1, 1);
  m.set(0, 0, true);
  SolveResult r = shortest_constrained_curve(projective_plane(), RhoMap{m, {0}});
  EXPECT_EQ(r.length, Rational(0));
  EXPECT_TRUE(r.curve.trivial);
}

TEST(Solver, CustomRhoOddityOnKleinBottle) {
  Z2Matrix m(1, 2);
  m.set(0, 0, true);
  m.set(0, 1, true);
  SolveResult r = shortest_constrained_curve(klein_bottle(), RhoMap{m, {1}});
  EXPECT_EQ(r.length, Rational(1));
  EXPECT_TRUE(r.cls.one_sided);
}

TEST(Solver, VoltageWalkOnProjectivePlane) {
  SurfaceMap g = dual(projective_plane()).map;
  auto w = shortest_voltage_walk(g, EdgeLabeling{1, {1}}, {1}, hitting_sources(g));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->length, Rational(1));
  EXPECT_EQ(w->walk.steps.size(), 1u);
}

TEST(Solver, OutputContractOnRandomMaps) {
  std::mt19937 rng(4);
  for (int i = 0; i < 30; ++i) {
    SurfaceMap m = random_refinement(base_word(i % 2, 1 + i % 3), 15, rng);
    for (Goal goal : {Goal::Orienting, Goal::NonorOneSided, Goal::NonorTwoSided, Goal::OneSidedAny}) {
      SolveResult r;
      try {
        r = solve(m, goal);
      } catch (const Error& e) {
        EXPECT_EQ(e.error_class(), ErrorClass::Infeasible);
        continue;
      }
      EXPECT_TRUE(is_simple(m, r.curve));
      EXPECT_LE(r.multiplicity, 2);
      EXPECT_TRUE(goal_accepts(goal, classify_by_cutting(m, r.curve)));
      EXPECT_EQ(curve_length(m, r.curve), r.length);
    }
  }
}

TEST(Solver, BoundedSearch) {
  EXPECT_FALSE(solve_bounded(n3(), Goal::Orienting, Rational(5, 2)).has_value());
  auto r = solve_bounded(n3(), Goal::Orienting, Rational(3));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->length, Rational(3));
}
