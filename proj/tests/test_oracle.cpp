#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace surfcurve;
using namespace testutil;

namespace {

EnumerationBudget budget(Rational w, int cap = 2) {
  EnumerationBudget b;
  b.max_weight = w;
  b.cap = cap;
  return b;
}

}  // namespace

TEST(Enumeration, SmallSurfaces) {
  // the trivial curve plus the core curve of the crosscap
  EXPECT_EQ(enumerate_simple_curves(projective_plane(), budget(Rational(10), 1)).size(), 2u);
  EXPECT_EQ(enumerate_simple_curves(klein_bottle(), budget(Rational(10), 1)).size(), 4u);
  EXPECT_EQ(enumerate_simple_curves(klein_bottle(), budget(Rational(10), 2)).size(), 23u);
}

TEST(Enumeration, EveryCurveIsSimpleAndDistinct) {
  auto curves = enumerate_simple_curves(n3(), budget(Rational(4), 2));
  std::set<std::vector<std::array<int, 4>>> keys;
  for (const auto& d : curves) {
    EXPECT_TRUE(is_simple(n3(), d));
    EXPECT_LE(multiplicity(d), 2);
    keys.insert(detail::canonical_crossings(n3(), d));
  }
  EXPECT_EQ(keys.size(), curves.size());
  EXPECT_TRUE(curves.front().trivial);
}

TEST(BruteShortest, FixtureValues) {
  EXPECT_EQ(brute_shortest(projective_plane(), Goal::Orienting, budget(Rational(5))).length, Rational(1));
  EXPECT_EQ(brute_shortest(klein_bottle(), Goal::Orienting, budget(Rational(5))).length, Rational(2));
  EXPECT_EQ(brute_shortest(n3(), Goal::NonorTwoSided, budget(Rational(5))).length, Rational(2));
  EXPECT_EQ(brute_shortest(n3(), Goal::Orienting, budget(Rational(5))).length, Rational(3));
}

TEST(BruteShortest, NothingWithinBudgetIsInfeasible) {
  try {
    brute_shortest(n3(), Goal::Orienting, budget(Rational(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.error_class(), ErrorClass::Infeasible);
  }
}

TEST(BruteShortest, CandidateCapIsEnforced) {
  EnumerationBudget b = budget(Rational(100), 3);
  b.max_candidates = 50;
  try {
    brute_shortest(word_map({"+1 +1 +2 +2 +3 +3 +4 +4 +5 +5"}), Goal::Orienting, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "BudgetTooLarge");
  }
}

TEST(BruteShortest, AgreesWithTheSolverOnRandomMaps) {
  std::mt19937 rng(23);
  for (int i = 0; i < 12; ++i) {
    SurfaceMap m = random_refinement(base_word(0, 1 + i % 3), 4, rng);
    SolveResult r = solve(m, Goal::Orienting);
    EXPECT_EQ(brute_shortest(m, Goal::Orienting, budget(r.length)).length, r.length);
  }
}
