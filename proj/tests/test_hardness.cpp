#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace surfcurve;
using namespace testutil;

TEST(Hardness, SinglePointIsAMobiusBandWithADisk) {
  HardnessInstance inst = grid_to_surface(parse_grid("0 0\n"));
  EXPECT_EQ(inst.map.euler_genus(), 1);
  EXPECT_FALSE(inst.map.orientable());
  EXPECT_EQ(inst.map.num_edges(), 36);
}

TEST(Hardness, SquareGrid) {
  GridGraph g = parse_grid(read_text(data_path("grids/square2x2.txt")));
  HardnessInstance inst = grid_to_surface(g);
  EXPECT_EQ(inst.n, 4);
  EXPECT_EQ(inst.map.euler_genus(), 4);
  EXPECT_EQ(inst.map.num_edges(), 36 * 4 + 4);
  EXPECT_EQ(inst.epsilon, Rational(1, 64));
  EXPECT_EQ(inst.threshold, Rational(9, 2));
}

TEST(Hardness, InputErrors) {
  GridGraph g = parse_grid("0 0\n1 0\n");
  try {
    grid_to_surface(g, Rational(1, 24));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "EpsilonTooLarge");
  }
  EXPECT_NO_THROW(grid_to_surface(g, Rational(1, 25)));
  try {
    grid_to_surface(parse_grid("0 0\n2 0\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "DisconnectedGrid");
  }
  EXPECT_THROW(parse_grid("0 0\n0 0\n"), Error);
  EXPECT_THROW(parse_grid("0 x\n"), Error);
}

TEST(Hardness, RoundTripHamiltonianSquare) {
  RoundTrip rt = reduction_roundtrip(parse_grid(read_text(data_path("grids/square2x2.txt"))));
  EXPECT_TRUE(rt.hamiltonian);
  EXPECT_TRUE(rt.short_curve);
  EXPECT_TRUE(rt.witness_ok);
  ASSERT_TRUE(rt.length && rt.witness_length);
  EXPECT_LE(*rt.length, *rt.witness_length);
}

TEST(Hardness, RoundTripPath) {
  RoundTrip rt = reduction_roundtrip(parse_grid(read_text(data_path("grids/path3.txt"))));
  EXPECT_FALSE(rt.hamiltonian);
  EXPECT_FALSE(rt.short_curve);
}

TEST(Hardness, HamiltonianCycles) {
  EXPECT_TRUE(hamiltonian_cycle(parse_grid("0 0\n1 0\n0 1\n1 1\n")).has_value());
  EXPECT_FALSE(hamiltonian_cycle(parse_grid("0 0\n1 0\n2 0\n")).has_value());
  auto c = hamiltonian_cycle(parse_grid(read_text(data_path("grids/rect4x3.txt"))));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->size(), 12u);
}

TEST(Hardness, FixedPolyominoCounts) {
  const std::size_t expected[] = {1, 2, 6, 19, 63, 216};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(all_grid_graphs(n).size(), expected[n - 1]) << n;
}
