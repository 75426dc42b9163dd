#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace surfcurve;
using namespace testutil;

namespace {

void expect_standard(const SurfaceMap& m) {
  LoopSystem ls = standard_loops(m);
  int g = m.euler_genus();
  EXPECT_EQ(ls.genus, g);
  EXPECT_EQ(ls.word, normal_form_template(g, false));
  for (int i = 0; i < g; ++i) {
    CurveClass c = classify_by_cutting(m, loop_drawing(m, ls, i));
    EXPECT_EQ(c.one_sided, ls.one_sided[i] != 0) << ls.names[i];
    bool expect_one_sided = ls.names[i] == "z" || ls.names[i] == "y";
    EXPECT_EQ(ls.one_sided[i] != 0, expect_one_sided) << ls.names[i];
  }
}

}  // namespace

TEST(StandardLoops, TemplateWords) {
  EXPECT_EQ(standard_loops(projective_plane()).word_text, "z z");
  EXPECT_EQ(standard_loops(klein_bottle()).word_text, "y w y' w");
  EXPECT_EQ(standard_loops(n3()).word_text, "z z a1 b1 a1' b1'");
  EXPECT_EQ(standard_loops(word_map({"+1 +1 +2 +2 +3 +3 +4 +4"})).word_text, "y w y' w a1 b1 a1' b1'");
}

TEST(StandardLoops, HandMadeSurfaces) {
  for (const auto& m : {projective_plane(), klein_bottle(), n3(), word_map({"+1 +1 +2 +3 -2 -3"}),
                        word_map({"+1 +2 -1 +2"}), word_map({"+1 +1 +2 +2 +3 +3 +4 +4 +5 +5"})})
    expect_standard(m);
}

TEST(StandardLoops, RandomMaps) {
  std::mt19937 rng(17);
  for (int i = 0; i < 25; ++i) expect_standard(random_refinement(base_word(i % 2, 1 + i % 3), 20, rng));
}

TEST(StandardLoops, RejectsOrientableSurfaces) { EXPECT_THROW(standard_loops(torus()), Error); }

TEST(CanonicalLoops, OrientableSurfaces) {
  LoopSystem t = canonical_loops_orientable(torus());
  EXPECT_EQ(t.genus, 2);
  EXPECT_EQ(t.word, normal_form_template(2, true));
  LoopSystem s = canonical_loops_orientable(sphere());
  EXPECT_EQ(s.genus, 0);
  EXPECT_TRUE(s.loops.empty());
}

TEST(HittingPaths, ImpliedLoopsCutToADisk) {
  std::mt19937 rng(5);
  for (int i = 0; i < 25; ++i) {
    SurfaceMap m = random_refinement(base_word(i % 2, i % 3), 15, rng);
    HittingPaths hp = hitting_paths(m);
    EXPECT_EQ(static_cast<int>(hp.leftover.size()), m.euler_genus());
    EXPECT_EQ(hp.paths.size(), 2 * hp.leftover.size());
    EXPECT_TRUE(implied_loops_cut_to_disk(m, hp));
    for (const auto& p : hp.paths) EXPECT_EQ(p.front(), hp.base);
  }
}
