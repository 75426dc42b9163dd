#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

#include "test_util.hpp"

using namespace testutil;

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(SURFCURVE_CLI) + " " + args + " >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("surfcurve_cli_" + name)).string();
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("check " + data_path("fixtures/klein_bottle.srf")), 0);
  EXPECT_EQ(run("shortest " + data_path("fixtures/n3.srf") + " --goal orienting"), 0);
  EXPECT_EQ(run("check /nonexistent.srf"), 2);
  EXPECT_EQ(run("shortest " + data_path("fixtures/torus.srf") + " --goal orienting"), 2);
  EXPECT_EQ(run("shortest " + data_path("fixtures/klein_bottle.srf") + " --goal nonor2"), 3);
  EXPECT_EQ(run("shortest " + data_path("fixtures/klein_bottle.srf") + " --goal sideways"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
}

TEST(Cli, ShortestThenClassify) {
  std::string curve = tmp("curve.json"), rep = tmp("report.json");
  ASSERT_EQ(run("shortest " + data_path("fixtures/n3.srf") + " --goal nonor2 -o " + curve + " --report " + rep), 0);
  Json r = Json::parse(read_text(rep));
  EXPECT_EQ(r["length_exact"], "2");
  EXPECT_EQ(r["class"], "nonseparating-nonorienting");
  EXPECT_EQ(r["sided"], "two-sided");
  std::string rep2 = tmp("classify.json");
  ASSERT_EQ(run("classify " + data_path("fixtures/n3.srf") + " " + curve + " --report " + rep2), 0);
  Json c = Json::parse(read_text(rep2));
  EXPECT_EQ(c["class"], r["class"]);
  EXPECT_EQ(c["signature"], r["signature"]);
}

TEST(Cli, ReportsAreDeterministic) {
  std::string a = tmp("det_a.json"), b = tmp("det_b.json");
  std::string base = "shortest " + data_path("fixtures/n4.srf") + " --goal nonor1 --report ";
  ASSERT_EQ(run(base + a), 0);
  ASSERT_EQ(run(base + b), 0);
  EXPECT_EQ(read_text(a), read_text(b));
}

TEST(Cli, CoverWritesSidecar) {
  std::string rho = tmp("rho.json"), out = tmp("cover.srf");
  {
    std::ofstream f(rho);
    f << R"({"k":1,"matrix":[[1]],"A":[[1]]})";
  }
  ASSERT_EQ(run("cover " + data_path("fixtures/projective_plane.srf") + " --rho " + rho + " -o " + out), 0);
  SurfaceMap cov = load_surface(read_text(out));
  EXPECT_EQ(cov.euler_characteristic(), 2);
  EXPECT_TRUE(std::filesystem::exists(out + ".json"));
}
