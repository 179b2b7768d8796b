#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = mclift::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(MCLIFT_SOURCE_DIR) + "/fixtures/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("mclift_cli_test_" + name)).string();
}

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, Topology) {
  auto r = run({"topology", fixture("paper-example.srf")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("chi=0 closed=true orientable=true b1=2", 0), 0u) << r.out;
  auto k = run({"topology", fixture("grid-klein-3x3.srf")});
  EXPECT_NE(k.out.find("orientable=false b1=1"), std::string::npos);
}

TEST(Cli, Validate) {
  EXPECT_EQ(run({"validate", fixture("prism.srf")}).code, 0);
  const std::string bad = temp_path("bad.srf");
  std::ofstream(bad) << "surface s\nvertex a 0 0\nvertex b 1 0\nvertex c 0 1\nvertex d 1 1\nvertex e 2 2\n"
                        "face x : a b c\nface y : a b d\nface z : a b e\n";
  auto r = run({"validate", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("EdgeOverused"), std::string::npos);
  const std::string broken = temp_path("broken.srf");
  std::ofstream(broken) << "surface s\nvertex a 0 0\nvertex b 1 0\nface f : a b\n";
  auto p = run({"validate", broken});
  EXPECT_EQ(p.code, 3);
  EXPECT_NE(p.err.find("line 4"), std::string::npos);
}

TEST(Cli, StressBasisBlocksAreStressFiles) {
  auto r = run({"stress-basis", fixture("fan-disk.srf")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("d=1\n", 0), 0u);
  const std::string block = r.out.substr(r.out.find('\n') + 1);
  EXPECT_EQ(mclift::io::parse_stress_file(block).size(), 6u);
}

TEST(Cli, MonodromyOfPaperStress) {
  auto r = run({"monodromy", fixture("paper-example.srf"), "--stress-file", fixture("paper-example.stress")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(": 0 0 32\n"), std::string::npos);
  EXPECT_NE(r.out.find(": 0 0 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("monodromy-free: no"), std::string::npos);
  auto fan = run({"monodromy", fixture("fan-disk.srf"), "--basis-index", "0"});
  EXPECT_NE(fan.out.find("monodromy-free: yes"), std::string::npos);
}

TEST(Cli, MonodromyFreeBound) {
  auto r = run({"monodromy-free", fixture("paper-example.srf")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim=2"), std::string::npos);
  EXPECT_NE(r.out.find("dim >= d - 3*b1: 2 >= -2 holds"), std::string::npos);
}

TEST(Cli, LiftFanDiskWritesObj) {
  const std::string obj = temp_path("fan.obj");
  auto r = run({"lift", fixture("fan-disk.srf"), "--basis-index", "0", "--base-face", "OAB", "--obj", obj});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string text = read(obj);
  EXPECT_NE(text.find("f 1 2 3"), std::string::npos);
  EXPECT_NE(r.out.find("height OAB 0 0 0"), std::string::npos);
}

TEST(Cli, LiftPaperIsNotMonodromyFree) {
  auto r = run({"lift", fixture("paper-example.srf"), "--stress-file", fixture("paper-example.stress"),
                "--base-face", "f0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotMonodromyFree"), std::string::npos);
}

TEST(Cli, FundamentalDomain) {
  auto r = run({"fundamental-domain", fixture("paper-example.srf"), "--stress-file",
                fixture("paper-example.stress"), "--base-face", "f0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("height f7 -4 -8 12"), std::string::npos);
  EXPECT_NE(r.out.find("height f8 -16 -8 0"), std::string::npos);
  EXPECT_NE(r.out.find("single-valued: no"), std::string::npos);
}

TEST(Cli, FixtureOutput) {
  const std::string out = temp_path("torus.srf");
  EXPECT_EQ(run({"fixture", "grid-torus", "3", "3", "--out", out}).code, 0);
  EXPECT_EQ(read(out), read(fixture("grid-torus-3x3.srf")));
  EXPECT_EQ(run({"fixture", "grid-torus", "2", "3"}).code, 3);
  EXPECT_EQ(run({"fixture", "moebius"}).code, 3);
  auto disk = run({"fixture", "triangulated-disk", "4", "8"});
  EXPECT_EQ(disk.code, 0);
  EXPECT_EQ(disk.out.rfind("surface triangulated-disk-4-8\n", 0), 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  EXPECT_EQ(run({"topology"}).code, 3);
  EXPECT_EQ(run({"topology", temp_path("does-not-exist.srf")}).code, 3);
  EXPECT_EQ(run({"lift", fixture("fan-disk.srf"), "--base-face", "OAB"}).code, 3);
  EXPECT_EQ(run({"monodromy", fixture("fan-disk.srf"), "--basis-index", "5"}).code, 3);
  EXPECT_EQ(run({"monodromy", fixture("fan-disk.srf"), "--basis-index", "0", "--stress-file",
                 fixture("paper-example.stress")})
                .code,
            3);
  EXPECT_EQ(run({"lift", fixture("fan-disk.srf"), "--basis-index", "0", "--base-face", "nope"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}
