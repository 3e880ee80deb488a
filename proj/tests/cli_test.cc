// Copyright 2026 The GCSB Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the gcsb binary and checks output and exit codes.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
};

CliRun Gcsb(const std::string& args) {
  const std::string cmd = std::string(GCSB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gcsb_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  fs::path dir_;
  const std::string data_ = GCSB_DATA_DIR;
};

TEST_F(CliTest, PaperCasesMatchGolden) {
  for (const char* c : {"k3-complete", "k3-symmetric", "fm-derivation"}) {
    const CliRun r = Gcsb(std::string("paper --case=") + c);
    EXPECT_EQ(r.code, 0) << c << "\n" << r.out;
    EXPECT_NE(r.out.find("\nmatch\n"), std::string::npos) << r.out;
  }
}

TEST_F(CliTest, PaperReportsRowLevelDiff) {
  std::string golden = Slurp(fs::path(data_) / "golden" / "fm_derivation.txt");
  golden += "2 R0 + Rsp <= 3 C1 + 5 C2 + 2 C3\n";
  Write("fm_derivation.txt", golden);
  const CliRun r = Gcsb("paper --case=fm-derivation --golden-dir=" + dir_.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("- 2 R0 + Rsp <= 3 C1 + 5 C2 + 2 C3"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);
  EXPECT_EQ(Gcsb("paper --case=k4").code, 2);
  Write("k3_complete.txt", "R{1} <= <= C{1}\n");
  EXPECT_EQ(Gcsb("paper --case=k3-complete --golden-dir=" + dir_.string()).code, 2);
}

TEST_F(CliTest, BoundsReport) {
  const std::string net = data_ + "/networks/k3_complete.json";
  const CliRun r = Gcsb("bounds " + net);
  ASSERT_EQ(r.code, 0);
  const nlohmann::json report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report.size(), 15U);
  EXPECT_EQ(report[0]["provenance"], "CSB({1})");
  EXPECT_EQ(report[0]["rhs_value"], "4");
  EXPECT_EQ(Gcsb("bounds " + net).out, r.out);

  ASSERT_EQ(Gcsb("bounds " + net + " --rules=csb --output=" + Path("b.json")).code, 0);
  EXPECT_EQ(nlohmann::json::parse(Slurp(Path("b.json"))).size(), 7U);
  // thm2 adds searched parameterizations on top.
  const CliRun searched = Gcsb("bounds " + net + " --rules=all");
  ASSERT_EQ(searched.code, 0);
  EXPECT_GT(nlohmann::json::parse(searched.out).size(), 15U);
}

TEST_F(CliTest, BoundsErrors) {
  const std::string net = data_ + "/networks/two_sink.json";
  Write("bad.json", R"({"nodes": ["s"], "color": 1})");
  EXPECT_EQ(Gcsb("bounds " + Path("bad.json")).code, 2);
  EXPECT_EQ(Gcsb("bounds " + Path("missing.json")).code, 2);
  EXPECT_EQ(Gcsb("bounds " + net + " --rules=nope").code, 2);
  EXPECT_EQ(Gcsb("bounds " + net + " --out=xml").code, 2);
  Write("cut.json", R"({"t1": ["s->a"], "t2": ["s->a"]})");
  EXPECT_EQ(Gcsb("bounds " + net + " --cuts=" + Path("cut.json")).code, 3);
  Write("cut2.json", R"({"t1": ["s->a", "b->t1"], "t2": ["s->b", "a->t2"]})");
  EXPECT_EQ(Gcsb("bounds " + net + " --cuts=" + Path("cut2.json")).code, 0);
  // No partial output on failure.
  EXPECT_EQ(Gcsb("bounds " + net + " --cuts=" + Path("cut.json") +
                 " --output=" + Path("out.json")).code, 3);
  EXPECT_FALSE(fs::exists(Path("out.json")));
}

TEST_F(CliTest, VerifyCampaigns) {
  CliRun r = Gcsb("verify --lemma=1 --trials=200 --modular --ground=6");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("min gap: 0 (exact)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("violations: 0"), std::string::npos);
  r = Gcsb("verify --lemma=cor1 --trials=100 --threads=1");
  EXPECT_EQ(Gcsb("verify --lemma=cor1 --trials=100 --threads=4").out, r.out);
  EXPECT_EQ(Gcsb("verify --lemma=appendixA --trials=10 --ground=3 --sets=3 "
                 "--exhaustive").code, 0);
  EXPECT_EQ(Gcsb("verify --lemma=appendixC").code, 0);
  EXPECT_EQ(Gcsb("verify --lemma=3").code, 2);
  EXPECT_EQ(Gcsb("verify --lemma=1 --ground=7").code, 2);
  EXPECT_EQ(Gcsb("verify --lemma=1 --trials=0").code, 2);
  EXPECT_EQ(Gcsb("verify --lemma=1 --exhaustive").code, 2);
}

TEST_F(CliTest, RegionSymmetric) {
  CliRun r = Gcsb("region --symmetric 3 1 1 1 --compare=gcsb --emit=" + Path("v.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(Slurp(Path("v.csv")), "x,y\n0,0\n4,0\n3,3\n1,6\n0,7\n");
  EXPECT_NE(r.out.find("cutset contains gcsb: yes"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("gcsb contains cutset: no, witness (5/2, 9/2)"),
            std::string::npos)
      << r.out;
  r = Gcsb("region --symmetric 3 1 1 1 --compare=cutset --emit=-");
  EXPECT_NE(r.out.find("x,y\n0,0\n4,0\n5/2,9/2\n0,7\n"), std::string::npos)
      << r.out;
  r = Gcsb("region --symmetric 3 0 0 0 --emit=-");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x,y\n0,0\n"), std::string::npos) << r.out;
  EXPECT_EQ(Gcsb("region --symmetric 3 1 1").code, 2);
  EXPECT_EQ(Gcsb("region --symmetric 3 1 1 1 --compare=both").code, 2);
  EXPECT_EQ(Gcsb("region --symmetric 3 1 1 1 --axes=R0").code, 2);
}

TEST_F(CliTest, RegionFromNetworkFile) {
  const std::string net = data_ + "/networks/two_sink.json";
  CliRun r = Gcsb("region " + net + " --emit=-");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("axes: R[x], R[y]"), std::string::npos) << r.out;
  r = Gcsb("region " + data_ + "/networks/k3_complete.json "
           "--axes=A=R{1}+R{2}+R{3},B=R{1,2,3}");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(Gcsb("region " + data_ + "/networks/k3_complete.json").code, 2);
  EXPECT_EQ(Gcsb("region " + net + " --symmetric 2 1 1").code, 2);
}

}  // namespace
