// Copyright 2026 The Supertoken Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the installed binary through a shell; SUPERTOKEN_CLI is set by CMake.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "supertoken/graph_io.hpp"
#include "supertoken/isomorphism.hpp"
#include "supertoken/tokens.hpp"

namespace supertoken {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
};

Result Cmd(const std::string& args) {
  const std::string cmd = std::string(SUPERTOKEN_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), pipe)) > 0;)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("supertoken_cli_" + std::string(
                                    ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, BuildRoundTrip) {
  ASSERT_EQ(Cmd("build cycle 7 --construction supertoken -k 2 --out " + Path("g.json")).code, 0);
  const Graph g = LoadGraph(Path("g.json"));
  EXPECT_EQ(g, SupertokenGraph(MakeCycle(7), 2));
  ASSERT_EQ(Cmd("build file " + Path("g.json") + " --format dot --out " + Path("g.dot")).code, 0);
  EXPECT_EQ(LoadGraph(Path("g.dot")), g);
  ASSERT_EQ(Cmd("build cycle 5 --construction augmented -p 2 --out " + Path("a.json")).code, 0);
  EXPECT_TRUE(IsIsomorphic(LoadGraph(Path("a.json")), AugmentedTwoTokenCycle(5, 2)));
}

TEST_F(Cli, Invariants) {
  ASSERT_EQ(Cmd("build hypercube 3 --construction supertoken -k 2 --out " + Path("q.json")).code, 0);
  const Result r = Cmd("invariants " + Path("q.json") + " --which alpha,omega,diameter");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["alpha"]["value"], 20);
  EXPECT_EQ(j["alpha"]["verified"], true);
  EXPECT_EQ(j["omega"]["value"], 2);
  EXPECT_EQ(j["diameter"], 6);
  EXPECT_EQ(Cmd("invariants " + Path("q.json") + " --which nonsense").code, 2);
}

TEST_F(Cli, Bounds) {
  Result r = Cmd("bound bipartite 4 4 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)[0]["bound"], 20);
  r = Cmd("bound table3 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n5,1,5,30,110,365,1001,2520,5720,12190,24310\n"), std::string::npos);
  r = Cmd("bound alpha-2cycle 9 --format csv");
  EXPECT_EQ(r.out, "n,alpha\n9,22\n");
  r = Cmd("bound alpha-augmented 5 4");
  EXPECT_EQ(json::parse(r.out)[0]["alpha"], 15);
  ASSERT_EQ(Cmd("build cycle-power 20 4 --out " + Path("c.json")).code, 0);
  r = Cmd("bound partition " + Path("c.json") + " -k 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["value"], "104");
  EXPECT_EQ(Cmd("bound alpha-2cycle 1").code, 2);
}

TEST_F(Cli, Spectrum) {
  ASSERT_EQ(Cmd("build complete 4 --construction supertoken -k 3 --out " + Path("k.json")).code, 0);
  // Degree partition of F_3(K_4): the four stacks, the twelve 2+1 configurations,
  // the four 1+1+1 configurations.
  const Graph g = LoadGraph(Path("k.json"));
  json classes = json::array({json::array(), json::array(), json::array()});
  for (int v = 0; v < g.num_vertices(); ++v)
    classes[g.degree(v) / 3 - 1].push_back(v);
  WriteFile(Path("part.json"), json{{"classes", classes}}.dump());
  const Result r = Cmd("spectrum " + Path("k.json") + " --laplacian --quotient " + Path("part.json"));
  ASSERT_EQ(r.code, 0);
  const auto eigs = json::parse(r.out)["eigenvalues"].get<std::vector<double>>();
  ASSERT_EQ(eigs.size(), 3u);
  EXPECT_NEAR(eigs[1], 6 - std::sqrt(6.0), 1e-9);
  WriteFile(Path("bad.txt"), "0 1\n2\n");
  EXPECT_EQ(Cmd("spectrum " + Path("k.json") + " --quotient " + Path("bad.txt")).code, 2);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(Cmd("build cycle 100 --construction supertoken -k 4").code, 3);
  EXPECT_EQ(Cmd("build cycle 100 --construction supertoken -k 3 --force --out " + Path("x.json")).code,
            0);
  EXPECT_EQ(Cmd("build nosuchfamily 3").code, 2);
  EXPECT_EQ(Cmd("bound bipartite 1 x 2").code, 2);
  EXPECT_EQ(Cmd("").code, 2);
  EXPECT_EQ(Cmd("invariants " + Path("missing.json")).code, 2);
  EXPECT_EQ(Cmd("verify table3").code, 0);
  EXPECT_EQ(Cmd("verify fig7-cliques").code, 1);
  EXPECT_EQ(Cmd("verify no-such-case").code, 2);
}

TEST_F(Cli, VerifyIsDeterministic) {
  const Result a = Cmd("verify all");
  const Result b = Cmd("verify all");
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("summary:"), std::string::npos);
  const Result j = Cmd("verify all --format json");
  EXPECT_EQ(json::parse(j.out).size(), 24u);
}

TEST_F(Cli, RateAndColorLift) {
  ASSERT_EQ(Cmd("build hypercube 3 --out " + Path("q.json")).code, 0);
  Result r = Cmd("rate " + Path("q.json") + " -k 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(json::parse(r.out)["rate"].get<double>(), 2.1609, 1e-4);
  r = Cmd("color-lift " + Path("q.json") + " -k 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["chi"], 2);
}

}  // namespace
}  // namespace supertoken
