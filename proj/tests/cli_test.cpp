// Copyright 2026 The infrob Authors.
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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "infrob/cli.hpp"
#include "infrob/infrob.hpp"

namespace infrob {
namespace {

const std::string kGames = INFROB_GAMES_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "infrob");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string game(const std::string& name) { return kGames + "/" + name; }

std::string expected(const std::string& name) {
  std::ifstream in(kGames + "/expected/" + name + ".txt");
  EXPECT_TRUE(in.good()) << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Golden {
  const char* name;
  std::vector<std::string> args;
  int code;
};

const std::vector<Golden>& goldens() {
  static const std::vector<Golden> g{
      {"solve_bfr_dominant", {"solve", "bfr", game("dominant.game")}, 0},
      {"solve_dr_support_trace", {"solve", "dr", game("support.game"), "--trace"}, 0},
      {"solve_icr_dominant_witnesses", {"solve", "icr", game("dominant.game"), "--witnesses"}, 0},
      {"solve_dr_pinned", {"solve", "dr", game("pinned.game")}, 0},
      {"bne_pennies", {"bne", game("pennies.game")}, 0},
      {"bne_dominant", {"bne", game("dominant.game")}, 0},
      {"consistent_inconsistent", {"consistent", game("inconsistent.game")}, 1},
      {"consistent_dominant", {"consistent", game("dominant.game")}, 0},
      {"canonical_support", {"canonical", game("support.game")}, 0},
      {"check_union_pennies",
       {"check", "union", game("pennies.game"), "--samples", "50", "--seed", "7"}, 0},
      {"check_union_support",
       {"check", "union", game("support.game"), "--samples", "3", "--seed", "1"}, 0},
      {"check_bne_union_pennies",
       {"check", "bne-union", game("pennies.game"), "--samples", "2", "--seed", "7"}, 0},
      {"gen_env", {"gen", "env", "--spec", game("generator.game")}, 0},
      {"gen_structure", {"gen", "structure", "--spec", game("support.game")}, 0},
  };
  return g;
}

TEST(CliTest, GoldenReports) {
  for (const auto& g : goldens()) {
    auto r = run(g.args);
    EXPECT_EQ(r.code, g.code) << g.name << ": " << r.err;
    EXPECT_EQ(r.out, expected(g.name)) << g.name;
  }
}

TEST(CliTest, ByteIdenticalAcrossRuns) {
  for (const auto& g : goldens()) {
    auto a = run(g.args), b = run(g.args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << g.name;
    EXPECT_EQ(a.err, b.err) << g.name;
  }
}

TEST(CliTest, DominantSolveIsSingleton) {
  auto r = run({"solve", "bfr", game("dominant.game")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("player1 t: top\n"), std::string::npos);
  EXPECT_NE(r.out.find("player2 u: left\n"), std::string::npos);
}

TEST(CliTest, UnionOnPennies) {
  auto r = run({"check", "union", game("pennies.game"), "--samples", "50", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("counterexamples: 0"), std::string::npos);
}

TEST(CliTest, MissingBlocks) {
  auto r = run({"solve", "icr", game("nostructure.game")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("structure block required"), std::string::npos);
  r = run({"solve", "dr", game("nostructure.game")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("restriction block required"), std::string::npos);
  r = run({"bne", game("nostructure.game")});
  EXPECT_EQ(r.code, 2);
  r = run({"gen", "env", "--spec", game("pennies.game")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("generator block required"), std::string::npos);
}

TEST(CliTest, UsageErrors) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{}, {"frobnicate"}, {"solve", "nash", game("pennies.game")},
        {"solve", "bfr", game("pennies.game"), "--bogus"}, {"check", "sideways", game("pennies.game")},
        {"gen", "env"}}) {
    auto r = run(args);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("Usage"), std::string::npos) << r.err;
  }
  auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("solve"), std::string::npos);
}

TEST(CliTest, InputErrors) {
  auto r = run({"solve", "bfr", game("does-not-exist.game")});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());

  auto path = ::testing::TempDir() + "/broken.game";
  {
    std::ofstream f(path);
    f << "[environment]\nstates = w\nplayer1.colour = red\n";
  }
  r = run({"solve", "bfr", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3, column 1"), std::string::npos) << r.err;

  r = run({"bne", game("dominant.game"), "--cap", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("2^2 * 2^1"), std::string::npos) << r.err;

  r = run({"check", "union", game("inconsistent.game"), "--samples", "1"});
  EXPECT_EQ(r.code, 0);  // samples are drawn consistent; the file's structure is not used
}

TEST(CliTest, CanonicalOutputReparses) {
  auto r = run({"canonical", game("support.game")});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(game("support.game"));
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  text = text.substr(0, text.find("[generator]")) + r.out;
  auto f = io::parse_game_file(text);
  ASSERT_TRUE(f.structure.has_value());
  EXPECT_TRUE(is_consistent(*f.env, *f.structure, *f.restriction).consistent);
}

TEST(CliTest, GeneratedEnvironmentReparses) {
  auto r = run({"gen", "env", "--spec", game("generator.game")});
  ASSERT_EQ(r.code, 0);
  auto f = io::parse_game_file(r.out);
  ASSERT_TRUE(f.env.has_value());
  EXPECT_EQ(io::serialize(f), r.out);
}

}  // namespace
}  // namespace infrob
