// Copyright 2026 The symgames Authors
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

#include <filesystem>
#include <random>
#include <sstream>

#include "symgames/analytic.h"
#include "symgames/cli/commands.h"
#include "symgames/cli/io.h"
#include "symgames/cli/report.h"
#include "symgames/gadgets.h"

namespace symgames::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kDataDir = SYMGAMES_DATA_DIR;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() /
           ("symgames_cli_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }

  Json Output() const { return Json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST(IoTest, RationalJson) {
  EXPECT_EQ(RationalToJson(Fraction(-3, 4)), Json("-3/4"));
  EXPECT_EQ(RationalFromJson(Json("6/8")), Fraction(3, 4));
  EXPECT_EQ(RationalFromJson(Json(5)), 5);
  EXPECT_EQ(RationalFromJson(Json(0.5)), Fraction(1, 2));
  EXPECT_THROW(RationalFromJson(Json::array()), FormatError);
}

TEST(IoTest, GameRoundTrip) {
  const TeamGadget g(RationalMatrix{{-1, -2}, {-2, -1}}, Fraction(1, 20));
  const auto back = GameFromJson(GameToJson(g.game()));
  const auto* poly = dynamic_cast<const PolymatrixGame*>(back.get());
  ASSERT_NE(poly, nullptr);
  EXPECT_EQ(poly->terms().size(), g.game().terms().size());
  EXPECT_EQ(poly->team_partition(), g.game().team_partition());
  EXPECT_EQ(GameToJson(*back), GameToJson(g.game()));

  const BimatrixGame b = BimatrixGame::Symmetric(RationalMatrix{{0, 1}, {2, 3}});
  const auto bb = GameFromJson(GameToJson(b));
  const auto* bim = dynamic_cast<const BimatrixGame*>(bb.get());
  ASSERT_NE(bim, nullptr);
  EXPECT_EQ(bim->row_payoffs(), b.row_payoffs());
  EXPECT_EQ(bim->col_payoffs(), b.col_payoffs());

  const NormalFormGame irr = IrrationalGame();
  EXPECT_EQ(GameToJson(*GameFromJson(GameToJson(irr))), GameToJson(irr));
}

TEST(IoTest, ProfileRoundTrip) {
  const ExactProfile exact = {ExactStrategy::Uniform(3), ExactStrategy::Pure(2, 1)};
  EXPECT_EQ(ExactProfileFromJson(ProfileToJson(exact)), exact);
  const MixedProfile mixed = {MixedStrategy({0.25, 0.75})};
  EXPECT_EQ(ProfileFromJson(ProfileToJson(mixed)), mixed);
}

TEST(IoTest, GraphText) {
  const Graph g = GraphFromText("# comment\nn 3\n\n1 2\n2 3\n");
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_EQ(GraphFromText(GraphToText(g)), g);
  EXPECT_THROW(GraphFromText("n 2\n1 3\n"), FormatError);
  EXPECT_EQ(ReadGraph(kDataDir / "fig1.edges").num_edges(), 8);
}

TEST(IoTest, ProblemRoundTrip) {
  const auto p = CoupledGadget(RationalMatrix{{0, 1}, {-1, 0}}, 0.25);
  const auto q = ProblemFromJson(ProblemToJson(p));
  EXPECT_EQ(q.qx(), p.qx());
  EXPECT_EQ(q.coupling(), p.coupling());
  EXPECT_TRUE(q.on_joint_domain());
  EXPECT_EQ(q.smoothness(), p.smoothness());
}

TEST(ReportTest, Sha256) {
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(ReportTest, Bounds) {
  EXPECT_TRUE(UpperBound("b", "x", 1.0, 0.5).satisfied);
  EXPECT_FALSE(UpperBound("b", "x", 1.0, 1.5).satisfied);
  EXPECT_TRUE(ExactEquality("b", "x", Fraction(1, 3), Fraction(2, 6)).satisfied);
  Report r("cmd");
  r.Add(UpperBound("b", "x", 1.0, 0.5));
  EXPECT_TRUE(r.AllSatisfied());
  r.Add(ExactUpperBound("c", "y", 0, 1));
  EXPECT_FALSE(r.AllSatisfied());
  const Json j = r.ToJson(kBoundViolated);
  EXPECT_EQ(j["command"], "cmd");
  EXPECT_EQ(j["bounds"].size(), 2u);
  EXPECT_EQ(j["exit_code"], 1);
  EXPECT_EQ(j["bounds"][1]["value"], "0");
}

TEST_F(CliTest, NashgapAudit) {
  ASSERT_EQ(Run({"audit", "nashgap", "--graph", (kDataDir / "fig1.edges").string()}),
            kSuccess);
  const Json j = Output();
  EXPECT_EQ(j["command"], "audit nashgap");
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_EQ(j["inputs_hash"].get<std::string>().size(), 64u);
  for (const auto& b : j["bounds"]) EXPECT_TRUE(b["satisfied"].get<bool>());
}

TEST_F(CliTest, HashIsStableAndInputSensitive) {
  const std::string graph = (kDataDir / "fig1.edges").string();
  Run({"audit", "nashgap", "--graph", graph});
  const std::string first = Output()["inputs_hash"];
  Run({"audit", "nashgap", "--graph", graph});
  EXPECT_EQ(Output()["inputs_hash"], first);
  WriteText(Path("k3.edges"), "n 3\n1 2\n1 3\n2 3\n");
  Run({"audit", "nashgap", "--graph", Path("k3.edges")});
  EXPECT_NE(Output()["inputs_hash"], first);
}

TEST_F(CliTest, InputErrors) {
  WriteText(Path("bad.json"), "{ not json");
  EXPECT_EQ(Run({"check", "ne", "--game", Path("bad.json"), "--profile",
                 Path("bad.json")}),
            kInputError);
  EXPECT_EQ(Run({"audit", "nashgap", "--graph", Path("missing.edges")}),
            kInputError);
  EXPECT_EQ(Run({"no-such-command"}), kInputError);
  EXPECT_EQ(Run({"gadget", "team", "--game", Path("bad.json")}), kInputError);
}

TEST_F(CliTest, ReportFile) {
  ASSERT_EQ(Run({"--report", Path("r.json"), "solve", "max-clique", "--graph",
                 (kDataDir / "fig1.edges").string()}),
            kSuccess);
  const Json j = Json::parse(ReadText(Path("r.json")));
  EXPECT_EQ(j["command"], "solve max-clique");
}

TEST_F(CliTest, IrrationalVerify) {
  ASSERT_EQ(Run({"analytic", "irrational", "--verify"}), kSuccess);
  for (const auto& b : Output()["bounds"]) EXPECT_TRUE(b["satisfied"].get<bool>());
}

TEST_F(CliTest, TeamGadgetPipeline) {
  WriteText(Path("a.json"), R"({"matrix": [[-1, -2], [-2, -1]]})");
  ASSERT_EQ(Run({"gadget", "team", "--game", Path("a.json"), "--eps", "1/20",
                 "-o", Path("g.json"), "--canonical-ne", Path("ne.json")}),
            kSuccess);
  EXPECT_EQ(Run({"check", "ne", "--game", Path("g.json"), "--profile",
                 Path("ne.json"), "--exact"}),
            kSuccess);
  ASSERT_EQ(Run({"solve", "refine", "--game", Path("g.json"), "--eps",
                 "1/400", "-o", Path("p.json")}),
            kSuccess);
  EXPECT_EQ(Run({"audit", "gadget-structure", "--game", Path("a.json"),
                 "--profile", Path("p.json"), "--eps", "1/20"}),
            kSuccess);
  ASSERT_EQ(Run({"backmap", "team", "--game", Path("a.json"), "--profile",
                 Path("p.json"), "--eps", "1/20", "-o", Path("x.json")}),
            kSuccess);
  const MixedProfile x = ReadProfile(Path("x.json"));
  ASSERT_EQ(x.size(), 1u);
  const BimatrixGame source = BimatrixGame::SymmetricIdentical(
      RationalMatrix{{-1, -2}, {-2, -1}}, Orientation::kMinimize);
  EXPECT_LE(MaxRegret(source, {x[0], x[0]}), (21 * 2 + 1) * 2 * 0.05);
}

TEST_F(CliTest, DynamicsCsv) {
  WriteText(Path("r.json"), R"({"matrix": [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]})");
  ASSERT_EQ(Run({"gadget", "quadratic", "--game", Path("r.json"), "-o",
                 Path("q.json")}),
            kSuccess);
  ASSERT_EQ(Run({"dynamics", "run", "--problem", Path("q.json"), "--algo",
                 "omwu", "--steps", "20", "-o", Path("t.csv")}),
            kSuccess);
  const std::string csv = ReadText(Path("t.csv"));
  EXPECT_EQ(csv.rfind("t,gap,drift,utility\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 21);
}

}  // namespace
}  // namespace symgames::cli
