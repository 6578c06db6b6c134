// Copyright 2026 The rigidcx Authors
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

#include "rigidcx/commands.h"

#include <gtest/gtest.h>

#include "rigidcx/autoeng.h"
#include "rigidcx/error.h"

namespace rigidcx {
namespace {

bool EveryCheckPasses(const nlohmann::json& report) {
  for (const auto& c : report["checks"]) {
    if (c["status"] != "pass") return false;
  }
  return true;
}

const nlohmann::json* FindCheck(const nlohmann::json& report, const std::string& name) {
  for (const auto& c : report["checks"]) {
    if (c["name"] == name) return &c;
  }
  return nullptr;
}

RunConfig Config(const std::string& mode, int r, int s = 1) {
  RunConfig c;
  c.mode = mode;
  c.radius = r;
  c.fix_radius = s;
  return c;
}

TEST(RunLsvTest, VerifyRadiusTwo) {
  const RunResult r = RunLsv(Config("verify", 2));
  EXPECT_TRUE(r.all_pass);
  EXPECT_EQ(r.all_pass, EveryCheckPasses(r.report));
  EXPECT_EQ(r.report["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(r.report["data"]["simplex_counts"], nlohmann::json::array({113, 343, 231}));
  ASSERT_NE(FindCheck(r.report, "link_automorphism_order"), nullptr);
  EXPECT_EQ((*FindCheck(r.report, "link_automorphism_order"))["value"], "336");
  EXPECT_NE(r.dot.find("graph"), std::string::npos);
}

TEST(RunLsvTest, BallRadiusZero) {
  const RunResult r = RunLsv(Config("ball", 0));
  EXPECT_TRUE(r.all_pass);
  EXPECT_EQ(r.report["data"]["ball"]["vertices"].size(), 1u);
}

TEST(RunLsvTest, Errors) {
  try {
    RunLsv(Config("verify", 9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  EXPECT_THROW(RunLsv(Config("other", 2)), Error);
  EXPECT_THROW(RunLsv(Config("verify", 0)), Error);
}

TEST(RunTreeTest, ExperimentGolden) {
  const RunResult r = RunTree(Config("experiment", 2, 1));
  EXPECT_TRUE(r.all_pass);
  EXPECT_EQ(r.report["data"]["sweep"][0]["count"], "4096");
}

TEST(RunTreeTest, QuotientAndFlip) {
  const RunResult q = RunTree(Config("quotient", 2));
  EXPECT_TRUE(q.all_pass);
  EXPECT_EQ(q.report["data"]["quotient"]["edge_count"], 12);
  const RunResult f = RunTree(Config("flip", 3, 1));
  EXPECT_TRUE(f.all_pass);
  for (const auto& w : f.report["data"]["witnesses"]) {
    EXPECT_TRUE(w["verified"].get<bool>());
    EXPECT_FALSE(w["moved"].empty());
  }
}

TEST(RunTreeTest, BoundsAreUsageErrors) {
  EXPECT_THROW(RunTree(Config("experiment", 2, 2)), Error);
  EXPECT_THROW(RunTree(Config("experiment", 7, 1)), Error);
  EXPECT_THROW(RunTree(Config("flip", 2, -1)), Error);
}

TEST(RunRigidityTest, Contrast) {
  RunConfig c = Config("", 2);
  c.colors = 2;
  c.seeds = 5;
  const RunResult r = RunRigidity(c);
  EXPECT_TRUE(r.all_pass);
  EXPECT_EQ(r.report["data"]["colored_runs"][0]["order"], "1");
  EXPECT_EQ(r.report["data"]["one_color_order"], "86016");
  c.colors = 0;
  EXPECT_THROW(RunRigidity(c), Error);
}

TEST(DeterminismTest, ReportsAreByteIdentical) {
  RunConfig c = Config("", 2);
  c.seeds = 3;
  EXPECT_EQ(RunRigidity(c).report.dump(), RunRigidity(c).report.dump());
  EXPECT_EQ(RunLsv(Config("verify", 2)).report.dump(), RunLsv(Config("verify", 2)).report.dump());
  EXPECT_EQ(RunTree(Config("flip", 2)).report.dump(), RunTree(Config("flip", 2)).report.dump());
}

// A single colored chamber: coloring is vacuous, so the count is the
// chamber's own stabilizer.
TEST(RunRigidityTest, SingleChamberColoring) {
  const std::vector<Simplex> faces = {{0, 1, 2}};
  const Complex c = Complex::FromFaces({0, 1, 2}, faces).WithChamberColors({1});
  const std::vector<VertexId> center = {0};
  EXPECT_EQ(AutomorphismsFixing(c, center).order, "2");
  EXPECT_EQ(AutomorphismGroup(c).order, "6");
}

}  // namespace
}  // namespace rigidcx
