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

#include "rigidcx/autoeng.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "engine_cases.h"
#include "oracles.h"
#include "rigidcx/error.h"
#include "rigidcx/lsv.h"

namespace rigidcx {
namespace {

Complex Cycle(int n) {
  std::vector<Simplex> edges;
  std::vector<VertexId> verts;
  for (int v = 0; v < n; ++v) {
    verts.push_back(v);
    edges.push_back({v, (v + 1) % n});
  }
  return Complex::FromFaces(verts, edges);
}

Complex CompleteGraph(int n) {
  std::vector<Simplex> edges;
  std::vector<VertexId> verts;
  for (int u = 0; u < n; ++u) {
    verts.push_back(u);
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Complex::FromFaces(verts, edges);
}

Complex Petersen() {
  std::vector<Simplex> edges;
  std::vector<VertexId> verts;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  for (int v = 0; v < 10; ++v) verts.push_back(v);
  return Complex::FromFaces(verts, edges);
}

TEST(VertexPermutationTest, Algebra) {
  const VertexPermutation a({1, 2, 0});
  const VertexPermutation b({1, 0, 2});
  EXPECT_EQ((a * b).image(), (std::vector<uint32_t>{2, 1, 0}));
  EXPECT_TRUE((a * a.Inverse()).IsIdentity());
  EXPECT_TRUE(VertexPermutation::Identity(4).IsIdentity());
  EXPECT_FALSE(a.IsIdentity());
}

TEST(AutomorphismGroupTest, KnownOrders) {
  EXPECT_EQ(AutomorphismGroup(Cycle(5)).order, "10");
  EXPECT_EQ(AutomorphismGroup(CompleteGraph(4)).order, "24");
  EXPECT_EQ(AutomorphismGroup(Petersen()).order, "120");
  EXPECT_EQ(AutomorphismGroup(FanoIncidenceGraph()).order, "336");
  EXPECT_EQ(AutomorphismGroup(CompleteGraph(1)).order, "1");
  EXPECT_EQ(AutomorphismGroup(Complex()).order, "1");
}

TEST(AutomorphismGroupTest, LargeOrdersWithoutListing) {
  SearchOptions options;
  options.enumeration_cap = 0;
  const AutomorphismSet k12 = AutomorphismGroup(CompleteGraph(12), options);
  EXPECT_EQ(k12.order, "479001600");
  EXPECT_FALSE(k12.complete);
  EXPECT_TRUE(k12.elements.empty());
  std::vector<VertexId> verts;
  for (int v = 0; v < 22; ++v) verts.push_back(v);
  const AutomorphismSet s22 = AutomorphismGroup(Complex::FromFaces(verts, {}), options);
  EXPECT_EQ(s22.order, "1124000727777607680000");
  EXPECT_FALSE(s22.OrderU64().has_value());
  EXPECT_NEAR(s22.log2_order, 69.929, 1e-3);
  EXPECT_EQ(k12.OrderU64(), 479001600u);
}

TEST(AutomorphismGroupTest, OrderIsProductOfBasicOrbits) {
  const AutomorphismSet set = AutomorphismGroup(Petersen());
  uint64_t product = 1;
  for (uint64_t len : set.orbit_lengths) product *= len;
  EXPECT_EQ(product, 120u);
  EXPECT_EQ(set.base.size(), set.orbit_lengths.size());
}

TEST(AutomorphismGroupTest, ElementsFormAGroup) {
  const AutomorphismSet set = AutomorphismGroup(Cycle(6));
  ASSERT_TRUE(set.complete);
  ASSERT_EQ(set.elements.size(), 12u);
  const std::set<VertexPermutation> all(set.elements.begin(), set.elements.end());
  for (const auto& a : set.elements) {
    EXPECT_TRUE(all.contains(a.Inverse()));
    for (const auto& b : set.elements) EXPECT_TRUE(all.contains(a * b));
  }
  for (const auto& g : set.generators) EXPECT_TRUE(all.contains(g));
}

TEST(AutomorphismGroupTest, VertexCap) {
  SearchOptions options;
  options.vertex_cap = 5;
  try {
    AutomorphismGroup(Cycle(6), options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(AutomorphismsFixingTest, TetrahedronBoundary) {
  const std::vector<Simplex> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  const Complex c = Complex::FromFaces({0, 1, 2, 3}, faces);
  EXPECT_EQ(AutomorphismGroup(c).order, "24");
  const std::vector<VertexId> one = {0};
  EXPECT_EQ(AutomorphismsFixing(c, one).order, "6");
  const std::vector<VertexId> two = {0, 3};
  EXPECT_EQ(AutomorphismsFixing(c, two).order, "2");
  const std::vector<VertexId> bad = {9};
  EXPECT_THROW(AutomorphismsFixing(c, bad), Error);
}

TEST(AutomorphismsFixingTest, ChamberColorsRestrict) {
  const std::vector<Simplex> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  const Complex c = Complex::FromFaces({0, 1, 2, 3}, faces).WithChamberColors({0, 0, 1, 1});
  SearchOptions options;
  EXPECT_EQ(AutomorphismGroup(c, options).order, "4");
  options.respect_colors = false;
  EXPECT_EQ(AutomorphismGroup(c, options).order, "24");
}

TEST(EnumerateTest, CapEnforced) {
  SearchOptions options;
  options.enumeration_cap = 100;
  EXPECT_EQ(EnumerateAutomorphisms(CompleteGraph(4), {}, options).size(), 24u);
  EXPECT_THROW(EnumerateAutomorphisms(CompleteGraph(6), {}, options), Error);
}

TEST(FindTest, PinnedAutomorphism) {
  const Complex c = Cycle(6);
  const std::vector<std::pair<VertexId, VertexId>> pins = {{0, 3}, {1, 2}};
  const auto p = FindAutomorphism(c, pins);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ((*p)[0], 3u);
  EXPECT_EQ((*p)[1], 2u);
  EXPECT_TRUE(IsAutomorphism(c, *p, true));
  const std::vector<std::pair<VertexId, VertexId>> impossible = {{0, 0}, {1, 3}};
  EXPECT_FALSE(FindAutomorphism(c, impossible).has_value());
}

TEST(FindTest, IsomorphismOfRelabeledGraphs) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Complex a = testing_cases::RandomGraphComplex(rng, 7, 0.5);
    std::vector<VertexId> relabel(7);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<Simplex> edges;
    for (const Simplex& e : a.simplices(1)) edges.push_back({relabel[e[0]], relabel[e[1]]});
    const Complex b = Complex::FromFaces(a.vertices(), edges);
    const auto iso = FindIsomorphism(a, b);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(IsIsomorphism(a, b, *iso, true));
  }
  std::vector<Simplex> two_triangles = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  const Complex tt = Complex::FromFaces({0, 1, 2, 3, 4, 5}, two_triangles);
  EXPECT_FALSE(FindIsomorphism(Cycle(6), tt).has_value());
  EXPECT_FALSE(FindIsomorphism(Cycle(6), Cycle(5)).has_value());
}

TEST(OracleTest, RandomGraphsMatchNaive) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const testing_cases::Case c = testing_cases::RandomGraphCase(rng, trial);
    EXPECT_EQ(testing_cases::EngineImages(c.complex), oracle::NaiveAutomorphisms(c.naive))
        << "graph trial " << trial;
  }
}

TEST(OracleTest, RandomTwoComplexesMatchNaive) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const testing_cases::Case c = testing_cases::RandomTwoComplexCase(rng, trial);
    EXPECT_EQ(testing_cases::EngineImages(c.complex), oracle::NaiveAutomorphisms(c.naive))
        << "complex trial " << trial;
  }
}

TEST(OracleTest, FixingMatchesNaive) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const testing_cases::Case c = testing_cases::RandomGraphCase(rng, trial);
    const std::vector<VertexId> fixed = {0};
    SearchOptions options;
    const auto list = EnumerateAutomorphisms(c.complex, fixed, options);
    std::vector<std::vector<int>> images;
    for (const auto& p : list) images.emplace_back(p.image().begin(), p.image().end());
    EXPECT_EQ(images, oracle::NaiveAutomorphisms(c.naive, {0})) << trial;
  }
}

TEST(PanelFlipTest, BuildingBallHasAllFlips) {
  const BuildingBall b = BuildLsvBall(2);
  const PanelFlipReport r = PanelFlipCheck(b.complex, b.interior);
  EXPECT_EQ(r.three_chamber_edges, 35u);
  EXPECT_EQ(r.choices, 105u);
  EXPECT_EQ(r.satisfied, 105u);
  ASSERT_TRUE(r.fraction.has_value());
  EXPECT_EQ(*r.fraction, 1.0);
  EXPECT_TRUE(r.failures.empty());
}

TEST(PanelFlipTest, ColoredChambersCanBlockFlips) {
  // Three triangles on the edge {0,1}; coloring one apart blocks swapping it.
  const std::vector<Simplex> faces = {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}};
  const Complex c = Complex::FromFaces({0, 1, 2, 3, 4}, faces);
  const InteriorMark marks({0, 1});
  EXPECT_EQ(*PanelFlipCheck(c, marks).fraction, 1.0);
  const Complex colored = c.WithChamberColors({0, 0, 1});
  const PanelFlipReport r = PanelFlipCheck(colored, marks);
  EXPECT_EQ(r.choices, 3u);
  EXPECT_EQ(r.satisfied, 1u);
  EXPECT_EQ(PanelFlipCheck(colored, marks, 1, false).satisfied, 3u);
}

TEST(PanelFlipTest, RequiresDimensionTwo) {
  EXPECT_THROW(PanelFlipCheck(Cycle(4), InteriorMark::All(Cycle(4))), Error);
}

TEST(JsonTest, AutomorphismSetShape) {
  const Complex c = Cycle(4);
  const nlohmann::json j = ToJson(c, AutomorphismGroup(c));
  EXPECT_EQ(j["order"], "8");
  EXPECT_EQ(j["elements"].size(), 8u);
  EXPECT_TRUE(j["complete"].get<bool>());
}

}  // namespace
}  // namespace rigidcx
