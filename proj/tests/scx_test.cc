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

#include "rigidcx/scx.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rigidcx/error.h"
#include "rigidcx/lsv.h"

namespace rigidcx {
namespace {

Complex Tetrahedron() {
  const std::vector<Simplex> faces = {{0, 1, 2, 3}};
  return Complex::FromFaces({0, 1, 2, 3}, faces);
}

Graph RandomGraph(std::mt19937& rng, int n, double p) {
  Graph g;
  std::bernoulli_distribution coin(p);
  for (int v = 0; v < n; ++v) g.vertices.push_back(v);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

TEST(ComplexTest, DownwardClosure) {
  const Complex t = Tetrahedron();
  EXPECT_EQ(t.dimension(), 3);
  EXPECT_EQ(t.simplices(0).size(), 4u);
  EXPECT_EQ(t.simplices(1).size(), 6u);
  EXPECT_EQ(t.simplices(2).size(), 4u);
  EXPECT_EQ(t.simplices(3).size(), 1u);
  EXPECT_EQ(t.num_simplices(), 15u);
  EXPECT_TRUE(t.Contains({2, 0}));
  EXPECT_FALSE(t.Contains({0, 4}));
  EXPECT_EQ(t.MaximalSimplices(), (std::vector<Simplex>{{0, 1, 2, 3}}));
}

TEST(ComplexTest, IsolatedVerticesAndEmpty) {
  const std::vector<Simplex> faces = {{0, 1}};
  const Complex c = Complex::FromFaces({0, 1, 5}, faces);
  EXPECT_EQ(c.dimension(), 1);
  EXPECT_EQ(c.MaximalSimplices(), (std::vector<Simplex>{{5}, {0, 1}}));
  EXPECT_EQ(Complex().dimension(), -1);
}

TEST(ComplexTest, RejectsBadInput) {
  const std::vector<Simplex> faces = {{0, 9}};
  try {
    Complex::FromFaces({0, 1}, faces);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownVertex);
  }
  EXPECT_THROW(Complex::FromFaces({0, 0}, {}), Error);
  EXPECT_THROW(Tetrahedron().IndexOf(7), Error);
}

TEST(CliqueComplexTest, MatchesBruteForceCliques) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 6;
    const Graph g = RandomGraph(rng, n, 0.55);
    std::set<std::pair<VertexId, VertexId>> adj(g.edges.begin(), g.edges.end());
    const Complex c = CliqueComplex(g, 3);
    std::set<Simplex> expected;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex s;
      for (int v = 0; v < n; ++v) {
        if ((mask >> v) & 1) s.push_back(v);
      }
      if (s.size() > 4) continue;
      bool clique = true;
      for (size_t i = 0; i < s.size(); ++i) {
        for (size_t j = i + 1; j < s.size(); ++j) clique = clique && adj.contains({s[i], s[j]});
      }
      if (clique) expected.insert(s);
    }
    std::set<Simplex> got;
    for (int d = 0; d <= c.dimension(); ++d) {
      for (const Simplex& s : c.simplices(d)) got.insert(s);
    }
    EXPECT_EQ(got, expected) << "trial " << trial;
  }
}

TEST(CliqueComplexTest, MaxDimTruncates) {
  Graph k5;
  for (int v = 0; v < 5; ++v) k5.vertices.push_back(v);
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) k5.edges.emplace_back(u, v);
  }
  EXPECT_EQ(CliqueComplex(k5, 2).dimension(), 2);
  EXPECT_EQ(CliqueComplex(k5, 3).simplices(3).size(), 5u);
  EXPECT_THROW(CliqueComplex(k5, 0), Error);
}

TEST(CliqueComplexTest, RejectsNonSimpleGraphs) {
  Graph loop{{0, 1}, {{0, 0}}};
  Graph twice{{0, 1}, {{0, 1}, {1, 0}}};
  Graph dangling{{0, 1}, {{0, 2}}};
  for (const Graph& g : {loop, twice, dangling}) {
    try {
      CliqueComplex(g);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNonSimpleGraph);
    }
  }
}

TEST(CliqueComplexTest, BuildingBallTriangles) {
  const BuildingBall b = BuildLsvBall(2);
  const Graph g = BallGraph(b.ball);
  std::set<std::pair<VertexId, VertexId>> adj;
  for (auto [u, v] : g.edges) {
    adj.emplace(u, v);
    adj.emplace(v, u);
  }
  const VertexId n = static_cast<VertexId>(g.vertices.size());
  size_t triangles = 0;
  for (auto [u, v] : g.edges) {
    for (VertexId w = std::max(u, v) + 1; w < n; ++w) {
      if (adj.contains({u, w}) && adj.contains({v, w})) ++triangles;
    }
  }
  EXPECT_EQ(triangles, 231u);
  EXPECT_EQ(b.complex.dimension(), 2);  // no 4-cliques
  EXPECT_EQ(b.complex.simplices(2).size(), triangles);
  for (const Simplex& e : b.complex.simplices(1)) EXPECT_GE(ChamberCount(b.complex, e), 1u);
}

TEST(LinkTest, Simplex) {
  const Complex link = Link(Tetrahedron(), 0);
  EXPECT_EQ(link.vertices(), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(link.dimension(), 2);
  EXPECT_THROW(Link(Tetrahedron(), 9), Error);
}

TEST(LinkTest, CarriesChamberColors) {
  const std::vector<Simplex> faces = {{0, 1, 2}, {0, 2, 3}};
  const Complex c = Complex::FromFaces({0, 1, 2, 3}, faces).WithChamberColors({4, 7});
  const Complex link = Link(c, 0);
  ASSERT_TRUE(link.chamber_colors().has_value());
  EXPECT_EQ(link.ChamberColor({1, 2}), 4);
  EXPECT_EQ(link.ChamberColor({2, 3}), 7);
}

TEST(SubcomplexTest, InducedAndHops) {
  const std::vector<Simplex> path = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  const Complex c = Complex::FromFaces({0, 1, 2, 3, 4}, path);
  const std::vector<VertexId> seed = {0};
  EXPECT_EQ(HopNeighborhood(c, seed, 2), (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(HopNeighborhood(c, seed, 0), (std::vector<VertexId>{0}));
  const std::vector<VertexId> keep = {0, 1, 3};
  const Complex sub = InducedSubcomplex(c, keep);
  EXPECT_EQ(sub.simplices(1), (std::vector<Simplex>{{0, 1}}));
}

TEST(PurityTest, MixedComplex) {
  const std::vector<Simplex> faces = {{0, 1, 2}, {2, 3}};
  const Complex c = Complex::FromFaces({0, 1, 2, 3}, faces);
  const PurityReport all = Purity(c, InteriorMark::All(c));
  EXPECT_FALSE(all.pure);
  EXPECT_EQ(all.interior_maximal_by_dim.at(1), 1u);
  EXPECT_EQ(all.interior_maximal_by_dim.at(2), 1u);
  const PurityReport some = Purity(c, InteriorMark({0, 1, 2}));
  EXPECT_TRUE(some.pure);
  EXPECT_EQ(some.top_dimension, 2);
  EXPECT_EQ(some.interior_panels, 3u);
  EXPECT_EQ(some.min_panel_chambers, 1u);
}

TEST(PurityTest, BuildingBallInterior) {
  const BuildingBall b = BuildLsvBall(2);
  const PurityReport p = Purity(b.complex, b.interior);
  EXPECT_TRUE(p.pure);
  EXPECT_EQ(p.top_dimension, 2);
  EXPECT_EQ(p.interior_panels, 35u);
  EXPECT_EQ(p.min_panel_chambers, 3u);
  EXPECT_EQ(p.max_panel_chambers, 3u);
}

TEST(ColoringTest, ExplicitAssignment) {
  const std::vector<Simplex> faces = {{0, 1, 2}, {0, 2, 3}};
  const Complex c = Complex::FromFaces({0, 1, 2, 3}, faces);
  const Complex colored = ColorChambers(c, {{{0, 1, 2}, 1}, {{0, 2, 3}, 0}});
  EXPECT_EQ(ColorClassSizes(colored), (std::vector<size_t>{1, 1}));
  try {
    ColorChambers(c, {{{0, 1, 2}, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPartialAssignment);
  }
  EXPECT_THROW(ColorChambers(c, {{{0, 1, 2}, 1}, {{0, 2, 3}, 0}, {{1, 2, 3}, 0}}), Error);
  EXPECT_THROW(c.WithChamberColors({1}), Error);
}

TEST(ColoringTest, SeededColorsAreReproducible) {
  const BuildingBall b = BuildLsvBall(2);
  const std::vector<int> colors = RandomChamberColors(b.complex, 2, 0);
  EXPECT_EQ(colors, RandomChamberColors(b.complex, 2, 0));
  EXPECT_NE(colors, RandomChamberColors(b.complex, 2, 1));
  std::mt19937_64 rng(0);
  for (int c : colors) EXPECT_EQ(c, static_cast<int>(rng() % 2));
  // Frozen class sizes for seed 0.
  EXPECT_EQ(ColorClassSizes(b.complex.WithChamberColors(colors)),
            (std::vector<size_t>{116, 115}));
}

TEST(SerializationTest, RoundTrip) {
  const std::vector<Simplex> faces = {{0, 1, 2}, {2, 3}};
  const Complex c = Complex::FromFaces({0, 1, 2, 3}, faces)
                        .WithVertexColors({0, 0, 1, 1})
                        .WithChamberColors({3});
  EXPECT_EQ(Deserialize(Serialize(c)), c);
  EXPECT_EQ(ComplexFromJson(ToJson(Tetrahedron())), Tetrahedron());
}

TEST(SerializationTest, RejectsUnclosedInput) {
  const nlohmann::json j = {{"vertices", {0, 1, 2}}, {"simplices", {{"1", {{0, 1}}}, {"2", {{0, 1, 2}}}}}};
  try {
    ComplexFromJson(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
  EXPECT_THROW(Deserialize("{not json"), Error);
}

TEST(DotTest, ListsEdges) {
  const std::string dot = ToDot(Tetrahedron());
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("v2 -- v3"), std::string::npos);
}

}  // namespace
}  // namespace rigidcx
