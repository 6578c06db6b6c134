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

#include "rigidcx/projmat.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "oracles.h"
#include "rigidcx/error.h"

namespace rigidcx {
namespace {

constexpr uint32_t kModulus = 0b10011;

// The seven generators as coefficient masks, row-major.
const std::array<oracle::Mat, 7> kExpectedPrinted = {{
    {10, 4, 6, 2, 8, 7, 6, 5, 9},
    {15, 6, 5, 3, 12, 1, 5, 2, 8},
    {13, 5, 2, 7, 10, 4, 2, 3, 12},
    {14, 2, 3, 1, 15, 6, 3, 7, 10},
    {9, 3, 7, 4, 13, 5, 7, 1, 15},
    {8, 7, 1, 6, 14, 2, 1, 4, 13},
    {12, 1, 4, 5, 9, 3, 4, 6, 14},
}};

std::vector<oracle::Mat> OracleSymmetricSet() {
  std::vector<oracle::Mat> gens;
  for (const auto& m : kExpectedPrinted) {
    gens.push_back(oracle::Projectivize(m, kModulus));
    gens.push_back(oracle::ProjInverse(m, kModulus));
  }
  return gens;
}

TEST(GeneratorTableTest, MatchesTranscription) {
  const GeneratorTable table = LsvGenerators();
  ASSERT_EQ(table.printed.size(), 7u);
  ASSERT_EQ(table.matrices.size(), 7u);
  for (size_t k = 0; k < 7; ++k) {
    EXPECT_EQ(table.printed[k].raw(), kExpectedPrinted[k]) << "matrix " << k + 1;
    EXPECT_EQ(table.matrices[k].matrix().raw(),
              oracle::Projectivize(kExpectedPrinted[k], kModulus));
  }
  ASSERT_EQ(table.repairs.size(), 1u);
  EXPECT_NE(table.repairs[0].find("matrix 7"), std::string::npos);
}

TEST(GeneratorTableTest, DeterminantsMatchLeibniz) {
  const GeneratorTable table = LsvGenerators();
  for (size_t k = 0; k < 7; ++k) {
    const FieldElem det = Determinant(table.printed[k]);
    EXPECT_EQ(det.bits(), oracle::LeibnizDet(kExpectedPrinted[k], kModulus));
    // Frozen: every determinant is t^2 + 1.
    EXPECT_EQ(det.bits(), 0b101u);
  }
}

TEST(GeneratorTableTest, JsonRoundTrip) {
  const GeneratorTable table = LsvGenerators();
  const GeneratorTable back = GeneratorTableFromJson(ToJson(table));
  EXPECT_EQ(back.name, table.name);
  ASSERT_EQ(back.matrices.size(), table.matrices.size());
  for (size_t k = 0; k < table.matrices.size(); ++k) {
    EXPECT_EQ(back.matrices[k], table.matrices[k]);
  }
}

TEST(GeneratorTableTest, MalformedJsonThrows) {
  nlohmann::json j = ToJson(LsvGenerators());
  j["matrices"][0][0][0] = "t^9";
  EXPECT_THROW(GeneratorTableFromJson(j), Error);
  EXPECT_THROW(GeneratorTableFromJson(nlohmann::json::object()), Error);
}

TEST(PglTest, InverseMatchesGaussJordan) {
  const GeneratorTable table = LsvGenerators();
  for (size_t k = 0; k < 7; ++k) {
    const ProjMatrix inv = PglInv(table.matrices[k]);
    EXPECT_EQ(inv.matrix().raw(), oracle::ProjInverse(kExpectedPrinted[k], kModulus));
    EXPECT_EQ(PglMul(table.matrices[k], inv), PglIdentity(table.field));
  }
}

TEST(PglTest, AdjugateIdentity) {
  const GeneratorTable table = LsvGenerators();
  for (const Matrix3& m : table.printed) {
    const FieldElem det = Determinant(m);
    EXPECT_EQ(m * m.Adjugate(), Matrix3::Identity(m.field()).Scaled(det));
  }
}

TEST(PglTest, CanonicalFormProperties) {
  const FieldSpec f = FieldSpec::Gf16();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<uint32_t, 9> bits;
    for (auto& b : bits) b = rng() % 16;
    const Matrix3 m(f, bits);
    if (Determinant(m).is_zero()) {
      EXPECT_THROW(PglNormalize(m), Error);
      continue;
    }
    const ProjMatrix p = PglNormalize(m);
    const auto& raw = p.matrix().raw();
    const auto lead = std::find_if(raw.begin(), raw.end(), [](uint32_t x) { return x != 0; });
    EXPECT_EQ(*lead, 1u);
    for (uint32_t c = 1; c < 16; ++c) {
      EXPECT_EQ(PglNormalize(m.Scaled(FieldElem(f, c))), p);
    }
    EXPECT_EQ(raw, oracle::Projectivize(bits, kModulus));
  }
}

TEST(PglTest, InverseOfProductReverses) {
  const GeneratorTable table = LsvGenerators();
  for (const auto& a : table.matrices) {
    for (const auto& b : table.matrices) {
      EXPECT_EQ(PglInv(PglMul(a, b)), PglMul(PglInv(b), PglInv(a)));
    }
  }
}

TEST(PglTest, SingularThrows) {
  const FieldSpec f = FieldSpec::Gf16();
  try {
    PglNormalize(Matrix3(f, {1, 2, 3, 2, 4, 6, 0, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularMatrix);
  }
}

TEST(SymmetrizeTest, FourteenDistinctNonIdentity) {
  const GeneratorTable table = LsvGenerators();
  const SymmetricGenerators s = Symmetrize(table);
  ASSERT_EQ(s.size(), 14u);
  std::set<std::string> keys;
  for (const ProjMatrix& g : s.elements) {
    keys.insert(g.Key());
    EXPECT_NE(g, PglIdentity(table.field));
  }
  EXPECT_EQ(keys.size(), 14u);
  EXPECT_TRUE(s.self_inverse.empty());
  for (size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(PglMul(s.elements[i], s.elements[s.inverse_of[i]]), PglIdentity(table.field));
    const int k = std::abs(s.labels[i]) - 1;
    EXPECT_EQ(s.elements[i],
              s.labels[i] > 0 ? table.matrices[k] : PglInv(table.matrices[k]));
  }
}

TEST(SymmetrizeTest, InvolutionIsListedOnce) {
  const FieldSpec f = FieldSpec::Gf16();
  // Permutation matrix of a transposition squares to I.
  const ProjMatrix swap = PglNormalize(Matrix3(f, {0, 1, 0, 1, 0, 0, 0, 0, 1}));
  const std::vector<ProjMatrix> gens = {swap};
  const SymmetricGenerators s = Symmetrize(gens);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.self_inverse, std::vector<size_t>{0});
  EXPECT_EQ(s.inverse_of[0], 0u);
}

TEST(CayleyBallTest, SizesMatchWordEnumeration) {
  const SymmetricGenerators s = Symmetrize(LsvGenerators());
  const std::vector<size_t> words = oracle::WordBallSizes(OracleSymmetricSet(), 3, kModulus);
  EXPECT_EQ(words, (std::vector<size_t>{1, 15, 113, 673}));
  for (int r = 0; r <= 3; ++r) {
    const CayleyBall ball = BuildCayleyBall(s, r);
    EXPECT_EQ(ball.vertices().size(), words[r]) << r;
  }
  EXPECT_EQ(BuildCayleyBall(s, 3).SphereSizes(), (std::vector<size_t>{1, 14, 98, 560}));
}

TEST(CayleyBallTest, EdgesAreRightMultiplications) {
  const SymmetricGenerators s = Symmetrize(LsvGenerators());
  const CayleyBall ball = BuildCayleyBall(s, 2);
  EXPECT_EQ(ball.edges().size(), 343u);
  std::set<std::pair<size_t, size_t>> seen;
  for (const BallEdge& e : ball.edges()) {
    ASSERT_LT(e.u, e.v);
    EXPECT_TRUE(seen.emplace(e.u, e.v).second);
    const ProjMatrix& u = ball.vertices()[e.u].element;
    const ProjMatrix& v = ball.vertices()[e.v].element;
    size_t g = 0;
    while (s.labels[g] != e.label) ++g;
    EXPECT_EQ(PglMul(u, s.elements[g]), v);
  }
  // Completeness: every pair in the ball differing by a generator is an edge.
  size_t expected = 0;
  for (size_t i = 0; i < ball.vertices().size(); ++i) {
    for (const ProjMatrix& g : s.elements) {
      auto j = ball.IndexOf(PglMul(ball.vertices()[i].element, g));
      if (j && *j > i) ++expected;
    }
  }
  EXPECT_EQ(expected, ball.edges().size());
}

TEST(CayleyBallTest, SpheresSortedAndWordsReach) {
  const SymmetricGenerators s = Symmetrize(LsvGenerators());
  const CayleyBall ball = BuildCayleyBall(s, 2);
  EXPECT_EQ(ball.vertices()[0].element, PglIdentity(FieldSpec::Gf16()));
  for (size_t i = 1; i < ball.vertices().size(); ++i) {
    const auto& a = ball.vertices()[i - 1];
    const auto& b = ball.vertices()[i];
    EXPECT_TRUE(a.distance < b.distance ||
                (a.distance == b.distance && a.element.Key() < b.element.Key()));
  }
  for (const BallVertex& v : ball.vertices()) {
    EXPECT_EQ(static_cast<int>(v.word.size()), v.distance);
    ProjMatrix m = PglIdentity(FieldSpec::Gf16());
    for (int label : v.word) {
      size_t g = 0;
      while (s.labels[g] != label) ++g;
      m = PglMul(m, s.elements[g]);
    }
    EXPECT_EQ(m, v.element);
  }
}

TEST(CayleyBallTest, FirstCollisionComesFromATriangle) {
  const CayleyBall ball = BuildCayleyBall(Symmetrize(LsvGenerators()), 2);
  ASSERT_TRUE(ball.collision().has_value());
  EXPECT_EQ(ball.collision()->first.size() + ball.collision()->second.size(), 3u);
}

TEST(CayleyBallTest, RadiusZeroIsSingleVertex) {
  const CayleyBall ball = BuildCayleyBall(Symmetrize(LsvGenerators()), 0);
  EXPECT_EQ(ball.vertices().size(), 1u);
  EXPECT_TRUE(ball.edges().empty());
  EXPECT_EQ(ball.ToJson()["sphere_sizes"], nlohmann::json::array({1}));
}

TEST(CayleyBallTest, BudgetEnforced) {
  const SymmetricGenerators s = Symmetrize(LsvGenerators());
  try {
    BuildCayleyBall(s, 2, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  EXPECT_NO_THROW(BuildCayleyBall(s, 2, 113));
  EXPECT_THROW(BuildCayleyBall(s, -1), Error);
}

TEST(CayleyBallTest, RejectsNonSymmetricSet) {
  SymmetricGenerators s = Symmetrize(LsvGenerators());
  s.elements.pop_back();
  s.labels.pop_back();
  s.inverse_of.pop_back();
  EXPECT_THROW(BuildCayleyBall(s, 1), Error);
}

TEST(PlaneOrbitsTest, SingleOrbit) {
  const GeneratorTable table = LsvGenerators();
  const PlaneOrbits orbits = ProjectivePlaneOrbits(table.field, table.matrices);
  EXPECT_EQ(orbits.point_count, 273u);
  EXPECT_EQ(orbits.orbit_sizes, std::vector<size_t>{273});
}

TEST(PlaneOrbitsTest, TrivialAndDiagonalActions) {
  const FieldSpec f = FieldSpec::Gf16();
  const PlaneOrbits none = ProjectivePlaneOrbits(f, {});
  EXPECT_EQ(none.orbit_sizes.size(), 273u);
  // diag(t, 1, 1) fixes [1:0:0] and the line x = 0 pointwise; each other
  // point [1:y:z] has an orbit of size 15.
  const std::vector<ProjMatrix> diag = {PglNormalize(Matrix3(f, {2, 0, 0, 0, 1, 0, 0, 0, 1}))};
  const PlaneOrbits d = ProjectivePlaneOrbits(f, diag);
  std::multiset<size_t> sizes(d.orbit_sizes.begin(), d.orbit_sizes.end());
  EXPECT_EQ(sizes.count(15), 17u);
  EXPECT_EQ(sizes.count(1), 18u);
  const PlaneOrbits f2 = ProjectivePlaneOrbits(FieldSpec::Gf2(), {});
  EXPECT_EQ(f2.point_count, 7u);
}

}  // namespace
}  // namespace rigidcx
