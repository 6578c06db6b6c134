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

// The rank-one example: integer quaternions of 5-power norm, the free group
// they generate modulo scalars, its 6-regular Cayley tree, the quotient by
// the kernel of the map to Z/4Z, and color-preserving tree automorphisms.
//
// Generator indices: 0 = a1 = 1+2i, 1 = conj(a1), 2 = a2 = 1+2j,
// 3 = conj(a2), 4 = a3 = 1+2k, 5 = conj(a3). The inverse of g is g ^ 1.

#ifndef RIGIDCX_QLAT_H_
#define RIGIDCX_QLAT_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rigidcx/autoeng.h"
#include "rigidcx/scx.h"

namespace rigidcx {

struct Quaternion {
  int64_t a0 = 0, a1 = 0, a2 = 0, a3 = 0;

  static Quaternion I() { return {0, 1, 0, 0}; }
  static Quaternion J() { return {0, 0, 1, 0}; }
  static Quaternion K() { return {0, 0, 0, 1}; }
  static Quaternion Scalar(int64_t s) { return {s, 0, 0, 0}; }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
  friend auto operator<=>(const Quaternion&, const Quaternion&) = default;
};

Quaternion QuatMul(const Quaternion& a, const Quaternion& b);
Quaternion Conj(const Quaternion& a);
int64_t Norm(const Quaternion& a);
std::string ToString(const Quaternion& a);

inline constexpr int kNumTreeGenerators = 6;
inline int InverseGenerator(int g) { return g ^ 1; }
// Image in Z/4Z: a_i -> i, conj(a_i) -> -i.
int FiberShift(int g);

// Solutions of a0^2+a1^2+a2^2+a3^2 = 5 with a0 odd and positive and
// a1, a2, a3 even, in generator-index order.
std::array<Quaternion, kNumTreeGenerators> Norm5Generators();

// Class of a under a ~ b iff 5^k1 a = +-5^k2 b: the primitive representative
// whose first nonzero coefficient is positive.
struct LambdaClass {
  Quaternion rep;
  friend bool operator==(const LambdaClass&, const LambdaClass&) = default;
  friend auto operator<=>(const LambdaClass&, const LambdaClass&) = default;
};

// Throws kInvalidArgument for 0 and kNotPowerOfFive otherwise.
LambdaClass CanonicalRep(const Quaternion& a);

inline constexpr int kDefaultWordBound = 7;

struct FreeGroupReport {
  int max_length = 0;
  // Index l: distinct classes among reduced words of length l (index 0 is
  // the empty word).
  std::vector<uint64_t> distinct;
  std::vector<uint64_t> expected;  // 6 * 5^(l-1)
  // No class occurs at two different lengths.
  bool lengths_disjoint = false;
  bool free = false;
};

// Throws kBoundExceeded if max_length > bound or max_length < 1.
FreeGroupReport FreeGroupCheck(int max_length, int bound = kDefaultWordBound);

// Colors of the quotient edges: the three perfect matchings of K4.
enum class EdgeColor { kA = 0, kB = 1, kC = 2 };
// A: {0,1},{2,3}; B: {0,2},{1,3}; C: {0,3},{1,2}.
int MatchingColor(int u, int v);
char ColorName(int color);

struct QuotientEdge {
  int u;
  int v;
  int generator;  // leaves u along this generator
  int color;
};

struct QuotientGraph {
  int vertex_count = 4;
  std::vector<QuotientEdge> edges;

  int Degree(int v) const;
  int Multiplicity(int u, int v) const;
  bool UnderlyingIsComplete() const;
  bool HasLoops() const;
  // The underlying simple graph with each pair colored.
  Complex ColoredSimpleGraph() const;
};

// Edge orbits of the tree under the kernel: directed pairs (v, g) glued
// with (v + shift(g), g^{-1}).
QuotientGraph BuildQuotientGraph();
nlohmann::json ToJson(const QuotientGraph& q);

struct TreeVertex {
  std::vector<uint8_t> word;
  LambdaClass cls;
  int fiber = 0;
  int distance = 0;
  int64_t parent = -1;
  int parent_generator = -1;  // this vertex = parent * parent_generator
  std::vector<size_t> children;
};

struct TreeEdge {
  size_t parent;
  size_t child;
  int generator;
  int color;
};

inline constexpr int kMaxTreeRadius = 6;

class ColoredTreeBall {
 public:
  int radius() const { return radius_; }
  const std::vector<TreeVertex>& vertices() const { return vertices_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  // Index of the edge from v's parent to v.
  size_t ParentEdge(size_t v) const { return parent_edge_[v]; }
  // Vertices at distance <= s.
  std::vector<VertexId> InnerBall(int s) const;
  // 1-dimensional complex on vertex positions with edge colors as chamber
  // colors.
  const Complex& AsComplex() const { return complex_; }
  std::string ToDot() const;

 private:
  friend ColoredTreeBall LiftColoring(int radius, int bound);

  int radius_ = 0;
  std::vector<TreeVertex> vertices_;
  std::vector<TreeEdge> edges_;
  std::vector<size_t> parent_edge_;
  Complex complex_;
};

// Ball of radius r in the Cayley tree, each edge colored like the quotient
// edge it covers. Throws kBoundExceeded outside [1, bound].
ColoredTreeBall LiftColoring(int radius, int bound = kMaxTreeRadius);

struct ColorCount {
  int radius = 0;
  int fix_radius = 0;
  std::string method;  // "engine" or "factorized"
  std::string count;   // decimal
  double log2_count = 0.0;
};

struct CountOptions {
  int bound = kMaxTreeRadius;
  // Largest radius counted by the automorphism engine; larger radii use the
  // rooted-subtree factorization.
  int engine_max_radius = 4;
};

// Color-preserving automorphisms of the radius-r ball fixing the radius-s
// ball pointwise. Throws kBoundExceeded unless 0 <= s <= r <= bound, and
// kInvalidArgument if s > r.
ColorCount ColorAutomorphismCount(int r, int s, const CountOptions& options = {});

// Same count from the product over vertices of the factorials of the sizes
// of color-isomorphism classes of outward subtrees.
ColorCount FactorizedColorCount(const ColoredTreeBall& ball, int s);

struct FlipWitness {
  size_t sphere_vertex = 0;
  size_t child_a = 0;
  size_t child_b = 0;
  int generator_a = -1;
  int generator_b = -1;
  VertexPermutation permutation;
};

// Swaps two same-colored outward subtrees at vertex v (distance < radius),
// preferring the a1 and conj(a3) rays. Identity elsewhere. Throws kNoFlip
// when v has no same-colored pair of outward edges inside the ball.
FlipWitness SubtreeFlip(const ColoredTreeBall& ball, size_t v);

nlohmann::json ToJson(const ColoredTreeBall& ball, const FlipWitness& flip);

}  // namespace rigidcx

#endif  // RIGIDCX_QLAT_H_
