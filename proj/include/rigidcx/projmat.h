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

// 3x3 matrices over binary fields, their images in PGL_3, the seven-matrix
// generating set over F_16 and breadth-first Cayley balls.

#ifndef RIGIDCX_PROJMAT_H_
#define RIGIDCX_PROJMAT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "rigidcx/gf2k.h"

namespace rigidcx {

// Plain 3x3 matrix; entries row-major.
class Matrix3 {
 public:
  Matrix3(FieldSpec field, const std::array<uint32_t, 9>& bits);
  // Rows of polynomial strings, parsed with ParseElem.
  static Matrix3 FromStrings(FieldSpec field,
                             const std::array<std::array<std::string, 3>, 3>& rows);
  static Matrix3 Identity(FieldSpec field);

  const FieldSpec& field() const { return field_; }
  FieldElem at(int row, int col) const {
    return FieldElem(field_, bits_[row * 3 + col]);
  }
  uint32_t bits(int row, int col) const { return bits_[row * 3 + col]; }
  const std::array<uint32_t, 9>& raw() const { return bits_; }

  Matrix3 Scaled(const FieldElem& c) const;
  // Transposed cofactor matrix; m * Adjugate(m) = det(m) * I.
  Matrix3 Adjugate() const;

  friend bool operator==(const Matrix3& a, const Matrix3& b) {
    return a.field_ == b.field_ && a.bits_ == b.bits_;
  }

 private:
  FieldSpec field_;
  std::array<uint32_t, 9> bits_;
};

// Throws kFieldMismatch.
Matrix3 operator*(const Matrix3& a, const Matrix3& b);

// Cofactor expansion along the first row.
FieldElem Determinant(const Matrix3& m);

// An element of PGL_3: an invertible matrix scaled so that its first nonzero
// entry in row-major order is 1. Two matrices are projectively equal iff
// their canonical forms are identical.
class ProjMatrix {
 public:
  const Matrix3& matrix() const { return m_; }
  const FieldSpec& field() const { return m_.field(); }

  // Byte encoding, two big-endian bytes per entry. Lexicographic order on
  // keys is the vertex order used by Cayley balls.
  std::string Key() const;

  friend bool operator==(const ProjMatrix& a, const ProjMatrix& b) {
    return a.m_ == b.m_;
  }
  friend bool operator<(const ProjMatrix& a, const ProjMatrix& b) {
    return a.m_.raw() < b.m_.raw();
  }

 private:
  friend ProjMatrix PglNormalize(const Matrix3& m);
  explicit ProjMatrix(Matrix3 m) : m_(std::move(m)) {}

  Matrix3 m_;
};

// Throws kSingularMatrix if det(m) == 0.
ProjMatrix PglNormalize(const Matrix3& m);
ProjMatrix PglIdentity(FieldSpec field);
ProjMatrix PglMul(const ProjMatrix& a, const ProjMatrix& b);
ProjMatrix PglInv(const ProjMatrix& a);

struct GeneratorTable {
  std::string name;
  FieldSpec field;
  // Entries as printed, before canonicalization.
  std::vector<Matrix3> printed;
  // Canonical forms of `printed`, same order.
  std::vector<ProjMatrix> matrices;
  // Human-readable note for every entry that needed a textual repair.
  std::vector<std::string> repairs;
};

// The seven generators of the PGL_3(F_16) lattice quotient. One printed entry of the seventh matrix reads "x+x^2"; it is
// parsed as t+t^2 and listed in `repairs`.
GeneratorTable LsvGenerators();

nlohmann::json ToJson(const GeneratorTable& table);
// Throws kParse on schema errors or kSingularMatrix on a singular entry.
GeneratorTable GeneratorTableFromJson(const nlohmann::json& j);

// S together with S^{-1}, duplicates removed. labels[i] is k+1 when
// elements[i] is the k-th generator and -(k+1) when it is the inverse of the
// k-th generator (and not itself a generator).
struct SymmetricGenerators {
  std::vector<ProjMatrix> elements;
  std::vector<int> labels;
  // inverse_of[i]: index j with elements[j] = elements[i]^{-1}.
  std::vector<size_t> inverse_of;
  // Indices of the generators that equal their own inverse.
  std::vector<size_t> self_inverse;
  size_t size() const { return elements.size(); }
};

SymmetricGenerators Symmetrize(const GeneratorTable& table);
SymmetricGenerators Symmetrize(std::span<const ProjMatrix> generators);

struct BallVertex {
  ProjMatrix element;
  int distance;
  // Generator labels of a shortest word reaching `element` from I.
  std::vector<int> word;
};

struct BallEdge {
  size_t u;
  size_t v;
  // Label of g with v = u * g; the label of (v, u) is -label.
  int label;
};

struct WordCollision {
  std::vector<int> first;
  std::vector<int> second;
};

class CayleyBall {
 public:
  int radius() const { return radius_; }
  const std::vector<BallVertex>& vertices() const { return vertices_; }
  const std::vector<BallEdge>& edges() const { return edges_; }
  // Shortest pair of distinct reduced words found to reach one element.
  const std::optional<WordCollision>& collision() const { return collision_; }
  std::vector<size_t> SphereSizes() const;
  std::optional<size_t> IndexOf(const ProjMatrix& m) const;

  nlohmann::json ToJson() const;
  // Edge labels are generator indices, negative for inverses.
  std::string ToDot() const;

 private:
  friend CayleyBall BuildCayleyBall(const SymmetricGenerators&, int, size_t);

  int radius_ = 0;
  std::vector<BallVertex> vertices_;
  std::vector<BallEdge> edges_;
  std::optional<WordCollision> collision_;
  std::unordered_map<std::string, size_t> index_;
};

inline constexpr size_t kDefaultVertexBudget = 1'000'000;

// Breadth-first ball of radius r around I in the right Cayley graph
// u -- u*g. Vertices are grouped by distance, each sphere sorted by Key().
// Throws kInvalidArgument if r < 0 or the set is not closed under inverses,
// kBudgetExceeded once the ball would hold more than `vertex_budget`
// vertices.
CayleyBall BuildCayleyBall(const SymmetricGenerators& gens, int radius,
                           size_t vertex_budget = kDefaultVertexBudget);

struct PlaneOrbits {
  size_t point_count = 0;
  // Orbit sizes, descending.
  std::vector<size_t> orbit_sizes;
  // orbit_of[p]: orbit index of point p in canonical enumeration order.
  std::vector<size_t> orbit_of;
};

// Orbits of <gens> on the points of P^2(F_q), q = field size. An empty
// generator list gives singleton orbits.
PlaneOrbits ProjectivePlaneOrbits(FieldSpec field,
                                  std::span<const ProjMatrix> gens);

}  // namespace rigidcx

#endif  // RIGIDCX_PROJMAT_H_
