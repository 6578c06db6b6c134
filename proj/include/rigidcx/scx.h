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

// Finite abstract simplicial complexes.
//
// A Complex is a vertex list plus a downward-closed family of simplices,
// stored per dimension as sorted, duplicate-free vertex-id arrays. Optional
// labels: one color per vertex, and one color per chamber (simplex of top
// dimension). Complexes are immutable once built.

#ifndef RIGIDCX_SCX_H_
#define RIGIDCX_SCX_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"

namespace rigidcx {

using VertexId = int64_t;
using Simplex = std::vector<VertexId>;

struct SimplexHash {
  size_t operator()(const Simplex& s) const noexcept;
};

struct Graph {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

class Complex {
 public:
  Complex() = default;

  // Downward closure of `faces` over `vertices`. Every vertex is a 0-simplex.
  // Throws kUnknownVertex when a face mentions a vertex not listed and
  // kInvalidArgument on duplicate vertices.
  static Complex FromFaces(std::vector<VertexId> vertices,
                           std::span<const Simplex> faces);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  size_t num_vertices() const { return vertices_.size(); }
  // -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  // Lexicographically sorted.
  const std::vector<Simplex>& simplices(int dim) const;
  size_t num_simplices() const;

  bool has_vertex(VertexId v) const { return index_.contains(v); }
  // Position of v in vertices(); throws kUnknownVertex.
  size_t IndexOf(VertexId v) const;
  // Accepts unsorted input.
  bool Contains(const Simplex& s) const;

  // Simplices not properly contained in another simplex, by dimension then
  // lexicographically.
  std::vector<Simplex> MaximalSimplices() const;
  // 1-skeleton neighbors of v, ascending.
  std::vector<VertexId> Neighbors(VertexId v) const;

  const std::optional<std::vector<int>>& vertex_colors() const {
    return vertex_colors_;
  }
  // Aligned with simplices(dimension()).
  const std::optional<std::vector<int>>& chamber_colors() const {
    return chamber_colors_;
  }
  std::optional<int> ChamberColor(const Simplex& chamber) const;

  Complex WithVertexColors(std::vector<int> colors) const;
  Complex WithChamberColors(std::vector<int> colors) const;

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.vertices_ == b.vertices_ && a.by_dim_ == b.by_dim_ &&
           a.vertex_colors_ == b.vertex_colors_ &&
           a.chamber_colors_ == b.chamber_colors_;
  }

 private:
  void Index();

  std::vector<VertexId> vertices_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::optional<std::vector<int>> vertex_colors_;
  std::optional<std::vector<int>> chamber_colors_;
  std::unordered_map<VertexId, size_t> index_;
  std::unordered_set<Simplex, SimplexHash> lookup_;
  std::vector<std::vector<VertexId>> neighbors_;
};

inline constexpr int kDefaultCliqueMaxDim = 3;

// Simplices are the cliques of at most max_dim + 1 vertices. Throws
// kNonSimpleGraph on loops, repeated edges or dangling endpoints and
// kInvalidArgument if max_dim < 1.
Complex CliqueComplex(const Graph& graph, int max_dim = kDefaultCliqueMaxDim);

Graph OneSkeleton(const Complex& c);

// Complex on the neighbors of v whose simplices are the s with s + {v} in c.
// Throws kUnknownVertex.
Complex Link(const Complex& c, VertexId v);

// All simplices of c spanned by `keep`. Colors are carried over; chamber
// colors only when the top dimension survives.
Complex InducedSubcomplex(const Complex& c, std::span<const VertexId> keep);

// Vertices at 1-skeleton distance <= hops from some vertex of `seed`.
std::vector<VertexId> HopNeighborhood(const Complex& c,
                                      std::span<const VertexId> seed, int hops);

// Number of top-dimensional simplices containing s. Throws kUnknownSimplex.
size_t ChamberCount(const Complex& c, const Simplex& s);

// Interior vertices of a truncated complex. A simplex is interior iff all of
// its vertices are.
class InteriorMark {
 public:
  InteriorMark() = default;
  explicit InteriorMark(std::unordered_set<VertexId> interior)
      : interior_(std::move(interior)) {}
  static InteriorMark All(const Complex& c);

  bool IsInterior(VertexId v) const { return interior_.contains(v); }
  bool IsInterior(const Simplex& s) const;
  size_t size() const { return interior_.size(); }

 private:
  std::unordered_set<VertexId> interior_;
};

struct PurityReport {
  // dimension -> number of interior maximal simplices of that dimension.
  std::map<int, size_t> interior_maximal_by_dim;
  bool pure = false;
  int top_dimension = -1;
  // Over interior simplices of dimension top_dimension - 1.
  size_t interior_panels = 0;
  std::optional<size_t> min_panel_chambers;
  std::optional<size_t> max_panel_chambers;
};

PurityReport Purity(const Complex& c, const InteriorMark& marks);

// Attaches chamber colors. Throws kPartialAssignment unless every chamber
// is assigned, kUnknownSimplex for keys that are not chambers.
Complex ColorChambers(const Complex& c, const std::map<Simplex, int>& assignment);

// Uniform colors in [0, colors) from mt19937_64(seed), one draw per chamber
// in lexicographic order.
std::vector<int> RandomChamberColors(const Complex& c, int colors,
                                     uint64_t seed);

// Sizes of the color classes, indexed by color.
std::vector<size_t> ColorClassSizes(const Complex& c);

// {"vertices": [...], "simplices": {"<dim>": [[ids]]}, "vertex_colors"?: [...],
//  "chamber_colors"?: [...]}
nlohmann::json ToJson(const Complex& c);
// Throws kParse on schema violations.
Complex ComplexFromJson(const nlohmann::json& j);
std::string Serialize(const Complex& c);
Complex Deserialize(const std::string& text);

// 1-skeleton in DOT; colored chambers of a 1-dimensional complex become
// edge colors.
std::string ToDot(const Complex& c);

}  // namespace rigidcx

#endif  // RIGIDCX_SCX_H_
