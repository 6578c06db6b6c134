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

// Automorphisms and isomorphisms of finite simplicial complexes.
//
// An automorphism is a vertex permutation mapping every simplex onto a
// simplex; with colors respected it also preserves vertex colors and
// chamber colors. The search is individualization-refinement: an ordered
// partition of the vertices is refined to an equitable one by splitting
// cells on incidence counts, then a non-singleton cell is branched on
// (smallest cell first, smallest vertex first). Group orders come from a
// stabilizer chain along the first path of the search tree, so they are
// exact even when the group is far too large to list.

#ifndef RIGIDCX_AUTOENG_H_
#define RIGIDCX_AUTOENG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rigidcx/scx.h"

namespace rigidcx {

// A bijection on the vertex positions of a complex: position i (the i-th
// entry of Complex::vertices()) maps to position image[i]. For an
// isomorphism a -> b the images are positions in b.
class VertexPermutation {
 public:
  VertexPermutation() = default;
  explicit VertexPermutation(std::vector<uint32_t> image)
      : image_(std::move(image)) {}
  static VertexPermutation Identity(size_t n);

  size_t size() const { return image_.size(); }
  uint32_t operator[](size_t i) const { return image_[i]; }
  const std::vector<uint32_t>& image() const { return image_; }
  bool IsIdentity() const;

  // (a * b)[i] = a[b[i]]: apply b first.
  friend VertexPermutation operator*(const VertexPermutation& a,
                                     const VertexPermutation& b);
  VertexPermutation Inverse() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
  friend auto operator<=>(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<uint32_t> image_;
};

struct SearchOptions {
  bool respect_colors = true;
  size_t vertex_cap = 200'000;
  uint64_t enumeration_cap = 1'000'000;
};

struct SearchStats {
  uint64_t nodes = 0;
  uint64_t leaves = 0;
  uint64_t refinements = 0;
};

struct AutomorphismSet {
  // Every element, sorted, when the order is at most the enumeration cap.
  std::vector<VertexPermutation> elements;
  bool complete = false;
  // Strong generators found along the stabilizer chain.
  std::vector<VertexPermutation> generators;
  // Base points (vertex positions) and basic orbit lengths; the order is
  // the product of the orbit lengths.
  std::vector<uint32_t> base;
  std::vector<uint64_t> orbit_lengths;
  std::string order;  // decimal
  double log2_order = 0.0;
  SearchStats stats;

  // Order if it fits in 64 bits.
  std::optional<uint64_t> OrderU64() const;
};

// Throws kCapExceeded when the complex has more than options.vertex_cap
// vertices.
AutomorphismSet AutomorphismGroup(const Complex& c, const SearchOptions& options = {});

// Automorphisms restricting to the identity on `fixed`. Throws
// kUnknownVertex for ids outside c.
AutomorphismSet AutomorphismsFixing(const Complex& c, std::span<const VertexId> fixed,
                                    const SearchOptions& options = {});

// Lists the group exhaustively; throws kCapExceeded once more than
// options.enumeration_cap elements are found.
std::vector<VertexPermutation> EnumerateAutomorphisms(const Complex& c,
                                                      std::span<const VertexId> fixed,
                                                      const SearchOptions& options = {});

// Any automorphism with p(x) = y for every (x, y) in `pairs`.
std::optional<VertexPermutation> FindAutomorphism(
    const Complex& c, std::span<const std::pair<VertexId, VertexId>> pairs,
    const SearchOptions& options = {});

// A witness isomorphism a -> b, or nullopt if none exists.
std::optional<VertexPermutation> FindIsomorphism(const Complex& a, const Complex& b,
                                                 const SearchOptions& options = {});

bool IsAutomorphism(const Complex& c, const VertexPermutation& p, bool respect_colors);
bool IsIsomorphism(const Complex& a, const Complex& b, const VertexPermutation& p,
                   bool respect_colors);

struct PanelFlipReport {
  int hop_depth = 1;
  // Interior edges lying in exactly three chambers.
  size_t three_chamber_edges = 0;
  // One choice per (edge, fixed chamber).
  size_t choices = 0;
  size_t satisfied = 0;
  // nullopt when there are no three-chamber edges.
  std::optional<double> fraction;
  // (edge, third vertex of the fixed chamber) for failed choices.
  std::vector<std::pair<Simplex, VertexId>> failures;
};

// Local flip property: for each interior edge e of a pure 2-complex with
// chambers a1, a2, a3 and each choice of a1, is there an automorphism of the
// subcomplex spanned by vertices within `hop_depth` of e that fixes a1
// pointwise and exchanges a2 and a3? Throws kInvalidArgument unless c has
// dimension 2.
PanelFlipReport PanelFlipCheck(const Complex& c, const InteriorMark& marks,
                               int hop_depth = 1, bool respect_colors = true);

// {"order": "...", "log2_order": x, "complete": b, "elements": [[ids]],
//  "generators": [[ids]]}; permutations are written as image vertex ids in
// vertices() order.
nlohmann::json ToJson(const Complex& c, const AutomorphismSet& set);
nlohmann::json ToJson(const PanelFlipReport& report);

}  // namespace rigidcx

#endif  // RIGIDCX_AUTOENG_H_
