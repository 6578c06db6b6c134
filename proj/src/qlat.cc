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

#include "rigidcx/qlat.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigidcx/error.h"

namespace rigidcx {
namespace {

using boost::multiprecision::cpp_int;

bool AllDivisibleBy5(const Quaternion& a) {
  return a.a0 % 5 == 0 && a.a1 % 5 == 0 && a.a2 % 5 == 0 && a.a3 % 5 == 0;
}

Quaternion Divide5(const Quaternion& a) {
  return {a.a0 / 5, a.a1 / 5, a.a2 / 5, a.a3 / 5};
}

// Canonical ids of rooted colored subtrees: equal ids iff the subtrees
// below the two vertices are color-isomorphic.
std::vector<size_t> SubtreeTypes(const ColoredTreeBall& ball) {
  const auto& verts = ball.vertices();
  std::vector<size_t> type(verts.size(), 0);
  std::map<std::vector<std::pair<int, size_t>>, size_t> intern;
  for (size_t v = verts.size(); v-- > 0;) {
    std::vector<std::pair<int, size_t>> shape;
    for (size_t c : verts[v].children) {
      shape.emplace_back(ball.edges()[ball.ParentEdge(c)].color, type[c]);
    }
    std::sort(shape.begin(), shape.end());
    type[v] = intern.emplace(std::move(shape), intern.size()).first->second;
  }
  return type;
}

}  // namespace

Quaternion QuatMul(const Quaternion& a, const Quaternion& b) {
  return {a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3,
          a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2,
          a.a0 * b.a2 - a.a1 * b.a3 + a.a2 * b.a0 + a.a3 * b.a1,
          a.a0 * b.a3 + a.a1 * b.a2 - a.a2 * b.a1 + a.a3 * b.a0};
}

Quaternion Conj(const Quaternion& a) { return {a.a0, -a.a1, -a.a2, -a.a3}; }

int64_t Norm(const Quaternion& a) {
  return a.a0 * a.a0 + a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3;
}

std::string ToString(const Quaternion& a) {
  std::ostringstream out;
  out << a.a0;
  const std::pair<int64_t, char> parts[] = {{a.a1, 'i'}, {a.a2, 'j'}, {a.a3, 'k'}};
  for (auto [c, unit] : parts) {
    if (c == 0) continue;
    out << (c < 0 ? '-' : '+') << std::llabs(c) << unit;
  }
  return out.str();
}

int FiberShift(int g) {
  const int i = g / 2 + 1;
  return (g % 2 == 0) ? i % 4 : (4 - i) % 4;
}

std::array<Quaternion, kNumTreeGenerators> Norm5Generators() {
  std::vector<Quaternion> found;
  for (int64_t a0 = 1; a0 <= 2; ++a0) {
    for (int64_t a1 = -2; a1 <= 2; ++a1) {
      for (int64_t a2 = -2; a2 <= 2; ++a2) {
        for (int64_t a3 = -2; a3 <= 2; ++a3) {
          const Quaternion q{a0, a1, a2, a3};
          if (Norm(q) == 5 && a0 % 2 == 1 && a1 % 2 == 0 && a2 % 2 == 0 &&
              a3 % 2 == 0) {
            found.push_back(q);
          }
        }
      }
    }
  }
  // Order as a1, conj(a1), ...: by the axis of the imaginary part, positive
  // coefficient first.
  auto axis = [](const Quaternion& q) { return q.a1 != 0 ? 0 : (q.a2 != 0 ? 1 : 2); };
  auto coeff = [](const Quaternion& q) { return q.a1 + q.a2 + q.a3; };
  std::sort(found.begin(), found.end(), [&](const Quaternion& x, const Quaternion& y) {
    if (axis(x) != axis(y)) return axis(x) < axis(y);
    return coeff(x) > coeff(y);
  });
  if (found.size() != kNumTreeGenerators) {
    throw Error(ErrorCode::kInvalidArgument, "unexpected norm-5 solution count");
  }
  std::array<Quaternion, kNumTreeGenerators> out;
  std::copy(found.begin(), found.end(), out.begin());
  return out;
}

LambdaClass CanonicalRep(const Quaternion& a) {
  if (a == Quaternion{}) throw Error(ErrorCode::kInvalidArgument, "zero quaternion");
  int64_t n = Norm(a);
  while (n % 5 == 0) n /= 5;
  if (n != 1) {
    throw Error(ErrorCode::kNotPowerOfFive, "norm of " + ToString(a) +
                                                " is not a power of 5");
  }
  Quaternion q = a;
  while (AllDivisibleBy5(q)) q = Divide5(q);
  const int64_t lead = q.a0 != 0 ? q.a0 : (q.a1 != 0 ? q.a1 : (q.a2 != 0 ? q.a2 : q.a3));
  if (lead < 0) q = {-q.a0, -q.a1, -q.a2, -q.a3};
  return {q};
}

FreeGroupReport FreeGroupCheck(int max_length, int bound) {
  if (max_length < 1 || max_length > bound) {
    throw Error(ErrorCode::kBoundExceeded,
                "word length " + std::to_string(max_length) + " outside [1, " +
                    std::to_string(bound) + "]");
  }
  const auto gens = Norm5Generators();
  FreeGroupReport report;
  report.max_length = max_length;
  report.distinct = {1};
  report.expected = {1};
  std::set<LambdaClass> all = {CanonicalRep(Quaternion::Scalar(1))};
  size_t total = 1;
  // Reduced words of the current length with their products.
  std::vector<std::pair<int, Quaternion>> layer = {{-1, Quaternion::Scalar(1)}};
  uint64_t expected = 6;
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::pair<int, Quaternion>> next;
    std::set<LambdaClass> classes;
    for (const auto& [last, q] : layer) {
      for (int g = 0; g < kNumTreeGenerators; ++g) {
        if (last >= 0 && g == InverseGenerator(last)) continue;
        // Keep products primitive so coefficients stay small.
        const Quaternion p = CanonicalRep(QuatMul(q, gens[g])).rep;
        classes.insert(CanonicalRep(p));
        next.emplace_back(g, p);
      }
    }
    report.distinct.push_back(classes.size());
    report.expected.push_back(expected);
    expected *= 5;
    total += classes.size();
    all.insert(classes.begin(), classes.end());
    layer = std::move(next);
  }
  report.lengths_disjoint = all.size() == total;
  report.free = report.lengths_disjoint && report.distinct == report.expected;
  return report;
}

int MatchingColor(int u, int v) { return (u ^ v) - 1; }

char ColorName(int color) { return static_cast<char>('A' + color); }

int QuotientGraph::Degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += (e.u == v) + (e.v == v);
  return d;
}

int QuotientGraph::Multiplicity(int u, int v) const {
  int m = 0;
  for (const auto& e : edges) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++m;
  }
  return m;
}

bool QuotientGraph::UnderlyingIsComplete() const {
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) {
      if (Multiplicity(u, v) == 0) return false;
    }
  }
  return true;
}

bool QuotientGraph::HasLoops() const {
  return std::any_of(edges.begin(), edges.end(),
                     [](const QuotientEdge& e) { return e.u == e.v; });
}

Complex QuotientGraph::ColoredSimpleGraph() const {
  std::vector<VertexId> verts;
  for (int v = 0; v < vertex_count; ++v) verts.push_back(v);
  std::map<Simplex, int> colors;
  for (const auto& e : edges) {
    if (e.u != e.v) colors[{std::min(e.u, e.v), std::max(e.u, e.v)}] = e.color;
  }
  std::vector<Simplex> faces;
  for (const auto& [s, color] : colors) faces.push_back(s);
  return ColorChambers(Complex::FromFaces(verts, faces), colors);
}

QuotientGraph BuildQuotientGraph() {
  QuotientGraph q;
  std::set<std::pair<int, int>> seen;
  for (int v = 0; v < q.vertex_count; ++v) {
    for (int g = 0; g < kNumTreeGenerators; ++g) {
      if (seen.contains({v, g})) continue;
      const int w = (v + FiberShift(g)) % 4;
      seen.insert({v, g});
      seen.insert({w, InverseGenerator(g)});
      q.edges.push_back({v, w, g, MatchingColor(v, w)});
    }
  }
  return q;
}

nlohmann::json ToJson(const QuotientGraph& q) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : q.edges) {
    edges.push_back({{"u", e.u},
                     {"v", e.v},
                     {"generator", e.generator},
                     {"color", std::string(1, ColorName(e.color))}});
  }
  std::vector<int> degrees;
  for (int v = 0; v < q.vertex_count; ++v) degrees.push_back(q.Degree(v));
  return {{"vertices", q.vertex_count},
          {"edge_count", q.edges.size()},
          {"degrees", degrees},
          {"edges", edges}};
}

std::vector<VertexId> ColoredTreeBall::InnerBall(int s) const {
  std::vector<VertexId> out;
  for (size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].distance <= s) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::string ColoredTreeBall::ToDot() const {
  static const char* kColors[] = {"red", "green", "blue"};
  std::ostringstream out;
  out << "graph tree_ball {\n";
  for (size_t v = 0; v < vertices_.size(); ++v) {
    out << "  v" << v << " [label=\"" << v << "\", fiber=" << vertices_[v].fiber
        << "];\n";
  }
  for (const auto& e : edges_) {
    out << "  v" << e.parent << " -- v" << e.child << " [color=" << kColors[e.color]
        << ", label=\"" << ColorName(e.color) << e.generator << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

ColoredTreeBall LiftColoring(int radius, int bound) {
  if (radius < 1 || radius > bound) {
    throw Error(ErrorCode::kBoundExceeded,
                "tree radius " + std::to_string(radius) + " outside [1, " +
                    std::to_string(bound) + "]");
  }
  const auto gens = Norm5Generators();
  ColoredTreeBall ball;
  ball.radius_ = radius;
  ball.vertices_.push_back({{}, CanonicalRep(Quaternion::Scalar(1)), 0, 0, -1, -1, {}});
  ball.parent_edge_.push_back(0);
  size_t begin = 0;
  for (int d = 1; d <= radius; ++d) {
    const size_t end = ball.vertices_.size();
    for (size_t u = begin; u < end; ++u) {
      for (int g = 0; g < kNumTreeGenerators; ++g) {
        const TreeVertex& parent = ball.vertices_[u];
        if (parent.parent_generator >= 0 && g == InverseGenerator(parent.parent_generator)) {
          continue;
        }
        TreeVertex child;
        child.word = parent.word;
        child.word.push_back(static_cast<uint8_t>(g));
        child.cls = CanonicalRep(QuatMul(parent.cls.rep, gens[g]));
        child.fiber = (parent.fiber + FiberShift(g)) % 4;
        child.distance = d;
        child.parent = static_cast<int64_t>(u);
        child.parent_generator = g;
        const size_t id = ball.vertices_.size();
        ball.edges_.push_back({u, id, g, MatchingColor(parent.fiber, child.fiber)});
        ball.parent_edge_.push_back(ball.edges_.size() - 1);
        ball.vertices_[u].children.push_back(id);
        ball.vertices_.push_back(std::move(child));
      }
    }
    begin = end;
  }

  std::vector<VertexId> ids;
  for (size_t v = 0; v < ball.vertices_.size(); ++v) ids.push_back(static_cast<VertexId>(v));
  std::map<Simplex, int> colors;
  std::vector<Simplex> faces;
  for (const auto& e : ball.edges_) {
    Simplex s = {static_cast<VertexId>(e.parent), static_cast<VertexId>(e.child)};
    faces.push_back(s);
    colors[s] = e.color;
  }
  ball.complex_ = ColorChambers(Complex::FromFaces(ids, faces), colors);
  return ball;
}

ColorCount FactorizedColorCount(const ColoredTreeBall& ball, int s) {
  const auto type = SubtreeTypes(ball);
  cpp_int count = 1;
  double log2_count = 0.0;
  for (const TreeVertex& v : ball.vertices()) {
    if (v.distance < s) continue;
    std::map<std::pair<int, size_t>, int> classes;
    for (size_t c : v.children) {
      ++classes[{ball.edges()[ball.ParentEdge(c)].color, type[c]}];
    }
    for (const auto& [key, m] : classes) {
      for (int k = 2; k <= m; ++k) {
        count *= k;
        log2_count += std::log2(static_cast<double>(k));
      }
    }
  }
  return {ball.radius(), s, "factorized", count.str(), log2_count};
}

ColorCount ColorAutomorphismCount(int r, int s, const CountOptions& options) {
  if (r < 1 || r > options.bound || s < 0) {
    throw Error(ErrorCode::kBoundExceeded,
                "radius " + std::to_string(r) + " outside [1, " +
                    std::to_string(options.bound) + "]");
  }
  if (s > r) throw Error(ErrorCode::kInvalidArgument, "fix radius exceeds radius");
  const ColoredTreeBall ball = LiftColoring(r, options.bound);
  if (r > options.engine_max_radius) return FactorizedColorCount(ball, s);
  SearchOptions search;
  search.respect_colors = true;
  search.enumeration_cap = 0;
  const AutomorphismSet set = AutomorphismsFixing(ball.AsComplex(), ball.InnerBall(s), search);
  return {r, s, "engine", set.order, set.log2_order};
}

FlipWitness SubtreeFlip(const ColoredTreeBall& ball, size_t v) {
  const auto& verts = ball.vertices();
  if (v >= verts.size()) throw Error(ErrorCode::kUnknownVertex, "no such tree vertex");
  const auto& children = verts[v].children;
  auto color_of = [&](size_t c) { return ball.edges()[ball.ParentEdge(c)].color; };
  auto child_by_gen = [&](int g) -> std::optional<size_t> {
    for (size_t c : children) {
      if (verts[c].parent_generator == g) return c;
    }
    return std::nullopt;
  };

  std::optional<std::pair<size_t, size_t>> pair;
  // Rays along a1 and conj(a3) both shift the fiber by +1, so share a color.
  if (auto a = child_by_gen(0), b = child_by_gen(5); a && b && color_of(*a) == color_of(*b)) {
    pair = {*a, *b};
  }
  for (size_t i = 0; !pair && i < children.size(); ++i) {
    for (size_t j = i + 1; !pair && j < children.size(); ++j) {
      if (color_of(children[i]) == color_of(children[j])) pair = {children[i], children[j]};
    }
  }
  if (!pair) {
    throw Error(ErrorCode::kNoFlip, "vertex " + std::to_string(v) +
                                        " has no same-colored outward pair in the ball");
  }

  const auto type = SubtreeTypes(ball);
  std::vector<uint32_t> image(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) image[i] = static_cast<uint32_t>(i);
  std::vector<std::pair<size_t, size_t>> stack = {*pair};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (type[x] != type[y] || color_of(x) != color_of(y)) {
      throw Error(ErrorCode::kNoFlip, "outward subtrees are not color-isomorphic");
    }
    image[x] = static_cast<uint32_t>(y);
    image[y] = static_cast<uint32_t>(x);
    std::vector<char> used(verts[y].children.size(), 0);
    for (size_t cx : verts[x].children) {
      for (size_t k = 0; k < verts[y].children.size(); ++k) {
        const size_t cy = verts[y].children[k];
        if (!used[k] && color_of(cx) == color_of(cy) && type[cx] == type[cy]) {
          used[k] = 1;
          stack.emplace_back(cx, cy);
          break;
        }
      }
    }
  }
  return {v, pair->first, pair->second, verts[pair->first].parent_generator,
          verts[pair->second].parent_generator, VertexPermutation(std::move(image))};
}

nlohmann::json ToJson(const ColoredTreeBall& ball, const FlipWitness& flip) {
  nlohmann::json moved = nlohmann::json::array();
  for (size_t i = 0; i < flip.permutation.size(); ++i) {
    if (flip.permutation[i] != i) moved.push_back({i, flip.permutation[i]});
  }
  const auto& word = ball.vertices()[flip.sphere_vertex].word;
  return {{"sphere_vertex", flip.sphere_vertex},
          {"sphere_word", std::vector<int>(word.begin(), word.end())},
          {"generators", {flip.generator_a, flip.generator_b}},
          {"children", {flip.child_a, flip.child_b}},
          {"moved", moved}};
}

}  // namespace rigidcx
