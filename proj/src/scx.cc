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

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "rigidcx/error.h"

namespace rigidcx {
namespace {

Simplex Sorted(Simplex s) {
  std::sort(s.begin(), s.end());
  return s;
}

const std::vector<Simplex>& EmptySimplexList() {
  static const std::vector<Simplex> kEmpty;
  return kEmpty;
}

}  // namespace

size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  uint64_t h = 1469598103934665603ull;
  for (VertexId v : s) {
    h ^= static_cast<uint64_t>(v);
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

Complex Complex::FromFaces(std::vector<VertexId> vertices,
                           std::span<const Simplex> faces) {
  Complex c;
  c.vertices_ = std::move(vertices);
  std::unordered_set<VertexId> known(c.vertices_.begin(), c.vertices_.end());
  if (known.size() != c.vertices_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate vertex id");
  }
  std::vector<std::set<Simplex>> dims;
  auto insert = [&](const Simplex& s) {
    const size_t d = s.size() - 1;
    if (dims.size() <= d) dims.resize(d + 1);
    dims[d].insert(s);
  };
  for (VertexId v : c.vertices_) insert({v});
  for (const Simplex& raw : faces) {
    if (raw.empty()) continue;
    Simplex face = Sorted(raw);
    face.erase(std::unique(face.begin(), face.end()), face.end());
    for (VertexId v : face) {
      if (!known.contains(v)) {
        throw Error(ErrorCode::kUnknownVertex,
                    "face mentions unknown vertex " + std::to_string(v));
      }
    }
    if (face.size() > 20) {
      throw Error(ErrorCode::kInvalidArgument, "face too large to close");
    }
    const size_t n = face.size();
    if (dims.size() >= n && dims[n - 1].contains(face)) continue;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
      Simplex sub;
      for (size_t i = 0; i < n; ++i) {
        if (mask & (uint32_t{1} << i)) sub.push_back(face[i]);
      }
      insert(sub);
    }
  }
  for (auto& d : dims) c.by_dim_.emplace_back(d.begin(), d.end());
  c.Index();
  return c;
}

void Complex::Index() {
  index_.clear();
  lookup_.clear();
  for (size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
  for (const auto& d : by_dim_) {
    for (const Simplex& s : d) lookup_.insert(s);
  }
  neighbors_.assign(vertices_.size(), {});
  if (by_dim_.size() > 1) {
    for (const Simplex& e : by_dim_[1]) {
      neighbors_[index_.at(e[0])].push_back(e[1]);
      neighbors_[index_.at(e[1])].push_back(e[0]);
    }
    for (auto& n : neighbors_) std::sort(n.begin(), n.end());
  }
}

const std::vector<Simplex>& Complex::simplices(int dim) const {
  if (dim < 0 || dim > dimension()) return EmptySimplexList();
  return by_dim_[dim];
}

size_t Complex::num_simplices() const {
  size_t n = 0;
  for (const auto& d : by_dim_) n += d.size();
  return n;
}

size_t Complex::IndexOf(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownVertex, "unknown vertex " + std::to_string(v));
  }
  return it->second;
}

bool Complex::Contains(const Simplex& s) const {
  return lookup_.contains(Sorted(s));
}

std::vector<Simplex> Complex::MaximalSimplices() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (const Simplex& s : by_dim_[d]) {
      bool maximal = true;
      if (d < dimension()) {
        // s is maximal iff no neighbor of its first vertex extends it.
        for (VertexId w : neighbors_[index_.at(s[0])]) {
          if (std::binary_search(s.begin(), s.end(), w)) continue;
          Simplex t = s;
          t.insert(std::upper_bound(t.begin(), t.end(), w), w);
          if (lookup_.contains(t)) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

std::vector<VertexId> Complex::Neighbors(VertexId v) const {
  return neighbors_[IndexOf(v)];
}

std::optional<int> Complex::ChamberColor(const Simplex& chamber) const {
  if (!chamber_colors_) return std::nullopt;
  const auto& top = simplices(dimension());
  const Simplex s = Sorted(chamber);
  auto it = std::lower_bound(top.begin(), top.end(), s);
  if (it == top.end() || *it != s) return std::nullopt;
  return (*chamber_colors_)[it - top.begin()];
}

Complex Complex::WithVertexColors(std::vector<int> colors) const {
  if (colors.size() != vertices_.size()) {
    throw Error(ErrorCode::kPartialAssignment,
                "vertex colors must cover every vertex");
  }
  Complex c = *this;
  c.vertex_colors_ = std::move(colors);
  return c;
}

Complex Complex::WithChamberColors(std::vector<int> colors) const {
  if (colors.size() != simplices(dimension()).size()) {
    throw Error(ErrorCode::kPartialAssignment,
                "chamber colors must cover every chamber");
  }
  Complex c = *this;
  c.chamber_colors_ = std::move(colors);
  return c;
}

Complex CliqueComplex(const Graph& graph, int max_dim) {
  if (max_dim < 1) throw Error(ErrorCode::kInvalidArgument, "max_dim must be >= 1");
  std::unordered_map<VertexId, std::set<VertexId>> adj;
  for (VertexId v : graph.vertices) {
    if (!adj.emplace(v, std::set<VertexId>{}).second) {
      throw Error(ErrorCode::kNonSimpleGraph, "duplicate vertex " + std::to_string(v));
    }
  }
  for (auto [a, b] : graph.edges) {
    if (a == b) throw Error(ErrorCode::kNonSimpleGraph, "loop at " + std::to_string(a));
    if (!adj.contains(a) || !adj.contains(b)) {
      throw Error(ErrorCode::kNonSimpleGraph, "edge endpoint not in vertex list");
    }
    if (!adj[a].insert(b).second) {
      throw Error(ErrorCode::kNonSimpleGraph, "repeated edge");
    }
    adj[b].insert(a);
  }

  // Extend each clique by larger common neighbors only, so every clique is
  // generated once, in sorted form.
  std::vector<Simplex> maximal_candidates;
  std::vector<Simplex> layer;
  for (VertexId v : graph.vertices) layer.push_back({v});
  for (int d = 1; d <= max_dim && !layer.empty(); ++d) {
    std::vector<Simplex> next;
    for (const Simplex& s : layer) {
      for (auto it = adj[s.back()].upper_bound(s.back()); it != adj[s.back()].end();
           ++it) {
        const VertexId w = *it;
        bool all = true;
        for (size_t i = 0; i + 1 < s.size() && all; ++i) all = adj[s[i]].contains(w);
        if (!all) continue;
        Simplex t = s;
        t.push_back(w);
        next.push_back(std::move(t));
      }
    }
    for (const Simplex& s : next) maximal_candidates.push_back(s);
    layer = std::move(next);
  }
  return Complex::FromFaces(graph.vertices, maximal_candidates);
}

Graph OneSkeleton(const Complex& c) {
  Graph g{c.vertices(), {}};
  for (const Simplex& e : c.simplices(1)) g.edges.emplace_back(e[0], e[1]);
  return g;
}

Complex Link(const Complex& c, VertexId v) {
  std::vector<VertexId> verts = c.Neighbors(v);
  std::vector<Simplex> faces;
  for (int d = 1; d <= c.dimension(); ++d) {
    for (const Simplex& s : c.simplices(d)) {
      if (!std::binary_search(s.begin(), s.end(), v)) continue;
      Simplex t;
      for (VertexId w : s) {
        if (w != v) t.push_back(w);
      }
      faces.push_back(std::move(t));
    }
  }
  Complex link = Complex::FromFaces(verts, faces);
  if (c.vertex_colors()) {
    std::vector<int> colors;
    for (VertexId w : link.vertices()) colors.push_back((*c.vertex_colors())[c.IndexOf(w)]);
    link = link.WithVertexColors(std::move(colors));
  }
  if (c.chamber_colors() && link.dimension() == c.dimension() - 1 &&
      link.dimension() >= 0) {
    std::vector<int> colors;
    for (const Simplex& s : link.simplices(link.dimension())) {
      Simplex t = s;
      t.push_back(v);
      colors.push_back(*c.ChamberColor(t));
    }
    link = link.WithChamberColors(std::move(colors));
  }
  return link;
}

Complex InducedSubcomplex(const Complex& c, std::span<const VertexId> keep) {
  std::unordered_set<VertexId> keep_set(keep.begin(), keep.end());
  std::vector<VertexId> verts;
  for (VertexId v : c.vertices()) {
    if (keep_set.contains(v)) verts.push_back(v);
  }
  std::vector<Simplex> faces;
  for (int d = 1; d <= c.dimension(); ++d) {
    for (const Simplex& s : c.simplices(d)) {
      if (std::all_of(s.begin(), s.end(),
                      [&](VertexId v) { return keep_set.contains(v); })) {
        faces.push_back(s);
      }
    }
  }
  Complex sub = Complex::FromFaces(verts, faces);
  if (c.vertex_colors()) {
    std::vector<int> colors;
    for (VertexId v : sub.vertices()) colors.push_back((*c.vertex_colors())[c.IndexOf(v)]);
    sub = sub.WithVertexColors(std::move(colors));
  }
  if (c.chamber_colors() && sub.dimension() == c.dimension()) {
    std::vector<int> colors;
    for (const Simplex& s : sub.simplices(sub.dimension())) {
      colors.push_back(*c.ChamberColor(s));
    }
    sub = sub.WithChamberColors(std::move(colors));
  }
  return sub;
}

std::vector<VertexId> HopNeighborhood(const Complex& c,
                                      std::span<const VertexId> seed, int hops) {
  std::unordered_map<VertexId, int> dist;
  std::deque<VertexId> queue;
  for (VertexId v : seed) {
    c.IndexOf(v);
    if (dist.emplace(v, 0).second) queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (dist[v] == hops) continue;
    for (VertexId w : c.Neighbors(v)) {
      if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
    }
  }
  std::vector<VertexId> out;
  for (VertexId v : c.vertices()) {
    if (dist.contains(v)) out.push_back(v);
  }
  return out;
}

size_t ChamberCount(const Complex& c, const Simplex& s) {
  const Simplex key = Sorted(s);
  if (key.empty() || !c.Contains(key)) {
    throw Error(ErrorCode::kUnknownSimplex, "simplex not in complex");
  }
  size_t count = 0;
  for (const Simplex& chamber : c.simplices(c.dimension())) {
    if (std::includes(chamber.begin(), chamber.end(), key.begin(), key.end())) {
      ++count;
    }
  }
  return count;
}

InteriorMark InteriorMark::All(const Complex& c) {
  return InteriorMark(
      std::unordered_set<VertexId>(c.vertices().begin(), c.vertices().end()));
}

bool InteriorMark::IsInterior(const Simplex& s) const {
  return std::all_of(s.begin(), s.end(),
                     [&](VertexId v) { return interior_.contains(v); });
}

PurityReport Purity(const Complex& c, const InteriorMark& marks) {
  PurityReport report;
  for (const Simplex& s : c.MaximalSimplices()) {
    if (marks.IsInterior(s)) {
      ++report.interior_maximal_by_dim[static_cast<int>(s.size()) - 1];
    }
  }
  report.pure = report.interior_maximal_by_dim.size() == 1;
  if (!report.interior_maximal_by_dim.empty()) {
    report.top_dimension = report.interior_maximal_by_dim.rbegin()->first;
  }
  const int top = c.dimension();
  if (top >= 1) {
    // One pass over chambers instead of a ChamberCount per panel.
    std::unordered_map<Simplex, size_t, SimplexHash> chambers_at;
    for (const Simplex& ch : c.simplices(top)) {
      for (size_t skip = 0; skip < ch.size(); ++skip) {
        Simplex panel;
        for (size_t i = 0; i < ch.size(); ++i) {
          if (i != skip) panel.push_back(ch[i]);
        }
        ++chambers_at[panel];
      }
    }
    for (const Simplex& p : c.simplices(top - 1)) {
      if (!marks.IsInterior(p)) continue;
      const size_t n = chambers_at.contains(p) ? chambers_at[p] : 0;
      ++report.interior_panels;
      report.min_panel_chambers = std::min(report.min_panel_chambers.value_or(n), n);
      report.max_panel_chambers = std::max(report.max_panel_chambers.value_or(n), n);
    }
  }
  return report;
}

Complex ColorChambers(const Complex& c, const std::map<Simplex, int>& assignment) {
  const auto& chambers = c.simplices(c.dimension());
  std::vector<int> colors;
  colors.reserve(chambers.size());
  for (const Simplex& ch : chambers) {
    auto it = assignment.find(ch);
    if (it == assignment.end()) {
      throw Error(ErrorCode::kPartialAssignment, "chamber without a color");
    }
    colors.push_back(it->second);
  }
  for (const auto& [s, color] : assignment) {
    if (!std::binary_search(chambers.begin(), chambers.end(), Sorted(s))) {
      throw Error(ErrorCode::kUnknownSimplex, "color assigned to a non-chamber");
    }
  }
  return c.WithChamberColors(std::move(colors));
}

std::vector<int> RandomChamberColors(const Complex& c, int colors, uint64_t seed) {
  if (colors < 1) throw Error(ErrorCode::kInvalidArgument, "colors must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> out;
  for (size_t i = 0; i < c.simplices(c.dimension()).size(); ++i) {
    out.push_back(static_cast<int>(rng() % static_cast<uint64_t>(colors)));
  }
  return out;
}

std::vector<size_t> ColorClassSizes(const Complex& c) {
  std::vector<size_t> sizes;
  if (!c.chamber_colors()) {
    if (c.dimension() >= 0) sizes.push_back(c.simplices(c.dimension()).size());
    return sizes;
  }
  for (int color : *c.chamber_colors()) {
    if (color < 0) continue;
    if (sizes.size() <= static_cast<size_t>(color)) sizes.resize(color + 1, 0);
    ++sizes[color];
  }
  return sizes;
}

nlohmann::json ToJson(const Complex& c) {
  nlohmann::json simplices = nlohmann::json::object();
  for (int d = 0; d <= c.dimension(); ++d) {
    simplices[std::to_string(d)] = c.simplices(d);
  }
  nlohmann::json j = {{"vertices", c.vertices()}, {"simplices", simplices}};
  if (c.vertex_colors()) j["vertex_colors"] = *c.vertex_colors();
  if (c.chamber_colors()) j["chamber_colors"] = *c.chamber_colors();
  return j;
}

Complex ComplexFromJson(const nlohmann::json& j) {
  try {
    auto vertices = j.at("vertices").get<std::vector<VertexId>>();
    std::vector<Simplex> faces;
    for (const auto& [dim, list] : j.at("simplices").items()) {
      const int d = std::stoi(dim);
      for (const auto& s : list) {
        auto face = s.get<Simplex>();
        if (static_cast<int>(face.size()) != d + 1) {
          throw Error(ErrorCode::kParse, "simplex size does not match dimension");
        }
        faces.push_back(std::move(face));
      }
    }
    Complex c = Complex::FromFaces(std::move(vertices), faces);
    if (c.num_simplices() != [&] {
          size_t n = 0;
          for (const auto& [dim, list] : j.at("simplices").items()) n += list.size();
          return n;
        }()) {
      throw Error(ErrorCode::kParse, "simplex family is not downward closed");
    }
    if (j.contains("vertex_colors")) {
      c = c.WithVertexColors(j.at("vertex_colors").get<std::vector<int>>());
    }
    if (j.contains("chamber_colors")) {
      c = c.WithChamberColors(j.at("chamber_colors").get<std::vector<int>>());
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("complex: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kParse, "complex: bad dimension key");
  }
}

std::string Serialize(const Complex& c) { return ToJson(c).dump(); }

Complex Deserialize(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return ComplexFromJson(j);
}

std::string ToDot(const Complex& c) {
  static const char* kPalette[] = {"red", "green", "blue", "orange", "purple",
                                   "brown", "cyan", "magenta"};
  std::ostringstream out;
  out << "graph complex {\n";
  for (size_t i = 0; i < c.vertices().size(); ++i) {
    out << "  v" << c.vertices()[i];
    if (c.vertex_colors()) {
      const int color = (*c.vertex_colors())[i];
      out << " [color=" << kPalette[static_cast<size_t>(color) % 8] << "]";
    }
    out << ";\n";
  }
  const bool edge_colors = c.dimension() == 1 && c.chamber_colors();
  const auto& edges = c.simplices(1);
  for (size_t i = 0; i < edges.size(); ++i) {
    out << "  v" << edges[i][0] << " -- v" << edges[i][1];
    if (edge_colors) {
      const int color = (*c.chamber_colors())[i];
      out << " [color=" << kPalette[static_cast<size_t>(color) % 8]
          << ", label=\"" << color << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rigidcx
