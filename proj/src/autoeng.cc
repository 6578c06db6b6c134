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

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigidcx/error.h"

namespace rigidcx {
namespace {

using boost::multiprecision::cpp_int;
using Positions = std::vector<uint32_t>;

struct PositionsHash {
  size_t operator()(const Positions& p) const noexcept {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

uint64_t Mix(uint64_t h, uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// The complex in position space, with the colors the search must respect.
struct Structure {
  size_t n = 0;
  std::vector<int> vertex_color;
  std::vector<Positions> simplex;  // dimension >= 1
  std::vector<int> simplex_color;
  std::vector<std::vector<uint32_t>> incident;
  std::unordered_map<Positions, int, PositionsHash> lookup;
  std::vector<size_t> count_by_dim;

  Structure(const Complex& c, bool respect_colors) : n(c.num_vertices()) {
    vertex_color.assign(n, -1);
    if (respect_colors && c.vertex_colors()) vertex_color = *c.vertex_colors();
    incident.assign(n, {});
    count_by_dim.assign(std::max(c.dimension() + 1, 1), 0);
    count_by_dim[0] = n;
    const bool chamber_colors = respect_colors && c.chamber_colors().has_value();
    for (int d = 1; d <= c.dimension(); ++d) {
      const auto& list = c.simplices(d);
      count_by_dim[d] = list.size();
      for (size_t k = 0; k < list.size(); ++k) {
        Positions p;
        for (VertexId v : list[k]) p.push_back(static_cast<uint32_t>(c.IndexOf(v)));
        std::sort(p.begin(), p.end());
        const int color =
            (chamber_colors && d == c.dimension()) ? (*c.chamber_colors())[k] : -1;
        const auto id = static_cast<uint32_t>(simplex.size());
        for (uint32_t v : p) incident[v].push_back(id);
        lookup.emplace(p, color);
        simplex.push_back(std::move(p));
        simplex_color.push_back(color);
      }
    }
  }

  // Color-independent invariant used for the initial partition.
  std::vector<int64_t> InitialKey(uint32_t v, int64_t pin) const {
    std::map<std::pair<size_t, int>, int64_t> counts;
    for (uint32_t s : incident[v]) ++counts[{simplex[s].size(), simplex_color[s]}];
    std::vector<int64_t> key = {pin, vertex_color[v]};
    for (const auto& [k, count] : counts) {
      key.push_back(static_cast<int64_t>(k.first));
      key.push_back(k.second);
      key.push_back(count);
    }
    return key;
  }
};

bool VerifyMap(const Structure& a, const Structure& b, const std::vector<uint32_t>& p) {
  if (a.n != b.n || p.size() != a.n || a.count_by_dim != b.count_by_dim) return false;
  std::vector<char> seen(a.n, 0);
  for (uint32_t y : p) {
    if (y >= a.n || seen[y]) return false;
    seen[y] = 1;
  }
  for (size_t v = 0; v < a.n; ++v) {
    if (a.vertex_color[v] != b.vertex_color[p[v]]) return false;
  }
  Positions image;
  for (size_t s = 0; s < a.simplex.size(); ++s) {
    image.clear();
    for (uint32_t v : a.simplex[s]) image.push_back(p[v]);
    std::sort(image.begin(), image.end());
    auto it = b.lookup.find(image);
    if (it == b.lookup.end() || it->second != a.simplex_color[s]) return false;
  }
  return true;
}

// Ordered partition; cells are identified by their start offset in lab.
struct Partition {
  std::vector<uint32_t> lab;
  std::vector<uint32_t> pos;
  std::vector<uint32_t> cell;  // start of the cell containing v
  std::vector<uint32_t> len;   // length, valid at cell starts
  size_t num_cells = 0;
  uint64_t trace = 0;

  bool Discrete() const { return num_cells == lab.size(); }
  bool IsStart(uint32_t i) const { return cell[lab[i]] == i; }
};

bool SameShape(const Partition& a, const Partition& b) {
  if (a.num_cells != b.num_cells || a.trace != b.trace) return false;
  for (uint32_t i = 0; i < a.lab.size(); i += a.len[i]) {
    if (!b.IsStart(i) || a.len[i] != b.len[i]) return false;
  }
  return true;
}

class Refiner {
 public:
  explicit Refiner(const Structure& s)
      : s_(s), count_(s.simplex.size(), 0), entries_(s.n), in_queue_(s.n, 0) {}

  void Refine(Partition& p, std::vector<uint32_t> initial, SearchStats& stats) {
    ++stats.refinements;
    std::deque<uint32_t> queue;
    for (uint32_t start : initial) {
      if (!in_queue_[start]) {
        in_queue_[start] = 1;
        queue.push_back(start);
      }
    }
    while (!queue.empty() && !p.Discrete()) {
      const uint32_t w = queue.front();
      queue.pop_front();
      in_queue_[w] = 0;
      SplitBy(p, w, queue);
    }
    for (uint32_t start : queue) in_queue_[start] = 0;
  }

 private:
  void SplitBy(Partition& p, uint32_t w, std::deque<uint32_t>& queue) {
    touched_simplices_.clear();
    for (uint32_t i = w; i < w + p.len[w]; ++i) {
      for (uint32_t sid : s_.incident[p.lab[i]]) {
        if (count_[sid]++ == 0) touched_simplices_.push_back(sid);
      }
    }
    touched_vertices_.clear();
    for (uint32_t sid : touched_simplices_) {
      const auto& simplex = s_.simplex[sid];
      for (uint32_t v : simplex) {
        const uint32_t others = count_[sid] - (p.cell[v] == w ? 1u : 0u);
        if (others == 0) continue;
        if (entries_[v].empty()) touched_vertices_.push_back(v);
        entries_[v].push_back((static_cast<uint64_t>(simplex.size()) << 48) |
                              (static_cast<uint64_t>(s_.simplex_color[sid] + 1) << 24) |
                              others);
      }
    }
    for (uint32_t sid : touched_simplices_) count_[sid] = 0;

    affected_.clear();
    for (uint32_t v : touched_vertices_) {
      std::sort(entries_[v].begin(), entries_[v].end());
      affected_.push_back(p.cell[v]);
    }
    std::sort(affected_.begin(), affected_.end());
    affected_.erase(std::unique(affected_.begin(), affected_.end()), affected_.end());

    for (uint32_t start : affected_) {
      const uint32_t length = p.len[start];
      auto first = p.lab.begin() + start;
      auto last = first + length;
      // Untouched vertices have empty entry lists and sort first.
      std::stable_sort(first, last, [&](uint32_t a, uint32_t b) {
        return entries_[a] < entries_[b];
      });
      uint64_t h = Mix(0, start);
      std::vector<uint32_t> fragments;
      for (uint32_t i = start; i < start + length; ++i) {
        if (i == start || entries_[p.lab[i]] != entries_[p.lab[i - 1]]) {
          fragments.push_back(i);
          uint64_t kh = 0;
          for (uint64_t e : entries_[p.lab[i]]) kh = Mix(kh, e);
          h = Mix(h, kh);
        }
      }
      p.trace = Mix(p.trace, Mix(h, fragments.size()));
      for (size_t f = 0; f < fragments.size(); ++f) {
        const uint32_t fs = fragments[f];
        const uint32_t fe = f + 1 < fragments.size() ? fragments[f + 1] : start + length;
        p.len[fs] = fe - fs;
        for (uint32_t i = fs; i < fe; ++i) {
          p.cell[p.lab[i]] = fs;
          p.pos[p.lab[i]] = i;
        }
        p.trace = Mix(p.trace, fe - fs);
        if (fragments.size() > 1 && !in_queue_[fs]) {
          in_queue_[fs] = 1;
          queue.push_back(fs);
        }
      }
      p.num_cells += fragments.size() - 1;
    }
    for (uint32_t v : touched_vertices_) entries_[v].clear();
  }

  const Structure& s_;
  std::vector<uint32_t> count_;
  std::vector<std::vector<uint64_t>> entries_;
  std::vector<char> in_queue_;
  std::vector<uint32_t> touched_simplices_;
  std::vector<uint32_t> touched_vertices_;
  std::vector<uint32_t> affected_;
};

// Returns the start of the new singleton cell.
uint32_t Individualize(Partition& p, uint32_t v) {
  const uint32_t start = p.cell[v];
  const uint32_t length = p.len[start];
  if (length == 1) return start;
  const uint32_t other = p.lab[start];
  std::swap(p.lab[start], p.lab[p.pos[v]]);
  p.pos[other] = p.pos[v];
  p.pos[v] = start;
  p.len[start] = 1;
  p.len[start + 1] = length - 1;
  for (uint32_t i = start + 1; i < start + length; ++i) p.cell[p.lab[i]] = start + 1;
  ++p.num_cells;
  p.trace = Mix(p.trace, 0xabcdefull + start);
  return start;
}

// Builds comparable initial partitions for two structures with pinned
// vertices: pins_a[i] must map to pins_b[i].
std::optional<std::pair<Partition, Partition>> InitialPartitions(
    const Structure& a, std::span<const uint32_t> pins_a, const Structure& b,
    std::span<const uint32_t> pins_b) {
  auto keys_for = [](const Structure& s, std::span<const uint32_t> pins) {
    std::vector<int64_t> pin(s.n, -1);
    for (size_t i = 0; i < pins.size(); ++i) pin[pins[i]] = static_cast<int64_t>(i);
    std::vector<std::vector<int64_t>> keys(s.n);
    for (uint32_t v = 0; v < s.n; ++v) keys[v] = s.InitialKey(v, pin[v]);
    return keys;
  };
  const auto ka = keys_for(a, pins_a);
  const auto kb = keys_for(b, pins_b);
  std::vector<std::vector<int64_t>> all(ka);
  all.insert(all.end(), kb.begin(), kb.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  auto build = [&](const std::vector<std::vector<int64_t>>& keys) {
    const size_t n = keys.size();
    std::vector<size_t> rank(n);
    for (size_t v = 0; v < n; ++v) {
      rank[v] = std::lower_bound(all.begin(), all.end(), keys[v]) - all.begin();
    }
    Partition p;
    p.lab.resize(n);
    for (uint32_t v = 0; v < n; ++v) p.lab[v] = v;
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](uint32_t x, uint32_t y) { return rank[x] < rank[y]; });
    p.pos.resize(n);
    p.cell.resize(n);
    p.len.assign(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
      p.pos[p.lab[i]] = i;
      if (i == 0 || rank[p.lab[i]] != rank[p.lab[i - 1]]) {
        p.cell[p.lab[i]] = i;
        ++p.num_cells;
        p.trace = Mix(p.trace, Mix(i, rank[p.lab[i]]));
      } else {
        p.cell[p.lab[i]] = p.cell[p.lab[i - 1]];
      }
      ++p.len[p.cell[p.lab[i]]];
    }
    return p;
  };
  Partition pa = build(ka);
  Partition pb = build(kb);
  if (a.n != b.n || !SameShape(pa, pb)) return std::nullopt;
  return std::make_pair(std::move(pa), std::move(pb));
}

std::vector<uint32_t> AllStarts(const Partition& p) {
  std::vector<uint32_t> starts;
  for (uint32_t i = 0; i < p.lab.size(); i += p.len[i]) starts.push_back(i);
  return starts;
}

// Search tree whose left branch is fixed: every level individualizes the
// smallest vertex of the first smallest non-singleton cell of the left
// partition, and the right side ranges over that cell.
class Search {
 public:
  // Returns true to stop the search.
  using LeafFn = std::function<bool(const VertexPermutation&)>;

  Search(const Structure& a, const Structure& b, Partition root_a, Partition root_b,
         SearchStats& stats)
      : a_(a), b_(b), refine_a_(a), refine_b_(b), stats_(stats) {
    refine_a_.Refine(root_a, AllStarts(root_a), stats_);
    refine_b_.Refine(root_b, AllStarts(root_b), stats_);
    root_compatible_ = SameShape(root_a, root_b);
    path_.push_back(std::move(root_a));
    while (!path_.back().Discrete()) {
      const Partition& p = path_.back();
      uint32_t best = 0, best_len = 0;
      for (uint32_t i = 0; i < p.lab.size(); i += p.len[i]) {
        if (p.len[i] > 1 && (best_len == 0 || p.len[i] < best_len)) {
          best = i;
          best_len = p.len[i];
        }
      }
      const uint32_t x = *std::min_element(p.lab.begin() + best,
                                           p.lab.begin() + best + best_len);
      Partition next = p;
      const uint32_t single = Individualize(next, x);
      refine_a_.Refine(next, {single}, stats_);
      base_.push_back(x);
      target_.push_back(best);
      path_.push_back(std::move(next));
    }
    root_b_ = std::move(root_b);
  }

  bool root_compatible() const { return root_compatible_; }
  size_t depth() const { return base_.size(); }
  uint32_t base(size_t level) const { return base_[level]; }
  const Partition& left(size_t level) const { return path_[level]; }
  const Partition& root_b() const { return root_b_; }

  // Right-side vertices eligible at `level` given right partition r.
  std::vector<uint32_t> Candidates(const Partition& r, size_t level) const {
    const uint32_t start = target_[level];
    std::vector<uint32_t> c(r.lab.begin() + start, r.lab.begin() + start + r.len[start]);
    std::sort(c.begin(), c.end());
    return c;
  }

  // Right partition at `level` after individualizing y; nullopt if it
  // cannot match the left partition at level + 1.
  std::optional<Partition> Step(const Partition& r, size_t level, uint32_t y) {
    Partition next = r;
    const uint32_t single = Individualize(next, y);
    refine_b_.Refine(next, {single}, stats_);
    if (!SameShape(path_[level + 1], next)) return std::nullopt;
    return next;
  }

  // Explores the subtree below right partition r at `level`.
  bool Descend(const Partition& r, size_t level, const LeafFn& on_leaf) {
    ++stats_.nodes;
    if (level == base_.size()) {
      ++stats_.leaves;
      const Partition& l = path_[level];
      std::vector<uint32_t> image(a_.n);
      for (size_t i = 0; i < a_.n; ++i) image[l.lab[i]] = r.lab[i];
      if (!VerifyMap(a_, b_, image)) return false;
      return on_leaf(VertexPermutation(std::move(image)));
    }
    for (uint32_t y : Candidates(r, level)) {
      auto next = Step(r, level, y);
      if (next && Descend(*next, level + 1, on_leaf)) return true;
    }
    return false;
  }

 private:
  const Structure& a_;
  const Structure& b_;
  Refiner refine_a_;
  Refiner refine_b_;
  SearchStats& stats_;
  std::vector<Partition> path_;
  std::vector<uint32_t> base_;
  std::vector<uint32_t> target_;
  Partition root_b_;
  bool root_compatible_ = false;
};

std::vector<uint32_t> ToPositions(const Complex& c, std::span<const VertexId> ids) {
  std::vector<uint32_t> out;
  for (VertexId v : ids) out.push_back(static_cast<uint32_t>(c.IndexOf(v)));
  return out;
}

void CheckCap(const Complex& c, const SearchOptions& options) {
  if (c.num_vertices() > options.vertex_cap) {
    throw Error(ErrorCode::kCapExceeded,
                "complex has " + std::to_string(c.num_vertices()) +
                    " vertices, cap is " + std::to_string(options.vertex_cap));
  }
}

std::vector<uint32_t> OrbitClosure(std::vector<uint32_t> seeds,
                                   const std::vector<VertexPermutation>& gens,
                                   std::vector<char>& mark) {
  std::vector<uint32_t> orbit;
  for (uint32_t s : seeds) {
    if (!mark[s]) {
      mark[s] = 1;
      orbit.push_back(s);
    }
  }
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : gens) {
      const uint32_t y = g[orbit[i]];
      if (!mark[y]) {
        mark[y] = 1;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

constexpr uint64_t kMaxStoredEntries = 50'000'000;

AutomorphismSet GroupFromPins(const Complex& c, std::span<const uint32_t> pins,
                              const SearchOptions& options) {
  CheckCap(c, options);
  const Structure s(c, options.respect_colors);
  AutomorphismSet out;
  auto roots = InitialPartitions(s, pins, s, pins);
  Search search(s, s, roots->first, roots->second, out.stats);

  // Stabilizer chain, deepest level first.
  std::vector<uint64_t> lengths(search.depth(), 1);
  for (size_t level = search.depth(); level-- > 0;) {
    const uint32_t x = search.base(level);
    std::vector<char> in_orbit(s.n, 0), excluded(s.n, 0);
    std::vector<uint32_t> orbit = OrbitClosure({x}, out.generators, in_orbit);
    for (uint32_t y : search.Candidates(search.left(level), level)) {
      if (in_orbit[y] || excluded[y]) continue;
      std::optional<VertexPermutation> found;
      if (auto next = search.Step(search.left(level), level, y)) {
        search.Descend(*next, level + 1, [&](const VertexPermutation& p) {
          found = p;
          return true;
        });
      }
      if (found) {
        out.generators.push_back(*found);
        std::fill(in_orbit.begin(), in_orbit.end(), 0);
        orbit = OrbitClosure({x}, out.generators, in_orbit);
      } else {
        OrbitClosure({y}, out.generators, excluded);
      }
    }
    lengths[level] = orbit.size();
  }

  cpp_int order = 1;
  for (size_t level = 0; level < search.depth(); ++level) {
    out.base.push_back(search.base(level));
    out.orbit_lengths.push_back(lengths[level]);
    order *= lengths[level];
    out.log2_order += std::log2(static_cast<double>(lengths[level]));
  }
  out.order = order.str();

  if (order <= options.enumeration_cap &&
      order * std::max<size_t>(s.n, 1) <= kMaxStoredEntries) {
    search.Descend(search.left(0), 0, [&](const VertexPermutation& p) {
      out.elements.push_back(p);
      return false;
    });
    std::sort(out.elements.begin(), out.elements.end());
    if (cpp_int(out.elements.size()) != order) {
      throw Error(ErrorCode::kInvalidArgument,
                  "internal: enumeration disagrees with stabilizer chain");
    }
    out.complete = true;
  }
  return out;
}

}  // namespace

VertexPermutation VertexPermutation::Identity(size_t n) {
  std::vector<uint32_t> image(n);
  for (size_t i = 0; i < n; ++i) image[i] = static_cast<uint32_t>(i);
  return VertexPermutation(std::move(image));
}

bool VertexPermutation::IsIdentity() const {
  for (size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

VertexPermutation operator*(const VertexPermutation& a, const VertexPermutation& b) {
  std::vector<uint32_t> image(b.size());
  for (size_t i = 0; i < b.size(); ++i) image[i] = a[b[i]];
  return VertexPermutation(std::move(image));
}

VertexPermutation VertexPermutation::Inverse() const {
  std::vector<uint32_t> image(image_.size());
  for (size_t i = 0; i < image_.size(); ++i) image[image_[i]] = static_cast<uint32_t>(i);
  return VertexPermutation(std::move(image));
}

std::optional<uint64_t> AutomorphismSet::OrderU64() const {
  const cpp_int value(order);
  if (value > std::numeric_limits<uint64_t>::max()) return std::nullopt;
  return static_cast<uint64_t>(value);
}

AutomorphismSet AutomorphismGroup(const Complex& c, const SearchOptions& options) {
  return GroupFromPins(c, {}, options);
}

AutomorphismSet AutomorphismsFixing(const Complex& c, std::span<const VertexId> fixed,
                                    const SearchOptions& options) {
  return GroupFromPins(c, ToPositions(c, fixed), options);
}

std::vector<VertexPermutation> EnumerateAutomorphisms(const Complex& c,
                                                      std::span<const VertexId> fixed,
                                                      const SearchOptions& options) {
  CheckCap(c, options);
  const Structure s(c, options.respect_colors);
  const auto pins = ToPositions(c, fixed);
  SearchStats stats;
  auto roots = InitialPartitions(s, pins, s, pins);
  Search search(s, s, roots->first, roots->second, stats);
  std::vector<VertexPermutation> out;
  search.Descend(search.left(0), 0, [&](const VertexPermutation& p) {
    if (out.size() >= options.enumeration_cap) {
      throw Error(ErrorCode::kCapExceeded,
                  "more than " + std::to_string(options.enumeration_cap) +
                      " automorphisms");
    }
    out.push_back(p);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexPermutation> FindAutomorphism(
    const Complex& c, std::span<const std::pair<VertexId, VertexId>> pairs,
    const SearchOptions& options) {
  CheckCap(c, options);
  const Structure s(c, options.respect_colors);
  std::vector<uint32_t> from, to;
  for (auto [x, y] : pairs) {
    from.push_back(static_cast<uint32_t>(c.IndexOf(x)));
    to.push_back(static_cast<uint32_t>(c.IndexOf(y)));
  }
  std::vector<uint32_t> sorted_to = to;
  std::sort(sorted_to.begin(), sorted_to.end());
  if (std::adjacent_find(sorted_to.begin(), sorted_to.end()) != sorted_to.end()) {
    return std::nullopt;
  }
  SearchStats stats;
  auto roots = InitialPartitions(s, from, s, to);
  if (!roots) return std::nullopt;
  Search search(s, s, roots->first, roots->second, stats);
  if (!search.root_compatible()) return std::nullopt;
  std::optional<VertexPermutation> found;
  search.Descend(search.root_b(), 0, [&](const VertexPermutation& p) {
    found = p;
    return true;
  });
  return found;
}

std::optional<VertexPermutation> FindIsomorphism(const Complex& a, const Complex& b,
                                                 const SearchOptions& options) {
  CheckCap(a, options);
  CheckCap(b, options);
  const Structure sa(a, options.respect_colors);
  const Structure sb(b, options.respect_colors);
  if (sa.n != sb.n || sa.count_by_dim != sb.count_by_dim) return std::nullopt;
  SearchStats stats;
  auto roots = InitialPartitions(sa, {}, sb, {});
  if (!roots) return std::nullopt;
  Search search(sa, sb, roots->first, roots->second, stats);
  if (!search.root_compatible()) return std::nullopt;
  std::optional<VertexPermutation> found;
  search.Descend(search.root_b(), 0, [&](const VertexPermutation& p) {
    found = p;
    return true;
  });
  return found;
}

bool IsAutomorphism(const Complex& c, const VertexPermutation& p, bool respect_colors) {
  const Structure s(c, respect_colors);
  return VerifyMap(s, s, p.image());
}

bool IsIsomorphism(const Complex& a, const Complex& b, const VertexPermutation& p,
                   bool respect_colors) {
  return VerifyMap(Structure(a, respect_colors), Structure(b, respect_colors), p.image());
}

PanelFlipReport PanelFlipCheck(const Complex& c, const InteriorMark& marks,
                               int hop_depth, bool respect_colors) {
  if (c.dimension() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "panel flips need a 2-dimensional complex");
  }
  std::map<Simplex, std::vector<VertexId>> apex;
  for (const Simplex& t : c.simplices(2)) {
    apex[{t[0], t[1]}].push_back(t[2]);
    apex[{t[0], t[2]}].push_back(t[1]);
    apex[{t[1], t[2]}].push_back(t[0]);
  }
  PanelFlipReport report;
  report.hop_depth = hop_depth;
  SearchOptions options;
  options.respect_colors = respect_colors;
  for (const Simplex& e : c.simplices(1)) {
    if (!marks.IsInterior(e)) continue;
    auto it = apex.find(e);
    if (it == apex.end() || it->second.size() != 3) continue;
    ++report.three_chamber_edges;
    const auto& w = it->second;
    const Complex star = InducedSubcomplex(c, HopNeighborhood(c, e, hop_depth));
    for (size_t fixed = 0; fixed < 3; ++fixed) {
      const VertexId w1 = w[fixed], w2 = w[(fixed + 1) % 3], w3 = w[(fixed + 2) % 3];
      const std::vector<std::pair<VertexId, VertexId>> pairs = {
          {e[0], e[0]}, {e[1], e[1]}, {w1, w1}, {w2, w3}};
      ++report.choices;
      auto p = FindAutomorphism(star, pairs, options);
      if (p && (*p)[star.IndexOf(w3)] == star.IndexOf(w2)) {
        ++report.satisfied;
      } else {
        report.failures.emplace_back(e, w1);
      }
    }
  }
  if (report.choices > 0) {
    report.fraction =
        static_cast<double>(report.satisfied) / static_cast<double>(report.choices);
  }
  return report;
}

nlohmann::json ToJson(const Complex& c, const AutomorphismSet& set) {
  auto ids = [&](const VertexPermutation& p) {
    std::vector<VertexId> out;
    for (size_t i = 0; i < p.size(); ++i) out.push_back(c.vertices()[p[i]]);
    return out;
  };
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& p : set.elements) elements.push_back(ids(p));
  nlohmann::json generators = nlohmann::json::array();
  for (const auto& p : set.generators) generators.push_back(ids(p));
  std::vector<VertexId> base;
  for (uint32_t b : set.base) base.push_back(c.vertices()[b]);
  return {{"vertices", c.vertices()},     {"order", set.order},
          {"log2_order", set.log2_order}, {"complete", set.complete},
          {"base", base},                 {"orbit_lengths", set.orbit_lengths},
          {"elements", elements},         {"generators", generators}};
}

nlohmann::json ToJson(const PanelFlipReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& [edge, w] : report.failures) failures.push_back({edge, w});
  nlohmann::json j = {{"hop_depth", report.hop_depth},
                      {"three_chamber_edges", report.three_chamber_edges},
                      {"choices", report.choices},
                      {"satisfied", report.satisfied},
                      {"failures", failures}};
  if (report.fraction) {
    j["fraction"] = *report.fraction;
  } else {
    j["fraction"] = nullptr;
  }
  return j;
}

}  // namespace rigidcx
