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

#include "rigidcx/lsv.h"

#include <deque>
#include <limits>
#include <unordered_map>

namespace rigidcx {

Graph BallGraph(const CayleyBall& ball) {
  Graph g;
  for (size_t i = 0; i < ball.vertices().size(); ++i) {
    g.vertices.push_back(static_cast<VertexId>(i));
  }
  for (const BallEdge& e : ball.edges()) {
    g.edges.emplace_back(static_cast<VertexId>(e.u), static_cast<VertexId>(e.v));
  }
  return g;
}

InteriorMark BallInterior(const CayleyBall& ball) {
  std::unordered_set<VertexId> interior;
  for (size_t i = 0; i < ball.vertices().size(); ++i) {
    if (ball.vertices()[i].distance <= ball.radius() - 1) {
      interior.insert(static_cast<VertexId>(i));
    }
  }
  return InteriorMark(std::move(interior));
}

BuildingBall BuildLsvBall(int radius, size_t vertex_budget, int max_dim) {
  GeneratorTable table = LsvGenerators();
  SymmetricGenerators gens = Symmetrize(table);
  CayleyBall ball = BuildCayleyBall(gens, radius, vertex_budget);
  Complex complex = CliqueComplex(BallGraph(ball), max_dim);
  InteriorMark interior = BallInterior(ball);
  return {std::move(table), std::move(gens), std::move(ball), std::move(complex),
          std::move(interior)};
}

Complex FanoIncidenceGraph() {
  std::vector<VertexId> verts;
  for (VertexId v = 0; v < 14; ++v) verts.push_back(v);
  std::vector<Simplex> edges;
  for (VertexId line = 0; line < 7; ++line) {
    for (VertexId offset : {0, 1, 3}) {
      edges.push_back({(line + offset) % 7, 7 + line});
    }
  }
  return Complex::FromFaces(verts, edges);
}

int Girth(const Complex& c) {
  int best = std::numeric_limits<int>::max();
  for (VertexId root : c.vertices()) {
    std::unordered_map<VertexId, int> dist;
    std::unordered_map<VertexId, VertexId> parent;
    std::deque<VertexId> queue = {root};
    dist[root] = 0;
    parent[root] = root;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : c.Neighbors(v)) {
        if (!dist.contains(w)) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

bool IsBipartite(const Complex& c) {
  std::unordered_map<VertexId, int> side;
  for (VertexId root : c.vertices()) {
    if (side.contains(root)) continue;
    side[root] = 0;
    std::deque<VertexId> queue = {root};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : c.Neighbors(v)) {
        if (!side.contains(w)) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace rigidcx
