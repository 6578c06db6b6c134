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

// Local models of the rank-two building: clique complexes of Cayley balls.

#ifndef RIGIDCX_LSV_H_
#define RIGIDCX_LSV_H_

#include <cstddef>

#include "rigidcx/projmat.h"
#include "rigidcx/scx.h"

namespace rigidcx {

// Ball vertex positions become vertex ids.
Graph BallGraph(const CayleyBall& ball);
// Vertices at distance <= radius - 1.
InteriorMark BallInterior(const CayleyBall& ball);

struct BuildingBall {
  GeneratorTable table;
  SymmetricGenerators generators;
  CayleyBall ball;
  Complex complex;
  InteriorMark interior;
};

BuildingBall BuildLsvBall(int radius, size_t vertex_budget = kDefaultVertexBudget,
                          int max_dim = kDefaultCliqueMaxDim);

// Point-line incidence graph of the Fano plane (the Heawood graph) as a
// 1-dimensional complex: points 0..6, lines 7..13, line k = {k, k+1, k+3}.
Complex FanoIncidenceGraph();

// Girth of the 1-skeleton, 0 if acyclic.
int Girth(const Complex& c);
bool IsBipartite(const Complex& c);

}  // namespace rigidcx

#endif  // RIGIDCX_LSV_H_
