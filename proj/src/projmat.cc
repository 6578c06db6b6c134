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

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "rigidcx/error.h"

namespace rigidcx {
namespace {

using Rows = std::array<std::array<std::string, 3>, 3>;

// Transcribed entry by entry, constant term first as printed.
const std::array<Rows, 7> kLsvPrinted = {{
    {{{"t+t^3", "t^2", "t+t^2"},
      {"t", "t^3", "1+t+t^2"},
      {"t+t^2", "1+t^2", "1+t^3"}}},
    {{{"1+t+t^2+t^3", "t+t^2", "1+t^2"},
      {"1+t", "t^2+t^3", "1"},
      {"1+t^2", "t", "t^3"}}},
    {{{"1+t^2+t^3", "1+t^2", "t"},
      {"1+t+t^2", "t+t^3", "t^2"},
      {"t", "1+t", "t^2+t^3"}}},
    {{{"t+t^2+t^3", "t", "1+t"},
      {"1", "1+t+t^2+t^3", "t+t^2"},
      {"1+t", "1+t+t^2", "t+t^3"}}},
    {{{"1+t^3", "1+t", "1+t+t^2"},
      {"t^2", "1+t^2+t^3", "1+t^2"},
      {"1+t+t^2", "1", "1+t+t^2+t^3"}}},
    {{{"t^3", "1+t+t^2", "1"},
      {"t+t^2", "t+t^2+t^3", "t"},
      {"1", "t^2", "1+t^2+t^3"}}},
    {{{"t^2+t^3", "1", "t^2"},
      {"1+t^2", "1+t^3", "1+t"},
      {"t^2", "x+x^2", "t+t^2+t^3"}}},
}};

void CheckSameField(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kFieldMismatch, "matrices over different fields");
  }
}

}  // namespace

Matrix3::Matrix3(FieldSpec field, const std::array<uint32_t, 9>& bits)
    : field_(field), bits_(bits) {
  for (uint32_t b : bits_) {
    if (b >= field_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "matrix entry exceeds field");
    }
  }
}

Matrix3 Matrix3::FromStrings(FieldSpec field, const Rows& rows) {
  std::array<uint32_t, 9> bits{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      bits[r * 3 + c] = ParseElem(field, rows[r][c]).bits();
    }
  }
  return Matrix3(field, bits);
}

Matrix3 Matrix3::Identity(FieldSpec field) {
  return Matrix3(field, {1, 0, 0, 0, 1, 0, 0, 0, 1});
}

Matrix3 Matrix3::Scaled(const FieldElem& c) const {
  CheckSameField(field_, c.spec());
  std::array<uint32_t, 9> out{};
  for (int i = 0; i < 9; ++i) out[i] = field_.MulBits(c.bits(), bits_[i]);
  return Matrix3(field_, out);
}

Matrix3 Matrix3::Adjugate() const {
  const FieldSpec& f = field_;
  auto e = [&](int r, int c) { return bits_[r * 3 + c]; };
  std::array<uint32_t, 9> out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int r0 = (r + 1) % 3, r1 = (r + 2) % 3;
      const int c0 = (c + 1) % 3, c1 = (c + 2) % 3;
      // Cyclic minors carry the cofactor sign; signs vanish in char 2 anyway.
      out[c * 3 + r] = f.MulBits(e(r0, c0), e(r1, c1)) ^
                       f.MulBits(e(r0, c1), e(r1, c0));
    }
  }
  return Matrix3(f, out);
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  CheckSameField(a.field(), b.field());
  const FieldSpec& f = a.field();
  std::array<uint32_t, 9> out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      uint32_t acc = 0;
      for (int k = 0; k < 3; ++k) acc ^= f.MulBits(a.bits(r, k), b.bits(k, c));
      out[r * 3 + c] = acc;
    }
  }
  return Matrix3(f, out);
}

FieldElem Determinant(const Matrix3& m) {
  const FieldSpec& f = m.field();
  auto e = [&](int r, int c) { return m.bits(r, c); };
  const uint32_t d =
      f.MulBits(e(0, 0), f.MulBits(e(1, 1), e(2, 2)) ^ f.MulBits(e(1, 2), e(2, 1))) ^
      f.MulBits(e(0, 1), f.MulBits(e(1, 0), e(2, 2)) ^ f.MulBits(e(1, 2), e(2, 0))) ^
      f.MulBits(e(0, 2), f.MulBits(e(1, 0), e(2, 1)) ^ f.MulBits(e(1, 1), e(2, 0)));
  return FieldElem(f, d);
}

std::string ProjMatrix::Key() const {
  std::string key;
  key.reserve(18);
  for (uint32_t b : m_.raw()) {
    key.push_back(static_cast<char>((b >> 8) & 0xff));
    key.push_back(static_cast<char>(b & 0xff));
  }
  return key;
}

ProjMatrix PglNormalize(const Matrix3& m) {
  if (Determinant(m).is_zero()) {
    throw Error(ErrorCode::kSingularMatrix, "matrix is singular");
  }
  const auto& raw = m.raw();
  const auto lead = *std::find_if(raw.begin(), raw.end(),
                                  [](uint32_t b) { return b != 0; });
  if (lead == 1) return ProjMatrix(m);
  return ProjMatrix(m.Scaled(FieldElem(m.field(), m.field().InvBits(lead))));
}

ProjMatrix PglIdentity(FieldSpec field) {
  return PglNormalize(Matrix3::Identity(field));
}

ProjMatrix PglMul(const ProjMatrix& a, const ProjMatrix& b) {
  return PglNormalize(a.matrix() * b.matrix());
}

ProjMatrix PglInv(const ProjMatrix& a) {
  return PglNormalize(a.matrix().Adjugate());
}

GeneratorTable LsvGenerators() {
  const FieldSpec f = FieldSpec::Gf16();
  GeneratorTable table{"lsv-pgl3-f16", f, {}, {}, {}};
  for (size_t k = 0; k < kLsvPrinted.size(); ++k) {
    const Rows& rows = kLsvPrinted[k];
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        if (rows[r][c].find('x') != std::string::npos) {
          table.repairs.push_back(
              "matrix " + std::to_string(k + 1) + " entry (" +
              std::to_string(r) + "," + std::to_string(c) + ") printed as '" +
              rows[r][c] + "', read with x = t");
        }
      }
    }
    table.printed.push_back(Matrix3::FromStrings(f, rows));
    table.matrices.push_back(PglNormalize(table.printed.back()));
  }
  return table;
}

nlohmann::json ToJson(const GeneratorTable& table) {
  nlohmann::json mats = nlohmann::json::array();
  for (const Matrix3& m : table.printed) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 3; ++r) {
      rows.push_back({ToString(m.at(r, 0)), ToString(m.at(r, 1)),
                      ToString(m.at(r, 2))});
    }
    mats.push_back(rows);
  }
  return {{"name", table.name},
          {"modulus", table.field.modulus()},
          {"matrices", mats},
          {"repairs", table.repairs}};
}

GeneratorTable GeneratorTableFromJson(const nlohmann::json& j) {
  try {
    const FieldSpec f(j.at("modulus").get<uint32_t>());
    GeneratorTable table{j.at("name").get<std::string>(), f, {}, {}, {}};
    if (j.contains("repairs")) {
      table.repairs = j.at("repairs").get<std::vector<std::string>>();
    }
    for (const auto& mj : j.at("matrices")) {
      Rows rows;
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          rows[r][c] = mj.at(r).at(c).get<std::string>();
        }
      }
      table.printed.push_back(Matrix3::FromStrings(f, rows));
      table.matrices.push_back(PglNormalize(table.printed.back()));
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("generator table: ") + e.what());
  }
}

SymmetricGenerators Symmetrize(const GeneratorTable& table) {
  return Symmetrize(std::span<const ProjMatrix>(table.matrices));
}

SymmetricGenerators Symmetrize(std::span<const ProjMatrix> generators) {
  SymmetricGenerators out;
  auto find = [&](const ProjMatrix& m) -> std::optional<size_t> {
    for (size_t i = 0; i < out.elements.size(); ++i) {
      if (out.elements[i] == m) return i;
    }
    return std::nullopt;
  };
  for (size_t k = 0; k < generators.size(); ++k) {
    if (!find(generators[k])) {
      out.elements.push_back(generators[k]);
      out.labels.push_back(static_cast<int>(k) + 1);
    }
  }
  const size_t direct = out.elements.size();
  for (size_t i = 0; i < direct; ++i) {
    const ProjMatrix inv = PglInv(out.elements[i]);
    if (inv == out.elements[i]) out.self_inverse.push_back(i);
    if (!find(inv)) {
      out.elements.push_back(inv);
      out.labels.push_back(-out.labels[i]);
    }
  }
  out.inverse_of.resize(out.elements.size());
  for (size_t i = 0; i < out.elements.size(); ++i) {
    out.inverse_of[i] = *find(PglInv(out.elements[i]));
  }
  return out;
}

std::vector<size_t> CayleyBall::SphereSizes() const {
  std::vector<size_t> sizes(radius_ + 1, 0);
  for (const BallVertex& v : vertices_) ++sizes[v.distance];
  return sizes;
}

std::optional<size_t> CayleyBall::IndexOf(const ProjMatrix& m) const {
  auto it = index_.find(m.Key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

nlohmann::json CayleyBall::ToJson() const {
  nlohmann::json verts = nlohmann::json::array();
  for (const BallVertex& v : vertices_) {
    nlohmann::json entries = nlohmann::json::array();
    for (uint32_t b : v.element.matrix().raw()) {
      entries.push_back(ToString(FieldElem(v.element.field(), b)));
    }
    verts.push_back(
        {{"distance", v.distance}, {"word", v.word}, {"matrix", entries}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const BallEdge& e : edges_) edges.push_back({e.u, e.v, e.label});
  nlohmann::json j = {{"radius", radius_},
                      {"sphere_sizes", SphereSizes()},
                      {"vertices", verts},
                      {"edges", edges}};
  if (collision_) {
    j["collision"] = {{"first", collision_->first},
                      {"second", collision_->second}};
  } else {
    j["collision"] = nullptr;
  }
  return j;
}

std::string CayleyBall::ToDot() const {
  std::ostringstream out;
  out << "graph cayley_ball {\n";
  for (size_t i = 0; i < vertices_.size(); ++i) {
    out << "  v" << i << " [label=\"" << i << "\", distance=" << vertices_[i].distance
        << "];\n";
  }
  for (const BallEdge& e : edges_) {
    out << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

CayleyBall BuildCayleyBall(const SymmetricGenerators& gens, int radius,
                           size_t vertex_budget) {
  if (radius < 0) throw Error(ErrorCode::kInvalidArgument, "negative radius");
  if (gens.inverse_of.size() != gens.elements.size() ||
      gens.labels.size() != gens.elements.size()) {
    throw Error(ErrorCode::kInvalidArgument, "generator set is not symmetric");
  }
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens.inverse_of[i] >= gens.size() ||
        !(PglMul(gens.elements[i], gens.elements[gens.inverse_of[i]]) ==
          PglIdentity(gens.elements[i].field()))) {
      throw Error(ErrorCode::kInvalidArgument, "generator set is not symmetric");
    }
  }

  CayleyBall ball;
  ball.radius_ = radius;
  const FieldSpec field =
      gens.elements.empty() ? FieldSpec::Gf16() : gens.elements[0].field();
  ball.vertices_.push_back({PglIdentity(field), 0, {}});
  ball.index_.emplace(ball.vertices_[0].element.Key(), 0);
  // Generator index of the last letter of each vertex's word.
  std::vector<int> last_letter = {-1};

  auto consider_collision = [&](std::vector<int> a, std::vector<int> b) {
    if (a == b) return;
    const size_t total = a.size() + b.size();
    if (ball.collision_ &&
        ball.collision_->first.size() + ball.collision_->second.size() <= total) {
      return;
    }
    ball.collision_ = WordCollision{std::move(a), std::move(b)};
  };

  size_t layer_begin = 0;
  for (int d = 1; d <= radius; ++d) {
    const size_t layer_end = ball.vertices_.size();
    std::vector<BallVertex> next;
    std::vector<int> next_last;
    std::unordered_map<std::string, size_t> next_index;
    for (size_t u = layer_begin; u < layer_end; ++u) {
      for (size_t g = 0; g < gens.size(); ++g) {
        if (last_letter[u] >= 0 &&
            gens.inverse_of[static_cast<size_t>(last_letter[u])] == g) {
          continue;  // free cancellation
        }
        ProjMatrix w = PglMul(ball.vertices_[u].element, gens.elements[g]);
        std::string key = w.Key();
        std::vector<int> word = ball.vertices_[u].word;
        word.push_back(gens.labels[g]);
        if (auto it = ball.index_.find(key); it != ball.index_.end()) {
          consider_collision(ball.vertices_[it->second].word, std::move(word));
          continue;
        }
        if (auto it = next_index.find(key); it != next_index.end()) {
          consider_collision(next[it->second].word, std::move(word));
          continue;
        }
        if (layer_end + next.size() + 1 > vertex_budget) {
          throw Error(ErrorCode::kBudgetExceeded,
                      "Cayley ball of radius " + std::to_string(radius) +
                          " exceeds vertex budget " +
                          std::to_string(vertex_budget));
        }
        next_index.emplace(std::move(key), next.size());
        next.push_back({std::move(w), d, std::move(word)});
        next_last.push_back(static_cast<int>(g));
      }
    }
    std::vector<size_t> order(next.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::vector<std::string> keys(next.size());
    for (size_t i = 0; i < next.size(); ++i) keys[i] = next[i].element.Key();
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return keys[a] < keys[b]; });
    for (size_t i : order) {
      ball.index_.emplace(keys[i], ball.vertices_.size());
      ball.vertices_.push_back(std::move(next[i]));
      last_letter.push_back(next_last[i]);
    }
    layer_begin = layer_end;
  }

  for (size_t u = 0; u < ball.vertices_.size(); ++u) {
    for (size_t g = 0; g < gens.size(); ++g) {
      const ProjMatrix w = PglMul(ball.vertices_[u].element, gens.elements[g]);
      auto it = ball.index_.find(w.Key());
      if (it != ball.index_.end() && it->second > u) {
        ball.edges_.push_back({u, it->second, gens.labels[g]});
      }
    }
  }
  return ball;
}

PlaneOrbits ProjectivePlaneOrbits(FieldSpec field,
                                  std::span<const ProjMatrix> gens) {
  const uint32_t q = field.size();
  // Canonical points: (1,a,b), (0,1,a), (0,0,1).
  std::vector<std::array<uint32_t, 3>> points;
  for (uint32_t a = 0; a < q; ++a) {
    for (uint32_t b = 0; b < q; ++b) points.push_back({1, a, b});
  }
  for (uint32_t a = 0; a < q; ++a) points.push_back({0, 1, a});
  points.push_back({0, 0, 1});

  auto index_of = [&](const std::array<uint32_t, 3>& p) -> size_t {
    if (p[0] != 0) return p[1] * q + p[2];
    if (p[1] != 0) return q * q + p[2];
    return q * q + q;
  };
  auto normalize = [&](std::array<uint32_t, 3> p) {
    const uint32_t lead = p[0] != 0 ? p[0] : (p[1] != 0 ? p[1] : p[2]);
    const uint32_t inv = field.InvBits(lead);
    for (uint32_t& x : p) x = field.MulBits(x, inv);
    return p;
  };

  std::vector<size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto root = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const ProjMatrix& g : gens) {
    CheckSameField(field, g.field());
    for (size_t i = 0; i < points.size(); ++i) {
      std::array<uint32_t, 3> image{};
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          image[r] ^= field.MulBits(g.matrix().bits(r, c), points[i][c]);
        }
      }
      const size_t a = root(i), b = root(index_of(normalize(image)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  PlaneOrbits out;
  out.point_count = points.size();
  out.orbit_of.resize(points.size());
  std::unordered_map<size_t, size_t> orbit_id;
  for (size_t i = 0; i < points.size(); ++i) {
    auto [it, inserted] = orbit_id.emplace(root(i), orbit_id.size());
    if (inserted) out.orbit_sizes.push_back(0);
    out.orbit_of[i] = it->second;
    ++out.orbit_sizes[it->second];
  }
  std::sort(out.orbit_sizes.rbegin(), out.orbit_sizes.rend());
  return out;
}

}  // namespace rigidcx
