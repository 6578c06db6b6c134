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

#include "rigidcx/commands.h"

#include <algorithm>
#include <sstream>

#include "rigidcx/autoeng.h"
#include "rigidcx/error.h"
#include "rigidcx/lsv.h"
#include "rigidcx/qlat.h"

namespace rigidcx {
namespace {

using nlohmann::json;

class Checks {
 public:
  void Add(const std::string& name, bool pass, json value, json expected) {
    list_.push_back({{"name", name},
                     {"status", pass ? "pass" : "fail"},
                     {"value", std::move(value)},
                     {"expected", std::move(expected)}});
    all_pass_ = all_pass_ && pass;
  }
  const json& list() const { return list_; }
  bool all_pass() const { return all_pass_; }

 private:
  json list_ = json::array();
  bool all_pass_ = true;
};

json ConfigJson(const RunConfig& c) {
  return {{"mode", c.mode},
          {"radius", c.radius},
          {"fix_radius", c.fix_radius},
          {"colors", c.colors},
          {"seed", c.seed},
          {"seeds", c.seeds},
          {"budget", c.vertex_budget},
          {"permutation_cap", c.permutation_cap},
          {"hop_depth", c.hop_depth}};
}

RunResult Finish(const std::string& command, const RunConfig& config, const Checks& checks,
                 json data, std::string dot) {
  RunResult r;
  r.report = {{"schema_version", kReportSchemaVersion},
              {"command", command},
              {"mode", config.mode},
              {"config", ConfigJson(config)},
              {"checks", checks.list()},
              {"data", std::move(data)}};
  r.dot = std::move(dot);
  r.all_pass = checks.all_pass();
  return r;
}

void AddLinkChecks(Checks& checks, json& data, const Complex& link) {
  bool regular = true;
  for (VertexId v : link.vertices()) regular = regular && link.Neighbors(v).size() == 3;
  checks.Add("link_vertex_count", link.num_vertices() == 14, link.num_vertices(), 14);
  checks.Add("link_3_regular", regular, regular, true);
  checks.Add("link_bipartite", IsBipartite(link), IsBipartite(link), true);
  checks.Add("link_girth", Girth(link) == 6, Girth(link), 6);
  const bool iso = FindIsomorphism(link, FanoIncidenceGraph()).has_value();
  checks.Add("link_isomorphic_to_fano_incidence", iso, iso, true);
  SearchOptions options;
  options.enumeration_cap = 0;
  const AutomorphismSet aut = AutomorphismGroup(link, options);
  checks.Add("link_automorphism_order", aut.order == "336", aut.order, "336");
  data["link"] = {{"vertices", link.num_vertices()},
                  {"edges", link.simplices(1).size()},
                  {"dimension", link.dimension()},
                  {"automorphism_order", aut.order}};
}

RunResult LsvVerify(const RunConfig& config) {
  if (config.radius < 1) {
    throw Error(ErrorCode::kInvalidArgument, "lsv verify needs --radius >= 1");
  }
  Checks checks;
  json data;
  BuildingBall b = BuildLsvBall(config.radius, config.vertex_budget);

  checks.Add("generator_count", b.table.matrices.size() == 7, b.table.matrices.size(), 7);
  data["repairs"] = b.table.repairs;
  json dets = json::array();
  bool nonzero = true;
  for (const Matrix3& m : b.table.printed) {
    dets.push_back(ToString(Determinant(m)));
    nonzero = nonzero && !Determinant(m).is_zero();
  }
  checks.Add("determinants_nonzero", nonzero, dets, "all nonzero");
  bool distinct = b.generators.size() == 14;
  for (const ProjMatrix& g : b.generators.elements) {
    distinct = distinct && !(g == PglIdentity(g.field()));
  }
  checks.Add("symmetrized_distinct", distinct, b.generators.size(), 14);
  data["self_inverse"] = b.generators.self_inverse;

  const PlaneOrbits orbits =
      ProjectivePlaneOrbits(b.table.field, b.table.matrices);
  checks.Add("plane_single_orbit",
             orbits.orbit_sizes == std::vector<size_t>{273}, orbits.orbit_sizes,
             std::vector<size_t>{273});

  data["sphere_sizes"] = b.ball.SphereSizes();
  data["ball_vertices"] = b.ball.vertices().size();
  data["ball_edges"] = b.ball.edges().size();
  if (b.ball.collision()) {
    data["collision"] = {{"first", b.ball.collision()->first},
                         {"second", b.ball.collision()->second}};
  }
  std::vector<size_t> counts;
  for (int d = 0; d <= b.complex.dimension(); ++d) counts.push_back(b.complex.simplices(d).size());
  data["simplex_counts"] = counts;
  checks.Add("clique_complex_dimension", b.complex.dimension() == 2, b.complex.dimension(), 2);

  AddLinkChecks(checks, data, Link(b.complex, 0));

  const PurityReport purity = Purity(b.complex, b.interior);
  json by_dim = json::object();
  for (auto [d, n] : purity.interior_maximal_by_dim) by_dim[std::to_string(d)] = n;
  const bool vacuous_purity = purity.interior_maximal_by_dim.empty();
  checks.Add("interior_pure_dimension_2",
             vacuous_purity || (purity.pure && purity.top_dimension == 2), by_dim,
             "pure, dimension 2");
  const bool thick = purity.interior_panels == 0 ||
                     (purity.min_panel_chambers == 3 && purity.max_panel_chambers == 3);
  checks.Add("interior_edges_in_three_chambers", thick,
             {{"interior_edges", purity.interior_panels},
              {"min", purity.min_panel_chambers.value_or(0)},
              {"max", purity.max_panel_chambers.value_or(0)}},
             3);

  const PanelFlipReport flips = PanelFlipCheck(b.complex, b.interior, config.hop_depth);
  checks.Add("local_panel_flip_fraction", !flips.fraction || *flips.fraction == 1.0,
             flips.fraction ? json(*flips.fraction) : json(nullptr), 1.0);
  data["panel_flips"] = ToJson(flips);
  return Finish("lsv", config, checks, std::move(data), ToDot(b.complex));
}

RunResult LsvBall(const RunConfig& config) {
  Checks checks;
  const GeneratorTable table = LsvGenerators();
  const CayleyBall ball =
      BuildCayleyBall(Symmetrize(table), config.radius, config.vertex_budget);
  checks.Add("center_is_identity",
             ball.vertices()[0].element == PglIdentity(table.field), true, true);
  json data = {{"generators", ToJson(table)}, {"ball", ball.ToJson()}};
  return Finish("lsv", config, checks, std::move(data), ball.ToDot());
}

json FlipJson(const ColoredTreeBall& ball, const FlipWitness& flip, bool verified) {
  json j = ToJson(ball, flip);
  j["verified"] = verified;
  return j;
}

// Checks one flip witness against the defining conditions and, when given,
// an explicit list of all automorphisms fixing the inner ball.
bool VerifyFlip(const ColoredTreeBall& ball, const FlipWitness& flip, int s,
                const std::vector<VertexPermutation>* all) {
  const VertexPermutation& p = flip.permutation;
  bool ok = IsAutomorphism(ball.AsComplex(), p, true) && !p.IsIdentity() &&
            (p * p).IsIdentity();
  std::vector<std::pair<VertexId, VertexId>> pins;
  for (VertexId v : ball.InnerBall(s)) {
    ok = ok && p[static_cast<size_t>(v)] == v;
    pins.emplace_back(v, v);
  }
  if (all != nullptr) {
    ok = ok && std::binary_search(all->begin(), all->end(), p);
  } else {
    // Without a full list, ask the engine for any element of the pointwise
    // stabilizer that moves child_a onto child_b.
    pins.emplace_back(static_cast<VertexId>(flip.child_a), static_cast<VertexId>(flip.child_b));
    ok = ok && FindAutomorphism(ball.AsComplex(), pins).has_value();
  }
  return ok;
}

std::string QuotientDot(const QuotientGraph& q) {
  static const char* kPalette[] = {"red", "green", "blue"};
  std::ostringstream out;
  out << "graph quotient {\n";
  for (int v = 0; v < q.vertex_count; ++v) out << "  q" << v << ";\n";
  for (const QuotientEdge& e : q.edges) {
    out << "  q" << e.u << " -- q" << e.v << " [color=" << kPalette[e.color] << ", label=\""
        << ColorName(e.color) << e.generator << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

RunResult TreeQuotient(const RunConfig& config) {
  Checks checks;
  const QuotientGraph q = BuildQuotientGraph();
  checks.Add("quotient_vertices", q.vertex_count == 4, q.vertex_count, 4);
  checks.Add("quotient_edges", q.edges.size() == 12, q.edges.size(), 12);
  bool degree6 = true, doubled = true;
  for (int v = 0; v < 4; ++v) degree6 = degree6 && q.Degree(v) == 6;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) doubled = doubled && q.Multiplicity(u, v) == 2;
  }
  checks.Add("quotient_degree_6", degree6, degree6, true);
  checks.Add("quotient_two_parallel_edges_per_pair", doubled, doubled, true);
  checks.Add("quotient_no_loops", !q.HasLoops(), !q.HasLoops(), true);
  checks.Add("quotient_underlying_k4", q.UnderlyingIsComplete(), q.UnderlyingIsComplete(),
             true);
  SearchOptions options;
  const AutomorphismSet klein = AutomorphismGroup(q.ColoredSimpleGraph(), options);
  checks.Add("quotient_color_automorphisms", klein.order == "4", klein.order, "4");
  json data = {{"quotient", ToJson(q)}};
  return Finish("tree", config, checks, std::move(data), QuotientDot(q));
}

RunResult TreeExperiment(const RunConfig& config) {
  Checks checks;
  json data;
  const int length = std::min(std::max(config.radius, 3), kDefaultWordBound);
  const FreeGroupReport fg = FreeGroupCheck(length);
  checks.Add("free_group_counts", fg.free, fg.distinct, fg.expected);

  const QuotientGraph q = BuildQuotientGraph();
  const bool quotient_ok = q.edges.size() == 12 && q.UnderlyingIsComplete() && !q.HasLoops() &&
                           q.Degree(0) == 6 && q.Degree(1) == 6 && q.Degree(2) == 6 &&
                           q.Degree(3) == 6;
  checks.Add("quotient_graph", quotient_ok, q.edges.size(), 12);

  json sweep = json::array();
  std::vector<double> logs;
  CountOptions count_options;
  for (int r = config.fix_radius + 1; r <= config.radius; ++r) {
    const ColorCount count = ColorAutomorphismCount(r, config.fix_radius, count_options);
    const ColorCount factor =
        FactorizedColorCount(LiftColoring(r, count_options.bound), config.fix_radius);
    sweep.push_back({{"r", r},
                     {"s", config.fix_radius},
                     {"count", count.count},
                     {"log2_count", count.log2_count},
                     {"method", count.method}});
    checks.Add("count_routes_agree_r" + std::to_string(r), count.count == factor.count,
               count.count, factor.count);
    if (r == 2 && config.fix_radius == 1) {
      checks.Add("count_r2_s1", count.count == "4096", count.count, "4096");
    }
    logs.push_back(count.log2_count);
  }
  const bool increasing = std::adjacent_find(logs.begin(), logs.end(),
                                             std::greater_equal<double>()) == logs.end();
  checks.Add("counts_strictly_increase", increasing, logs.size(), "strictly increasing");
  data["sweep"] = sweep;

  const ColoredTreeBall ball = LiftColoring(config.radius);
  for (size_t v = 0; v < ball.vertices().size(); ++v) {
    if (ball.vertices()[v].distance != config.fix_radius) continue;
    const FlipWitness flip = SubtreeFlip(ball, v);
    const bool ok = VerifyFlip(ball, flip, config.fix_radius, nullptr);
    checks.Add("flip_witness", ok, ok, true);
    data["witness_flip"] = FlipJson(ball, flip, ok);
    break;
  }
  return Finish("tree", config, checks, std::move(data), ball.ToDot());
}

RunResult TreeFlip(const RunConfig& config) {
  Checks checks;
  const ColoredTreeBall ball = LiftColoring(config.radius);
  std::vector<VertexPermutation> all;
  const bool enumerate = config.radius <= 2;
  if (enumerate) {
    SearchOptions options;
    options.enumeration_cap = config.permutation_cap;
    all = EnumerateAutomorphisms(ball.AsComplex(), ball.InnerBall(config.fix_radius), options);
  }
  json witnesses = json::array();
  size_t eligible = 0, verified = 0;
  for (size_t v = 0; v < ball.vertices().size(); ++v) {
    if (ball.vertices()[v].distance != config.fix_radius) continue;
    ++eligible;
    const FlipWitness flip = SubtreeFlip(ball, v);
    const bool ok = VerifyFlip(ball, flip, config.fix_radius, enumerate ? &all : nullptr);
    verified += ok;
    witnesses.push_back(FlipJson(ball, flip, ok));
  }
  checks.Add("flips_verified", eligible > 0 && verified == eligible, verified, eligible);
  json data = {{"eligible", eligible},
               {"membership_check", enumerate ? "enumeration" : "engine_search"},
               {"witnesses", witnesses}};
  if (enumerate) data["enumerated_group_order"] = all.size();
  return Finish("tree", config, checks, std::move(data), ball.ToDot());
}

}  // namespace

RunResult RunLsv(const RunConfig& config) {
  if (config.mode == "verify") return LsvVerify(config);
  if (config.mode == "ball") return LsvBall(config);
  throw Error(ErrorCode::kInvalidArgument, "unknown lsv mode '" + config.mode + "'");
}

RunResult RunTree(const RunConfig& config) {
  if (config.mode != "quotient") {
    if (config.fix_radius < 0 || config.fix_radius >= config.radius) {
      throw Error(ErrorCode::kInvalidArgument, "tree runs need 0 <= s < r");
    }
    if (config.radius > kMaxTreeRadius) {
      throw Error(ErrorCode::kBoundExceeded,
                  "tree radius above " + std::to_string(kMaxTreeRadius));
    }
  }
  if (config.mode == "experiment") return TreeExperiment(config);
  if (config.mode == "quotient") return TreeQuotient(config);
  if (config.mode == "flip") return TreeFlip(config);
  throw Error(ErrorCode::kInvalidArgument, "unknown tree mode '" + config.mode + "'");
}

RunResult RunRigidity(const RunConfig& config) {
  if (config.colors < 1) throw Error(ErrorCode::kInvalidArgument, "--colors must be >= 1");
  if (config.seeds < 1) throw Error(ErrorCode::kInvalidArgument, "--seeds must be >= 1");
  if (config.radius < 1) throw Error(ErrorCode::kInvalidArgument, "--radius must be >= 1");
  Checks checks;
  json data;
  const BuildingBall b = BuildLsvBall(config.radius, config.vertex_budget);
  const std::vector<VertexId> center = {0};
  SearchOptions options;
  options.enumeration_cap = 0;

  const AutomorphismSet plain = AutomorphismsFixing(
      b.complex.WithChamberColors(std::vector<int>(b.complex.simplices(2).size(), 0)), center,
      options);
  checks.Add("one_color_group_nontrivial", plain.order != "1", plain.order, ">= 2");
  data["one_color_order"] = plain.order;

  if (config.colors >= 2) {
    json runs = json::array();
    int trivial = 0;
    for (int k = 0; k < config.seeds; ++k) {
      const uint64_t seed = config.seed + static_cast<uint64_t>(k);
      const Complex colored =
          b.complex.WithChamberColors(RandomChamberColors(b.complex, config.colors, seed));
      const AutomorphismSet set = AutomorphismsFixing(colored, center, options);
      trivial += set.order == "1";
      runs.push_back({{"seed", seed},
                      {"order", set.order},
                      {"color_classes", ColorClassSizes(colored)}});
    }
    // At least 95% of the seeds must leave only the identity.
    const bool rigid = trivial * 100 >= 95 * config.seeds;
    checks.Add("random_coloring_rigid", rigid, trivial, std::to_string(config.seeds) +
                                                            " seeds, >= 95% trivial");
    data["colored_runs"] = runs;
  }

  json growth = json::array();
  for (int r = 2; r <= 3; ++r) {
    const ColorCount count = ColorAutomorphismCount(r, 1);
    growth.push_back({{"r", r}, {"s", 1}, {"count", count.count}});
  }
  data["tree_growth"] = growth;
  return Finish("rigidity", config, checks, std::move(data), "");
}

}  // namespace rigidcx
