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

#include "rigidcx/rigidcx.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "rigidcx/autoeng.h"
#include "rigidcx/commands.h"
#include "rigidcx/error.h"
#include "rigidcx/gf2k.h"
#include "rigidcx/lsv.h"
#include "rigidcx/qlat.h"

struct rcx_field {
  rigidcx::FieldSpec spec;
};

struct rcx_ball {
  rigidcx::CayleyBall ball;
};

struct rcx_complex {
  rigidcx::Complex complex;
};

struct rcx_autset {
  rigidcx::Complex complex;
  rigidcx::AutomorphismSet set;
};

namespace {

thread_local std::string last_error;

rcx_status Fail(rcx_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs `body`, mapping exceptions onto status codes.
template <typename Body>
rcx_status Guard(Body&& body) {
  last_error.clear();
  try {
    body();
    return RCX_OK;
  } catch (const rigidcx::Error& e) {
    return Fail(static_cast<rcx_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return Fail(RCX_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(RCX_BUDGET_EXCEEDED, "out of memory");
  } catch (const std::exception& e) {
    return Fail(RCX_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define RCX_REQUIRE(cond)                                               \
  do {                                                                  \
    if (!(cond)) return Fail(RCX_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

rigidcx::RunConfig ToConfig(const rcx_run_config& c) {
  rigidcx::RunConfig config;
  config.mode = c.mode != nullptr ? c.mode : "";
  config.radius = c.radius;
  config.fix_radius = c.fix_radius;
  config.colors = c.colors;
  config.seed = c.seed;
  config.seeds = c.seeds;
  config.vertex_budget = c.vertex_budget;
  config.permutation_cap = c.permutation_cap;
  config.hop_depth = c.hop_depth;
  if (config.vertex_budget == 0 || config.permutation_cap == 0) {
    throw rigidcx::Error(rigidcx::ErrorCode::kInvalidArgument, "caps must be positive");
  }
  return config;
}

template <typename Run>
rcx_status RunReport(Run run, const rcx_run_config* config, char** report, char** dot,
                     int* all_pass) {
  RCX_REQUIRE(config != nullptr && report != nullptr && all_pass != nullptr);
  return Guard([&] {
    const rigidcx::RunResult result = run(ToConfig(*config));
    char* text = CopyString(result.report.dump(2) + "\n");
    if (dot != nullptr) {
      try {
        *dot = CopyString(result.dot);
      } catch (...) {
        std::free(text);
        throw;
      }
    }
    *report = text;
    *all_pass = result.all_pass ? 1 : 0;
  });
}

}  // namespace

extern "C" {

const char* rcx_version(void) { return "1.0.0"; }

const char* rcx_status_name(rcx_status status) {
  if (status == RCX_OK) return "ok";
  if (status == RCX_INTERNAL) return "internal";
  if (status < RCX_INVALID_ARGUMENT || status > RCX_NO_FLIP) return "unknown";
  return rigidcx::ErrorCodeName(static_cast<rigidcx::ErrorCode>(status));
}

const char* rcx_last_error(void) { return last_error.c_str(); }

void rcx_free_string(char* s) { std::free(s); }

rcx_status rcx_field_new(uint32_t modulus, rcx_field** out) {
  RCX_REQUIRE(out != nullptr);
  return Guard([&] { *out = new rcx_field{rigidcx::FieldSpec(modulus)}; });
}

void rcx_field_free(rcx_field* field) { delete field; }

uint32_t rcx_field_size(const rcx_field* field) {
  return field == nullptr ? 0 : field->spec.size();
}

rcx_status rcx_field_add(const rcx_field* field, uint32_t a, uint32_t b, uint32_t* out) {
  RCX_REQUIRE(field != nullptr && out != nullptr);
  return Guard([&] {
    *out = rigidcx::Add(rigidcx::FieldElem(field->spec, a), rigidcx::FieldElem(field->spec, b))
               .bits();
  });
}

rcx_status rcx_field_mul(const rcx_field* field, uint32_t a, uint32_t b, uint32_t* out) {
  RCX_REQUIRE(field != nullptr && out != nullptr);
  return Guard([&] {
    *out = rigidcx::Mul(rigidcx::FieldElem(field->spec, a), rigidcx::FieldElem(field->spec, b))
               .bits();
  });
}

rcx_status rcx_field_inv(const rcx_field* field, uint32_t a, uint32_t* out) {
  RCX_REQUIRE(field != nullptr && out != nullptr);
  return Guard([&] { *out = rigidcx::Inv(rigidcx::FieldElem(field->spec, a)).bits(); });
}

rcx_status rcx_field_pow(const rcx_field* field, uint32_t a, uint64_t e, uint32_t* out) {
  RCX_REQUIRE(field != nullptr && out != nullptr);
  return Guard([&] { *out = rigidcx::Pow(rigidcx::FieldElem(field->spec, a), e).bits(); });
}

rcx_status rcx_field_format(const rcx_field* field, uint32_t a, char** out) {
  RCX_REQUIRE(field != nullptr && out != nullptr);
  return Guard(
      [&] { *out = CopyString(rigidcx::ToString(rigidcx::FieldElem(field->spec, a))); });
}

rcx_status rcx_field_parse(const rcx_field* field, const char* text, uint32_t* out) {
  RCX_REQUIRE(field != nullptr && text != nullptr && out != nullptr);
  return Guard([&] { *out = rigidcx::ParseElem(field->spec, text).bits(); });
}

rcx_status rcx_lsv_ball_new(int radius, uint64_t vertex_budget, rcx_ball** out) {
  RCX_REQUIRE(out != nullptr);
  return Guard([&] {
    const rigidcx::GeneratorTable table = rigidcx::LsvGenerators();
    *out = new rcx_ball{
        rigidcx::BuildCayleyBall(rigidcx::Symmetrize(table), radius, vertex_budget)};
  });
}

void rcx_ball_free(rcx_ball* ball) { delete ball; }

size_t rcx_ball_vertex_count(const rcx_ball* ball) {
  return ball == nullptr ? 0 : ball->ball.vertices().size();
}

size_t rcx_ball_edge_count(const rcx_ball* ball) {
  return ball == nullptr ? 0 : ball->ball.edges().size();
}

size_t rcx_ball_sphere_size(const rcx_ball* ball, int distance) {
  if (ball == nullptr || distance < 0) return 0;
  const std::vector<size_t> sizes = ball->ball.SphereSizes();
  return static_cast<size_t>(distance) < sizes.size() ? sizes[distance] : 0;
}

rcx_status rcx_ball_to_json(const rcx_ball* ball, char** out) {
  RCX_REQUIRE(ball != nullptr && out != nullptr);
  return Guard([&] { *out = CopyString(ball->ball.ToJson().dump()); });
}

rcx_status rcx_ball_clique_complex(const rcx_ball* ball, int max_dim, rcx_complex** out) {
  RCX_REQUIRE(ball != nullptr && out != nullptr);
  return Guard([&] {
    *out = new rcx_complex{rigidcx::CliqueComplex(rigidcx::BallGraph(ball->ball), max_dim)};
  });
}

rcx_status rcx_complex_from_json(const char* json, rcx_complex** out) {
  RCX_REQUIRE(json != nullptr && out != nullptr);
  return Guard([&] { *out = new rcx_complex{rigidcx::Deserialize(json)}; });
}

void rcx_complex_free(rcx_complex* complex) { delete complex; }

int rcx_complex_dimension(const rcx_complex* complex) {
  return complex == nullptr ? -1 : complex->complex.dimension();
}

size_t rcx_complex_simplex_count(const rcx_complex* complex, int dim) {
  if (complex == nullptr || dim < 0 || dim > complex->complex.dimension()) return 0;
  return complex->complex.simplices(dim).size();
}

rcx_status rcx_complex_to_json(const rcx_complex* complex, char** out) {
  RCX_REQUIRE(complex != nullptr && out != nullptr);
  return Guard([&] { *out = CopyString(rigidcx::Serialize(complex->complex)); });
}

rcx_status rcx_complex_link(const rcx_complex* complex, int64_t vertex, rcx_complex** out) {
  RCX_REQUIRE(complex != nullptr && out != nullptr);
  return Guard([&] { *out = new rcx_complex{rigidcx::Link(complex->complex, vertex)}; });
}

rcx_status rcx_complex_random_colors(const rcx_complex* complex, int colors, uint64_t seed,
                                     rcx_complex** out) {
  RCX_REQUIRE(complex != nullptr && out != nullptr);
  return Guard([&] {
    const rigidcx::Complex& c = complex->complex;
    *out = new rcx_complex{c.WithChamberColors(rigidcx::RandomChamberColors(c, colors, seed))};
  });
}

rcx_status rcx_automorphisms(const rcx_complex* complex, const int64_t* fixed,
                            size_t fixed_count, int respect_colors, rcx_autset** out) {
  RCX_REQUIRE(complex != nullptr && out != nullptr && (fixed != nullptr || fixed_count == 0));
  return Guard([&] {
    rigidcx::SearchOptions options;
    options.respect_colors = respect_colors != 0;
    const std::vector<rigidcx::VertexId> pins(fixed, fixed + fixed_count);
    *out = new rcx_autset{complex->complex,
                          rigidcx::AutomorphismsFixing(complex->complex, pins, options)};
  });
}

void rcx_autset_free(rcx_autset* set) { delete set; }

rcx_status rcx_autset_order(const rcx_autset* set, char** out) {
  RCX_REQUIRE(set != nullptr && out != nullptr);
  return Guard([&] { *out = CopyString(set->set.order); });
}

double rcx_autset_log2_order(const rcx_autset* set) {
  return set == nullptr ? 0.0 : set->set.log2_order;
}

rcx_status rcx_autset_to_json(const rcx_autset* set, char** out) {
  RCX_REQUIRE(set != nullptr && out != nullptr);
  return Guard([&] { *out = CopyString(rigidcx::ToJson(set->complex, set->set).dump()); });
}

rcx_status rcx_isomorphic(const rcx_complex* a, const rcx_complex* b, int respect_colors,
                          int* out) {
  RCX_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return Guard([&] {
    rigidcx::SearchOptions options;
    options.respect_colors = respect_colors != 0;
    *out = rigidcx::FindIsomorphism(a->complex, b->complex, options).has_value() ? 1 : 0;
  });
}

rcx_status rcx_tree_color_count(int r, int s, char** out) {
  RCX_REQUIRE(out != nullptr);
  return Guard([&] { *out = CopyString(rigidcx::ColorAutomorphismCount(r, s).count); });
}

rcx_status rcx_free_group_check(int max_length, int* out) {
  RCX_REQUIRE(out != nullptr);
  return Guard([&] { *out = rigidcx::FreeGroupCheck(max_length).free ? 1 : 0; });
}

void rcx_run_config_init(rcx_run_config* config) {
  if (config == nullptr) return;
  const rigidcx::RunConfig defaults;
  config->mode = nullptr;
  config->radius = defaults.radius;
  config->fix_radius = defaults.fix_radius;
  config->colors = defaults.colors;
  config->seed = defaults.seed;
  config->seeds = defaults.seeds;
  config->vertex_budget = defaults.vertex_budget;
  config->permutation_cap = defaults.permutation_cap;
  config->hop_depth = defaults.hop_depth;
}

rcx_status rcx_run_lsv(const rcx_run_config* config, char** report, char** dot,
                       int* all_pass) {
  return RunReport(rigidcx::RunLsv, config, report, dot, all_pass);
}

rcx_status rcx_run_tree(const rcx_run_config* config, char** report, char** dot,
                        int* all_pass) {
  return RunReport(rigidcx::RunTree, config, report, dot, all_pass);
}

rcx_status rcx_run_rigidity(const rcx_run_config* config, char** report, char** dot,
                            int* all_pass) {
  return RunReport(rigidcx::RunRigidity, config, report, dot, all_pass);
}

}  // extern "C"
