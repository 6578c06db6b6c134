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

// Report-producing runs behind the command-line tool.
//
// Every run yields a single JSON document:
//   {"schema_version": 1, "command": ..., "mode": ..., "config": {...},
//    "checks": [{"name", "status", "value", "expected"}], "data": {...}}
// with status "pass" or "fail". Reports contain no timings, so equal
// configurations give byte-identical output.

#ifndef RIGIDCX_COMMANDS_H_
#define RIGIDCX_COMMANDS_H_

#include <cstdint>
#include <string>

#include "json.hpp"
#include "rigidcx/projmat.h"

namespace rigidcx {

inline constexpr int kReportSchemaVersion = 1;

struct RunConfig {
  std::string mode;
  int radius = 2;
  int fix_radius = 1;
  int colors = 2;
  uint64_t seed = 0;
  // Number of consecutive seeds starting at `seed` (rigidity runs).
  int seeds = 1;
  uint64_t vertex_budget = kDefaultVertexBudget;
  uint64_t permutation_cap = 1'000'000;
  int hop_depth = 1;
};

struct RunResult {
  nlohmann::json report;
  std::string dot;
  bool all_pass = false;
};

// mode "verify" or "ball". Throws kBudgetExceeded, kInvalidArgument.
RunResult RunLsv(const RunConfig& config);
// mode "experiment", "quotient" or "flip".
RunResult RunTree(const RunConfig& config);
RunResult RunRigidity(const RunConfig& config);

}  // namespace rigidcx

#endif  // RIGIDCX_COMMANDS_H_
