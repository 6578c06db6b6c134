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

// Command-line front end. Exit status: 0 when every check passes, 1 when a
// check fails, 2 on usage errors, exceeded budgets and other errors.
//
//   rigidcx lsv verify|ball [--radius R]
//   rigidcx tree experiment|quotient|flip [--r R] [--s S]
//   rigidcx rigidity [--radius R] [--colors K] [--seed N] [--seeds M]

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rigidcx/rigidcx.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct Flags {
  std::string command;
  rcx_run_config config;
  std::string mode;
  std::string out_dir;
  std::string format = "json";
};

void AddCommonFlags(CLI::App* app, Flags& flags) {
  app->add_option("-r,--radius,--r", flags.config.radius, "Ball radius")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--budget", flags.config.vertex_budget, "Vertex budget")
      ->check(CLI::PositiveNumber);
  app->add_option("--permutation-cap", flags.config.permutation_cap,
                  "Largest automorphism list to enumerate")
      ->check(CLI::PositiveNumber);
  app->add_option("--out", flags.out_dir, "Write the report (and DOT export) into DIR");
  app->add_option("--format", flags.format, "Output on stdout: json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
}

int WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitError;
  }
  return kExitPass;
}

void PrintFailures(const std::string& report) {
  const nlohmann::json j = nlohmann::json::parse(report);
  for (const auto& check : j.at("checks")) {
    if (check.at("status") != "pass") {
      std::cerr << "check failed: " << check.at("name").get<std::string>()
                << " value=" << check.at("value").dump()
                << " expected=" << check.at("expected").dump() << "\n";
    }
  }
}

int Emit(const Flags& flags, const std::string& report, const std::string& dot) {
  if (!flags.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(flags.out_dir, ec);
    if (ec) {
      std::cerr << "error: cannot create " << flags.out_dir << ": " << ec.message() << "\n";
      return kExitError;
    }
    const std::string stem = flags.command + "-" + (flags.mode.empty() ? "run" : flags.mode);
    const std::filesystem::path dir(flags.out_dir);
    if (int rc = WriteFile(dir / (stem + ".json"), report); rc != kExitPass) return rc;
    if (flags.format == "dot" && !dot.empty()) {
      if (int rc = WriteFile(dir / (stem + ".dot"), dot); rc != kExitPass) return rc;
    }
    return kExitPass;
  }
  std::cout << (flags.format == "dot" ? dot : report);
  std::cout.flush();
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  Flags flags;
  rcx_run_config_init(&flags.config);

  CLI::App app{"Finite experiments on buildings, Cayley balls and colored trees"};
  app.require_subcommand(1);

  CLI::App* lsv = app.add_subcommand("lsv", "PGL_3(F_16) Cayley balls and their clique complexes");
  lsv->add_option("mode", flags.mode, "verify or ball")
      ->required()
      ->check(CLI::IsMember({"verify", "ball"}));
  AddCommonFlags(lsv, flags);
  lsv->add_option("--hop-depth", flags.config.hop_depth, "Neighborhood depth for panel flips")
      ->check(CLI::PositiveNumber);

  CLI::App* tree = app.add_subcommand("tree", "Quaternion tree, quotient and color counts");
  tree->add_option("mode", flags.mode, "experiment, quotient or flip")
      ->required()
      ->check(CLI::IsMember({"experiment", "quotient", "flip"}));
  AddCommonFlags(tree, flags);
  tree->add_option("-s,--fix-radius,--s", flags.config.fix_radius, "Radius fixed pointwise")
      ->check(CLI::NonNegativeNumber);

  CLI::App* rigidity =
      app.add_subcommand("rigidity", "Color-preserving automorphisms of the building ball");
  AddCommonFlags(rigidity, flags);
  rigidity->add_option("--colors", flags.config.colors, "Number of chamber colors")
      ->check(CLI::PositiveNumber);
  rigidity->add_option("--seed", flags.config.seed, "First coloring seed");
  rigidity->add_option("--seeds", flags.config.seeds, "Number of consecutive seeds")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitError;
  }

  rcx_status (*run)(const rcx_run_config*, char**, char**, int*) = nullptr;
  if (lsv->parsed()) {
    flags.command = "lsv";
    run = rcx_run_lsv;
  } else if (tree->parsed()) {
    flags.command = "tree";
    run = rcx_run_tree;
  } else {
    flags.command = "rigidity";
    flags.mode = "contrast";
    run = rcx_run_rigidity;
  }
  flags.config.mode = flags.mode.c_str();

  char* report = nullptr;
  char* dot = nullptr;
  int all_pass = 0;
  const rcx_status status = run(&flags.config, &report, &dot, &all_pass);
  if (status != RCX_OK) {
    std::cerr << "error (" << rcx_status_name(status) << "): " << rcx_last_error() << "\n";
    return kExitError;
  }
  const std::string report_text(report);
  const std::string dot_text(dot);
  rcx_free_string(report);
  rcx_free_string(dot);

  if (int rc = Emit(flags, report_text, dot_text); rc != kExitPass) return rc;
  if (!all_pass) {
    PrintFailures(report_text);
    return kExitCheckFailed;
  }
  return kExitPass;
}
