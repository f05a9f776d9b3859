// Copyright 2026 The deepvqe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// deepvqe: command-line front end for the Deep VQE pipeline.
//
//   deepvqe run --n-sub 2 --n-qubit 4 --basis W2
//   deepvqe ed --n-sub 2 --n-qubit 8
//   deepvqe verify-penalty --config run.json --zero-penalty
//   deepvqe table1 --format csv --output table1.csv

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "deepvqe/errors.hpp"
#include "deepvqe/pipeline.hpp"

namespace {

using nlohmann::json;

// Flags that mirror RunConfig fields. Each option given on the command line
// is written over the --config document before it is decoded.
struct ConfigFlags {
  std::string config;
  std::vector<std::function<void(json&)>> patches;

  template <class T>
  void add(CLI::App* app, const std::string& name, const std::string& help, json::json_pointer ptr) {
    auto value = std::make_shared<T>();
    CLI::Option* opt = app->add_option(name, *value, help);
    patches.push_back([opt, value, ptr](json& j) {
      if (opt->count() > 0) j[ptr] = *value;
    });
  }

  void flag(CLI::App* app, const std::string& name, const std::string& help, json::json_pointer ptr) {
    CLI::Option* opt = app->add_flag(name, help);
    patches.push_back([opt, ptr](json& j) {
      if (opt->count() > 0) j[ptr] = true;
    });
  }

  void install(CLI::App* app) {
    app->add_option("--config", config, "JSON run configuration")->check(CLI::ExistingFile);
    add<std::string>(app, "--model", "heisenberg or fermion", json::json_pointer("/model/type"));
    add<std::size_t>(app, "--n-sub", "number of subsystems (heisenberg)", json::json_pointer("/model/n_sub"));
    add<std::size_t>(app, "--n-qubit", "qubits per subsystem", json::json_pointer("/model/n_qubit"));
    add<std::string>(app, "--file", "fermionic term file (JSON lines)", json::json_pointer("/model/file"));
    add<std::size_t>(app, "--n-k", "number of k points (fermion)", json::json_pointer("/model/n_k"));
    add<std::size_t>(app, "--orbitals", "spin orbitals per k point (fermion)", json::json_pointer("/model/orbitals"));
    add<std::string>(app, "--basis", "excitation set: W, W1, W2, Ws or Wd", json::json_pointer("/basis"));
    flag(app, "--complete-second-order", "add c c and c^ c^ pairs to Wd",
         json::json_pointer("/complete_second_order"));
    add<std::string>(app, "--step1", "vqe or exact", json::json_pointer("/step1/backend"));
    add<std::string>(app, "--step3", "vqe or exact", json::json_pointer("/step3/backend"));
    add<std::size_t>(app, "--depth1", "ansatz depth in step 1 (0 = default)", json::json_pointer("/step1/depth"));
    add<std::size_t>(app, "--depth3", "ansatz depth in step 3 (0 = default)", json::json_pointer("/step3/depth"));
    add<std::size_t>(app, "--restarts1", "optimizer restarts in step 1",
                     json::json_pointer("/step1/optimizer/restarts"));
    add<std::size_t>(app, "--restarts3", "optimizer restarts in step 3",
                     json::json_pointer("/step3/optimizer/restarts"));
    add<std::string>(app, "--gradient", "adjoint, parameter-shift or finite-difference (both steps)",
                     json::json_pointer("/gradient"));
    add<std::vector<double>>(app, "--weights", "SSVQE weights, one per level",
                             json::json_pointer("/step3/ssvqe_weights"));
    add<std::size_t>(app, "--levels", "number of levels to report", json::json_pointer("/levels"));
    add<std::string>(app, "--penalty-mode", "ground, excited or unconditional", json::json_pointer("/penalty/mode"));
    add<double>(app, "--gap", "gap estimate for the excited penalty mode", json::json_pointer("/penalty/gap_estimate"));
    flag(app, "--zero-penalty", "use lambda = 0 (requires --verify-penalty)", json::json_pointer("/penalty/zero"));
    flag(app, "--verify-penalty", "check the padded low spectrum", json::json_pointer("/penalty/verify"));
    add<double>(app, "--rank-tol", "relative Gram eigenvalue cutoff", json::json_pointer("/rank_tolerance"));
    add<std::size_t>(app, "--ed-dense-limit", "largest qubit count for dense ED", json::json_pointer("/ed/dense_limit"));
    add<std::uint64_t>(app, "--seed", "run seed", json::json_pointer("/seed"));
    add<std::string>(app, "--output", "report path (stdout when omitted)", json::json_pointer("/output/path"));
    add<std::string>(app, "--format", "json or csv", json::json_pointer("/output/format"));
    auto no_ed = app->add_flag("--no-ed", "skip the exact baseline");
    patches.push_back([no_ed](json& j) {
      if (no_ed->count() > 0) j["ed"]["run"] = false;
    });
  }

  bool implies_verify = false;

  deepvqe::RunConfig resolve() const {
    json j = json::object();
    if (!config.empty()) {
      std::ifstream in(config);
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw deepvqe::StageError("config", config + ": " + e.what());
      }
    }
    for (const auto& p : patches) p(j);
    if (implies_verify) j["penalty"]["verify"] = true;
    if (j.contains("gradient")) {
      for (const char* step : {"step1", "step3"}) j[step]["optimizer"]["gradient"] = j["gradient"];
      j.erase("gradient");
    }
    try {
      return j.get<deepvqe::RunConfig>();
    } catch (const std::exception& e) {
      throw deepvqe::StageError("config", e.what());
    }
  }
};

void write_out(const std::vector<deepvqe::RunReport>& reports, const deepvqe::RunConfig& cfg) {
  const auto fmt = deepvqe::parse_report_format(cfg.format);
  if (cfg.output.empty()) {
    deepvqe::write_reports(std::cout, reports, fmt);
  } else {
    deepvqe::emit_reports(reports, fmt, cfg.output);
  }
}

void print_levels(const char* what, const std::vector<double>& v) {
  std::printf("%s", what);
  for (double e : v) std::printf(" %.6f", e);
  std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deep VQE pipeline, exact baselines and table reproduction"};
  app.require_subcommand(1);

  ConfigFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "run Steps 1-3 and the ED baseline");
  run_flags.install(run);

  ConfigFlags ed_flags;
  CLI::App* ed = app.add_subcommand("ed", "exact diagonalization of the full model only");
  ed_flags.install(ed);

  ConfigFlags pen_flags;
  CLI::App* pen = app.add_subcommand("verify-penalty", "compare the padded model's low spectrum with H~");
  pen_flags.install(pen);
  pen_flags.implies_verify = true;

  std::size_t jobs = 1;
  std::string grid_output;
  CLI::App* table1 = app.add_subcommand("table1", "run the exact-backend Heisenberg grid");
  table1->add_option("--jobs", jobs, "parallel grid cells")->check(CLI::PositiveNumber);
  table1->add_option("--output", grid_output, "report path (stdout when omitted)");
  std::string grid_format = "csv";
  table1->add_option("--format", grid_format, "json or csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const auto cfg = run_flags.resolve();
      write_out({deepvqe::run_pipeline(cfg)}, cfg);
    } else if (ed->parsed()) {
      const auto cfg = ed_flags.resolve();
      std::vector<double> levels;
      try {
        levels = deepvqe::ed_baseline(cfg);
      } catch (const std::exception& e) {
        throw deepvqe::StageError("ed", e.what());
      }
      print_levels("ED:", levels);
    } else if (pen->parsed()) {
      const auto cfg = pen_flags.resolve();
      deepvqe::EffectiveStage st;
      try {
        st = deepvqe::build_effective(cfg);
      } catch (const std::exception& e) {
        throw deepvqe::StageError("step2", e.what());
      }
      deepvqe::PenaltyCheck check;
      try {
        const std::size_t n = cfg.levels - 1;
        deepvqe::PenaltyVector p =
            cfg.zero_penalty
                ? deepvqe::zero_penalties(st.eff)
                : deepvqe::penalty_bounds(st.eff, n,
                                          cfg.gap_estimate ? *cfg.gap_estimate : deepvqe::first_order_gap(st.eff, n),
                                          cfg.penalty_mode);
        check = deepvqe::verify_penalty(st.eff, p, cfg.levels);
      } catch (const std::exception& e) {
        throw deepvqe::StageError("step3", e.what());
      }
      print_levels("lambda:", check.penalties.lambda);
      print_levels("effective:", check.effective);
      print_levels("embedded:", check.embedded);
      std::printf("max deviation: %.3e\n%s\n", check.max_deviation, check.passed ? "PASS" : "FAIL");
      return check.passed ? 0 : 3;
    } else if (table1->parsed()) {
      const auto reports = deepvqe::run_grid(deepvqe::table1_grid(), jobs);
      const auto fmt = deepvqe::parse_report_format(grid_format);
      if (grid_output.empty()) {
        deepvqe::write_reports(std::cout, reports, fmt);
      } else {
        deepvqe::emit_reports(reports, fmt, grid_output);
      }
    }
  } catch (const deepvqe::StageError& e) {
    std::fprintf(stderr, "deepvqe: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "deepvqe: [io] %s\n", e.what());
    return 1;
  }
  return 0;
}
