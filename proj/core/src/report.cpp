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

#include <cstdio>
#include <fstream>
#include <ostream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "deepvqe/errors.hpp"
#include "deepvqe/pipeline.hpp"

namespace deepvqe {

bool operator==(const RunReport& a, const RunReport& b) {
  auto key = [](const RunReport& r) {
    return std::tie(r.model, r.split, r.basis, r.step1, r.step3, r.energies, r.ed_energies,
                    r.relative_errors, r.e0_local, r.truncation_rate, r.n_required, r.step3_qubits, r.K, r.lambda,
                    r.penalty_mode, r.gap_estimate, r.penalty_verified, r.seed);
  };
  return key(a) == key(b);
}

ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  throw PreconditionError("unknown report format '" + s + "'");
}

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_row(const RunReport& r) {
  auto level = [&](const std::vector<double>& v, std::size_t m) { return m < v.size() ? number(v[m]) : ""; };
  std::string row = r.model + ',' + r.split + ',' + r.basis + ',';
  row += level(r.energies, 0) + ',' + level(r.relative_errors, 0) + ',';
  row += level(r.energies, 1) + ',' + level(r.relative_errors, 1) + ',';
  row += number(r.truncation_rate) + ',' + std::to_string(r.n_required) + ',' + std::to_string(r.seed);
  return row;
}

template <class T>
void get_opt(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

void step_to_json(nlohmann::json& j, const StepConfig& s) {
  j = {{"backend", to_string(s.backend)}, {"depth", s.depth}, {"optimizer", s.optimizer}};
}

void step_from_json(const nlohmann::json& j, StepConfig& s) {
  if (j.contains("backend")) s.backend = parse_backend(j.at("backend").get<std::string>());
  get_opt(j, "depth", s.depth);
  if (j.contains("optimizer")) {
    // Missing optimizer keys keep the step's defaults.
    nlohmann::json merged = s.optimizer;
    merged.update(j.at("optimizer"));
    s.optimizer = merged.get<OptimizerConfig>();
  }
}

}  // namespace

void to_json(nlohmann::json& j, const RunConfig& c) {
  nlohmann::json model;
  if (c.model == ModelKind::Heisenberg) {
    model = {{"type", "heisenberg"}, {"n_sub", c.n_sub}, {"n_qubit", c.n_qubit}};
  } else {
    model = {{"type", "fermion"},      {"file", c.fermion_file.string()}, {"n_k", c.n_k},
             {"orbitals", c.orbitals}, {"n_qubit", c.n_qubit}};
  }
  nlohmann::json s1;
  nlohmann::json s3;
  step_to_json(s1, c.step1);
  step_to_json(s3, c.step3);
  s3["ssvqe_weights"] = c.ssvqe_weights;
  j = {{"model", model},
       {"basis", c.basis},
       {"complete_second_order", c.complete_second_order},
       {"step1", s1},
       {"step3", s3},
       {"levels", c.levels},
       {"penalty",
        {{"mode", to_string(c.penalty_mode)},
         {"gap_estimate", c.gap_estimate ? nlohmann::json(*c.gap_estimate) : nlohmann::json(nullptr)},
         {"zero", c.zero_penalty},
         {"verify", c.verify_penalty}}},
       {"rank_tolerance", c.rank_tolerance},
       {"ed", {{"run", c.run_ed}, {"dense_limit", c.ed_dense_limit}}},
       {"seed", c.seed},
       {"output", {{"path", c.output.string()}, {"format", c.format}}}};
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  c = RunConfig{};
  if (j.contains("model")) {
    const auto& m = j.at("model");
    const std::string type = m.value("type", "heisenberg");
    if (type == "heisenberg") {
      c.model = ModelKind::Heisenberg;
    } else if (type == "fermion") {
      c.model = ModelKind::Fermion;
      c.basis = "Ws";
      c.fermion_file = m.at("file").get<std::string>();
      get_opt(m, "n_k", c.n_k);
      get_opt(m, "orbitals", c.orbitals);
    } else {
      throw PreconditionError("unknown model type '" + type + "'");
    }
    get_opt(m, "n_sub", c.n_sub);
    get_opt(m, "n_qubit", c.n_qubit);
  }
  get_opt(j, "basis", c.basis);
  get_opt(j, "complete_second_order", c.complete_second_order);
  if (j.contains("step1")) step_from_json(j.at("step1"), c.step1);
  if (j.contains("step3")) {
    step_from_json(j.at("step3"), c.step3);
    get_opt(j.at("step3"), "ssvqe_weights", c.ssvqe_weights);
  }
  get_opt(j, "levels", c.levels);
  if (j.contains("penalty")) {
    const auto& p = j.at("penalty");
    if (p.contains("mode")) c.penalty_mode = parse_penalty_mode(p.at("mode").get<std::string>());
    if (p.contains("gap_estimate") && !p.at("gap_estimate").is_null()) {
      c.gap_estimate = p.at("gap_estimate").get<double>();
    }
    get_opt(p, "zero", c.zero_penalty);
    get_opt(p, "verify", c.verify_penalty);
  }
  get_opt(j, "rank_tolerance", c.rank_tolerance);
  if (j.contains("ed")) {
    get_opt(j.at("ed"), "run", c.run_ed);
    get_opt(j.at("ed"), "dense_limit", c.ed_dense_limit);
  }
  get_opt(j, "seed", c.seed);
  if (j.contains("output")) {
    std::string path;
    get_opt(j.at("output"), "path", path);
    c.output = path;
    get_opt(j.at("output"), "format", c.format);
  }
  c.validate();
}

void to_json(nlohmann::json& j, const RunReport& r) {
  j = {{"model", r.model},
       {"split", r.split},
       {"basis", r.basis},
       {"step1", r.step1},
       {"step3", r.step3},
       {"energies", r.energies},
       {"ed_energies", r.ed_energies},
       {"relative_errors", r.relative_errors},
       {"e0_local", r.e0_local ? nlohmann::json(*r.e0_local) : nlohmann::json(nullptr)},
       {"truncation_rate", r.truncation_rate},
       {"n_required", r.n_required},
       {"step3_qubits", r.step3_qubits},
       {"K", r.K},
       {"lambda", r.lambda},
       {"penalty_mode", r.penalty_mode},
       {"gap_estimate", r.gap_estimate},
       {"penalty_verified", r.penalty_verified ? nlohmann::json(*r.penalty_verified) : nlohmann::json(nullptr)},
       {"seed", r.seed},
       {"timing",
        {{"step1", r.timing.step1}, {"step2", r.timing.step2}, {"step3", r.timing.step3}, {"ed", r.timing.ed}}}};
}

void from_json(const nlohmann::json& j, RunReport& r) {
  r = RunReport{};
  j.at("model").get_to(r.model);
  j.at("split").get_to(r.split);
  j.at("basis").get_to(r.basis);
  get_opt(j, "step1", r.step1);
  get_opt(j, "step3", r.step3);
  j.at("energies").get_to(r.energies);
  get_opt(j, "ed_energies", r.ed_energies);
  get_opt(j, "relative_errors", r.relative_errors);
  if (j.contains("e0_local") && !j.at("e0_local").is_null()) r.e0_local = j.at("e0_local").get<double>();
  j.at("truncation_rate").get_to(r.truncation_rate);
  j.at("n_required").get_to(r.n_required);
  get_opt(j, "step3_qubits", r.step3_qubits);
  get_opt(j, "K", r.K);
  get_opt(j, "lambda", r.lambda);
  get_opt(j, "penalty_mode", r.penalty_mode);
  get_opt(j, "gap_estimate", r.gap_estimate);
  if (j.contains("penalty_verified") && !j.at("penalty_verified").is_null()) {
    r.penalty_verified = j.at("penalty_verified").get<bool>();
  }
  get_opt(j, "seed", r.seed);
  if (j.contains("timing")) {
    const auto& t = j.at("timing");
    get_opt(t, "step1", r.timing.step1);
    get_opt(t, "step2", r.timing.step2);
    get_opt(t, "step3", r.timing.step3);
    get_opt(t, "ed", r.timing.ed);
  }
  if (r.relative_errors.size() > 0 && r.ed_energies.empty()) {
    throw PreconditionError("report has relative errors without an ED baseline");
  }
}

void write_reports(std::ostream& out, const std::vector<RunReport>& reports, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    out << kCsvHeader << '\n';
    for (const auto& r : reports) out << csv_row(r) << '\n';
    return;
  }
  if (reports.size() == 1) {
    out << nlohmann::json(reports.front()).dump(2) << '\n';
  } else {
    out << nlohmann::json(reports).dump(2) << '\n';
  }
}

void emit_reports(const std::vector<RunReport>& r, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open report file " + path.string());
  write_reports(out, r, format);
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

void emit_report(const RunReport& r, ReportFormat format, const std::filesystem::path& path) {
  emit_reports({r}, format, path);
}

RunReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open report file " + path.string());
  try {
    return nlohmann::json::parse(in).get<RunReport>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace deepvqe
