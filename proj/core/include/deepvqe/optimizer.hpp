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

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "deepvqe/statevector.hpp"

namespace deepvqe {

struct OptimizerConfig {
  std::size_t max_iterations = 2000;  // per restart
  GradientMode gradient = GradientMode::Adjoint;
  double fd_step = 1e-5;
  double tolerance = 1e-10;           // relative cost decrease that counts as stalled
  double gradient_tolerance = 1e-6;   // on the Euclidean gradient norm
  std::size_t restarts = 5;
  std::uint64_t seed = 0;

  /// Throws PreconditionError on restart count 0 or a nonpositive tolerance.
  void validate() const;
};

/// Cost with optional gradient: writes the gradient into `grad` when non-null.
using Objective = std::function<double(const std::vector<double>& x, std::vector<double>* grad)>;

struct MinimizeResult {
  double value = 0.0;
  std::vector<double> params;
  double gradient_norm = 0.0;
  std::size_t iterations = 0;     // of the winning restart
  std::size_t evaluations = 0;    // over all restarts
  std::size_t best_restart = 0;
  bool converged = false;
};

/// BFGS with a strong-Wolfe line search, repeated `cfg.restarts` times.
/// Restart 0 starts from `init`; restart r >= 1 draws every coordinate
/// uniformly from [0, 2 pi) with a generator seeded by mix_seed(cfg.seed, r).
/// The best result over all restarts is returned.
/// Throws NumericError if the cost is ever NaN or infinite.
MinimizeResult minimize(const Objective& f, const std::vector<double>& init,
                        const OptimizerConfig& cfg);

/// Same for a plain cost function; gradients by central differences with
/// step cfg.fd_step.
MinimizeResult minimize(const std::function<double(const std::vector<double>&)>& cost,
                        const std::vector<double>& init, const OptimizerConfig& cfg);

void to_json(nlohmann::json& j, const OptimizerConfig& c);
void from_json(const nlohmann::json& j, OptimizerConfig& c);

}  // namespace deepvqe
