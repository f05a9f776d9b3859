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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "deepvqe/errors.hpp"
#include "deepvqe/optimizer.hpp"

namespace deepvqe {
namespace {

double rosenbrock(const std::vector<double>& x, std::vector<double>* g) {
  const double a = 1.0 - x[0];
  const double b = x[1] - x[0] * x[0];
  if (g != nullptr) *g = {-2.0 * a - 400.0 * x[0] * b, 200.0 * b};
  return a * a + 100.0 * b * b;
}

TEST(Optimizer, MinimizesRosenbrock) {
  OptimizerConfig cfg;
  cfg.restarts = 1;
  const MinimizeResult r = minimize(rosenbrock, {-1.2, 1.0}, cfg);
  EXPECT_NEAR(r.params[0], 1.0, 1e-5);
  EXPECT_NEAR(r.params[1], 1.0, 1e-5);
  EXPECT_LT(r.value, 1e-10);
  EXPECT_TRUE(r.converged);
}

TEST(Optimizer, QuadraticConvergesQuickly) {
  OptimizerConfig cfg;
  cfg.restarts = 1;
  auto f = [](const std::vector<double>& x, std::vector<double>* g) {
    double v = 0.0;
    if (g != nullptr) g->assign(x.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double w = 1.0 + static_cast<double>(i);
      v += w * (x[i] - 0.5) * (x[i] - 0.5);
      if (g != nullptr) (*g)[i] = 2.0 * w * (x[i] - 0.5);
    }
    return v;
  };
  const MinimizeResult r = minimize(f, std::vector<double>(6, 3.0), cfg);
  EXPECT_LT(r.value, 1e-12);
  EXPECT_LT(r.iterations, 40u);
}

TEST(Optimizer, FiniteDifferenceOverload) {
  OptimizerConfig cfg;
  cfg.restarts = 1;
  const auto cost = [](const std::vector<double>& x) { return std::cos(x[0]) + 0.5 * x[1] * x[1]; };
  const MinimizeResult r = minimize(cost, {2.5, 1.0}, cfg);
  EXPECT_NEAR(r.value, -1.0, 1e-9);
}

TEST(Optimizer, RestartsKeepTheBestAndAreDeterministic) {
  OptimizerConfig cfg;
  cfg.restarts = 6;
  cfg.seed = 99;
  // Many local minima; the global one is at x = 0.
  auto f = [](const std::vector<double>& x, std::vector<double>* g) {
    const double v = 0.1 * x[0] * x[0] - std::cos(3.0 * x[0]);
    if (g != nullptr) *g = {0.2 * x[0] + 3.0 * std::sin(3.0 * x[0])};
    return v;
  };
  const MinimizeResult a = minimize(f, {5.0}, cfg);
  const MinimizeResult b = minimize(f, {5.0}, cfg);
  EXPECT_EQ(a.params, b.params);
  EXPECT_EQ(a.best_restart, b.best_restart);
  OptimizerConfig one = cfg;
  one.restarts = 1;
  EXPECT_LE(a.value, minimize(f, {5.0}, one).value);
}

TEST(Optimizer, NonFiniteCostRaisesWithParameters) {
  OptimizerConfig cfg;
  cfg.restarts = 1;
  auto f = [](const std::vector<double>&, std::vector<double>* g) {
    if (g != nullptr) *g = {0.0};
    return std::numeric_limits<double>::quiet_NaN();
  };
  try {
    minimize(f, {0.25}, cfg);
    FAIL() << "expected NumericError";
  } catch (const NumericError& e) {
    EXPECT_NE(std::string(e.what()).find("0.25"), std::string::npos);
  }
}

TEST(Optimizer, ConfigValidationAndJson) {
  OptimizerConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(cfg.validate(), PreconditionError);
  cfg.restarts = 3;
  cfg.gradient = GradientMode::ParameterShift;
  cfg.seed = 7;
  const nlohmann::json j = cfg;
  EXPECT_EQ(j.at("gradient"), "parameter-shift");
  const auto back = j.get<OptimizerConfig>();
  EXPECT_EQ(back.restarts, 3u);
  EXPECT_EQ(back.seed, 7u);
  EXPECT_EQ(back.gradient, GradientMode::ParameterShift);
  nlohmann::json bad = j;
  bad["gradient"] = "newton";
  EXPECT_THROW(bad.get<OptimizerConfig>(), PreconditionError);
}

}  // namespace
}  // namespace deepvqe
