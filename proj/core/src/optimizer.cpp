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

#include "deepvqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "deepvqe/errors.hpp"

namespace deepvqe {

void OptimizerConfig::validate() const {
  if (restarts < 1) throw PreconditionError("optimizer restart count must be at least 1");
  if (!(tolerance > 0.0)) throw PreconditionError("optimizer tolerance must be positive");
  if (!(gradient_tolerance > 0.0)) throw PreconditionError("gradient tolerance must be positive");
  if (!(fd_step > 0.0)) throw PreconditionError("finite-difference step must be positive");
  if (max_iterations < 1) throw PreconditionError("max_iterations must be at least 1");
}

namespace {

constexpr double kC1 = 1e-4;
constexpr double kC2 = 0.9;
constexpr int kMaxLineSearch = 40;

using Vec = Eigen::VectorXd;

std::vector<double> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

struct Trial {
  double alpha = 0.0;
  double f = 0.0;
  double slope = 0.0;
  Vec x;
  Vec g;
};

class Evaluator {
 public:
  explicit Evaluator(const Objective& f) : f_(f) {}

  Trial at(const Vec& x, double alpha = 0.0, const Vec* dir = nullptr) {
    Trial t;
    t.alpha = alpha;
    t.x = x;
    std::vector<double> xs = to_std(x);
    std::vector<double> g;
    t.f = f_(xs, &g);
    ++count_;
    if (!std::isfinite(t.f)) {
      std::ostringstream msg;
      msg << "cost is not finite (" << t.f << ") at params [";
      for (std::size_t i = 0; i < xs.size(); ++i) msg << (i ? ", " : "") << xs[i];
      msg << "]";
      throw NumericError(msg.str());
    }
    t.g = Eigen::Map<const Vec>(g.data(), static_cast<Eigen::Index>(g.size()));
    if (dir != nullptr) t.slope = t.g.dot(*dir);
    return t;
  }

  std::size_t count() const noexcept { return count_; }

 private:
  const Objective& f_;
  std::size_t count_ = 0;
};

// Strong-Wolfe line search along `dir` from `start` (slope must be negative).
Trial zoom(Evaluator& ev, const Trial& start, const Vec& dir, Trial lo, Trial hi) {
  for (int j = 0; j < kMaxLineSearch; ++j) {
    // Safeguarded quadratic interpolation from lo's value and slope.
    const double span = hi.alpha - lo.alpha;
    double a = lo.alpha + 0.5 * span;
    const double denom = 2.0 * (hi.f - lo.f - lo.slope * span);
    if (denom > 0.0) {
      const double cand = lo.alpha - lo.slope * span * span / denom;
      const double lo_edge = std::min(lo.alpha, hi.alpha) + 0.1 * std::abs(span);
      const double hi_edge = std::max(lo.alpha, hi.alpha) - 0.1 * std::abs(span);
      if (cand > lo_edge && cand < hi_edge) a = cand;
    }
    Trial cur = ev.at(start.x + a * dir, a, &dir);
    if (cur.f > start.f + kC1 * a * start.slope || cur.f >= lo.f) {
      hi = std::move(cur);
    } else {
      if (std::abs(cur.slope) <= -kC2 * start.slope) return cur;
      if (cur.slope * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
      lo = std::move(cur);
    }
    if (std::abs(hi.alpha - lo.alpha) < 1e-14 * std::max(1.0, std::abs(lo.alpha))) break;
  }
  return lo;
}

Trial line_search(Evaluator& ev, const Trial& start, const Vec& dir, double alpha0) {
  Trial prev = start;
  prev.alpha = 0.0;
  double a = alpha0;
  for (int i = 0; i < kMaxLineSearch; ++i) {
    Trial cur = ev.at(start.x + a * dir, a, &dir);
    if (cur.f > start.f + kC1 * a * start.slope || (i > 0 && cur.f >= prev.f)) {
      return zoom(ev, start, dir, prev, cur);
    }
    if (std::abs(cur.slope) <= -kC2 * start.slope) return cur;
    if (cur.slope >= 0.0) return zoom(ev, start, dir, cur, prev);
    prev = std::move(cur);
    a *= 2.0;
  }
  return prev;
}

struct RunResult {
  Trial best;
  std::size_t iterations = 0;
  bool converged = false;
};

RunResult bfgs(Evaluator& ev, const Vec& x0, const OptimizerConfig& cfg) {
  const auto n = x0.size();
  Trial cur = ev.at(x0);
  RunResult out;
  if (n == 0) {
    out.best = cur;
    out.converged = true;
    return out;
  }
  RealMatrix hinv = RealMatrix::Identity(n, n);
  bool fresh = true;
  int stalls = 0;
  for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
    out.iterations = it;
    if (cur.g.norm() < cfg.gradient_tolerance) {
      out.converged = true;
      break;
    }
    Vec dir = -hinv * cur.g;
    cur.slope = cur.g.dot(dir);
    if (!(cur.slope < 0.0)) {
      hinv.setIdentity();
      fresh = true;
      dir = -cur.g;
      cur.slope = -cur.g.squaredNorm();
    }
    const double alpha0 = fresh ? std::min(1.0, 1.0 / cur.g.lpNorm<Eigen::Infinity>()) : 1.0;
    Trial next = line_search(ev, cur, dir, alpha0);
    if (next.alpha == 0.0 || !(next.f <= cur.f)) {
      if (fresh) break;  // no progress even along steepest descent
      hinv.setIdentity();
      fresh = true;
      continue;
    }
    const Vec s = next.x - cur.x;
    const Vec y = next.g - cur.g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      if (fresh) hinv *= sy / y.squaredNorm();
      const double rho = 1.0 / sy;
      const Vec hy = hinv * y;
      // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T, expanded.
      hinv.noalias() -= rho * (s * hy.transpose() + hy * s.transpose());
      hinv.noalias() += (rho * rho * y.dot(hy) + rho) * (s * s.transpose());
      fresh = false;
    }
    const double decrease = cur.f - next.f;
    cur = std::move(next);
    stalls = decrease <= cfg.tolerance * std::max(1.0, std::abs(cur.f)) ? stalls + 1 : 0;
    if (stalls >= 3) {
      out.iterations = it + 1;
      out.converged = true;
      break;
    }
    out.iterations = it + 1;
  }
  if (!out.converged && cur.g.norm() < cfg.gradient_tolerance) out.converged = true;
  out.best = std::move(cur);
  return out;
}

}  // namespace

MinimizeResult minimize(const Objective& f, const std::vector<double>& init,
                        const OptimizerConfig& cfg) {
  cfg.validate();
  Evaluator ev(f);
  MinimizeResult result;
  bool have = false;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    Vec x0(static_cast<Eigen::Index>(init.size()));
    if (r == 0) {
      x0 = Eigen::Map<const Vec>(init.data(), x0.size());
    } else {
      std::mt19937_64 rng(mix_seed(cfg.seed, r));
      std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
      for (Eigen::Index i = 0; i < x0.size(); ++i) x0(i) = angle(rng);
    }
    RunResult run = bfgs(ev, x0, cfg);
    if (!have || run.best.f < result.value) {
      have = true;
      result.value = run.best.f;
      result.params = to_std(run.best.x);
      result.gradient_norm = run.best.g.norm();
      result.iterations = run.iterations;
      result.best_restart = r;
      result.converged = run.converged;
    }
  }
  result.evaluations = ev.count();
  return result;
}

MinimizeResult minimize(const std::function<double(const std::vector<double>&)>& cost,
                        const std::vector<double>& init, const OptimizerConfig& cfg) {
  const double h = cfg.fd_step;
  Objective f = [&cost, h](const std::vector<double>& x, std::vector<double>* grad) {
    const double v = cost(x);
    if (grad != nullptr && std::isfinite(v)) {
      grad->assign(x.size(), 0.0);
      std::vector<double> p = x;
      for (std::size_t k = 0; k < x.size(); ++k) {
        p[k] = x[k] + h;
        const double up = cost(p);
        p[k] = x[k] - h;
        const double down = cost(p);
        p[k] = x[k];
        (*grad)[k] = (up - down) / (2.0 * h);
      }
    }
    return v;
  };
  return minimize(f, init, cfg);
}

namespace {

const char* mode_name(GradientMode m) {
  switch (m) {
    case GradientMode::ParameterShift: return "parameter-shift";
    case GradientMode::FiniteDifference: return "finite-difference";
    case GradientMode::Adjoint: return "adjoint";
  }
  return "adjoint";
}

GradientMode parse_mode(const std::string& s) {
  if (s == "parameter-shift") return GradientMode::ParameterShift;
  if (s == "finite-difference") return GradientMode::FiniteDifference;
  if (s == "adjoint") return GradientMode::Adjoint;
  throw PreconditionError("unknown gradient mode '" + s + "'");
}

}  // namespace

void to_json(nlohmann::json& j, const OptimizerConfig& c) {
  j = {{"max_iterations", c.max_iterations}, {"gradient", mode_name(c.gradient)},
       {"fd_step", c.fd_step},               {"tolerance", c.tolerance},
       {"gradient_tolerance", c.gradient_tolerance},
       {"restarts", c.restarts},             {"seed", c.seed}};
}

void from_json(const nlohmann::json& j, OptimizerConfig& c) {
  OptimizerConfig d;
  d.max_iterations = j.value("max_iterations", d.max_iterations);
  d.gradient = parse_mode(j.value("gradient", std::string(mode_name(d.gradient))));
  d.fd_step = j.value("fd_step", d.fd_step);
  d.tolerance = j.value("tolerance", d.tolerance);
  d.gradient_tolerance = j.value("gradient_tolerance", d.gradient_tolerance);
  d.restarts = j.value("restarts", d.restarts);
  d.seed = j.value("seed", d.seed);
  d.validate();
  c = d;
}

}  // namespace deepvqe
