// Copyright 2026 The levyou Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "levyou/levy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace levyou {

namespace {

void require_positive_dt(double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("dt must be positive and finite, got " +
                                std::to_string(dt));
  }
}

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) +
                                " must be positive and finite, got " +
                                std::to_string(value));
  }
}

struct JumpValidator {
  void operator()(const NoJumps&) const {}
  void operator()(const CompoundPoisson& cp) const {
    require_positive(cp.intensity, "intensity");
    require_positive(cp.height_std, "height_std");
  }
  void operator()(const GammaJumps& g) const {
    require_positive(g.c, "c");
    require_positive(g.rate, "rate");
  }
};

}  // namespace

LevyModel::LevyModel(double sigma_w, JumpSpec jumps)
    : sigma_w_(sigma_w), jumps_(jumps) {
  if (!(sigma_w >= 0.0) || !std::isfinite(sigma_w)) {
    throw std::invalid_argument("sigma_w must be nonnegative and finite, got " +
                                std::to_string(sigma_w));
  }
  std::visit(JumpValidator{}, jumps_);
}

std::optional<std::string_view> LevyModel::assumption_violation()
    const noexcept {
  if (is_infinite_activity()) {
    return std::string_view("assumption-violating: asymmetric jumps");
  }
  return std::nullopt;
}

double LevyModel::mean_rate() const noexcept {
  if (const auto* g = std::get_if<GammaJumps>(&jumps_)) return g->c / g->rate;
  return 0.0;
}

double sample_wiener_increment(RngStream& rng, double sigma_w, double dt) {
  require_positive_dt(dt);
  return sigma_w * std::sqrt(dt) * rng.normal();
}

JumpBatch sample_compound_poisson_increment(RngStream& rng, double intensity,
                                            double height_std, double dt) {
  require_positive_dt(dt);
  if (!(intensity >= 0.0) || !(height_std >= 0.0)) {
    throw std::invalid_argument(
        "intensity and height_std must be nonnegative");
  }
  JumpBatch batch;
  for_each_compound_poisson_event(
      rng, intensity, height_std, dt, [&](double offset, double height) {
        batch.events.push_back({offset, height});
        batch.total += height;
      });
  return batch;
}

double sample_gamma_johnk(RngStream& rng, double shape) {
  if (!(shape > 0.0 && shape < 1.0)) {
    throw std::invalid_argument("Johnk's algorithm needs shape in (0, 1)");
  }
  // X = U^{1/shape}, Y = V^{1/(1-shape)}; on X + Y <= 1 the ratio
  // X / (X + Y) is Beta(shape, 1 - shape), and Beta(shape, 1 - shape) times
  // an independent unit exponential is Gamma(shape, 1).
  for (;;) {
    const double log_x = std::log(rng.uniform_pos()) / shape;
    const double log_y = std::log(rng.uniform_pos()) / (1.0 - shape);
    const double hi = std::max(log_x, log_y);
    const double log_sum = hi + std::log1p(std::exp(std::min(log_x, log_y) - hi));
    if (log_sum <= 0.0) {
      return rng.exponential() * std::exp(log_x - log_sum);
    }
  }
}

double sample_gamma_increment(RngStream& rng, double c, double rate,
                              double dt) {
  require_positive_dt(dt);
  require_positive(c, "c");
  require_positive(rate, "rate");
  const double shape = c * dt;
  const double whole = std::floor(shape);
  const double fraction = shape - whole;
  double value = 0.0;
  for (double k = 0.0; k < whole; k += 1.0) value += rng.exponential();
  if (fraction > 0.0) value += sample_gamma_johnk(rng, fraction);
  return value / rate;
}

double jump_variance_rate(const LevyModel& model) noexcept {
  struct Rate {
    double operator()(const NoJumps&) const { return 0.0; }
    double operator()(const CompoundPoisson& cp) const {
      return cp.intensity * cp.height_std * cp.height_std;
    }
    double operator()(const GammaJumps& g) const {
      return g.c / (g.rate * g.rate);
    }
  };
  return std::visit(Rate{}, model.jumps());
}

}  // namespace levyou
