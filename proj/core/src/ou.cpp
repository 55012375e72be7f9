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

#include "levyou/ou.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "levyou/csv.hpp"

namespace levyou {

OuModel::OuModel(double a, double x0, LevyModel levy)
    : a_(a), x0_(x0), levy_(std::move(levy)) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument(
        "mean-reversion parameter a must be positive, got " +
        std::to_string(a));
  }
  if (!std::isfinite(x0)) {
    throw std::invalid_argument("x0 must be finite");
  }
}

ObservationGrid::ObservationGrid(std::size_t n, double dt) : n_(n), dt_(dt) {
  if (n < 2) {
    throw std::invalid_argument("grid needs n >= 2 intervals, got " +
                                std::to_string(n));
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("grid spacing must be positive, got " +
                                std::to_string(dt));
  }
}

namespace {

// Conditional variance of int_0^dt e^{-a(dt-s)} dW_s given W_dt, for unit
// volatility. The closed form cancels badly for small a*dt, where the series
// (h^3/12 - h^4/12 + 17 h^5/360) / a with h = a*dt takes over.
double conditional_ou_variance(double a, double dt) {
  const double h = a * dt;
  if (h < 1e-3) {
    return (h * h * h / 12.0 - h * h * h * h / 12.0 +
            17.0 * h * h * h * h * h / 360.0) /
           a;
  }
  const double var_integral = -std::expm1(-2.0 * h) / (2.0 * a);
  const double cov = -std::expm1(-h) / a;
  return std::max(0.0, var_integral - cov * cov / dt);
}

// One observation interval of the exact scheme. Holds the per-grid
// constants so the hot loop does no transcendental work beyond the draws.
class IntervalStepper {
 public:
  IntervalStepper(const OuModel& model, double dt, int gamma_substeps)
      : model_(model),
        dt_(dt),
        sigma_(model.levy().sigma_w()),
        decay_(std::exp(-model.a() * dt)),
        sqrt_dt_(std::sqrt(dt)),
        regression_(-std::expm1(-model.a() * dt) / (model.a() * dt)),
        residual_sd_(std::sqrt(conditional_ou_variance(model.a(), dt))) {
    if (const auto* g = std::get_if<GammaJumps>(&model.levy().jumps())) {
      if (gamma_substeps < 1) {
        throw std::invalid_argument("gamma_substeps must be >= 1");
      }
      gamma_ = *g;
      substep_ = dt / gamma_substeps;
      substep_weights_.resize(static_cast<std::size_t>(gamma_substeps));
      for (int k = 1; k <= gamma_substeps; ++k) {
        substep_weights_[static_cast<std::size_t>(k - 1)] =
            std::exp(-model.a() * (dt - k * substep_));
      }
    }
  }

  struct Step {
    double next;
    double dw;
    double dj;
    std::int64_t count;
  };

  Step advance(double x, RngStream& rng) const {
    Step step{decay_ * x, 0.0, 0.0, 0};
    if (sigma_ > 0.0) {
      const double w = sqrt_dt_ * rng.normal();
      const double integral = regression_ * w + residual_sd_ * rng.normal();
      step.next += sigma_ * integral;
      step.dw = sigma_ * w;
    }
    const double a = model_.a();
    const double dt = dt_;
    std::visit(
        [&](const auto& jumps) {
          using T = std::decay_t<decltype(jumps)>;
          if constexpr (std::is_same_v<T, CompoundPoisson>) {
            for_each_compound_poisson_event(
                rng, jumps.intensity, jumps.height_std, dt,
                [&](double offset, double height) {
                  step.next += height * std::exp(-a * (dt - offset));
                  step.dj += height;
                  ++step.count;
                });
          } else if constexpr (std::is_same_v<T, GammaJumps>) {
            for (double weight : substep_weights_) {
              const double g =
                  sample_gamma_increment(rng, gamma_.c, gamma_.rate, substep_);
              step.next += g * weight;
              step.dj += g;
            }
            step.count = kInfiniteActivity;
          }
        },
        model_.levy().jumps());
    return step;
  }

 private:
  const OuModel& model_;
  double dt_;
  double sigma_;
  double decay_;
  double sqrt_dt_;
  double regression_;   // Cov(integral, W) / Var(W)
  double residual_sd_;  // sd of integral given W
  GammaJumps gamma_{1.0, 1.0};
  double substep_ = 0.0;
  std::vector<double> substep_weights_;
};

}  // namespace

SimulatedPath simulate_path(const OuModel& model, const ObservationGrid& grid,
                            RngStream& rng, const SimulationOptions& options) {
  const IntervalStepper stepper(model, grid.dt(), options.gamma_substeps);
  const std::size_t n = grid.n();

  double x = model.x0();
  if (options.stationary_start) {
    const auto burn_in = static_cast<std::size_t>(
        std::ceil(10.0 / (model.a() * grid.dt())));
    for (std::size_t i = 0; i < burn_in; ++i) x = stepper.advance(x, rng).next;
  }

  SimulatedPath path{grid, {}, {}, {}, {}, {}};
  path.x.resize(n + 1);
  path.dw.resize(n);
  path.dd.resize(n);
  path.dj.resize(n);
  path.jump_count.resize(n);
  path.x[0] = x;
  for (std::size_t i = 0; i < n; ++i) {
    const auto step = stepper.advance(path.x[i], rng);
    path.x[i + 1] = step.next;
    path.dw[i] = step.dw;
    path.dj[i] = step.dj;
    path.dd[i] = (step.next - path.x[i]) - step.dw - step.dj;
    path.jump_count[i] = step.count;
  }
  return path;
}

std::vector<double> continuous_part_increments(const SimulatedPath& path) {
  std::vector<double> out(path.dw.size());
  // Equal to dw[i] + dd[i] by construction of dd; this form is exact when
  // dj[i] = 0.
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (path.x[i + 1] - path.x[i]) - path.dj[i];
  }
  return out;
}

void write_path_csv(std::ostream& out, const SimulatedPath& path) {
  out << "t,x\n";
  for (std::size_t i = 0; i < path.x.size(); ++i) {
    out << csv::format_double(path.grid.time(i)) << ','
        << csv::format_double(path.x[i]) << '\n';
  }
}

void write_diagnostics_csv(std::ostream& out, const SimulatedPath& path) {
  out << "t,x,dw,dd,dj,jump_count\n";
  const std::size_t n = path.dw.size();
  for (std::size_t i = 0; i < path.x.size(); ++i) {
    out << csv::format_double(path.grid.time(i)) << ','
        << csv::format_double(path.x[i]);
    if (i < n) {
      out << ',' << csv::format_double(path.dw[i]) << ','
          << csv::format_double(path.dd[i]) << ','
          << csv::format_double(path.dj[i]) << ',' << path.jump_count[i];
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
}

}  // namespace levyou
