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

#ifndef LEVYOU_LEVY_HPP_
#define LEVYOU_LEVY_HPP_

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "levyou/rng.hpp"

namespace levyou {

struct NoJumps {
  friend bool operator==(const NoJumps&, const NoJumps&) = default;
};

/// Compound Poisson jumps with centered Gaussian heights N(0, height_std^2).
struct CompoundPoisson {
  double intensity;   // jumps per unit time
  double height_std;

  friend bool operator==(const CompoundPoisson&,
                         const CompoundPoisson&) = default;
};

/// Gamma subordinator with Levy density c x^{-1} exp(-rate x) on x > 0.
struct GammaJumps {
  double c;
  double rate;

  friend bool operator==(const GammaJumps&, const GammaJumps&) = default;
};

using JumpSpec = std::variant<NoJumps, CompoundPoisson, GammaJumps>;

/// Driving Levy process: sigma_w * W plus an optional jump part, with zero
/// drift in the Levy-Khintchine triplet.
///
/// The constructor validates parameters and throws std::invalid_argument.
/// sigma_w = 0 without jumps is accepted and yields the deterministic
/// Langevin solution.
class LevyModel {
 public:
  explicit LevyModel(double sigma_w, JumpSpec jumps = NoJumps{});

  double sigma_w() const noexcept { return sigma_w_; }
  const JumpSpec& jumps() const noexcept { return jumps_; }

  bool has_jumps() const noexcept {
    return !std::holds_alternative<NoJumps>(jumps_);
  }
  bool is_infinite_activity() const noexcept {
    return std::holds_alternative<GammaJumps>(jumps_);
  }
  /// True for sigma_w = 0 without jumps.
  bool is_deterministic() const noexcept {
    return sigma_w_ == 0.0 && !has_jumps();
  }

  /// Blumenthal-Getoor index of the jump part. Both supported families
  /// have index 0, below the bound of 2 the estimator theory needs.
  double blumenthal_getoor_index() const noexcept { return 0.0; }

  /// Set when the model departs from the symmetric zero-drift jump
  /// assumptions while still being simulable.
  std::optional<std::string_view> assumption_violation() const noexcept;

  /// E[L_1]: c / rate for the gamma subordinator, 0 otherwise.
  double mean_rate() const noexcept;

  friend bool operator==(const LevyModel&, const LevyModel&) = default;

 private:
  double sigma_w_;
  JumpSpec jumps_;
};

struct JumpEvent {
  double offset;  // in [0, dt)
  double height;

  friend bool operator==(const JumpEvent&, const JumpEvent&) = default;
};

struct JumpBatch {
  double total = 0.0;
  std::vector<JumpEvent> events;
};

/// One draw from N(0, sigma_w^2 dt).
double sample_wiener_increment(RngStream& rng, double sigma_w, double dt);

/// Compound Poisson increment over [0, dt). Events are generated from
/// exponential inter-arrival times, so offsets come out sorted; their
/// unordered law is i.i.d. Uniform[0, dt). intensity = 0 is the no-jump
/// limit.
JumpBatch sample_compound_poisson_increment(RngStream& rng, double intensity,
                                            double height_std, double dt);

/// Visits each compound Poisson event without allocating. Consumes the
/// stream exactly like sample_compound_poisson_increment; the simulator
/// uses this form on its hot path.
template <typename Visitor>
void for_each_compound_poisson_event(RngStream& rng, double intensity,
                                     double height_std, double dt,
                                     Visitor&& visit) {
  if (intensity == 0.0) return;
  double offset = rng.exponential() / intensity;
  while (offset < dt) {
    visit(offset, height_std * rng.normal());
    offset += rng.exponential() / intensity;
  }
}

/// Gamma(shape = c * dt, rate) variate: unit exponentials for the integer
/// part of the shape, Johnk's rejection algorithm for the fractional part.
double sample_gamma_increment(RngStream& rng, double c, double rate,
                              double dt);

/// Gamma(shape, 1) for shape in (0, 1) by Johnk's algorithm, evaluated in
/// log space so shapes down to ~1e-300 neither underflow nor produce 0/0.
double sample_gamma_johnk(RngStream& rng, double shape);

/// Integral of x^2 against the Levy measure: 0, intensity * height_std^2, or
/// c / rate^2.
double jump_variance_rate(const LevyModel& model) noexcept;

}  // namespace levyou

#endif  // LEVYOU_LEVY_HPP_
