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

#ifndef LEVYOU_OU_HPP_
#define LEVYOU_OU_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "levyou/levy.hpp"
#include "levyou/rng.hpp"

namespace levyou {

/// dX_t = -a X_t dt + dL_t started at x0. Requires a > 0 so the process has
/// a stationary solution.
class OuModel {
 public:
  OuModel(double a, double x0, LevyModel levy);

  double a() const noexcept { return a_; }
  double x0() const noexcept { return x0_; }
  const LevyModel& levy() const noexcept { return levy_; }

  friend bool operator==(const OuModel&, const OuModel&) = default;

 private:
  double a_;
  double x0_;
  LevyModel levy_;
};

/// Equidistant grid t_i = i * dt, i = 0..n.
class ObservationGrid {
 public:
  ObservationGrid(std::size_t n, double dt);

  std::size_t n() const noexcept { return n_; }
  double dt() const noexcept { return dt_; }
  double horizon() const noexcept { return static_cast<double>(n_) * dt_; }
  double time(std::size_t i) const noexcept {
    return static_cast<double>(i) * dt_;
  }

  friend bool operator==(const ObservationGrid&,
                         const ObservationGrid&) = default;

 private:
  std::size_t n_;
  double dt_;
};

struct SimulationOptions {
  /// Sub-steps per observation interval for the gamma driver.
  int gamma_substeps = 8;
  /// Replace x0 by the end state of a burn-in of length 10 / a started at x0.
  bool stationary_start = false;

  friend bool operator==(const SimulationOptions&,
                         const SimulationOptions&) = default;
};

/// jump_count entry for infinite-activity drivers.
inline constexpr std::int64_t kInfiniteActivity = -1;

/// Observed path plus the exact per-interval decomposition
///   x[i+1] - x[i] = dw[i] + dd[i] + dj[i]
/// with dw = sigma_w (W_{t_{i+1}} - W_{t_i}), dd = -a * int X ds and dj the
/// jump increment of L. dw + dd is the increment of the continuous
/// martingale part X^c.
struct SimulatedPath {
  ObservationGrid grid;
  std::vector<double> x;
  std::vector<double> dw;
  std::vector<double> dd;
  std::vector<double> dj;
  std::vector<std::int64_t> jump_count;

  bool has_jump_counts() const noexcept {
    return jump_count.empty() || jump_count.front() != kInfiniteActivity;
  }
};

/// Exact simulation of the OU solution on `grid`.
///
/// Gaussian part: (int e^{-a(dt-s)} dW_s, W_dt) drawn jointly from their
/// bivariate normal law. Compound Poisson: each event (tau, z) adds
/// z e^{-a(dt - tau)} to the next state. Gamma: each interval is split into
/// gamma_substeps pieces whose increments are placed as atoms at the piece's
/// right endpoint.
///
/// Per interval the stream is consumed in the order: Gaussian pair, then
/// jumps.
SimulatedPath simulate_path(const OuModel& model, const ObservationGrid& grid,
                            RngStream& rng,
                            const SimulationOptions& options = {});

/// Increments of the continuous martingale part, dw[i] + dd[i], evaluated as
/// (x[i+1] - x[i]) - dj[i] so they coincide bit-for-bit with the observed
/// increments when an interval has no jumps.
std::vector<double> continuous_part_increments(const SimulatedPath& path);

/// CSV with header `t,x`.
void write_path_csv(std::ostream& out, const SimulatedPath& path);
/// CSV with header `t,x,dw,dd,dj,jump_count`; the last row has empty
/// interval columns. jump_count is -1 for infinite-activity drivers.
void write_diagnostics_csv(std::ostream& out, const SimulatedPath& path);

}  // namespace levyou

#endif  // LEVYOU_OU_HPP_
