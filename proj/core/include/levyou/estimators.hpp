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

#ifndef LEVYOU_ESTIMATORS_HPP_
#define LEVYOU_ESTIMATORS_HPP_

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "levyou/ou.hpp"

namespace levyou {

/// Threshold exponent used for the published simulation tables.
inline constexpr double kDefaultBeta = 0.3;
/// Exponent balancing the two jump-detection error types when jump heights
/// have a bounded density.
inline constexpr double kCompromiseBeta = 1.0 / 3.0;

/// Cut-off v for the jump filter: increments with |dX| <= v are kept.
class FilterSpec {
 public:
  enum class Mode { kExponent, kAbsolute, kOff };

  /// v = dt^beta, beta in (0, 1/2).
  static FilterSpec exponent(double beta = kDefaultBeta);
  /// Fixed v > 0.
  static FilterSpec absolute(double v);
  /// v = +inf.
  static FilterSpec off() noexcept { return FilterSpec(Mode::kOff, 0.0); }

  Mode mode() const noexcept { return mode_; }
  /// beta for kExponent, v for kAbsolute, unused for kOff.
  double parameter() const noexcept { return parameter_; }

  double threshold(double dt) const noexcept;

  friend bool operator==(const FilterSpec&, const FilterSpec&) = default;

 private:
  FilterSpec(Mode mode, double parameter) : mode_(mode), parameter_(parameter) {}

  Mode mode_;
  double parameter_;
};

/// Externally observed series (t_i, X_{t_i}) with strictly increasing times.
class ObservedSeries {
 public:
  ObservedSeries(std::vector<double> t, std::vector<double> x);

  const std::vector<double>& t() const noexcept { return t_; }
  const std::vector<double>& x() const noexcept { return x_; }
  std::size_t intervals() const noexcept { return x_.size() - 1; }
  /// Largest spacing; the exponent filter resolves v from it.
  double max_spacing() const noexcept { return max_spacing_; }

 private:
  std::vector<double> t_;
  std::vector<double> x_;
  double max_spacing_ = 0.0;
};

struct EstimateResult {
  double a_hat = 0.0;
  std::size_t kept = 0;
  std::size_t filtered = 0;
  double threshold = 0.0;
  /// sum X_{t_i}^2 (t_{i+1} - t_i), the discretized int_0^T X_s^2 ds.
  double s_t = 0.0;

  friend bool operator==(const EstimateResult&,
                         const EstimateResult&) = default;
};

/// Jump-filtered discretized MLE
///
///   a_hat = - sum_i X_{t_i} dX_i 1{|dX_i| <= v} / sum_i X_{t_i}^2 dt_i.
///
/// Ties |dX_i| = v are kept. When every increment is filtered the result is
/// a_hat = 0 with kept = 0. Throws DegeneratePathError when the denominator
/// is zero.
EstimateResult jump_filtered_mle(const SimulatedPath& path,
                                 const FilterSpec& filter);
EstimateResult jump_filtered_mle(const ObservedSeries& series,
                                 const FilterSpec& filter);

/// The same ratio with dX_i replaced by the true continuous-part increment
/// dw[i] + dd[i]. filtered is 0 and threshold is +inf.
EstimateResult oracle_discretized_mle(const SimulatedPath& path);

/// Discretized least squares estimator: the unfiltered ratio.
EstimateResult least_squares(const SimulatedPath& path);
EstimateResult least_squares(const ObservedSeries& series);

/// E[X_inf^2] = Var(L_1) / (2a) + (E[L_1] / a)^2.
double stationary_second_moment(const OuModel& model) noexcept;

/// sigma_w^2 / E[X_inf^2]. Throws UnsupportedModelError for sigma_w = 0.
double asymptotic_variance_mle(const OuModel& model);

/// Closed form 2 a sigma_w^2 / (sigma_w^2 + lambda sigma_j^2) for Gaussian
/// volatility plus compound Poisson jumps; lambda = 0 is the pure Gaussian
/// case. Used to cross-check asymptotic_variance_mle.
double asymptotic_variance_mle_compound_poisson(double a, double sigma_w,
                                                double intensity,
                                                double height_std);

/// MLE variance plus the efficiency gap int x^2 mu(dx) / E[X_inf^2].
double asymptotic_variance_lse(const OuModel& model);

/// sqrt(s_t) / sigma_w * (a_hat - a_true), asymptotically N(0, 1).
double studentized_statistic(const EstimateResult& result, double a_true,
                             double sigma_w);

struct JumpConfusion {
  std::size_t missed = 0;        // jump interval kept
  std::size_t false_flags = 0;   // jump-free interval filtered
  std::size_t correct_keep = 0;  // jump-free interval kept
  std::size_t correct_flag = 0;  // jump interval filtered

  friend bool operator==(const JumpConfusion&, const JumpConfusion&) = default;
};

/// Cross-tabulates the filter decision against the true jump counts.
/// Throws UnsupportedDiagnosticError for infinite-activity paths.
JumpConfusion jump_detection_confusion(const SimulatedPath& path,
                                       const FilterSpec& filter);

/// Row of the estimate CSV `estimator,a_hat,kept,filtered,threshold,s_t`.
void write_estimate_csv_header(std::ostream& out);
void write_estimate_csv_row(std::ostream& out, std::string_view estimator,
                            const EstimateResult& result);

}  // namespace levyou

#endif  // LEVYOU_ESTIMATORS_HPP_
