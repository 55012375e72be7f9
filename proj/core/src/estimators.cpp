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

#include "levyou/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "levyou/csv.hpp"
#include "levyou/error.hpp"

namespace levyou {

FilterSpec FilterSpec::exponent(double beta) {
  if (!(beta > 0.0 && beta < 0.5)) {
    throw std::invalid_argument("beta must lie in (0, 0.5), got " +
                                std::to_string(beta));
  }
  return FilterSpec(Mode::kExponent, beta);
}

FilterSpec FilterSpec::absolute(double v) {
  if (!(v > 0.0)) {
    throw std::invalid_argument("absolute threshold must be positive, got " +
                                std::to_string(v));
  }
  return FilterSpec(Mode::kAbsolute, v);
}

double FilterSpec::threshold(double dt) const noexcept {
  switch (mode_) {
    case Mode::kExponent:
      return std::pow(dt, parameter_);
    case Mode::kAbsolute:
      return parameter_;
    case Mode::kOff:
      break;
  }
  return std::numeric_limits<double>::infinity();
}

ObservedSeries::ObservedSeries(std::vector<double> t, std::vector<double> x)
    : t_(std::move(t)), x_(std::move(x)) {
  if (t_.size() != x_.size()) {
    throw std::invalid_argument("t and x must have equal length");
  }
  if (x_.size() < 3) {
    throw std::invalid_argument("series needs at least 3 observations");
  }
  for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
    const double spacing = t_[i + 1] - t_[i];
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
      throw std::invalid_argument("observation times must strictly increase (at index " +
                                  std::to_string(i + 1) + ")");
    }
    max_spacing_ = std::max(max_spacing_, spacing);
  }
  for (double value : x_) {
    if (!std::isfinite(value)) {
      throw std::invalid_argument("observations must be finite");
    }
  }
}

namespace {

// Shared kernel: increment(i) supplies the numerator increment, spacing(i)
// the time step, and only the numerator sees the filter.
template <typename Increment, typename Spacing>
EstimateResult filtered_ratio(const std::vector<double>& x,
                              std::size_t intervals, double threshold,
                              Increment increment, Spacing spacing) {
  EstimateResult result;
  result.threshold = threshold;
  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t i = 0; i < intervals; ++i) {
    const double xi = x[i];
    denominator += xi * xi * spacing(i);
    const double dx = increment(i);
    if (std::abs(dx) <= threshold) {
      numerator += xi * dx;
      ++result.kept;
    } else {
      ++result.filtered;
    }
  }
  if (!(denominator > 0.0)) {
    throw DegeneratePathError(
        "sum of X^2 dt vanished; the path is identically zero");
  }
  result.s_t = denominator;
  result.a_hat = result.kept == 0 ? 0.0 : -numerator / denominator;
  return result;
}

void require_intervals(std::size_t intervals) {
  if (intervals < 2) {
    throw std::invalid_argument("estimators need at least 2 intervals");
  }
}

}  // namespace

EstimateResult jump_filtered_mle(const SimulatedPath& path,
                                 const FilterSpec& filter) {
  const std::size_t n = path.x.empty() ? 0 : path.x.size() - 1;
  require_intervals(n);
  const double dt = path.grid.dt();
  const auto& x = path.x;
  return filtered_ratio(
      x, n, filter.threshold(dt), [&](std::size_t i) { return x[i + 1] - x[i]; },
      [dt](std::size_t) { return dt; });
}

EstimateResult jump_filtered_mle(const ObservedSeries& series,
                                 const FilterSpec& filter) {
  const std::size_t n = series.intervals();
  require_intervals(n);
  const auto& x = series.x();
  const auto& t = series.t();
  return filtered_ratio(
      x, n, filter.threshold(series.max_spacing()),
      [&](std::size_t i) { return x[i + 1] - x[i]; },
      [&](std::size_t i) { return t[i + 1] - t[i]; });
}

EstimateResult oracle_discretized_mle(const SimulatedPath& path) {
  const std::size_t n = path.x.empty() ? 0 : path.x.size() - 1;
  require_intervals(n);
  if (path.dj.size() != n) {
    throw std::invalid_argument("path carries no ground-truth decomposition");
  }
  const double dt = path.grid.dt();
  const auto continuous = continuous_part_increments(path);
  return filtered_ratio(
      path.x, n, std::numeric_limits<double>::infinity(),
      [&](std::size_t i) { return continuous[i]; },
      [dt](std::size_t) { return dt; });
}

EstimateResult least_squares(const SimulatedPath& path) {
  return jump_filtered_mle(path, FilterSpec::off());
}

EstimateResult least_squares(const ObservedSeries& series) {
  return jump_filtered_mle(series, FilterSpec::off());
}

double stationary_second_moment(const OuModel& model) noexcept {
  const auto& levy = model.levy();
  const double variance =
      levy.sigma_w() * levy.sigma_w() + jump_variance_rate(levy);
  const double mean = levy.mean_rate() / model.a();
  return variance / (2.0 * model.a()) + mean * mean;
}

namespace {

void require_volatility(const OuModel& model) {
  if (!(model.levy().sigma_w() > 0.0)) {
    throw UnsupportedModelError(
        "asymptotic variance needs a Gaussian component, sigma_w > 0");
  }
}

}  // namespace

double asymptotic_variance_mle(const OuModel& model) {
  require_volatility(model);
  const double s = model.levy().sigma_w();
  return s * s / stationary_second_moment(model);
}

double asymptotic_variance_mle_compound_poisson(double a, double sigma_w,
                                                double intensity,
                                                double height_std) {
  if (!(sigma_w > 0.0)) {
    throw UnsupportedModelError(
        "asymptotic variance needs a Gaussian component, sigma_w > 0");
  }
  const double s2 = sigma_w * sigma_w;
  return 2.0 * a * s2 / (s2 + intensity * height_std * height_std);
}

double asymptotic_variance_lse(const OuModel& model) {
  require_volatility(model);
  return asymptotic_variance_mle(model) +
         jump_variance_rate(model.levy()) / stationary_second_moment(model);
}

double studentized_statistic(const EstimateResult& result, double a_true,
                             double sigma_w) {
  if (!(result.s_t > 0.0)) {
    throw DegeneratePathError("studentization needs s_t > 0");
  }
  if (!(sigma_w > 0.0)) {
    throw std::invalid_argument("studentization needs sigma_w > 0");
  }
  return std::sqrt(result.s_t) / sigma_w * (result.a_hat - a_true);
}

JumpConfusion jump_detection_confusion(const SimulatedPath& path,
                                       const FilterSpec& filter) {
  if (!path.has_jump_counts()) {
    throw UnsupportedDiagnosticError(
        "jump counts are undefined for infinite-activity drivers");
  }
  const double v = filter.threshold(path.grid.dt());
  JumpConfusion confusion;
  for (std::size_t i = 0; i < path.jump_count.size(); ++i) {
    const bool kept = std::abs(path.x[i + 1] - path.x[i]) <= v;
    const bool jump = path.jump_count[i] > 0;
    if (jump) {
      ++(kept ? confusion.missed : confusion.correct_flag);
    } else {
      ++(kept ? confusion.correct_keep : confusion.false_flags);
    }
  }
  return confusion;
}

void write_estimate_csv_header(std::ostream& out) {
  out << "estimator,a_hat,kept,filtered,threshold,s_t\n";
}

void write_estimate_csv_row(std::ostream& out, std::string_view estimator,
                            const EstimateResult& result) {
  out << estimator << ',' << csv::format_double(result.a_hat) << ','
      << result.kept << ',' << result.filtered << ','
      << csv::format_double(result.threshold) << ','
      << csv::format_double(result.s_t) << '\n';
}

}  // namespace levyou
