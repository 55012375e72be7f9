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

#ifndef LEVYOU_STATS_HPP_
#define LEVYOU_STATS_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace levyou::stats {

double mean(std::span<const double> values);

/// Sample standard deviation with the N - 1 divisor; 0 for fewer than two
/// values.
double std_dev(std::span<const double> values);

double normal_cdf(double x, double variance = 1.0);

/// sup_x |F_N(x) - Phi(x / sqrt(variance))|.
double ks_statistic_normal(std::vector<double> samples, double variance);

/// sup_x |F_A(x) - F_B(x)|.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic 1%-level critical value of the one-sample KS statistic.
inline double ks_critical_1pct(std::size_t n) {
  return 1.63 / std::sqrt(static_cast<double>(n));
}

/// Asymptotic 1%-level critical value of the two-sample KS statistic.
double ks_two_sample_critical_1pct(std::size_t n, std::size_t m);

}  // namespace levyou::stats

#endif  // LEVYOU_STATS_HPP_
