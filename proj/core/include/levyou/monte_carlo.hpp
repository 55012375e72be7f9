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

#ifndef LEVYOU_MONTE_CARLO_HPP_
#define LEVYOU_MONTE_CARLO_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "levyou/estimators.hpp"
#include "levyou/ou.hpp"

namespace levyou {

enum class EstimatorKind { kFilteredMle, kOracleMle, kLeastSquares };

/// "filtered_mle", "oracle_mle" or "lse".
std::string_view estimator_name(EstimatorKind kind) noexcept;
std::optional<EstimatorKind> parse_estimator_name(std::string_view name) noexcept;

struct McConfig {
  OuModel model;
  ObservationGrid grid;
  FilterSpec filter = FilterSpec::exponent();
  std::size_t replications = 100;
  std::uint64_t seed = 0;
  std::vector<EstimatorKind> estimators{EstimatorKind::kFilteredMle};
  SimulationOptions simulation{};

  /// Throws std::invalid_argument on replications = 0, an empty or
  /// duplicated estimator set.
  void validate() const;
};

struct EstimatorSummary {
  EstimatorKind kind = EstimatorKind::kFilteredMle;
  double mean = 0.0;
  /// N - 1 divisor; 0 for a single replication.
  double std_dev = 0.0;
  double avg_filtered = 0.0;
  std::vector<double> estimates;
  std::vector<std::size_t> filtered;
  /// sqrt(T) (a_hat - a).
  std::vector<double> standardized_errors;
  /// sqrt(s_t) / sigma_w (a_hat - a); NaN when sigma_w = 0.
  std::vector<double> studentized_errors;
};

struct McSummary {
  McConfig config;
  std::vector<EstimatorSummary> per_estimator;

  /// Throws std::out_of_range when `kind` was not requested.
  const EstimatorSummary& at(EstimatorKind kind) const;
};

/// Runs config.replications independent replications. Replication r draws
/// from RngStream(seed, r); results are reduced in replication order, so the
/// summary is bit-identical for every worker count. workers = 0 uses the
/// hardware concurrency.
///
/// Throws CampaignError with the lowest failing replication index when a
/// replication produces a degenerate path.
McSummary run_campaign(const McConfig& config, unsigned workers = 0);

struct SweepRow {
  double lambda;
  double mean_mle;
  double std_mle;
  double mean_lse;
  double std_lse;
  double avar_mle;
  double avar_lse;
};

/// One filtered-MLE vs LSE campaign per intensity, all sharing the base
/// seed. The base model must carry compound Poisson jumps; intensity 0
/// switches the jumps off.
std::vector<SweepRow> sweep_intensity(const McConfig& base,
                                      const std::vector<double>& intensities,
                                      unsigned workers = 0);

struct NormalityCheck {
  double ks_statistic;
  double critical_value;
  bool pass;
};

/// One-sample KS test of the filtered-MLE standardized errors against
/// N(0, asymptotic_variance_mle(model)) at the 1% level. Needs at least 100
/// replications.
NormalityCheck normality_check(const McSummary& summary, const OuModel& model);
/// Same test on an explicit sample.
NormalityCheck normality_check(const std::vector<double>& standardized_errors,
                               double variance);

void write_summary_csv_header(std::ostream& out);
void write_summary_csv_rows(std::ostream& out, const McSummary& summary);
void write_raw_csv(std::ostream& out, const McSummary& summary);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace levyou

#endif  // LEVYOU_MONTE_CARLO_HPP_
