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

#include "levyou/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "levyou/csv.hpp"
#include "levyou/error.hpp"
#include "levyou/rng.hpp"
#include "levyou/stats.hpp"

namespace levyou {

std::string_view estimator_name(EstimatorKind kind) noexcept {
  switch (kind) {
    case EstimatorKind::kFilteredMle:
      return "filtered_mle";
    case EstimatorKind::kOracleMle:
      return "oracle_mle";
    case EstimatorKind::kLeastSquares:
      return "lse";
  }
  return "unknown";
}

std::optional<EstimatorKind> parse_estimator_name(
    std::string_view name) noexcept {
  for (auto kind : {EstimatorKind::kFilteredMle, EstimatorKind::kOracleMle,
                    EstimatorKind::kLeastSquares}) {
    if (estimator_name(kind) == name) return kind;
  }
  return std::nullopt;
}

void McConfig::validate() const {
  if (replications == 0) {
    throw std::invalid_argument("replications must be >= 1");
  }
  if (estimators.empty()) {
    throw std::invalid_argument("estimator set must not be empty");
  }
  for (std::size_t i = 0; i < estimators.size(); ++i) {
    for (std::size_t j = i + 1; j < estimators.size(); ++j) {
      if (estimators[i] == estimators[j]) {
        throw std::invalid_argument("estimator listed twice: " +
                                    std::string(estimator_name(estimators[i])));
      }
    }
  }
}

const EstimatorSummary& McSummary::at(EstimatorKind kind) const {
  for (const auto& s : per_estimator) {
    if (s.kind == kind) return s;
  }
  throw std::out_of_range("estimator not part of the campaign: " +
                          std::string(estimator_name(kind)));
}

namespace {

EstimateResult apply_estimator(EstimatorKind kind, const SimulatedPath& path,
                               const FilterSpec& filter) {
  switch (kind) {
    case EstimatorKind::kFilteredMle:
      return jump_filtered_mle(path, filter);
    case EstimatorKind::kOracleMle:
      return oracle_discretized_mle(path);
    case EstimatorKind::kLeastSquares:
      return least_squares(path);
  }
  throw std::logic_error("unhandled estimator kind");
}

}  // namespace

McSummary run_campaign(const McConfig& config, unsigned workers) {
  config.validate();
  const std::size_t reps = config.replications;
  const std::size_t kinds = config.estimators.size();
  // results[r * kinds + k]
  std::vector<EstimateResult> results(reps * kinds);

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{kNone};
  std::mutex failure_mutex;
  std::string failure_message;

  auto work = [&] {
    for (;;) {
      const std::size_t r = next.fetch_add(1);
      if (r >= reps || r > first_failure.load()) return;
      try {
        RngStream rng(config.seed, r);
        const auto path =
            simulate_path(config.model, config.grid, rng, config.simulation);
        for (std::size_t k = 0; k < kinds; ++k) {
          results[r * kinds + k] =
              apply_estimator(config.estimators[k], path, config.filter);
        }
      } catch (const DegeneratePathError& e) {
        std::lock_guard lock(failure_mutex);
        if (r < first_failure.load()) {
          first_failure.store(r);
          failure_message = e.what();
        }
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, reps));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (first_failure.load() != kNone) {
    throw CampaignError(first_failure.load(), failure_message);
  }

  const double a = config.model.a();
  const double sigma = config.model.levy().sigma_w();
  const double root_t = std::sqrt(config.grid.horizon());

  McSummary summary{config, {}};
  for (std::size_t k = 0; k < kinds; ++k) {
    EstimatorSummary s;
    s.kind = config.estimators[k];
    s.estimates.resize(reps);
    s.filtered.resize(reps);
    s.standardized_errors.resize(reps);
    s.studentized_errors.resize(reps);
    double filtered_total = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
      const auto& result = results[r * kinds + k];
      s.estimates[r] = result.a_hat;
      s.filtered[r] = result.filtered;
      filtered_total += static_cast<double>(result.filtered);
      s.standardized_errors[r] = root_t * (result.a_hat - a);
      s.studentized_errors[r] =
          sigma > 0.0 ? studentized_statistic(result, a, sigma)
                      : std::numeric_limits<double>::quiet_NaN();
    }
    s.mean = stats::mean(s.estimates);
    s.std_dev = stats::std_dev(s.estimates);
    s.avg_filtered = filtered_total / static_cast<double>(reps);
    summary.per_estimator.push_back(std::move(s));
  }
  return summary;
}

std::vector<SweepRow> sweep_intensity(const McConfig& base,
                                      const std::vector<double>& intensities,
                                      unsigned workers) {
  const auto* cp = std::get_if<CompoundPoisson>(&base.model.levy().jumps());
  if (cp == nullptr) {
    throw std::invalid_argument(
        "intensity sweep needs a compound Poisson base model");
  }
  const double sigma = base.model.levy().sigma_w();
  std::vector<SweepRow> rows;
  rows.reserve(intensities.size());
  for (double lambda : intensities) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
      throw std::invalid_argument("intensities must be nonnegative, got " +
                                  std::to_string(lambda));
    }
    const JumpSpec jumps = lambda == 0.0
                               ? JumpSpec{NoJumps{}}
                               : JumpSpec{CompoundPoisson{lambda, cp->height_std}};
    McConfig config{OuModel(base.model.a(), base.model.x0(),
                            LevyModel(sigma, jumps)),
                    base.grid,
                    base.filter,
                    base.replications,
                    base.seed,
                    {EstimatorKind::kFilteredMle, EstimatorKind::kLeastSquares},
                    base.simulation};
    const auto summary = run_campaign(config, workers);
    const auto& mle = summary.at(EstimatorKind::kFilteredMle);
    const auto& lse = summary.at(EstimatorKind::kLeastSquares);
    rows.push_back({lambda, mle.mean, mle.std_dev, lse.mean, lse.std_dev,
                    asymptotic_variance_mle(config.model),
                    asymptotic_variance_lse(config.model)});
  }
  return rows;
}

NormalityCheck normality_check(const std::vector<double>& standardized_errors,
                               double variance) {
  if (standardized_errors.size() < 100) {
    throw std::invalid_argument("normality check needs at least 100 samples");
  }
  const double d = stats::ks_statistic_normal(standardized_errors, variance);
  const double critical = stats::ks_critical_1pct(standardized_errors.size());
  return {d, critical, d < critical};
}

NormalityCheck normality_check(const McSummary& summary, const OuModel& model) {
  return normality_check(
      summary.at(EstimatorKind::kFilteredMle).standardized_errors,
      asymptotic_variance_mle(model));
}

void write_summary_csv_header(std::ostream& out) {
  out << "estimator,n_reps,mean,std_dev,avg_filtered,seed\n";
}

void write_summary_csv_rows(std::ostream& out, const McSummary& summary) {
  for (const auto& s : summary.per_estimator) {
    out << estimator_name(s.kind) << ',' << summary.config.replications << ','
        << csv::format_double(s.mean) << ',' << csv::format_double(s.std_dev)
        << ',' << csv::format_double(s.avg_filtered) << ','
        << summary.config.seed << '\n';
  }
}

void write_raw_csv(std::ostream& out, const McSummary& summary) {
  out << "rep,estimator,a_hat,std_error,studentized_error\n";
  for (std::size_t r = 0; r < summary.config.replications; ++r) {
    for (const auto& s : summary.per_estimator) {
      out << r << ',' << estimator_name(s.kind) << ','
          << csv::format_double(s.estimates[r]) << ','
          << csv::format_double(s.standardized_errors[r]) << ','
          << csv::format_double(s.studentized_errors[r]) << '\n';
    }
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "lambda,mean_mle,std_mle,mean_lse,std_lse,avar_mle,avar_lse\n";
  for (const auto& row : rows) {
    out << csv::format_double(row.lambda) << ','
        << csv::format_double(row.mean_mle) << ','
        << csv::format_double(row.std_mle) << ','
        << csv::format_double(row.mean_lse) << ','
        << csv::format_double(row.std_lse) << ','
        << csv::format_double(row.avar_mle) << ','
        << csv::format_double(row.avar_lse) << '\n';
  }
}

}  // namespace levyou
