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

// Acceptance suite. Each criterion prints its measurements followed by one
// `criterion N: PASS|FAIL` line; the exit status is nonzero if any selected
// criterion fails.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "levyou/estimators.hpp"
#include "levyou/levy.hpp"
#include "levyou/monte_carlo.hpp"
#include "levyou/ou.hpp"
#include "levyou/rng.hpp"
#include "levyou/stats.hpp"

namespace levyou {
namespace {

using K = EstimatorKind;

struct Context {
  std::uint64_t seed;
  unsigned workers;
};

// Collects individual checks of one criterion.
class Report {
 public:
  void check(bool ok, const std::string& what) {
    std::printf("  [%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
    pass_ = pass_ && ok;
  }
  void note(const std::string& what) { std::printf("  %s\n", what.c_str()); }
  bool pass() const { return pass_; }

 private:
  bool pass_ = true;
};

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

bool within_abs(double value, double target, double tol) {
  return std::abs(value - target) <= tol;
}

bool within_rel(double value, double target, double tol) {
  return std::abs(value - target) <= tol * std::abs(target);
}

OuModel poisson_model(double a, double lambda) {
  return OuModel(a, 0.0,
                 LevyModel(1.0, CompoundPoisson{lambda, std::sqrt(2.0)}));
}

McSummary campaign(const Context& ctx, const OuModel& model, std::size_t n,
                   double dt, std::size_t reps, std::uint64_t offset,
                   std::vector<K> kinds = {K::kFilteredMle}) {
  return run_campaign({model, ObservationGrid(n, dt), FilterSpec::exponent(0.3),
                       reps, ctx.seed + offset, std::move(kinds)},
                      ctx.workers);
}

struct TableRow {
  const char* label;
  OuModel model;
  std::size_t n;
  double dt;
  std::size_t reps;
  double mean;
  double mean_tol;
  double std_dev;
  double filtered;
};

void check_table_row(const Context& ctx, Report& report, const TableRow& row,
                     std::uint64_t offset) {
  const auto s = campaign(ctx, row.model, row.n, row.dt, row.reps, offset)
                     .at(K::kFilteredMle);
  report.check(within_abs(s.mean, row.mean, row.mean_tol),
               fmt("%s mean %.4f, target %.2f +- %.2f", row.label, s.mean,
                   row.mean, row.mean_tol));
  report.check(within_rel(s.std_dev, row.std_dev, 0.5),
               fmt("%s std %.4f, target %.2f +- 50%%", row.label, s.std_dev,
                   row.std_dev));
  report.check(within_rel(s.avg_filtered, row.filtered, 0.35),
               fmt("%s avg filtered %.2f, target %.1f +- 35%%", row.label,
                   s.avg_filtered, row.filtered));
}

bool finite_activity_table(const Context& ctx, Report& report) {
  check_table_row(ctx, report,
                  {"lambda=1 a=2:", poisson_model(2.0, 1.0), 2000, 0.01, 100,
                   2.0, 0.15, 0.2, 13.2},
                  1);
  check_table_row(ctx, report,
                  {"lambda=5 a=5:", poisson_model(5.0, 5.0), 2000, 0.01, 100,
                   4.8, 0.15, 0.2, 60.2},
                  2);
  return report.pass();
}

bool infinite_activity_table(const Context& ctx, Report& report) {
  const auto gamma = [](double a, double c) {
    return OuModel(a, 0.0, LevyModel(1.0, GammaJumps{c, 1.0}));
  };
  check_table_row(ctx, report,
                  {"c=0.5 a=2:", gamma(2.0, 0.5), 6667, 0.0015, 200, 2.0, 0.2,
                   0.3, 23.7},
                  3);
  check_table_row(ctx, report,
                  {"c=1 a=5:", gamma(5.0, 1.0), 6667, 0.0015, 200, 5.0, 0.2,
                   0.6, 17.1},
                  4);
  return report.pass();
}

bool efficiency_clt(const Context& ctx, Report& report) {
  const auto model = poisson_model(2.0, 1.0);
  report.note(fmt("target variance %.6f", asymptotic_variance_mle(model)));
  struct Run { const char* label; std::size_t n; double dt; };
  for (const auto& run : {Run{"T=70 dt=0.001:", 70000, 0.001},
                          Run{"T=30 dt=0.005 (smoke):", 6000, 0.005}}) {
    const auto s = campaign(ctx, model, run.n, run.dt, 500, 5);
    const auto check = normality_check(s, model);
    report.check(check.pass,
                 fmt("%s KS %.4f vs critical %.4f (mean %.4f)", run.label,
                     check.ks_statistic, check.critical_value,
                     s.at(K::kFilteredMle).mean));
  }
  return report.pass();
}

bool lse_gap(const Context& ctx, Report& report) {
  const auto s = campaign(ctx, poisson_model(2.0, 10.0), 4000, 0.005, 500, 6,
                          {K::kFilteredMle, K::kLeastSquares});
  const double mle = s.at(K::kFilteredMle).std_dev;
  const double lse = s.at(K::kLeastSquares).std_dev;
  const double ratio = lse / mle;
  report.check(ratio >= 3.2 && ratio <= 6.0,
               fmt("std lse %.4f / std mle %.4f = %.3f, target [3.2, 6.0]",
                   lse, mle, ratio));
  return report.pass();
}

bool exact_identities(const Context& ctx, Report& report) {
  const std::vector<OuModel> models{
      OuModel(2.0, 0.5, LevyModel(1.0)), poisson_model(2.0, 1.0),
      poisson_model(5.0, 10.0),
      OuModel(2.0, 0.0, LevyModel(1.0, GammaJumps{0.5, 1.0})),
      OuModel(5.0, 1.0, LevyModel(0.5, GammaJumps{1.0, 2.0}))};
  std::size_t paths = 0;
  std::size_t off_mismatch = 0;
  double worst_decomposition = 0.0;
  for (std::size_t m = 0; m < models.size(); ++m) {
    for (std::uint64_t r = 0; r < 40; ++r) {
      RngStream rng(ctx.seed + 7, m * 1000 + r);
      const auto path =
          simulate_path(models[m], ObservationGrid(2000, 0.005), rng);
      ++paths;
      off_mismatch +=
          !(jump_filtered_mle(path, FilterSpec::off()) == least_squares(path));
      for (std::size_t i = 0; i + 1 < path.x.size(); ++i) {
        const double dx = path.x[i + 1] - path.x[i];
        const double sum = path.dw[i] + path.dd[i] + path.dj[i];
        const double scale = std::max({std::abs(dx), std::abs(path.dw[i]),
                                       std::abs(path.dd[i]),
                                       std::abs(path.dj[i])});
        if (scale > 0.0) {
          worst_decomposition =
              std::max(worst_decomposition, std::abs(dx - sum) / scale);
        }
      }
    }
  }
  report.check(off_mismatch == 0,
               fmt("filter-off == lse on %zu of %zu paths",
                   paths - off_mismatch, paths));
  report.check(worst_decomposition <= 1e-10,
               fmt("worst relative decomposition error %.3e (limit 1e-10)",
                   worst_decomposition));
  double worst_avar = 0.0;
  for (double a : {0.5, 2.0, 5.0}) {
    for (double sigma : {0.3, 1.0, 2.0}) {
      for (double lambda : {0.5, 1.0, 5.0, 10.0}) {
        for (double height : {0.5, std::sqrt(2.0)}) {
          const OuModel model(a, 0.0,
                              LevyModel(sigma, CompoundPoisson{lambda, height}));
          const double closed =
              asymptotic_variance_mle_compound_poisson(a, sigma, lambda, height);
          const double general =
              sigma * sigma / stationary_second_moment(model);
          worst_avar = std::max(worst_avar, std::abs(general - closed) / closed);
        }
      }
    }
  }
  report.check(worst_avar <= 1e-12,
               fmt("worst relative avar cross-check error %.3e (limit 1e-12)",
                   worst_avar));
  return report.pass();
}

double sample_mean(const std::vector<double>& v) { return stats::mean(v); }
double sample_variance(const std::vector<double>& v) {
  const double sd = stats::std_dev(v);
  return sd * sd;
}

bool sampler_moments(const Context& ctx, Report& report) {
  constexpr std::size_t kDraws = 100000;
  std::vector<double> draws(kDraws);
  const auto fill = [&](std::uint64_t stream, auto&& draw) {
    RngStream rng(ctx.seed + 8, stream);
    for (auto& d : draws) d = draw(rng);
  };

  fill(0, [](RngStream& g) { return sample_wiener_increment(g, 1.0, 0.001); });
  report.check(within_rel(sample_variance(draws), 0.001, 0.05),
               fmt("wiener sigma=1 dt=0.001: var %.6g, target 0.001 +- 5%%",
                   sample_variance(draws)));
  fill(1, [](RngStream& g) { return sample_wiener_increment(g, 2.0, 0.25); });
  report.check(within_rel(sample_variance(draws), 1.0, 0.05),
               fmt("wiener sigma=2 dt=0.25: var %.5f, target 1 +- 5%%",
                   sample_variance(draws)));
  fill(2, [](RngStream& g) {
    return sample_compound_poisson_increment(g, 5.0, std::sqrt(2.0), 1.0).total;
  });
  report.check(within_rel(sample_variance(draws), 10.0, 0.05),
               fmt("compound poisson lambda=5 var_j=2 dt=1: var %.4f, target "
                   "10 +- 5%%",
                   sample_variance(draws)));
  fill(3, [](RngStream& g) { return sample_gamma_increment(g, 1.0, 1.0, 0.5); });
  report.check(within_rel(sample_mean(draws), 0.5, 0.03),
               fmt("gamma c=1 rate=1 dt=0.5: mean %.5f, target 0.5 +- 3%%",
                   sample_mean(draws)));
  fill(4, [](RngStream& g) { return sample_gamma_increment(g, 0.5, 2.0, 1.0); });
  report.check(within_rel(sample_variance(draws), 0.125, 0.05),
               fmt("gamma c=0.5 rate=2 dt=1: var %.5f, target 0.125 +- 5%%",
                   sample_variance(draws)));
  bool nonnegative = true;
  for (double d : draws) nonnegative = nonnegative && d >= 0.0;
  report.check(nonnegative, "gamma draws nonnegative");

  const double dt = 0.5;
  const LevyModel cp(1.0, CompoundPoisson{1.0, std::sqrt(2.0)});
  fill(5, [&](RngStream& g) {
    return sample_compound_poisson_increment(g, 1.0, std::sqrt(2.0), dt).total;
  });
  report.check(within_rel(sample_variance(draws) / dt, jump_variance_rate(cp),
                          0.05),
               fmt("compound poisson variance rate %.4f, target %.4f +- 5%%",
                   sample_variance(draws) / dt, jump_variance_rate(cp)));
  const LevyModel gamma(1.0, GammaJumps{1.0, 1.0});
  fill(6, [&](RngStream& g) { return sample_gamma_increment(g, 1.0, 1.0, dt); });
  report.check(within_rel(sample_variance(draws) / dt,
                          jump_variance_rate(gamma), 0.05),
               fmt("gamma variance rate %.4f, target %.4f +- 5%%",
                   sample_variance(draws) / dt, jump_variance_rate(gamma)));
  return report.pass();
}

bool consistency_trend(const Context& ctx, Report& report) {
  const auto model = poisson_model(2.0, 1.0);
  std::vector<double> rmse;
  for (double horizon : {10.0, 40.0, 160.0}) {
    const auto n = static_cast<std::size_t>(std::llround(horizon / 0.01));
    const auto s = campaign(ctx, model, n, 0.01, 100, 9).at(K::kFilteredMle);
    double sq = 0.0;
    for (double e : s.estimates) sq += (e - 2.0) * (e - 2.0);
    rmse.push_back(std::sqrt(sq / static_cast<double>(s.estimates.size())));
    report.note(fmt("T=%g: rmse %.4f (mean %.4f)", horizon, rmse.back(), s.mean));
  }
  for (std::size_t i = 0; i + 1 < rmse.size(); ++i) {
    const double factor = rmse[i] / rmse[i + 1];
    report.check(factor >= 1.5 && factor <= 2.7,
                 fmt("rmse factor %zu->%zu: %.3f, target [1.5, 2.7]", i, i + 1,
                     factor));
  }
  return report.pass();
}

bool jump_filter(const Context& ctx, Report& report) {
  const auto model = poisson_model(2.0, 1.0);
  const ObservationGrid grid(2000, 0.01);
  const auto filter = FilterSpec::exponent(0.3);
  double misclassified = 0.0;
  double flagged = 0.0;
  for (std::uint64_t r = 0; r < 100; ++r) {
    RngStream rng(ctx.seed + 10, r);
    const auto c = jump_detection_confusion(simulate_path(model, grid, rng), filter);
    misclassified +=
        static_cast<double>(c.missed + c.false_flags) / static_cast<double>(grid.n());
    flagged += static_cast<double>(c.correct_flag);
  }
  report.check(misclassified / 100.0 < 0.02,
               fmt("misclassified fraction %.4f, limit 0.02",
                   misclassified / 100.0));
  report.note(fmt("correctly flagged jumps per expected jump %.3f",
                  flagged / 100.0 / 20.0));
  return report.pass();
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool(const Context&, Report&)> run;
};

}  // namespace
}  // namespace levyou

int main(int argc, char** argv) {
  using namespace levyou;
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  Context ctx{20240611, 0};
  app.add_option("--criterion", selected, "Run only these criteria (1-8)")
      ->check(CLI::Range(1, 8));
  app.add_option("--seed", ctx.seed, "Base seed");
  app.add_option("--workers", ctx.workers, "Worker threads (0 = all cores)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "finite-activity table rows", finite_activity_table},
      {2, "infinite-activity table rows", infinite_activity_table},
      {3, "efficiency CLT", efficiency_clt},
      {4, "MLE vs LSE spread", lse_gap},
      {5, "exact identities", exact_identities},
      {6, "sampler moments", sampler_moments},
      {7, "consistency trend", consistency_trend},
      {8, "jump filter error rate", jump_filter},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    std::printf("criterion %d (%s)\n", c.id, c.name);
    Report report;
    const auto start = std::chrono::steady_clock::now();
    const bool pass = c.run(ctx, report);
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    std::printf("criterion %d: %s  %s (%.1f s)\n", c.id, pass ? "PASS" : "FAIL",
                c.name, elapsed.count());
    std::fflush(stdout);
    failures += !pass;
  }
  return failures == 0 ? 0 : 1;
}
