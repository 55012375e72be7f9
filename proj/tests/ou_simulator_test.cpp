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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "levyou/ou.hpp"
#include "levyou/stats.hpp"
#include "test_support.hpp"

namespace levyou {
namespace {

const double kSqrt2 = std::sqrt(2.0);

OuModel gaussian(double a, double sigma = 1.0, double x0 = 0.0) {
  return OuModel(a, x0, LevyModel(sigma));
}

OuModel with_poisson(double a, double lambda, double sigma = 1.0) {
  return OuModel(a, 0.0, LevyModel(sigma, CompoundPoisson{lambda, kSqrt2}));
}

OuModel with_gamma(double a, double c, double sigma = 1.0) {
  return OuModel(a, 0.0, LevyModel(sigma, GammaJumps{c, 1.0}));
}

TEST(OuModel, RequiresPositiveMeanReversion) {
  EXPECT_THROW(OuModel(0.0, 0.0, LevyModel(1.0)), std::invalid_argument);
  EXPECT_THROW(OuModel(-1.0, 0.0, LevyModel(1.0)), std::invalid_argument);
}

TEST(ObservationGrid, Validates) {
  EXPECT_THROW(ObservationGrid(1, 0.1), std::invalid_argument);
  EXPECT_THROW(ObservationGrid(10, 0.0), std::invalid_argument);
  const ObservationGrid grid(2000, 0.01);
  EXPECT_DOUBLE_EQ(grid.horizon(), 20.0);
  EXPECT_DOUBLE_EQ(grid.time(3), 0.03);
}

TEST(SimulatePath, NoiselessLangevinDecay) {
  RngStream rng(1, 0);
  const auto path = simulate_path(gaussian(2.0, 0.0, 1.0),
                                  ObservationGrid(10, 0.5), rng);
  ASSERT_EQ(path.x.size(), 11u);
  for (std::size_t i = 0; i < path.x.size(); ++i) {
    EXPECT_NEAR(path.x[i], std::exp(-static_cast<double>(i)),
                1e-14 * std::exp(-static_cast<double>(i)));
  }
  for (auto c : path.jump_count) EXPECT_EQ(c, 0);
}

TEST(SimulatePath, ExactTransitionVariance) {
  const auto model = gaussian(2.0);
  const ObservationGrid grid(2, 1.0);
  std::vector<double> x1(100000);
  for (std::size_t r = 0; r < x1.size(); ++r) {
    RngStream rng(2, r);
    x1[r] = simulate_path(model, grid, rng).x[1];
  }
  const double expected = (1.0 - std::exp(-4.0)) / 4.0;
  EXPECT_NEAR(testing::sample_variance(x1) / expected, 1.0, 0.03);
}

TEST(SimulatePath, RawWienerIncrementHasVarianceDt) {
  // dw is drawn jointly with the OU integral and must keep its own law.
  const auto model = gaussian(2.0, 1.5);
  RngStream rng(3, 0);
  const auto path = simulate_path(model, ObservationGrid(100000, 0.2), rng);
  EXPECT_NEAR(testing::sample_variance(path.dw) / (1.5 * 1.5 * 0.2), 1.0, 0.02);
}

TEST(SimulatePath, JointGaussianCovariance) {
  // Cov(x[1], dw[0]) from x0 = 0 is sigma^2 (1 - e^{-a dt}) / a.
  const double a = 1.5;
  const double dt = 0.8;
  const auto model = gaussian(a);
  std::vector<double> x1(100000), w(100000);
  for (std::size_t r = 0; r < x1.size(); ++r) {
    RngStream rng(4, r);
    const auto path = simulate_path(model, ObservationGrid(2, dt), rng);
    x1[r] = path.x[1];
    w[r] = path.dw[0];
  }
  const double mx = testing::sample_mean(x1);
  const double mw = testing::sample_mean(w);
  double cov = 0.0;
  for (std::size_t r = 0; r < x1.size(); ++r) cov += (x1[r] - mx) * (w[r] - mw);
  cov /= static_cast<double>(x1.size() - 1);
  const double expected = (1.0 - std::exp(-a * dt)) / a;
  EXPECT_NEAR(cov / expected, 1.0, 0.02);
}

TEST(SimulatePath, StationarySecondMomentWithJumps) {
  // (sigma^2 + lambda sigma_j^2) / (2a) = 3/4; ten T = 500 paths, burn-in
  // of 10 time units discarded.
  const auto model = with_poisson(2.0, 1.0);
  const ObservationGrid grid(50000, 0.01);
  double sum = 0.0;
  std::size_t count = 0;
  for (std::uint64_t r = 0; r < 10; ++r) {
    RngStream rng(5, r);
    const auto path = simulate_path(model, grid, rng);
    for (std::size_t i = 1000; i < path.x.size(); ++i) {
      sum += path.x[i] * path.x[i];
      ++count;
    }
  }
  EXPECT_NEAR(sum / static_cast<double>(count) / 0.75, 1.0, 0.05);
}

TEST(SimulatePath, DecompositionIdentityHoldsForEveryFamily) {
  for (const auto& model :
       {gaussian(2.0), with_poisson(2.0, 5.0), with_gamma(5.0, 1.0),
        OuModel(3.0, 1.0, LevyModel(0.0, CompoundPoisson{2.0, 1.0}))}) {
    RngStream rng(6, 0);
    const auto path = simulate_path(model, ObservationGrid(5000, 0.01), rng);
    for (std::size_t i = 0; i + 1 < path.x.size(); ++i) {
      const double lhs = path.x[i + 1] - path.x[i];
      const double rhs = path.dw[i] + path.dd[i] + path.dj[i];
      const double scale = std::abs(path.x[i]) + std::abs(path.x[i + 1]) +
                           std::abs(path.dw[i]) + std::abs(path.dd[i]) +
                           std::abs(path.dj[i]);
      ASSERT_LE(std::abs(lhs - rhs), 1e-10 * std::max(scale, 1e-300));
    }
  }
}

TEST(SimulatePath, DriftPartIsMinusAIntegralOfX) {
  // Sum of dd against -a * trapezoid(X) on a fine pure-Gaussian grid.
  const double a = 2.0;
  RngStream rng(7, 0);
  const ObservationGrid grid(20000, 0.0005);
  const auto path = simulate_path(gaussian(a, 1.0, 1.0), grid, rng);
  double drift = 0.0;
  double trapezoid = 0.0;
  for (std::size_t i = 0; i < path.dd.size(); ++i) {
    drift += path.dd[i];
    trapezoid += 0.5 * (path.x[i] + path.x[i + 1]) * grid.dt();
  }
  EXPECT_NEAR(drift, -a * trapezoid, 0.01);
}

TEST(SimulatePath, JumpIncrementIsSumOfHeights) {
  // sigma_w = 0: between observations the state decays and jumps add their
  // raw heights to dj.
  const double a = 1.0;
  const OuModel model(a, 0.0, LevyModel(0.0, CompoundPoisson{2.0, 1.0}));
  RngStream sim(8, 0);
  const auto path = simulate_path(model, ObservationGrid(200, 0.1), sim);
  RngStream replay(8, 0);
  for (std::size_t i = 0; i < path.dj.size(); ++i) {
    const auto batch = sample_compound_poisson_increment(replay, 2.0, 1.0, 0.1);
    ASSERT_EQ(path.jump_count[i], static_cast<std::int64_t>(batch.events.size()));
    ASSERT_DOUBLE_EQ(path.dj[i], batch.total);
    double expected = std::exp(-a * 0.1) * path.x[i];
    for (const auto& e : batch.events) {
      expected += e.height * std::exp(-a * (0.1 - e.offset));
    }
    ASSERT_NEAR(path.x[i + 1], expected, 1e-12);
  }
}

TEST(SimulatePath, LagOneAutocorrelation) {
  const double a = 2.0;
  const double dt = 0.1;
  RngStream rng(9, 0);
  SimulationOptions options;
  options.stationary_start = true;
  const auto path =
      simulate_path(gaussian(a), ObservationGrid(10000, dt), rng, options);
  const double m = stats::mean(path.x);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < path.x.size(); ++i) {
    den += (path.x[i] - m) * (path.x[i] - m);
    if (i + 1 < path.x.size()) num += (path.x[i] - m) * (path.x[i + 1] - m);
  }
  EXPECT_NEAR(num / den, std::exp(-a * dt), 0.02);
}

TEST(SimulatePath, StationaryStartDrawsFromInvariantLaw) {
  SimulationOptions options;
  options.stationary_start = true;
  std::vector<double> x0(4000);
  for (std::size_t r = 0; r < x0.size(); ++r) {
    RngStream rng(10, r);
    x0[r] = simulate_path(gaussian(2.0, 1.0, 5.0), ObservationGrid(2, 0.05), rng,
                          options)
                .x[0];
  }
  // Start at 5 decays by e^{-20}; variance sigma^2 / (2a) = 0.25.
  EXPECT_NEAR(testing::sample_mean(x0), 0.0, 0.03);
  EXPECT_NEAR(testing::sample_variance(x0) / 0.25, 1.0, 0.08);
}

TEST(SimulatePath, PoissonJumpCountConcentrates) {
  RngStream rng(11, 0);
  const auto path =
      simulate_path(with_poisson(2.0, 5.0), ObservationGrid(10000, 0.01), rng);
  const auto total = std::accumulate(path.jump_count.begin(),
                                     path.jump_count.end(), std::int64_t{0});
  EXPECT_LT(std::abs(static_cast<double>(total) - 500.0), 3.0 * std::sqrt(500.0));
}

TEST(SimulatePath, GammaPathsUseInfiniteActivityMarker) {
  RngStream rng(12, 0);
  const auto path =
      simulate_path(with_gamma(2.0, 0.5), ObservationGrid(100, 0.01), rng);
  EXPECT_FALSE(path.has_jump_counts());
  for (auto c : path.jump_count) EXPECT_EQ(c, kInfiniteActivity);
  for (double j : path.dj) EXPECT_GE(j, 0.0);
}

TEST(SimulatePath, GammaRefinementConverges) {
  const auto model = with_gamma(2.0, 1.0);
  const ObservationGrid grid(50, 0.02);
  SimulationOptions coarse;
  coarse.gamma_substeps = 8;
  SimulationOptions fine;
  fine.gamma_substeps = 16;
  std::vector<double> end_coarse(10000), end_fine(10000);
  for (std::size_t r = 0; r < end_coarse.size(); ++r) {
    RngStream a(13, r);
    RngStream b(14, r);
    end_coarse[r] = simulate_path(model, grid, a, coarse).x.back();
    end_fine[r] = simulate_path(model, grid, b, fine).x.back();
  }
  EXPECT_LT(stats::ks_statistic_two_sample(end_coarse, end_fine),
            stats::ks_two_sample_critical_1pct(10000, 10000));
}

TEST(SimulatePath, ReproducibleForSameStream) {
  const auto model = with_gamma(2.0, 0.5);
  RngStream a(15, 3);
  RngStream b(15, 3);
  const auto p = simulate_path(model, ObservationGrid(500, 0.01), a);
  const auto q = simulate_path(model, ObservationGrid(500, 0.01), b);
  EXPECT_EQ(p.x, q.x);
  EXPECT_EQ(p.dw, q.dw);
  EXPECT_EQ(p.dj, q.dj);
}

TEST(ContinuousPart, PureGaussianEqualsObservedIncrements) {
  RngStream rng(16, 0);
  const auto path = simulate_path(gaussian(2.0), ObservationGrid(1000, 0.01), rng);
  const auto c = continuous_part_increments(path);
  for (std::size_t i = 0; i < c.size(); ++i) {
    ASSERT_EQ(c[i], path.x[i + 1] - path.x[i]);
  }
}

TEST(ContinuousPart, ZeroVolatilityEqualsDriftPart) {
  RngStream rng(16, 1);
  const auto path = simulate_path(
      OuModel(2.0, 1.0, LevyModel(0.0, CompoundPoisson{3.0, 1.0})),
      ObservationGrid(1000, 0.01), rng);
  const auto c = continuous_part_increments(path);
  for (std::size_t i = 0; i < c.size(); ++i) ASSERT_EQ(c[i], path.dd[i]);
}

TEST(ContinuousPart, Telescopes) {
  RngStream rng(16, 2);
  const auto path =
      simulate_path(with_poisson(2.0, 3.0), ObservationGrid(2000, 0.01), rng);
  const auto c = continuous_part_increments(path);
  const double sum = std::accumulate(c.begin(), c.end(), 0.0);
  const double jumps = std::accumulate(path.dj.begin(), path.dj.end(), 0.0);
  EXPECT_NEAR(sum, path.x.back() - path.x.front() - jumps, 1e-10);
}

TEST(PathCsv, HeadersAndPrecision) {
  RngStream rng(17, 0);
  const auto path =
      simulate_path(with_poisson(2.0, 1.0), ObservationGrid(3, 0.1), rng);
  std::ostringstream plain;
  write_path_csv(plain, path);
  std::istringstream lines(plain.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "t,x");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    const auto comma = line.find(',');
    ASSERT_NE(comma, std::string::npos);
    // 17 significant digits survive a round trip.
    const double x = std::stod(line.substr(comma + 1));
    EXPECT_EQ(x, path.x[static_cast<std::size_t>(rows - 1)]);
  }
  EXPECT_EQ(rows, 4);

  std::ostringstream diag;
  write_diagnostics_csv(diag, path);
  EXPECT_EQ(diag.str().substr(0, diag.str().find('\n')),
            "t,x,dw,dd,dj,jump_count");
  EXPECT_NE(diag.str().find(",,,,\n"), std::string::npos);
}

}  // namespace
}  // namespace levyou
