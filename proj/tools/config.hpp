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

#ifndef LEVYOU_TOOLS_CONFIG_HPP_
#define LEVYOU_TOOLS_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "levyou/monte_carlo.hpp"

namespace levyou::cli {

/// Parse or validation failure. what() reads "<field>: <message>", where
/// field is a dotted path such as `filter.beta` or `line 7` for syntax
/// errors.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The grid keys exactly as written; any two of T, n and dt. With T and dt,
/// n = round(T / dt) and the horizon becomes n * dt.
struct GridSpec {
  std::optional<double> horizon;
  std::optional<std::uint64_t> n;
  std::optional<double> dt;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Overrides of one `[row]` section, in file order.
using RowOverrides = std::vector<std::pair<std::string, std::string>>;

/// Parsed run configuration.
///
/// Grammar (one item per line, `#` starts a comment):
///
///   [section]
///   key = value
///
/// Sections: model, grid, filter, mc, and any number of `row` sections whose
/// keys are dotted paths (`model.lambda = 5`) overriding the base sections
/// for one table row. In a row, any grid key replaces the whole base grid,
/// and model.jump_family drops the base jump parameters.
struct RunConfig {
  OuModel model;
  GridSpec grid_spec;
  ObservationGrid grid;
  FilterSpec filter;
  SimulationOptions simulation;
  std::size_t replications;
  std::uint64_t seed;
  std::vector<EstimatorKind> estimators;
  std::vector<RowOverrides> rows;

  McConfig mc_config() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// Canonical text; parse_config(format_config(c)) == c.
std::string format_config(const RunConfig& config);

/// The base config with each row applied, or just the base when there are
/// no rows. Resolved configs carry no rows.
std::vector<RunConfig> resolve_rows(const RunConfig& config);

}  // namespace levyou::cli

#endif  // LEVYOU_TOOLS_CONFIG_HPP_
