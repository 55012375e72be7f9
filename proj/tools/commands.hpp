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

#ifndef LEVYOU_TOOLS_COMMANDS_HPP_
#define LEVYOU_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace levyou::cli {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitDegenerate = 4;

struct CommonOptions {
  std::string config_path;
  std::optional<std::string> out_path;
  std::optional<std::uint64_t> seed;
  unsigned workers = 0;
  bool print_config = false;
};

struct SimulateOptions {
  CommonOptions common;
  bool diagnostics = false;
};

struct EstimateOptions {
  CommonOptions common;
  std::optional<std::string> data_path;
  bool self_sim = false;
  /// filtered_mle, oracle_mle, lse or all.
  std::string estimator = "filtered_mle";
};

struct TableOptions {
  CommonOptions common;
  std::optional<std::string> raw_path;
};

struct CompareOptions {
  CommonOptions common;
  std::vector<double> intensities;
};

// Each command writes its summary line to `out` and diagnostics to `err`,
// and returns the process exit code.
int cmd_simulate(const SimulateOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_estimate(const EstimateOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_table(const TableOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_compare(const CompareOptions& options, std::ostream& out,
                std::ostream& err);

}  // namespace levyou::cli

#endif  // LEVYOU_TOOLS_COMMANDS_HPP_
