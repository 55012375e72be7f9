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

#include <iostream>

#include <CLI11.hpp>
#include "commands.hpp"

namespace {

void add_common(CLI::App& cmd, levyou::cli::CommonOptions& common) {
  cmd.add_option("config", common.config_path, "Run configuration file")
      ->required();
  cmd.add_option("--out", common.out_path, "Output CSV path");
  cmd.add_option("--seed", common.seed, "Override mc.seed");
  cmd.add_option("--workers", common.workers,
                 "Cap on concurrent replications (0 = all cores)");
  cmd.add_flag("--print-config", common.print_config,
               "Print the canonical configuration and exit");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace levyou::cli;

  CLI::App app{"Simulation and drift estimation for Levy-driven OU processes"};
  app.require_subcommand(1);

  SimulateOptions simulate;
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate one path to CSV");
  add_common(*sim_cmd, simulate.common);
  sim_cmd->add_flag("--diagnostics", simulate.diagnostics,
                    "Write t,x,dw,dd,dj,jump_count");

  EstimateOptions estimate;
  auto* est_cmd = app.add_subcommand("estimate", "Estimate the drift of a path");
  add_common(*est_cmd, estimate.common);
  est_cmd->add_option("data", estimate.data_path, "CSV with header t,x");
  est_cmd->add_flag("--self-sim", estimate.self_sim,
                    "Simulate from the config, then estimate");
  est_cmd->add_option("--estimator", estimate.estimator,
                      "filtered_mle, oracle_mle, lse or all")
      ->capture_default_str();

  TableOptions table;
  auto* table_cmd =
      app.add_subcommand("table", "Monte Carlo summary per configuration row");
  add_common(*table_cmd, table.common);
  table_cmd->add_option("--raw", table.raw_path,
                        "Also write per-replication errors");

  CompareOptions compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Filtered MLE vs LSE intensity sweep");
  add_common(*compare_cmd, compare.common);
  compare_cmd->add_option("intensities", compare.intensities,
                          "Jump intensities to sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*sim_cmd) return cmd_simulate(simulate, std::cout, std::cerr);
  if (*est_cmd) return cmd_estimate(estimate, std::cout, std::cerr);
  if (*table_cmd) return cmd_table(table, std::cout, std::cerr);
  return cmd_compare(compare, std::cout, std::cerr);
}
