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

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "config.hpp"
#include "levyou/csv.hpp"
#include "levyou/error.hpp"
#include "levyou/estimators.hpp"
#include "levyou/monte_carlo.hpp"
#include "levyou/ou.hpp"
#include "levyou/rng.hpp"

namespace levyou::cli {

namespace {

// Input problems that are not config errors (bad data CSV, bad flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maps the error taxonomy onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DegeneratePathError& e) {
    err << "error: degenerate data: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const UnsupportedModelError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UnsupportedDiagnosticError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

RunConfig load(const CommonOptions& common) {
  auto config = load_config(common.config_path);
  if (common.seed) config.seed = *common.seed;
  return config;
}

void note_assumptions(const RunConfig& config, std::ostream& err) {
  if (const auto note = config.model.levy().assumption_violation()) {
    err << "note: " << *note << '\n';
  }
}

// Writes through `emit` into `path` and reports failures as IoError.
void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& emit) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path + " for writing");
  emit(file);
  file.flush();
  if (!file) throw IoError("write to " + path + " failed");
}

std::string require_out(const CommonOptions& common) {
  if (!common.out_path) throw InputError("--out is required");
  return *common.out_path;
}

ObservedSeries read_series(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read data file " + path);
  std::string line;
  if (!std::getline(in, line)) throw InputError(path + ": empty file");
  const auto header = csv::split_fields(csv::trim(line));
  if (header.size() < 2 || csv::trim(header[0]) != "t" ||
      csv::trim(header[1]) != "x") {
    throw InputError(path + ":1: expected header `t,x`");
  }
  std::vector<double> t;
  std::vector<double> x;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto trimmed = csv::trim(line);
    if (trimmed.empty()) continue;
    const auto fields = csv::split_fields(trimmed);
    const auto ti = fields.size() >= 2 ? csv::parse_double(fields[0])
                                       : std::nullopt;
    const auto xi = fields.size() >= 2 ? csv::parse_double(fields[1])
                                       : std::nullopt;
    if (!ti || !xi || !std::isfinite(*ti) || !std::isfinite(*xi)) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": malformed row `" + std::string(trimmed) + "`");
    }
    if (!t.empty() && !(*ti > t.back())) {
      throw InputError(path + ":" + std::to_string(line_no) +
                       ": times must strictly increase");
    }
    t.push_back(*ti);
    x.push_back(*xi);
  }
  if (t.size() < 3) {
    throw InputError(path + ": need at least 3 observations");
  }
  return ObservedSeries(std::move(t), std::move(x));
}

std::int64_t total_jumps(const SimulatedPath& path) {
  std::int64_t total = 0;
  for (auto count : path.jump_count) total += count;
  return total;
}

}  // namespace

int cmd_simulate(const SimulateOptions& options, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const auto config = load(options.common);
    if (options.common.print_config) {
      out << format_config(config);
      return kExitOk;
    }
    note_assumptions(config, err);
    const auto out_path = require_out(options.common);
    RngStream rng(config.seed, 0);
    const auto path =
        simulate_path(config.model, config.grid, rng, config.simulation);
    write_file(out_path, [&](std::ostream& file) {
      if (options.diagnostics) {
        write_diagnostics_csv(file, path);
      } else {
        write_path_csv(file, path);
      }
    });
    out << "n=" << config.grid.n()
        << " T=" << csv::format_double(config.grid.horizon()) << " jumps=";
    if (path.has_jump_counts()) {
      out << total_jumps(path);
    } else {
      out << "inf";
    }
    out << '\n';
    return kExitOk;
  });
}

int cmd_estimate(const EstimateOptions& options, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const auto config = load(options.common);
    if (options.common.print_config) {
      out << format_config(config);
      return kExitOk;
    }
    if (options.self_sim == options.data_path.has_value()) {
      throw InputError("give exactly one of a data file or --self-sim");
    }
    std::vector<EstimatorKind> kinds;
    if (options.estimator == "all") {
      kinds = {EstimatorKind::kFilteredMle, EstimatorKind::kOracleMle,
               EstimatorKind::kLeastSquares};
      if (!options.self_sim) kinds.erase(kinds.begin() + 1);
    } else if (const auto kind = parse_estimator_name(options.estimator)) {
      kinds = {*kind};
    } else {
      throw InputError("unknown estimator `" + options.estimator + "`");
    }
    if (!options.self_sim &&
        kinds.front() == EstimatorKind::kOracleMle) {
      throw InputError("oracle_mle needs ground truth; use --self-sim");
    }

    std::vector<EstimateResult> results;
    if (options.self_sim) {
      note_assumptions(config, err);
      RngStream rng(config.seed, 0);
      const auto path =
          simulate_path(config.model, config.grid, rng, config.simulation);
      for (auto kind : kinds) {
        switch (kind) {
          case EstimatorKind::kFilteredMle:
            results.push_back(jump_filtered_mle(path, config.filter));
            break;
          case EstimatorKind::kOracleMle:
            results.push_back(oracle_discretized_mle(path));
            break;
          case EstimatorKind::kLeastSquares:
            results.push_back(least_squares(path));
            break;
        }
      }
    } else {
      const auto series = read_series(*options.data_path);
      for (auto kind : kinds) {
        results.push_back(kind == EstimatorKind::kLeastSquares
                              ? least_squares(series)
                              : jump_filtered_mle(series, config.filter));
      }
    }

    if (options.common.out_path) {
      write_file(*options.common.out_path, [&](std::ostream& file) {
        write_estimate_csv_header(file);
        for (std::size_t i = 0; i < kinds.size(); ++i) {
          write_estimate_csv_row(file, estimator_name(kinds[i]), results[i]);
        }
      });
    }
    out << "a_hat=" << csv::format_double(results.front().a_hat)
        << " filtered=" << results.front().filtered << '\n';
    return kExitOk;
  });
}

int cmd_table(const TableOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto config = load(options.common);
    if (options.common.print_config) {
      out << format_config(config);
      return kExitOk;
    }
    const auto out_path = require_out(options.common);
    const auto rows = resolve_rows(config);
    std::vector<McSummary> summaries;
    summaries.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto row = rows[i];
      if (options.common.seed) row.seed = *options.common.seed;
      note_assumptions(row, err);
      summaries.push_back(run_campaign(row.mc_config(), options.common.workers));
      for (const auto& s : summaries.back().per_estimator) {
        out << "row " << i + 1 << ": " << estimator_name(s.kind)
            << " mean=" << csv::format_double(s.mean)
            << " std_dev=" << csv::format_double(s.std_dev)
            << " avg_filtered=" << csv::format_double(s.avg_filtered) << '\n';
      }
    }
    write_file(out_path, [&](std::ostream& file) {
      write_summary_csv_header(file);
      for (const auto& s : summaries) write_summary_csv_rows(file, s);
    });
    if (options.raw_path) {
      for (std::size_t i = 0; i < summaries.size(); ++i) {
        std::string path = *options.raw_path;
        if (summaries.size() > 1) {
          const auto dot = path.find_last_of('.');
          const auto slash = path.find_last_of('/');
          const std::string suffix = "_row" + std::to_string(i + 1);
          if (dot == std::string::npos ||
              (slash != std::string::npos && dot < slash)) {
            path += suffix;
          } else {
            path.insert(dot, suffix);
          }
        }
        write_file(path,
                   [&](std::ostream& file) { write_raw_csv(file, summaries[i]); });
      }
    }
    return kExitOk;
  });
}

int cmd_compare(const CompareOptions& options, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const auto config = load(options.common);
    if (options.common.print_config) {
      out << format_config(config);
      return kExitOk;
    }
    if (!std::holds_alternative<CompoundPoisson>(
            config.model.levy().jumps())) {
      throw ConfigError("model.jump_family",
                        "compare sweeps the compound Poisson intensity; "
                        "the base model must use compound_poisson");
    }
    if (options.intensities.empty()) {
      throw InputError("compare needs at least one intensity");
    }
    const auto out_path = require_out(options.common);
    const auto rows = sweep_intensity(config.mc_config(), options.intensities,
                                      options.common.workers);
    write_file(out_path,
               [&](std::ostream& file) { write_sweep_csv(file, rows); });
    for (const auto& row : rows) {
      out << "lambda=" << csv::format_double(row.lambda)
          << " std_mle=" << csv::format_double(row.std_mle)
          << " std_lse=" << csv::format_double(row.std_lse) << '\n';
    }
    return kExitOk;
  });
}

}  // namespace levyou::cli
