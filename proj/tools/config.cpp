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

#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "levyou/csv.hpp"

namespace levyou::cli {

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

// Dotted path -> entry.
using EntryMap = std::map<std::string, Entry>;

struct RawDocument {
  EntryMap base;
  std::vector<RowOverrides> rows;
};

const std::set<std::string, std::less<>> kSections = {"model", "grid",
                                                      "filter", "mc"};

const std::set<std::string, std::less<>> kKnownKeys = {
    "model.a",          "model.x0",
    "model.sigma_w",    "model.jump_family",
    "model.lambda",     "model.height_std",
    "model.c",          "model.rate",
    "model.stationary_start", "model.gamma_substeps",
    "grid.T",           "grid.n",
    "grid.dt",          "filter.mode",
    "filter.beta",      "filter.v",
    "mc.replications",  "mc.seed",
    "mc.estimators"};

RawDocument read_document(std::string_view text) {
  RawDocument doc;
  std::string section;
  bool in_row = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = csv::trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string where = "line " + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where, "unterminated section header");
      section = std::string(csv::trim(line.substr(1, line.size() - 2)));
      in_row = section == "row";
      if (in_row) {
        doc.rows.emplace_back();
      } else if (!kSections.contains(section)) {
        throw ConfigError(where, "unknown section [" + section + "]");
      }
    } else {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError(where, "expected `key = value`");
      }
      const std::string key(csv::trim(line.substr(0, eq)));
      const std::string value(csv::trim(line.substr(eq + 1)));
      if (key.empty()) throw ConfigError(where, "empty key");
      if (section.empty()) throw ConfigError(where, "key outside of a section");
      if (in_row) {
        if (!kKnownKeys.contains(key)) {
          throw ConfigError("row." + key, "unknown key");
        }
        doc.rows.back().emplace_back(key, value);
      } else {
        const std::string path = section + "." + key;
        if (!kKnownKeys.contains(path)) throw ConfigError(path, "unknown key");
        if (doc.base.contains(path)) throw ConfigError(path, "duplicate key");
        doc.base[path] = {value, line_no};
      }
    }
    if (end == text.size()) break;
  }
  return doc;
}

// Short rendering for messages.
std::string show(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

class Reader {
 public:
  explicit Reader(const EntryMap& entries) : entries_(entries) {}

  bool has(const std::string& path) const { return entries_.contains(path); }

  std::optional<double> real(const std::string& path) const {
    const auto it = entries_.find(path);
    if (it == entries_.end()) return std::nullopt;
    const auto value = csv::parse_double(it->second.value);
    if (!value || !std::isfinite(*value)) {
      throw ConfigError(path, "expected a finite number, got `" +
                                  it->second.value + "`");
    }
    return value;
  }

  std::optional<std::uint64_t> count(const std::string& path) const {
    const auto it = entries_.find(path);
    if (it == entries_.end()) return std::nullopt;
    const auto value = csv::parse_u64(it->second.value);
    if (!value) {
      throw ConfigError(path, "expected a nonnegative integer, got `" +
                                  it->second.value + "`");
    }
    return value;
  }

  std::optional<bool> boolean(const std::string& path) const {
    const auto it = entries_.find(path);
    if (it == entries_.end()) return std::nullopt;
    if (it->second.value == "true") return true;
    if (it->second.value == "false") return false;
    throw ConfigError(path, "expected true or false, got `" +
                                it->second.value + "`");
  }

  std::optional<std::string> text(const std::string& path) const {
    const auto it = entries_.find(path);
    if (it == entries_.end()) return std::nullopt;
    return it->second.value;
  }

 private:
  const EntryMap& entries_;
};

double require_real(const Reader& r, const std::string& path) {
  const auto value = r.real(path);
  if (!value) throw ConfigError(path, "required");
  return *value;
}

void forbid(const Reader& r, const std::string& path, const std::string& why) {
  if (r.has(path)) throw ConfigError(path, why);
}

LevyModel build_levy(const Reader& r) {
  const double sigma_w = r.real("model.sigma_w").value_or(1.0);
  if (!(sigma_w >= 0.0)) {
    throw ConfigError("model.sigma_w", "must be >= 0, got " +
                                           show(sigma_w));
  }
  const std::string family = r.text("model.jump_family").value_or("none");
  JumpSpec jumps = NoJumps{};
  if (family == "none") {
    for (const char* key : {"model.lambda", "model.height_std", "model.c",
                            "model.rate"}) {
      forbid(r, key, "not valid for jump_family none");
    }
  } else if (family == "compound_poisson") {
    forbid(r, "model.c", "not valid for jump_family compound_poisson");
    forbid(r, "model.rate", "not valid for jump_family compound_poisson");
    const double lambda = require_real(r, "model.lambda");
    const double height_std = require_real(r, "model.height_std");
    if (!(lambda > 0.0)) {
      throw ConfigError("model.lambda",
                        "must be > 0, got " + show(lambda));
    }
    if (!(height_std > 0.0)) {
      throw ConfigError("model.height_std",
                        "must be > 0, got " + show(height_std));
    }
    jumps = CompoundPoisson{lambda, height_std};
  } else if (family == "gamma") {
    forbid(r, "model.lambda", "not valid for jump_family gamma");
    forbid(r, "model.height_std", "not valid for jump_family gamma");
    const double c = require_real(r, "model.c");
    const double rate = require_real(r, "model.rate");
    if (!(c > 0.0)) {
      throw ConfigError("model.c", "must be > 0, got " + show(c));
    }
    if (!(rate > 0.0)) {
      throw ConfigError("model.rate",
                        "must be > 0, got " + show(rate));
    }
    jumps = GammaJumps{c, rate};
  } else {
    throw ConfigError("model.jump_family",
                      "expected none, compound_poisson or gamma, got `" +
                          family + "`");
  }
  return LevyModel(sigma_w, jumps);
}

std::pair<GridSpec, ObservationGrid> build_grid(const Reader& r) {
  GridSpec spec{r.real("grid.T"), r.count("grid.n"), r.real("grid.dt")};
  const int given = static_cast<int>(spec.horizon.has_value()) +
                    static_cast<int>(spec.n.has_value()) +
                    static_cast<int>(spec.dt.has_value());
  if (given < 2) throw ConfigError("grid", "give two of T, n and dt");
  if (spec.horizon && !(*spec.horizon > 0.0)) {
    throw ConfigError("grid.T", "must be > 0, got " +
                                    show(*spec.horizon));
  }
  if (spec.dt && !(*spec.dt > 0.0)) {
    throw ConfigError("grid.dt",
                      "must be > 0, got " + show(*spec.dt));
  }
  if (spec.n && *spec.n < 2) {
    throw ConfigError("grid.n", "must be >= 2, got " + std::to_string(*spec.n));
  }
  std::uint64_t n = 0;
  double dt = 0.0;
  if (spec.n && spec.dt) {
    n = *spec.n;
    dt = *spec.dt;
    if (spec.horizon) {
      const double implied = static_cast<double>(n) * dt;
      if (std::abs(implied - *spec.horizon) > 1e-9 * *spec.horizon) {
        throw ConfigError("grid.T", "inconsistent with n * dt = " +
                                        show(implied));
      }
    }
  } else if (spec.n) {
    n = *spec.n;
    dt = *spec.horizon / static_cast<double>(n);
  } else {
    dt = *spec.dt;
    const double ratio = std::round(*spec.horizon / dt);
    if (ratio < 2.0) {
      throw ConfigError("grid", "T / dt must give at least 2 intervals");
    }
    n = static_cast<std::uint64_t>(ratio);
  }
  return {spec, ObservationGrid(n, dt)};
}

FilterSpec build_filter(const Reader& r) {
  const std::string mode = r.text("filter.mode").value_or("exponent");
  if (mode == "exponent") {
    forbid(r, "filter.v", "not valid for mode exponent");
    const double beta = r.real("filter.beta").value_or(kDefaultBeta);
    if (!(beta > 0.0 && beta < 0.5)) {
      throw ConfigError("filter.beta", "must lie in (0, 0.5), got " +
                                           show(beta));
    }
    return FilterSpec::exponent(beta);
  }
  if (mode == "absolute") {
    forbid(r, "filter.beta", "not valid for mode absolute");
    const double v = require_real(r, "filter.v");
    if (!(v > 0.0)) {
      throw ConfigError("filter.v", "must be > 0, got " + show(v));
    }
    return FilterSpec::absolute(v);
  }
  if (mode == "off") {
    forbid(r, "filter.beta", "not valid for mode off");
    forbid(r, "filter.v", "not valid for mode off");
    return FilterSpec::off();
  }
  throw ConfigError("filter.mode",
                    "expected exponent, absolute or off, got `" + mode + "`");
}

std::vector<EstimatorKind> build_estimators(const Reader& r) {
  const auto text = r.text("mc.estimators");
  if (!text) return {EstimatorKind::kFilteredMle};
  std::vector<EstimatorKind> out;
  for (auto field : csv::split_fields(*text)) {
    field = csv::trim(field);
    const auto kind = parse_estimator_name(field);
    if (!kind) {
      throw ConfigError("mc.estimators",
                        "unknown estimator `" + std::string(field) +
                            "` (expected filtered_mle, oracle_mle or lse)");
    }
    if (std::find(out.begin(), out.end(), *kind) != out.end()) {
      throw ConfigError("mc.estimators",
                        "duplicate estimator `" + std::string(field) + "`");
    }
    out.push_back(*kind);
  }
  return out;
}

RunConfig build(const EntryMap& entries) {
  const Reader r(entries);
  const double a = require_real(r, "model.a");
  if (!(a > 0.0)) {
    throw ConfigError("model.a", "must be > 0, got " + show(a));
  }
  const double x0 = r.real("model.x0").value_or(0.0);
  auto levy = build_levy(r);

  SimulationOptions simulation;
  simulation.stationary_start =
      r.boolean("model.stationary_start").value_or(false);
  const auto substeps = r.count("model.gamma_substeps").value_or(8);
  if (substeps < 1 || substeps > 1'000'000) {
    throw ConfigError("model.gamma_substeps",
                      "must lie in [1, 1000000], got " +
                          std::to_string(substeps));
  }
  simulation.gamma_substeps = static_cast<int>(substeps);

  auto [grid_spec, grid] = build_grid(r);
  const auto filter = build_filter(r);

  const auto replications = r.count("mc.replications").value_or(100);
  if (replications < 1) {
    throw ConfigError("mc.replications", "must be >= 1");
  }
  const auto seed = r.count("mc.seed").value_or(0);

  return RunConfig{OuModel(a, x0, std::move(levy)),
                   grid_spec,
                   grid,
                   filter,
                   simulation,
                   static_cast<std::size_t>(replications),
                   seed,
                   build_estimators(r),
                   {}};
}

EntryMap apply_row(const EntryMap& base, const RowOverrides& row,
                   std::size_t row_index) {
  EntryMap merged = base;
  const auto row_sets = [&](std::string_view prefix) {
    return std::any_of(row.begin(), row.end(), [&](const auto& kv) {
      return kv.first.starts_with(prefix);
    });
  };
  if (row_sets("grid.")) {
    std::erase_if(merged, [](const auto& kv) {
      return kv.first.starts_with("grid.");
    });
  }
  if (row_sets("model.jump_family")) {
    for (const char* key :
         {"model.lambda", "model.height_std", "model.c", "model.rate"}) {
      merged.erase(key);
    }
  }
  for (const auto& [key, value] : row) {
    merged[key] = {value, static_cast<int>(row_index)};
  }
  return merged;
}

std::string format_real(double value) { return csv::format_double(value); }

}  // namespace

McConfig RunConfig::mc_config() const {
  return McConfig{model,       grid, filter,     replications,
                  seed,        estimators, simulation};
}

RunConfig parse_config(std::string_view text) {
  const auto doc = read_document(text);
  auto config = build(doc.base);
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    try {
      (void)build(apply_row(doc.base, doc.rows[i], i));
    } catch (const ConfigError& e) {
      throw ConfigError("row " + std::to_string(i + 1) + ": " + e.field(),
                        std::string(e.what()).substr(e.field().size() + 2));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("row " + std::to_string(i + 1), e.what());
    }
  }
  config.rows = doc.rows;
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::vector<RunConfig> resolve_rows(const RunConfig& config) {
  if (config.rows.empty()) {
    RunConfig base = config;
    return {base};
  }
  // Rebuild the base entries from the canonical text so rows apply to the
  // same key set they were validated against.
  const auto doc = read_document(format_config(RunConfig{
      config.model, config.grid_spec, config.grid, config.filter,
      config.simulation, config.replications, config.seed, config.estimators,
      {}}));
  std::vector<RunConfig> out;
  out.reserve(config.rows.size());
  for (std::size_t i = 0; i < config.rows.size(); ++i) {
    out.push_back(build(apply_row(doc.base, config.rows[i], i)));
  }
  return out;
}

std::string format_config(const RunConfig& config) {
  std::ostringstream out;
  const auto& levy = config.model.levy();
  out << "[model]\n";
  out << "a = " << format_real(config.model.a()) << '\n';
  out << "x0 = " << format_real(config.model.x0()) << '\n';
  out << "sigma_w = " << format_real(levy.sigma_w()) << '\n';
  if (const auto* cp = std::get_if<CompoundPoisson>(&levy.jumps())) {
    out << "jump_family = compound_poisson\n";
    out << "lambda = " << format_real(cp->intensity) << '\n';
    out << "height_std = " << format_real(cp->height_std) << '\n';
  } else if (const auto* g = std::get_if<GammaJumps>(&levy.jumps())) {
    out << "jump_family = gamma\n";
    out << "c = " << format_real(g->c) << '\n';
    out << "rate = " << format_real(g->rate) << '\n';
  } else {
    out << "jump_family = none\n";
  }
  out << "stationary_start = "
      << (config.simulation.stationary_start ? "true" : "false") << '\n';
  out << "gamma_substeps = " << config.simulation.gamma_substeps << '\n';

  out << "\n[grid]\n";
  if (config.grid_spec.horizon) {
    out << "T = " << format_real(*config.grid_spec.horizon) << '\n';
  }
  if (config.grid_spec.n) out << "n = " << *config.grid_spec.n << '\n';
  if (config.grid_spec.dt) {
    out << "dt = " << format_real(*config.grid_spec.dt) << '\n';
  }

  out << "\n[filter]\n";
  switch (config.filter.mode()) {
    case FilterSpec::Mode::kExponent:
      out << "mode = exponent\nbeta = "
          << format_real(config.filter.parameter()) << '\n';
      break;
    case FilterSpec::Mode::kAbsolute:
      out << "mode = absolute\nv = " << format_real(config.filter.parameter())
          << '\n';
      break;
    case FilterSpec::Mode::kOff:
      out << "mode = off\n";
      break;
  }

  out << "\n[mc]\n";
  out << "replications = " << config.replications << '\n';
  out << "seed = " << config.seed << '\n';
  out << "estimators = ";
  for (std::size_t i = 0; i < config.estimators.size(); ++i) {
    if (i > 0) out << ',';
    out << estimator_name(config.estimators[i]);
  }
  out << '\n';

  for (const auto& row : config.rows) {
    out << "\n[row]\n";
    for (const auto& [key, value] : row) out << key << " = " << value << '\n';
  }
  return out.str();
}

}  // namespace levyou::cli
