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

#ifndef LEVYOU_ERROR_HPP_
#define LEVYOU_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace levyou {

// Invalid parameters are reported with std::invalid_argument. The types
// below cover failures that depend on the data rather than the arguments.

/// The estimator denominator sum X_{t_i}^2 (t_{i+1} - t_i) vanished.
class DegeneratePathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The model lies outside the theory an operation relies on (e.g. sigma_w = 0
/// for the likelihood asymptotics).
class UnsupportedModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A diagnostic needs ground truth the path cannot carry (jump counts of an
/// infinite-activity driver).
class UnsupportedDiagnosticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Monte Carlo campaign aborted because one replication produced a
/// degenerate path.
class CampaignError : public DegeneratePathError {
 public:
  CampaignError(std::size_t replication, const std::string& what)
      : DegeneratePathError("replication " + std::to_string(replication) +
                            ": " + what),
        replication_(replication) {}

  std::size_t replication() const noexcept { return replication_; }

 private:
  std::size_t replication_;
};

}  // namespace levyou

#endif  // LEVYOU_ERROR_HPP_
