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

#ifndef LEVYOU_CSV_HPP_
#define LEVYOU_CSV_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace levyou::csv {

/// Shortest-independent, locale-free rendering with 17 significant digits.
std::string format_double(double value);

/// Parses a full field as a double; nullopt on trailing garbage or empty
/// input. Accepts `inf`, `-inf` and `nan`.
std::optional<double> parse_double(std::string_view field);
std::optional<std::uint64_t> parse_u64(std::string_view field);
std::optional<std::int64_t> parse_i64(std::string_view field);

/// Splits on commas. No quoting: none of the formats carry text fields
/// with commas.
std::vector<std::string_view> split_fields(std::string_view line);

std::string_view trim(std::string_view text);

}  // namespace levyou::csv

#endif  // LEVYOU_CSV_HPP_
