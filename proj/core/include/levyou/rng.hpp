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

#ifndef LEVYOU_RNG_HPP_
#define LEVYOU_RNG_HPP_

#include <array>
#include <cstdint>
#include <limits>

namespace levyou {

/// SplitMix64 finalizer (Steele, Lea & Flood). A bijection on 64-bit words
/// with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// Key of stream `stream_id` under `seed`:
///
///   key = mix64(seed ^ mix64(stream_id + kGoldenGamma))
///
/// For a fixed seed the map stream_id -> key is a bijection, so streams of
/// one campaign never share a key.
constexpr std::uint64_t derive_stream_key(std::uint64_t seed,
                                          std::uint64_t stream_id) noexcept {
  return mix64(seed ^ mix64(stream_id + kGoldenGamma));
}

/// Reproducible random stream identified by (seed, stream_id).
///
/// The engine is xoshiro256** whose 256-bit state is filled with four
/// consecutive SplitMix64 outputs started at derive_stream_key(seed,
/// stream_id). Variates are produced by fixed algorithms so sequences are
/// stable across platforms and standard library versions:
///   - uniform: top 53 bits of a 64-bit word scaled into [0, 1)
///   - normal: Marsaglia polar method; the second variate of each accepted
///     pair is cached and returned by the next call
///   - exponential: -log(1 - U)
///
/// Satisfies UniformRandomBitGenerator. Not thread-safe; give every worker
/// its own stream.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept { return next_u64(); }

  std::uint64_t next_u64() noexcept;

  /// Uniform on [0, 1).
  double uniform() noexcept;
  /// Uniform on (0, 1]; safe to take the logarithm of.
  double uniform_pos() noexcept { return 1.0 - uniform(); }
  double normal() noexcept;
  double exponential() noexcept;

  friend bool operator==(const RngStream&, const RngStream&) = default;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::array<std::uint64_t, 4> state_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace levyou

#endif  // LEVYOU_RNG_HPP_
