/*
 * Copyright (C) 2026 The flipcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <random>

#include "flipcheck/bigint.hpp"

namespace flipcheck {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream seed for (seed, stream, index). Used to split RNG
/// streams per query so that serial and parallel runs agree.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t index = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

/// Seeded generator with platform-independent bounded sampling (the standard
/// distributions are implementation-defined, which would break golden files).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi], lo <= hi.
  BigInt uniform(const BigInt& lo, const BigInt& hi);

  /// Uniform in [1, 2^bits].
  BigInt in_box(std::size_t bits);

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace flipcheck
