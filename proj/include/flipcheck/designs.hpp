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
#include <optional>
#include <string>
#include <vector>

#include "flipcheck/bigint.hpp"
#include "flipcheck/errors.hpp"

namespace flipcheck {

/// The log-scale parameterization m' = m^c, r = a log m, l = b log m,
/// k_cap = log m' (base-2 logarithms rounded up), with c < a < b.
struct LogScale {
  std::uint64_t m, c, a, b;
  bool operator==(const LogScale&) const = default;
};

struct DesignParams {
  std::size_t l = 0;        // universe {1..l}
  std::size_t r = 0;        // set size
  std::size_t k_cap = 0;    // max pairwise intersection
  std::size_t m_prime = 0;  // number of sets
  std::optional<LogScale> origin;

  /// Throws InvalidDesign unless r <= l <= 64, k_cap < r and m_prime >= 1.
  /// Counting tolerates k_cap >= r, where the cap never binds.
  void validate(bool allow_loose_cap = false) const;
  /// Throws ConfigError unless c < a < b and m >= 2.
  static DesignParams from_log_scale(const LogScale& s);
  bool operator==(const DesignParams& o) const {
    return l == o.l && r == o.r && k_cap == o.k_cap && m_prime == o.m_prime;
  }
};

/// Rows are bitmasks over the universe: bit e-1 marks element e.
struct Design {
  DesignParams params;
  std::vector<std::uint64_t> rows;

  /// One line per row, e.g. "{1,2}".
  std::string to_string() const;
  bool operator==(const Design& o) const { return params == o.params && rows == o.rows; }
};

struct DesignVerdict {
  enum class Kind { Valid, Cardinality, Intersection, Shape };
  Kind kind = Kind::Valid;
  std::size_t i = 0, j = 0;
  std::size_t value = 0;  // offending cardinality or intersection size

  bool valid() const { return kind == Kind::Valid; }
  std::string describe() const;
};

/// Checks |T_i| = r and |T_i & T_j| <= k_cap; reports the first violation in
/// row order.
DesignVerdict verify_design(const Design& d);

struct BuildOptions {
  std::size_t restarts = 64;
  std::size_t attempts_per_row = 4096;
  std::size_t threads = 1;
  /// Deterministic backtracking fallback when C(l, r) is at most this.
  std::uint64_t exhaustive_limit = 2000;
  std::uint64_t exhaustive_nodes = 1'000'000;
};

/// Row-by-row randomized construction with restarts, then the exhaustive
/// fallback for tiny universes. Throws ConstructionFailed with the most rows
/// any attempt reached.
Design build_design_greedy(const DesignParams& p, std::uint64_t seed, const BuildOptions& opts = {});

/// Exact number of ordered valid designs (k_cap >= r is accepted here). `relabel`, when given, permutes the
/// universe before the rows are checked. Throws BudgetExceeded when
/// C(l, r)^m' exceeds budget.
BigInt count_designs_exhaustive(const DesignParams& p, std::uint64_t budget = 50'000'000,
                                const std::vector<std::size_t>* relabel = nullptr);

/// Big-endian u16 m', l, r, k_cap, then the m' x l matrix row-major, MSB first,
/// zero-padded to a byte.
std::vector<std::uint8_t> encode_design(const Design& d);
/// Throws MalformedEncoding on truncation, trailing bytes or nonzero padding.
Design decode_design(const std::vector<std::uint8_t>& bytes);
std::size_t encoded_bits(const DesignParams& p);

std::string to_hex(const std::vector<std::uint8_t>& bytes);
/// Throws MalformedEncoding.
std::vector<std::uint8_t> from_hex(const std::string& text);

}  // namespace flipcheck
