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
#include <string_view>
#include <vector>

#include "flipcheck/circuit.hpp"

namespace flipcheck {

/// Finite circuit class: circuits over `n` inputs whose measure (size or
/// bitsize) is at most `m`, with constants from `alphabet`. Members are
/// circuits without dead or duplicate nodes, identified up to reordering of
/// the operands of add and mul.
struct ClassParams {
  std::size_t n = 1;
  std::size_t m = 1;
  std::vector<BigInt> alphabet = {1};
  Regime regime = Regime::Size;
  /// Keep only circuits whose expanded polynomial has at most this degree.
  std::optional<std::uint64_t> max_degree;
  /// Enumeration stops with BudgetExceeded beyond this many expressions.
  std::uint64_t budget = 5'000'000;

  /// `n=2 m=3 alphabet=-1,0,1 regime=size [max_degree=4]`
  std::string serialize() const;
  static ClassParams parse(std::string_view text);
  bool operator==(const ClassParams& o) const;
};

/// Every circuit of the class exactly once, sorted by (measure, canonical text).
std::vector<Circuit> enumerate_circuits(const ClassParams& cls);

/// Number of circuits enumerate_circuits would return.
std::size_t count_circuits(const ClassParams& cls);

struct PitResult {
  bool nonzero = false;
  std::vector<BigInt> witness;
  /// Exact value at the witness, or its residue when evaluated modularly.
  std::string value;
  std::size_t trials_run = 0;
  /// (deg / |S|)^trials, capped at 1; meaningful for the zero verdict.
  double error_bound = 1.0;
};

/// Randomized identity test at points drawn uniformly from [1, box]^n.
/// prime_bits = 0 evaluates exactly; otherwise modulo a fresh random prime per
/// trial (a nonzero residue is still a certain witness).
PitResult pit_random(const Circuit& c, std::size_t trials, std::uint64_t seed, const BigInt& box,
                     std::size_t prime_bits = 0);

using Point = std::vector<BigInt>;

struct HittingSet {
  ClassParams cls;
  std::vector<Point> points;

  std::size_t total_bits() const;
  std::string serialize() const;
  static HittingSet parse(std::string_view text);
};

struct PoolOptions {
  std::size_t pool_size = 64;
  /// Candidate coordinates lie in [1, box].
  BigInt box = 1024;
  std::uint64_t seed = 0;
};

/// Candidate points of family `family`: slice [family*pool_size,
/// (family+1)*pool_size) of a seeded bijective relabeling of [1, box]^n, so
/// distinct families never share a point. Throws PoolExhausted past the end.
std::vector<Point> candidate_pool(std::size_t n, std::size_t family, const PoolOptions& opts);

/// True iff c evaluates to a nonzero value at p (exact).
bool hits(const Circuit& c, const Point& p);

/// Circuits of the class that are not identically zero (by exact expansion).
std::vector<Circuit> nonzero_members(const std::vector<Circuit>& circuits);

/// Greedy cover over the candidates: repeatedly take the point that hits the
/// most circuits not yet hit, ties to the lowest index. Throws PoolExhausted.
std::vector<Point> greedy_cover(const std::vector<Circuit>& nonzero, const std::vector<Point>& candidates);

HittingSet build_hitting_set_greedy(const ClassParams& cls, const PoolOptions& opts, std::size_t family = 0);

struct HittingVerdict {
  bool valid = true;
  std::optional<Circuit> violator;
};

/// Exhaustive check: every nonzero circuit is nonzero at some point.
HittingVerdict verify_hitting_set(const std::vector<Point>& points, const std::vector<Circuit>& circuits);
HittingVerdict verify_hitting_set(const HittingSet& h);

struct FamilyReport {
  std::vector<HittingSet> sets;
  std::size_t achieved = 0;
};

/// Hitting sets over families 0, 1, ... until target_count are built or a
/// family's pool no longer suffices.
FamilyReport disjoint_hitting_families(const ClassParams& cls, std::size_t target_count, const PoolOptions& opts);

}  // namespace flipcheck
