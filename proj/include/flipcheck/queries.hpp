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

#include "flipcheck/circuit.hpp"
#include "flipcheck/matrix.hpp"
#include "flipcheck/polynomial.hpp"

namespace flipcheck {

enum class QueryKind {
  PNonZero,
  PPermLeft,
  PPermRight,
  PDiagLeft,
  PDiagRight,
  SelfReduceBase,
  SelfReduce,
  ENonZero,
  EElem,
  EKGen,
  EPrimaryVanish,
  Normalize,
};

std::string_view query_kind_name(QueryKind k);

/// One identity instance. The circuit is evaluated at every point of S_q and
/// the values v_t are checked against the relation: either "v_0 != 0"
/// (nonzero tests) or sum_t coeffs[t] * v_t == rhs.
struct Query {
  QueryKind kind = QueryKind::PNonZero;
  /// Swap index for permutation queries, block size i for self-reduction.
  std::size_t param = 0;
  std::optional<GroupElement> group;
  std::vector<MatrixAssignment> points;
  bool nonzero = false;
  std::vector<BigInt> coeffs;
  BigInt rhs;

  /// Canonical one-line description (kind, parameters, relation, points).
  std::string key() const;
  bool operator==(const Query&) const = default;
};

enum class DetFactorMode { Literal, DetCorrected };

std::string_view det_mode_name(DetFactorMode m);
DetFactorMode parse_det_mode(std::string_view text);

struct QueryConfig {
  std::size_t count = 20;
  std::size_t nonzero_count = 3;
  /// Random entries come from [1, 2^sample_bits].
  std::size_t sample_bits = 62;
  bool normalize = true;
  DetFactorMode det_mode = DetFactorMode::DetCorrected;
};

/// Sample-box width for a circuit-size bound m: min(m^2, w).
std::size_t sample_bits_for(std::size_t size_bound, std::size_t max_bits);

/// Queries for property (P): nonzero, row/column swaps and row/column
/// diagonal scalings at random X, plus the normalization C(I) = 1 when enabled.
/// Sorted canonically.
std::vector<Query> gen_queries_P(std::size_t n, const QueryConfig& cfg, std::uint64_t seed);

/// Downward self-reduction queries: C_1(y) = y and
/// C_i(Y) = sum_j y_1j C_{i-1}(Y_j), with every C_i read off the n x n circuit
/// by the lower-right embedding.
std::vector<Query> gen_queries_selfreduce(std::size_t n, const QueryConfig& cfg, std::uint64_t seed);

/// Queries for property (E) on m x km block inputs.
std::vector<Query> gen_queries_E(std::size_t m, std::size_t k, const QueryConfig& cfg, std::uint64_t seed);

/// Sorts by key and removes duplicates.
void canonicalize(std::vector<Query>& qs);

/// n x n matrix with I_{n-i} in the upper-left corner and Y in the lower right.
MatrixAssignment embed_lower_right(const MatrixAssignment& y, std::size_t n);

struct RingConfig {
  enum class Kind { Integer, Modular } kind = Kind::Modular;
  std::size_t prime_bits = 61;
  std::size_t primes = 3;
  /// Exact re-check of failed nonzero tests when formal degree is at most this.
  std::uint64_t exact_recheck_degree = 4096;
};

struct Verdict {
  std::size_t index = 0;
  QueryKind kind = QueryKind::PNonZero;
  bool pass = true;
  /// On failure: the points of S_q and a description of both sides.
  std::vector<MatrixAssignment> witness;
  std::string detail;
};

struct RunResult {
  std::vector<Verdict> verdicts;
  bool accept = true;
  /// Number of circuit evaluations performed (per prime counted once).
  std::size_t evaluations = 0;
};

/// Evaluates every query. Modular rings use fresh primes per query derived
/// from (seed, query index). Throws ArityMismatch.
RunResult run_queries(const Circuit& c, const std::vector<Query>& qs, const RingConfig& ring,
                      std::uint64_t seed, std::size_t threads = 1);

struct VerifyConfig {
  QueryConfig queries;
  RingConfig ring;
  enum class Route { Symmetry, SelfReduce, Both } route = Route::Symmetry;
  std::size_t threads = 1;
};

struct VerifyReport {
  bool accept = false;
  std::vector<Query> queries;
  RunResult run;
  /// Upper bound on the probability that a wrong circuit passes one randomized
  /// test: (formal degree + number of rows) / |S|, capped at 1.
  double error_bound = 1.0;
  /// QUERY lines followed by ACCEPT or REJECT.
  std::string transcript;
};

VerifyReport verify_claims_perm(const Circuit& c, std::size_t n, const VerifyConfig& cfg, std::uint64_t seed);
VerifyReport verify_claims_efun(const Circuit& c, std::size_t m, std::size_t k, const VerifyConfig& cfg,
                                std::uint64_t seed);

std::string format_transcript(const std::vector<Query>& qs, const RunResult& r);

/// Deterministic variant of verify_claims_perm: each identity of (P) is
/// checked as a polynomial identity by evaluating on a grid whose side in
/// every variable exceeds that variable's degree, which decides it exactly.
/// The diagonal identities treat the scaling factors as extra variables.
struct ExhaustiveVerdict {
  bool accept = false;
  std::string failed;  // name of the first failing identity
};

ExhaustiveVerdict verify_claims_perm_exhaustive(const Circuit& c, std::size_t n, bool normalize,
                                                std::uint64_t grid_budget = 1u << 22);

/// Basis of the space of polynomials of degree <= n in the n^2 entries that
/// satisfy the row/column swap identities and the diagonal identities at
/// `diag_samples` sampled diagonals, by exact rational elimination.
std::vector<SparsePoly> perm_symmetry_nullspace(std::size_t n, std::size_t diag_samples, std::uint64_t seed);

}  // namespace flipcheck
