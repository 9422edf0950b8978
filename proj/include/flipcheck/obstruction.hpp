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

#include "flipcheck/designs.hpp"
#include "flipcheck/pit.hpp"
#include "flipcheck/queries.hpp"

namespace flipcheck {

/// The polynomial a certificate obstructs: perm on n x n inputs or E on
/// m x km inputs.
struct Target {
  enum class Kind { Perm, Efun } kind = Kind::Perm;
  std::size_t n = 2;
  std::size_t m = 1, k = 2;

  Shape shape() const;
  std::size_t arity() const { return shape().size(); }
  std::uint64_t degree() const;
  BigInt value(const MatrixAssignment& x) const;
  /// "perm(2)" or "efun(2,2)"
  std::string serialize() const;
  static Target parse(std::string_view text);
  bool operator==(const Target&) const = default;
};

struct ObstructionConfig {
  Target target;
  ClassParams cls;
  /// Seeds enumerated per certificate: 2^seed_bits. Defaults to ceil(log2 m).
  std::optional<std::size_t> seed_bits;
  std::size_t queries_per_tape = 10;
  std::size_t nonzero_count = 3;
  std::size_t sample_bits = 62;
  bool normalize = true;
  DetFactorMode det_mode = DetFactorMode::DetCorrected;
  /// Seeds the committed truth table of the generator and the seed spreading.
  std::uint64_t generator_seed = 1;
  RingConfig ring;
  /// Label length allowed by F0. Defaults to 64 (N + m)^2 for N inputs.
  std::optional<std::uint64_t> f0_budget_bits;
  double derive_budget_seconds = 60.0;

  std::size_t effective_seed_bits() const;
  std::uint64_t effective_f0_budget() const;

  /// key=value lines in a fixed order; threads and timings are not part of it.
  std::string serialize() const;
  /// Reads key=value lines (blank lines and # comments skipped) on top of the
  /// defaults. Throws ConfigError on unknown keys.
  static ObstructionConfig parse(std::string_view text);
};

/// Log-scale design used when none is given: m=8, c=2, a=3, b=6, i.e. 64 sets
/// of size 9 in an 18-element universe with intersections at most 6.
DesignParams default_design_params();

/// Stand-in for the design-based generator: a committed random truth table T
/// on r bits, read at the seed restricted to each design row. Returns one bit
/// per row (the tape), packed little-endian into words.
std::vector<std::uint64_t> generator_tape(const Design& label, std::uint64_t generator_seed, std::uint64_t seed_index);

struct ObstructionCertificate {
  Design label;
  ObstructionConfig config;
  std::vector<Query> queries;           // Q(s), canonical order
  std::vector<MatrixAssignment> points;  // S(s), sorted and deduplicated
  std::size_t tapes = 0;
  double derive_seconds = 0;

  std::uint64_t label_bits() const { return encoded_bits(label.params); }
  /// FNV-1a over the query keys and points.
  std::uint64_t derived_digest() const;
  /// FLIPCERT file: version line, config hash, design hex, config lines and
  /// the digest of the derived sets.
  std::string serialize() const;
  /// Re-derives the sets. Throws StaleCertificate when the version, config
  /// hash or derived digest does not match, MalformedEncoding on bad syntax.
  static ObstructionCertificate parse(std::string_view text, std::size_t threads = 1);
};

/// Throws InvalidDesign when the label fails verify_design.
ObstructionCertificate derive_certificate(const Design& label, const ObstructionConfig& cfg, std::size_t threads = 1);

struct DecodeOptions {
  /// Reject circuits outside the certificate's class with ConfigError.
  bool enforce_class = true;
};

struct Counterexample {
  std::size_t query_index = 0;
  Query query;
  std::vector<MatrixAssignment> points;  // S_q of the first failing query
  /// Index into points where the circuit and the target differ exactly.
  std::optional<std::size_t> direct_witness;
  std::string detail;
};

/// First failing query of Q(s) in canonical order. Throws NoFailingQuery.
Counterexample decode_counterexample(const ObstructionCertificate& cert, const Circuit& c,
                                     const DecodeOptions& opts = {});

/// Exact re-check that the counterexample is genuine: either a direct
/// disagreement with the target or an identity that fails over the integers.
bool counterexample_is_genuine(const Circuit& c, const Target& target, const Counterexample& cx);

struct TrivialTable {
  struct Row {
    std::string circuit;  // canonical text
    MatrixAssignment point;
  };
  std::vector<Row> rows;
  std::size_t grid_side = 0;
};

/// A disagreement point for every class circuit, searched on the grid
/// {0..d}^N with d the larger of the two degrees, which decides equality.
/// Throws TargetComputable.
TrivialTable trivial_obstruction_table(const ClassParams& cls, const Target& target);

struct HarnessOptions {
  std::size_t threads = 1;
  std::size_t f2_labels = 32;
  std::uint64_t design_seed = 1;
  /// Skip the 2^{seed_bits} re-derivation check of F1(a).
  bool quick = false;
};

struct HarnessReport {
  struct Property {
    std::string name;
    bool ran = false;
    bool pass = false;
    std::string detail;
  };
  std::vector<Property> properties;  // F0, F1(a), F1(b), F2, F3, F4
  std::size_t class_size = 0;
  std::size_t obstruction_points = 0;
  std::size_t obstruction_queries = 0;
  std::size_t table_rows = 0;
  std::size_t max_counterexample_size = 0;
  std::size_t f2_disjoint = 0;

  const Property* find(std::string_view name) const;
  bool passed(std::string_view name) const;
  std::string format() const;
};

/// Runs F3 first; an invalid label stops the run with F3 failed and the rest
/// not run. F2 is a count only and is reported as passing when at least two
/// pairwise-disjoint valid certificates are found.
HarnessReport harness_F(const Design& label, const ObstructionConfig& cfg, const HarnessOptions& opts = {});

}  // namespace flipcheck
