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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flipcheck/bigint.hpp"
#include "flipcheck/errors.hpp"
#include "flipcheck/polynomial.hpp"

namespace flipcheck {

enum class Op : std::uint8_t { Input, Const, Add, Sub, Mul };

/// One gate. For Input, `a` is the variable index; for Const, `value` holds
/// the constant; binary gates read nodes `a` and `b`.
struct Node {
  Op op = Op::Const;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  BigInt value;

  static Node input(std::uint32_t var) { return {Op::Input, var, 0, 0}; }
  static Node constant(BigInt v) { return {Op::Const, 0, 0, std::move(v)}; }
  static Node add(std::uint32_t a, std::uint32_t b) { return {Op::Add, a, b, 0}; }
  static Node sub(std::uint32_t a, std::uint32_t b) { return {Op::Sub, a, b, 0}; }
  static Node mul(std::uint32_t a, std::uint32_t b) { return {Op::Mul, a, b, 0}; }

  bool is_leaf() const { return op == Op::Input || op == Op::Const; }
  bool operator==(const Node& o) const {
    return op == o.op && a == o.a && b == o.b && value == o.value;
  }
};

/// How circuit size is measured: node count (arithmetic regime) or node count
/// plus the bit lengths of all constants (weak arithmetic regime).
enum class Regime { Size, BitSize };

std::string_view regime_name(Regime r);
Regime parse_regime(std::string_view text);

/// Arithmetic circuit over {+, -, *} with fan-in two, stored in topological
/// order: every gate references strictly earlier nodes.
class Circuit {
 public:
  /// Validates the DAG. Throws DagViolation on forward/self references and
  /// ConfigError on out-of-range variables or output.
  Circuit(std::size_t num_inputs, std::vector<Node> nodes, std::size_t output);

  /// Reads the line-based text format (see serialize()).
  static Circuit parse(std::string_view text);
  static Circuit load(const std::string& path);

  /// Canonical text: `ninputs n`, one `g<i> = ...` line per node with dense
  /// ids, then `output g<i>`.
  std::string serialize() const;

  std::size_t num_inputs() const { return num_inputs_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t output() const { return output_; }

  /// Number of nodes.
  std::size_t size() const { return nodes_.size(); }
  /// Number of nodes plus the total bit length of all constants.
  std::size_t bitsize() const;
  std::size_t measure(Regime r) const { return r == Regime::Size ? size() : bitsize(); }

  /// Upper bound on the degree of the computed polynomial (saturating).
  std::uint64_t formal_degree() const;
  /// Per-variable formal degree bounds (saturating).
  std::vector<std::uint64_t> variable_degrees() const;

  bool operator==(const Circuit& o) const {
    return num_inputs_ == o.num_inputs_ && output_ == o.output_ && nodes_ == o.nodes_;
  }

 private:
  std::size_t num_inputs_;
  std::vector<Node> nodes_;
  std::size_t output_;
};

/// Incremental construction helper for programmatic circuits.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::size_t num_inputs) : num_inputs_(num_inputs) {}

  std::uint32_t input(std::uint32_t var);
  std::uint32_t constant(const BigInt& v);
  std::uint32_t add(std::uint32_t a, std::uint32_t b) { return push(Node::add(a, b)); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) { return push(Node::sub(a, b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) { return push(Node::mul(a, b)); }

  Circuit build(std::uint32_t output) const { return Circuit(num_inputs_, nodes_, output); }

 private:
  std::uint32_t push(Node n);
  std::size_t num_inputs_;
  std::vector<Node> nodes_;
  std::map<std::uint32_t, std::uint32_t> inputs_;
};

/// Evaluates c at `point` over any ring exposing from_bigint/add/sub/mul.
/// Iterative over the topological order. Throws ArityMismatch.
template <class Ring>
typename Ring::value_type evaluate(const Circuit& c, std::span<const typename Ring::value_type> point,
                                   const Ring& ring) {
  if (point.size() != c.num_inputs()) {
    throw ArityMismatch("circuit expects " + std::to_string(c.num_inputs()) + " inputs, got " +
                        std::to_string(point.size()));
  }
  std::vector<typename Ring::value_type> vals;
  vals.reserve(c.size());
  for (const Node& n : c.nodes()) {
    switch (n.op) {
      case Op::Input: vals.push_back(point[n.a]); break;
      case Op::Const: vals.push_back(ring.from_bigint(n.value)); break;
      case Op::Add: vals.push_back(ring.add(vals[n.a], vals[n.b])); break;
      case Op::Sub: vals.push_back(ring.sub(vals[n.a], vals[n.b])); break;
      case Op::Mul: vals.push_back(ring.mul(vals[n.a], vals[n.b])); break;
    }
  }
  return vals[c.output()];
}

/// Exact evaluation over the integers.
BigInt evaluate(const Circuit& c, std::span<const BigInt> point);

/// Evaluation over F_p at the reduced point.
std::uint64_t evaluate_mod(const Circuit& c, std::span<const BigInt> point, std::uint64_t p);

/// Uniformly random prime with exactly `bits` bits (16 <= bits <= 62).
std::uint64_t random_prime(std::size_t bits, std::uint64_t seed);

struct ModularEvaluation {
  std::uint64_t residue;
  std::uint64_t prime;
};

/// Evaluates c modulo a seeded-random prime of `prime_bits` bits.
/// Deterministic given the seed. Throws ConfigError if prime_bits is outside
/// [16, 62].
ModularEvaluation evaluate_mod_random_prime(const Circuit& c, std::span<const BigInt> point,
                                            std::size_t prime_bits, std::uint64_t rng_seed);

/// Fixes the inputs listed in `bindings` to constants; the remaining inputs are
/// renumbered densely in increasing order. Throws IndexOutOfRange.
Circuit specialize(const Circuit& c, const std::map<std::size_t, BigInt>& bindings);

/// C_i from C_n for an n x n permanent circuit (inputs row-major): the i x i
/// matrix Y sits in the lower-right corner, the other diagonal entries are 1
/// and everything else is 0. The result takes Y row-major.
Circuit embed_lower_right(const Circuit& c, std::size_t n, std::size_t i);

/// Exact sparse expansion. Throws TermBudgetExceeded when any intermediate
/// polynomial exceeds max_terms.
SparsePoly expand_to_polynomial(const Circuit& c, std::size_t max_terms);

}  // namespace flipcheck
