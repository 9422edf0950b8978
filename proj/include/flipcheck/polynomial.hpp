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
#include <vector>

#include "flipcheck/bigint.hpp"
#include "flipcheck/errors.hpp"

namespace flipcheck {

/// Exponent vector, one entry per variable.
using Monomial = std::vector<std::uint64_t>;

/// Sparse multivariate polynomial with integer coefficients. Terms are kept
/// in a std::map, so iteration order (lexicographic on exponent vectors) is
/// canonical and zero coefficients are never stored.
class SparsePoly {
 public:
  explicit SparsePoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static SparsePoly constant(std::size_t num_vars, const BigInt& c);
  static SparsePoly variable(std::size_t num_vars, std::size_t v);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t total_degree() const;

  /// Adds c * x^m. Removes the term if the coefficient cancels.
  void add_term(const Monomial& m, const BigInt& c);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator-() const;
  /// Throws TermBudgetExceeded if the product has more than max_terms terms
  /// or an exponent overflows.
  SparsePoly multiply(const SparsePoly& o, std::size_t max_terms = SIZE_MAX) const;
  SparsePoly operator*(const SparsePoly& o) const { return multiply(o); }

  BigInt evaluate(std::span<const BigInt> point) const;

  /// True iff *this == lambda * other for some nonzero rational lambda.
  bool is_nonzero_multiple_of(const SparsePoly& other) const;

  bool operator==(const SparsePoly& o) const { return num_vars_ == o.num_vars_ && terms_ == o.terms_; }

  /// Human-readable form, e.g. "x0*x3 + -2*x1^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::size_t num_vars_;
  std::map<Monomial, BigInt> terms_;
};

}  // namespace flipcheck
