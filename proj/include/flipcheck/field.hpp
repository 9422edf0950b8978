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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flipcheck/bigint.hpp"
#include "flipcheck/errors.hpp"
#include "flipcheck/rng.hpp"

namespace flipcheck {

/// The ring of integers, evaluated exactly.
struct IntegerRing {
  using value_type = BigInt;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_bigint(const BigInt& x) const { return x; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  /// Exact division; b must divide a.
  value_type div_exact(const value_type& a, const value_type& b) const;
  std::string to_string(const value_type& a) const { return a.get_str(); }
};

/// F_q for a prime q < 2^63. Residues are kept in [0, q-1].
class PrimeField {
 public:
  using value_type = std::uint64_t;

  /// Throws NotPrime unless q is prime.
  explicit PrimeField(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % q_; }
  value_type from_bigint(const BigInt& x) const { return mod_u64(x, q_); }
  value_type from_int(std::int64_t x) const;
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + q_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : q_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % q_);
  }
  value_type pow(value_type a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  value_type inv(value_type a) const;
  value_type div_exact(value_type a, value_type b) const { return mul(a, inv(b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string to_string(value_type a) const { return std::to_string(a); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t q_;
};

/// Dense polynomial over F_q, constant term first.
using FqPoly = std::vector<std::uint64_t>;

/// Ben-Or irreducibility test for a monic polynomial of degree >= 1.
bool is_irreducible(const PrimeField& fq, const FqPoly& f);

/// First monic irreducible polynomial of degree l, in the order where the
/// coefficient vector (f_0, ..., f_{l-1}) is read as a base-q number with f_0
/// least significant.
FqPoly find_irreducible(const PrimeField& fq, std::size_t l);

/// Square matrix over F_q, row-major rows.
using FqMatrix = std::vector<std::vector<std::uint64_t>>;

std::uint64_t determinant(const PrimeField& fq, FqMatrix a);
std::optional<FqMatrix> invert(const PrimeField& fq, const FqMatrix& a);

/// Element of F_{q^l}, stored as its coordinates in the power basis
/// {1, t, ..., t^{l-1}} of F_q[t]/(f).
struct ExtFieldElement {
  std::vector<std::uint64_t> coeffs;
  bool operator==(const ExtFieldElement&) const = default;
};

/// F_{q^l} = F_q[t]/(f) with a fixed basis B over F_q (the power basis unless
/// replaced by with_basis) and the trace-form machinery built on it.
///
/// Immutable after construction; safe to share across threads.
class ExtField {
 public:
  using value_type = ExtFieldElement;

  /// Searches for the modulus with find_irreducible.
  ExtField(std::uint64_t q, std::size_t l);
  /// Throws NotIrreducible unless modulus is monic irreducible of degree >= 1.
  ExtField(std::uint64_t q, FqPoly modulus);

  /// Reads `q l f_0 f_1 ... f_l`.
  static ExtField parse(std::string_view text);
  std::string serialize() const;

  const PrimeField& base() const { return fq_; }
  std::size_t degree() const { return l_; }
  const FqPoly& modulus() const { return f_; }
  BigInt order() const;

  /// Same field with basis B replaced. Throws ConfigError if `basis` is not
  /// a basis of F_{q^l} over F_q.
  ExtField with_basis(std::vector<ExtFieldElement> basis) const;
  const std::vector<ExtFieldElement>& basis() const { return basis_; }

  value_type zero() const;
  value_type one() const;
  value_type from_bigint(const BigInt& x) const;
  value_type from_coeffs(std::vector<std::uint64_t> power_coeffs) const;
  /// Sum of coords[i] * b_i.
  value_type from_basis_coords(std::span<const std::uint64_t> coords) const;
  value_type generator() const;  // the class of t

  value_type add(const value_type& a, const value_type& b) const;
  value_type sub(const value_type& a, const value_type& b) const;
  value_type neg(const value_type& a) const;
  value_type mul(const value_type& a, const value_type& b) const;
  value_type pow(const value_type& a, const BigInt& e) const;
  value_type inv(const value_type& a) const;
  value_type div_exact(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  value_type frobenius(const value_type& a) const;
  bool is_zero(const value_type& a) const;
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const;

  value_type random(Rng& rng) const;

  /// Sum of x^{q^i} for i < l; the result lies in F_q.
  std::uint64_t trace(const value_type& x) const;

  /// G[i][j] = trace(b_i b_j) for the basis B.
  FqMatrix trace_form_gram() const;

  /// Dual basis {b_i*} with trace(b_i* b_j) = delta_ij. Throws
  /// SingularTraceForm if the Gram matrix is singular.
  std::vector<ExtFieldElement> dual_basis() const;

  /// Coordinates of x in B, via x_i = trace(b_i* x).
  std::vector<std::uint64_t> extract_coeffs(const value_type& x) const;

 private:
  PrimeField fq_;
  std::size_t l_;
  FqPoly f_;
  std::vector<ExtFieldElement> basis_;
  std::vector<ExtFieldElement> dual_;
  void check_element(const value_type& a) const;
};

/// Dual basis of `basis` given its trace-form Gram matrix: b_i* is the i-th
/// row of G^{-1} applied to the basis. Throws SingularTraceForm when G is not
/// invertible over F_q.
std::vector<ExtFieldElement> dual_from_gram(const ExtField& field,
                                            const std::vector<ExtFieldElement>& basis,
                                            const FqMatrix& gram);

}  // namespace flipcheck
