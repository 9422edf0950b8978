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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "flipcheck/circuit.hpp"
#include "flipcheck/errors.hpp"
#include "flipcheck/field.hpp"
#include "flipcheck/matrix.hpp"
#include "flipcheck/polynomial.hpp"

namespace flipcheck {

inline constexpr std::size_t kDefaultOracleLimit = 12;
inline constexpr std::uint64_t kDefaultEfunBudget = 4096;

/// Permanent by expansion over all n! permutations.
template <class Ring>
typename Ring::value_type permanent_naive(const std::vector<typename Ring::value_type>& a, std::size_t n,
                                          const Ring& ring) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto total = ring.zero();
  do {
    auto term = ring.one();
    for (std::size_t r = 0; r < n; ++r) term = ring.mul(term, a[r * n + perm[r]]);
    total = ring.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Ryser's inclusion-exclusion formula, subsets visited in Gray-code order:
/// perm(A) = (-1)^n sum_S (-1)^|S| prod_r sum_{c in S} a_rc.
template <class Ring>
typename Ring::value_type permanent_ryser(const std::vector<typename Ring::value_type>& a, std::size_t n,
                                          const Ring& ring) {
  if (n == 0) return ring.one();
  std::vector<typename Ring::value_type> row_sums(n, ring.zero());
  auto total = ring.zero();
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    const std::size_t col = static_cast<std::size_t>(__builtin_ctzll(step));
    gray ^= std::uint64_t{1} << col;
    const bool added = (gray >> col) & 1;
    for (std::size_t r = 0; r < n; ++r) {
      row_sums[r] = added ? ring.add(row_sums[r], a[r * n + col]) : ring.sub(row_sums[r], a[r * n + col]);
    }
    auto prod = ring.one();
    for (std::size_t r = 0; r < n; ++r) prod = ring.mul(prod, row_sums[r]);
    const bool negative = ((n - static_cast<std::size_t>(__builtin_popcountll(gray))) & 1) != 0;
    total = negative ? ring.sub(total, prod) : ring.add(total, prod);
  }
  return total;
}

/// Exact permanent. Uses Ryser's formula and, for n <= 6, cross-checks it
/// against naive expansion (std::logic_error on disagreement).
template <class Ring>
typename Ring::value_type permanent(const std::vector<typename Ring::value_type>& a, std::size_t n,
                                    const Ring& ring, std::size_t limit = kDefaultOracleLimit) {
  if (a.size() != n * n) throw ShapeMismatch("permanent expects an n x n matrix");
  if (n > limit) throw SizeLimit("permanent oracle limited to n <= " + std::to_string(limit));
  auto value = permanent_ryser(a, n, ring);
  if (n <= 6 && !ring.equal(value, permanent_naive(a, n, ring))) {
    throw std::logic_error("permanent oracles disagree");
  }
  return value;
}

/// Leibniz expansion with permutation signs.
template <class Ring>
typename Ring::value_type determinant_naive(const std::vector<typename Ring::value_type>& a, std::size_t n,
                                            const Ring& ring) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto total = ring.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    auto term = ring.one();
    for (std::size_t r = 0; r < n; ++r) term = ring.mul(term, a[r * n + perm[r]]);
    total = (inversions & 1) ? ring.sub(total, term) : ring.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Fraction-free (Bareiss) elimination; valid over any integral domain whose
/// ring exposes div_exact.
template <class Ring>
typename Ring::value_type determinant_bareiss(std::vector<typename Ring::value_type> a, std::size_t n,
                                              const Ring& ring) {
  if (n == 0) return ring.one();
  bool negate = false;
  auto prev = ring.one();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (ring.is_zero(a[p * n + p])) {
      std::size_t swap_row = p + 1;
      while (swap_row < n && ring.is_zero(a[swap_row * n + p])) ++swap_row;
      if (swap_row == n) return ring.zero();
      for (std::size_t c = 0; c < n; ++c) std::swap(a[p * n + c], a[swap_row * n + c]);
      negate = !negate;
    }
    for (std::size_t r = p + 1; r < n; ++r) {
      for (std::size_t c = p + 1; c < n; ++c) {
        auto v = ring.sub(ring.mul(a[r * n + c], a[p * n + p]), ring.mul(a[r * n + p], a[p * n + c]));
        a[r * n + c] = ring.div_exact(v, prev);
      }
    }
    prev = a[p * n + p];
  }
  auto d = a[(n - 1) * n + (n - 1)];
  return negate ? ring.neg(d) : d;
}

/// Exact determinant, cross-checked against Leibniz expansion for n <= 6.
template <class Ring>
typename Ring::value_type determinant(const std::vector<typename Ring::value_type>& a, std::size_t n,
                                      const Ring& ring, std::size_t limit = 64) {
  if (a.size() != n * n) throw ShapeMismatch("determinant expects an n x n matrix");
  if (n > limit) throw SizeLimit("determinant oracle limited to n <= " + std::to_string(limit));
  auto value = determinant_bareiss(a, n, ring);
  if (n <= 6 && !ring.equal(value, determinant_naive(a, n, ring))) {
    throw std::logic_error("determinant oracles disagree");
  }
  return value;
}

/// Number of maps sigma: [m] -> [k]; throws BudgetExceeded above `budget`.
std::uint64_t sigma_count(std::size_t m, std::size_t k, std::uint64_t budget = kDefaultEfunBudget);

/// E(X) = prod over sigma: [m] -> [k] of det(X_sigma), where the i-th column
/// of X_sigma is X^{sigma(i)}_i. `x` is the m x km block matrix, row-major.
/// Stops at the first zero factor.
template <class Ring>
typename Ring::value_type efun(const std::vector<typename Ring::value_type>& x, std::size_t m, std::size_t k,
                               const Ring& ring, std::uint64_t budget = kDefaultEfunBudget) {
  const Shape shape = Shape::block(m, k);
  if (x.size() != shape.size()) throw ShapeMismatch("efun expects an m x km matrix");
  const std::uint64_t count = sigma_count(m, k, budget);
  std::vector<std::size_t> sigma(m, 1);
  std::vector<typename Ring::value_type> sub(m * m);
  auto product = ring.one();
  for (std::uint64_t s = 0; s < count; ++s) {
    for (std::size_t i = 1; i <= m; ++i) {
      const std::size_t col = shape.block_col(sigma[i - 1], i);
      for (std::size_t r = 0; r < m; ++r) sub[r * m + (i - 1)] = x[shape.index(r, col)];
    }
    auto d = determinant_bareiss(sub, m, ring);
    if (ring.is_zero(d)) return ring.zero();
    product = ring.mul(product, d);
    for (std::size_t i = 0; i < m; ++i) {  // next sigma, odometer order
      if (++sigma[i] <= k) break;
      sigma[i] = 1;
    }
  }
  return product;
}

BigInt permanent(const MatrixAssignment& x, std::size_t limit = kDefaultOracleLimit);
BigInt determinant(const MatrixAssignment& x, std::size_t limit = 64);
BigInt efun(const MatrixAssignment& x, std::uint64_t budget = kDefaultEfunBudget);

/// m * k^m. Throws BudgetExceeded on 64-bit overflow.
std::uint64_t efun_degree(std::size_t m, std::size_t k);

/// Product of p(mu) over the diagonal entries.
BigInt diagonal_product(const Diagonal& d);

/// Symbolic E(X) in the km^2 variables of the block matrix (row-major).
SparsePoly efun_polynomial(std::size_t m, std::size_t k, std::size_t max_terms = 1u << 22);

/// perm(X) as a circuit over n^2 row-major inputs, via first-row expansion
/// with memoized column subsets (O(n 2^n) gates).
Circuit permanent_circuit(std::size_t n);
/// det(X) as a circuit, same construction with alternating signs.
Circuit determinant_circuit(std::size_t n);
/// E(X) as the product of k^m determinant subcircuits over the km^2 block inputs.
Circuit efun_circuit(std::size_t m, std::size_t k, std::uint64_t budget = kDefaultEfunBudget);

}  // namespace flipcheck
