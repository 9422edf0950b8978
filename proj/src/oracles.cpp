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

#include "flipcheck/oracles.hpp"

#include <map>

namespace flipcheck {

std::uint64_t sigma_count(std::size_t m, std::size_t k, std::uint64_t budget) {
  if (m == 0 || k == 0) throw ConfigError("E(X) needs m >= 1 and k >= 1");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (count > budget / k) {
      throw BudgetExceeded("k^m exceeds the sigma budget of " + std::to_string(budget));
    }
    count *= k;
  }
  if (count > budget) throw BudgetExceeded("k^m exceeds the sigma budget of " + std::to_string(budget));
  return count;
}

BigInt permanent(const MatrixAssignment& x, std::size_t limit) {
  if (x.shape.kind != Shape::Kind::Square) throw ShapeMismatch("permanent expects a square matrix");
  return permanent(x.entries, x.shape.m, IntegerRing{}, limit);
}

BigInt determinant(const MatrixAssignment& x, std::size_t limit) {
  if (x.shape.kind != Shape::Kind::Square) throw ShapeMismatch("determinant expects a square matrix");
  return determinant(x.entries, x.shape.m, IntegerRing{}, limit);
}

BigInt efun(const MatrixAssignment& x, std::uint64_t budget) {
  if (x.shape.kind != Shape::Kind::Block) throw ShapeMismatch("efun expects a block matrix");
  return efun(x.entries, x.shape.m, x.shape.k, IntegerRing{}, budget);
}

std::uint64_t efun_degree(std::size_t m, std::size_t k) {
  const std::uint64_t count = sigma_count(m, k, UINT64_MAX);
  if (count > UINT64_MAX / m) throw BudgetExceeded("degree m*k^m overflows 64 bits");
  return m * count;
}

BigInt diagonal_product(const Diagonal& d) {
  BigInt p = 1;
  for (const auto& e : d.entries) p *= e;
  return p;
}

namespace {

// Symbolic det of the m x m matrix whose (r, c) entry is variable var(r, c).
template <class VarFn>
SparsePoly symbolic_det(std::size_t m, std::size_t num_vars, VarFn var, std::size_t max_terms) {
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  SparsePoly det(num_vars);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) inversions += perm[i] > perm[j];
    Monomial mono(num_vars, 0);
    for (std::size_t r = 0; r < m; ++r) ++mono[var(r, perm[r])];
    det.add_term(mono, (inversions & 1) ? BigInt(-1) : BigInt(1));
    if (det.num_terms() > max_terms) throw TermBudgetExceeded("determinant expansion too large");
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// First-row expansion over the listed columns of an n-row matrix whose entry
// (r, cols[t]) is the input input_of(r, cols[t]). Memoized on column subsets.
template <class InputFn>
std::uint32_t expansion_subcircuit(CircuitBuilder& b, std::size_t n, const std::vector<std::size_t>& cols,
                                   InputFn input_of, bool alternating) {
  std::map<std::uint32_t, std::uint32_t> memo;  // column-subset mask -> node
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // Row r pairs with subsets of size n - r, so build bottom-up by subset size.
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t r = n - size;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      std::optional<std::uint32_t> acc;
      std::size_t position = 0;
      for (std::size_t t = 0; t < n; ++t) {
        if (!((mask >> t) & 1)) continue;
        const std::uint32_t entry = b.input(static_cast<std::uint32_t>(input_of(r, cols[t])));
        const std::uint32_t rest = mask & ~(std::uint32_t{1} << t);
        const std::uint32_t term = rest ? b.mul(entry, memo.at(rest)) : entry;
        const bool negative = alternating && (position & 1);
        if (!acc) {
          acc = term;  // position 0 is always positive
        } else {
          acc = negative ? b.sub(*acc, term) : b.add(*acc, term);
        }
        ++position;
      }
      memo[mask] = *acc;
    }
  }
  return memo.at(full);
}

Circuit square_expansion_circuit(std::size_t n, bool alternating) {
  if (n == 0 || n > 20) throw ConfigError("reference circuits need 1 <= n <= 20");
  CircuitBuilder b(n * n);
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  const auto out = expansion_subcircuit(b, n, cols, [n](std::size_t r, std::size_t c) { return r * n + c; },
                                        alternating);
  return b.build(out);
}

}  // namespace

Circuit permanent_circuit(std::size_t n) { return square_expansion_circuit(n, false); }

Circuit determinant_circuit(std::size_t n) { return square_expansion_circuit(n, true); }

Circuit efun_circuit(std::size_t m, std::size_t k, std::uint64_t budget) {
  const std::uint64_t count = sigma_count(m, k, budget);
  if (m > 20) throw ConfigError("efun circuit needs m <= 20");
  const Shape shape = Shape::block(m, k);
  CircuitBuilder b(shape.size());
  std::vector<std::size_t> sigma(m, 1);
  std::optional<std::uint32_t> product;
  for (std::uint64_t s = 0; s < count; ++s) {
    std::vector<std::size_t> cols(m);
    for (std::size_t i = 1; i <= m; ++i) cols[i - 1] = shape.block_col(sigma[i - 1], i);
    const auto det = expansion_subcircuit(
        b, m, cols, [&shape](std::size_t r, std::size_t c) { return shape.index(r, c); }, true);
    product = product ? b.mul(*product, det) : det;
    for (std::size_t i = 0; i < m; ++i) {
      if (++sigma[i] <= k) break;
      sigma[i] = 1;
    }
  }
  return b.build(*product);
}

SparsePoly efun_polynomial(std::size_t m, std::size_t k, std::size_t max_terms) {
  const std::uint64_t count = sigma_count(m, k);
  const Shape shape = Shape::block(m, k);
  std::vector<std::size_t> sigma(m, 1);
  SparsePoly product = SparsePoly::constant(shape.size(), 1);
  for (std::uint64_t s = 0; s < count; ++s) {
    auto det = symbolic_det(
        m, shape.size(),
        [&](std::size_t r, std::size_t i) { return shape.index(r, shape.block_col(sigma[i], i + 1)); },
        max_terms);
    product = product.multiply(det, max_terms);
    for (std::size_t i = 0; i < m; ++i) {
      if (++sigma[i] <= k) break;
      sigma[i] = 1;
    }
  }
  return product;
}

}  // namespace flipcheck
