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
#include <variant>
#include <vector>

#include "flipcheck/bigint.hpp"
#include "flipcheck/errors.hpp"

namespace flipcheck {

/// Square(n): an n x n matrix. Block(m, k): the m x km matrix whose columns
/// X^j_i (j in [k], i in [m]) are grouped by j, so column (j, i) sits at
/// index (j-1)*m + (i-1). Both flatten row-major.
struct Shape {
  enum class Kind { Square, Block };
  Kind kind = Kind::Square;
  std::size_t m = 0;
  std::size_t k = 1;

  static Shape square(std::size_t n) { return {Kind::Square, n, 1}; }
  static Shape block(std::size_t m, std::size_t k) { return {Kind::Block, m, k}; }

  std::size_t rows() const { return m; }
  std::size_t cols() const { return m * k; }
  std::size_t size() const { return rows() * cols(); }
  /// Flat index of entry (r, c), 0-based.
  std::size_t index(std::size_t r, std::size_t c) const { return r * cols() + c; }
  /// 0-based column index of the 1-based block column (j, i).
  std::size_t block_col(std::size_t j, std::size_t i) const { return (j - 1) * m + (i - 1); }

  bool operator==(const Shape&) const = default;
};

/// Integer matrix of a given shape.
struct MatrixAssignment {
  Shape shape;
  std::vector<BigInt> entries;

  MatrixAssignment() = default;
  MatrixAssignment(Shape s, std::vector<BigInt> e);
  explicit MatrixAssignment(Shape s) : shape(s), entries(s.size(), 0) {}

  static MatrixAssignment identity(std::size_t n);
  /// Every column X^j_i equal to the unit vector e_i.
  static MatrixAssignment unit_columns(std::size_t m, std::size_t k);

  BigInt& at(std::size_t r, std::size_t c) { return entries[shape.index(r, c)]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return entries[shape.index(r, c)]; }

  /// `square n` or `block m k`, then one line of decimal entries per row.
  std::string serialize() const;
  /// Throws MalformedEncoding.
  static MatrixAssignment parse(std::string_view text);

  bool operator==(const MatrixAssignment&) const = default;
  bool operator<(const MatrixAssignment& o) const {
    if (shape.kind != o.shape.kind) return shape.kind < o.shape.kind;
    if (shape.m != o.shape.m) return shape.m < o.shape.m;
    if (shape.k != o.shape.k) return shape.k < o.shape.k;
    return entries < o.entries;
  }
};

// Group elements. Indices are 1-based throughout.

/// e_ij(y) = I + y E_ij, i != j.
struct ElementaryAdd {
  std::size_t i, j;
  BigInt y;
  bool operator==(const ElementaryAdd&) const = default;
};
struct Diagonal {
  std::vector<BigInt> entries;
  bool operator==(const Diagonal&) const = default;
};
/// Permutation matrix swapping i and i+1.
struct PermSwap {
  std::size_t i;
  bool operator==(const PermSwap&) const = default;
};
/// Permutation matrix P with P e_a = e_b, P e_b = e_c, P e_c = e_a.
struct RowCycle {
  std::size_t a, b, c;
  bool operator==(const RowCycle&) const = default;
};
/// Swaps block columns (1, i) and (2, i).
struct ColSwap {
  std::size_t i;
  bool operator==(const ColSwap&) const = default;
};
/// Moves the content of (j, i) to (j+1, i), and (k, i) to (1, i).
struct ColCycle {
  std::size_t i;
  bool operator==(const ColCycle&) const = default;
};
/// Moves the content at position a to b, b to c and c to a, for every j.
struct PosThreeCycle {
  std::size_t a, b, c;
  bool operator==(const PosThreeCycle&) const = default;
};

using GroupElement =
    std::variant<ElementaryAdd, Diagonal, PermSwap, RowCycle, ColSwap, ColCycle, PosThreeCycle>;

enum class Side { Left, Right };

bool is_k_generator(const GroupElement& g);

/// Determinant of a matrix group element. Throws ConfigError for generators of K.
BigInt group_det(const GroupElement& g);

/// Inverse when it has integer entries (everything except diagonals with
/// entries other than +-1). `k` is needed to invert ColCycle.
std::optional<GroupElement> group_inverse(const GroupElement& g, std::size_t k);

/// Left action g*X on rows, right action X*g on columns. For Block shapes the
/// left action is the m x m row action on all columns and the right action is
/// restricted to generators of K. Throws ShapeMismatch or IndexOutOfRange.
MatrixAssignment apply_group(const GroupElement& g, const MatrixAssignment& x, Side side);

/// ColSwap(i), ColCycle(i) for every position i (when k >= 2), then
/// PosThreeCycle(1, 2, j) for j = 3..m.
std::vector<GroupElement> k_generators(std::size_t m, std::size_t k);

/// Compact descriptor, e.g. "eadd(1,2,-5)", "diag(2,3)", "swap(1)", "cycle(1,2,3)",
/// "colswap(2)", "colcycle(1)", "pos3(1,2,3)".
std::string describe(const GroupElement& g);

}  // namespace flipcheck
