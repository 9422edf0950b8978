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

#include <gtest/gtest.h>

#include <set>

#include "flipcheck/oracles.hpp"
#include "flipcheck/rng.hpp"

namespace flipcheck {
namespace {

MatrixAssignment random_matrix(Shape s, Rng& rng, long lo = -9, long hi = 9) {
  MatrixAssignment x(s);
  for (auto& e : x.entries) e = rng.uniform(lo, hi);
  return x;
}

MatrixAssignment square(std::size_t n, std::vector<long> v) {
  std::vector<BigInt> e(v.begin(), v.end());
  return MatrixAssignment(Shape::square(n), e);
}

TEST(Permanent, SmallCases) {
  EXPECT_EQ(permanent(MatrixAssignment::identity(5)), 1);
  EXPECT_EQ(permanent(square(3, {1, 1, 1, 1, 1, 1, 1, 1, 1})), 6);
  EXPECT_EQ(permanent(square(2, {1, 2, 3, 4})), 10);
  EXPECT_THROW(permanent(MatrixAssignment::identity(13)), SizeLimit);
}

TEST(Permanent, RyserMatchesNaiveOverFields) {
  PrimeField fp(1000003);
  Rng rng(2);
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<std::uint64_t> a(n * n);
    for (auto& e : a) e = rng.below(fp.modulus());
    EXPECT_EQ(permanent_ryser(a, n, fp), permanent_naive(a, n, fp)) << n;
  }
}

TEST(Permanent, AllOnesIsFactorial) {
  BigInt fact = 1;
  for (std::size_t n = 1; n <= 10; ++n) {
    fact *= static_cast<unsigned long>(n);
    MatrixAssignment x(Shape::square(n));
    for (auto& e : x.entries) e = 1;
    EXPECT_EQ(permanent(x), fact);
  }
}

TEST(Permanent, PropertyP) {
  Rng rng(3);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int t = 0; t < 10; ++t) {
      const auto x = random_matrix(Shape::square(n), rng);
      const BigInt p = permanent(x);
      for (std::size_t i = 1; i < n; ++i) {
        EXPECT_EQ(permanent(apply_group(PermSwap{i}, x, Side::Left)), p);
        EXPECT_EQ(permanent(apply_group(PermSwap{i}, x, Side::Right)), p);
      }
      Diagonal d;
      for (std::size_t i = 0; i < n; ++i) d.entries.push_back(rng.uniform(-5, 5));
      EXPECT_EQ(permanent(apply_group(d, x, Side::Left)), diagonal_product(d) * p);
      EXPECT_EQ(permanent(apply_group(d, x, Side::Right)), diagonal_product(d) * p);
    }
  }
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(MatrixAssignment::identity(7)), 1);
  EXPECT_EQ(determinant(square(2, {1, 2, 3, 4})), -2);
  EXPECT_EQ(determinant(square(3, {1, 2, 3, 4, 5, 6, 1, 2, 3})), 0);
  EXPECT_EQ(determinant(square(3, {0, 0, 1, 0, 1, 0, 1, 0, 0})), -1);
}

TEST(Determinant, BareissMatchesLeibniz) {
  Rng rng(4);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int t = 0; t < 5; ++t) {
      auto x = random_matrix(Shape::square(n), rng, -3, 3);
      EXPECT_EQ(determinant_bareiss(x.entries, n, IntegerRing{}), determinant_naive(x.entries, n, IntegerRing{}));
    }
  }
}

TEST(Determinant, ElementaryActions) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_matrix(Shape::square(4), rng);
    const BigInt d = determinant(x);
    EXPECT_EQ(determinant(apply_group(ElementaryAdd{1, 3, rng.uniform(-9, 9)}, x, Side::Left)), d);
    EXPECT_EQ(determinant(apply_group(ElementaryAdd{4, 2, rng.uniform(-9, 9)}, x, Side::Right)), d);
    EXPECT_EQ(determinant(apply_group(PermSwap{2}, x, Side::Left)), -d);
    EXPECT_EQ(determinant(apply_group(RowCycle{1, 2, 4}, x, Side::Left)), d);
  }
}

// Explicit matrix product, independent of apply_group.
MatrixAssignment matmul(const MatrixAssignment& a, const MatrixAssignment& b) {
  const std::size_t n = a.shape.m;
  MatrixAssignment c(Shape::square(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) c.at(i, j) += a.at(i, l) * b.at(l, j);
  return c;
}

MatrixAssignment as_matrix(const GroupElement& g, std::size_t n) {
  auto m = MatrixAssignment::identity(n);
  if (const auto* e = std::get_if<ElementaryAdd>(&g)) m.at(e->i - 1, e->j - 1) = e->y;
  if (const auto* d = std::get_if<Diagonal>(&g))
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = d->entries[i];
  if (const auto* s = std::get_if<PermSwap>(&g)) {
    m.at(s->i - 1, s->i - 1) = m.at(s->i, s->i) = 0;
    m.at(s->i - 1, s->i) = m.at(s->i, s->i - 1) = 1;
  }
  if (const auto* c = std::get_if<RowCycle>(&g)) {
    for (auto i : {c->a, c->b, c->c}) m.at(i - 1, i - 1) = 0;
    m.at(c->b - 1, c->a - 1) = m.at(c->c - 1, c->b - 1) = m.at(c->a - 1, c->c - 1) = 1;
  }
  return m;
}

TEST(ApplyGroup, MatchesMatrixMultiplication) {
  Rng rng(6);
  const std::vector<GroupElement> gs = {ElementaryAdd{1, 3, 7}, ElementaryAdd{3, 2, -2},
                                        Diagonal{{2, -1, 5}}, PermSwap{1}, PermSwap{2}, RowCycle{1, 2, 3},
                                        RowCycle{3, 1, 2}};
  for (const auto& g : gs) {
    const auto x = random_matrix(Shape::square(3), rng);
    EXPECT_EQ(apply_group(g, x, Side::Left), matmul(as_matrix(g, 3), x)) << describe(g);
    EXPECT_EQ(apply_group(g, x, Side::Right), matmul(x, as_matrix(g, 3))) << describe(g);
    EXPECT_EQ(group_det(g), determinant(as_matrix(g, 3))) << describe(g);
  }
}

TEST(ApplyGroup, InversesAndIdentity) {
  Rng rng(7);
  const auto x = random_matrix(Shape::square(3), rng);
  EXPECT_EQ(apply_group(Diagonal{{1, 1, 1}}, x, Side::Left), x);
  EXPECT_EQ(apply_group(PermSwap{1}, apply_group(PermSwap{1}, x, Side::Left), Side::Left), x);
  for (const GroupElement g : {GroupElement{ElementaryAdd{1, 2, 4}}, GroupElement{RowCycle{1, 3, 2}}}) {
    const auto inv = *group_inverse(g, 1);
    EXPECT_EQ(apply_group(inv, apply_group(g, x, Side::Left), Side::Left), x);
  }
  const auto b = random_matrix(Shape::block(3, 4), rng);
  auto y = b;
  for (int t = 0; t < 4; ++t) y = apply_group(ColCycle{2}, y, Side::Right);
  EXPECT_EQ(y, b);
  EXPECT_NE(apply_group(ColCycle{2}, b, Side::Right), b);
  const auto p = PosThreeCycle{1, 2, 3};
  EXPECT_EQ(apply_group(*group_inverse(p, 4), apply_group(p, b, Side::Right), Side::Right), b);
}

TEST(ApplyGroup, ShapeErrors) {
  const auto sq = MatrixAssignment::identity(3);
  const auto bl = MatrixAssignment::unit_columns(2, 2);
  EXPECT_THROW(apply_group(ColSwap{1}, sq, Side::Right), ShapeMismatch);
  EXPECT_THROW(apply_group(ColSwap{1}, bl, Side::Left), ShapeMismatch);
  EXPECT_THROW(apply_group(PermSwap{1}, bl, Side::Right), ShapeMismatch);
  EXPECT_THROW(apply_group(Diagonal{{1, 2}}, sq, Side::Left), ShapeMismatch);
  EXPECT_THROW(apply_group(PermSwap{3}, sq, Side::Left), IndexOutOfRange);
}

TEST(KGenerators, Lists) {
  const auto g13 = k_generators(1, 3);
  EXPECT_EQ(g13, (std::vector<GroupElement>{ColSwap{1}, ColCycle{1}}));
  const auto g32 = k_generators(3, 2);
  EXPECT_NE(std::find(g32.begin(), g32.end(), GroupElement{PosThreeCycle{1, 2, 3}}), g32.end());
}

TEST(KGenerators, OrbitOrderM3K2) {
  // Label each column by its index, then close the label permutation under the generators.
  const std::size_t m = 3, k = 2;
  MatrixAssignment labels(Shape::block(m, k));
  for (std::size_t c = 0; c < labels.shape.cols(); ++c) labels.at(0, c) = static_cast<unsigned long>(c);
  std::set<std::vector<BigInt>> seen = {labels.entries};
  std::vector<MatrixAssignment> frontier = {labels};
  const auto gens = k_generators(m, k);
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      auto y = apply_group(g, x, Side::Right);
      if (seen.insert(y.entries).second) frontier.push_back(y);
    }
  }
  EXPECT_EQ(seen.size(), 24u);
}

TEST(Efun, SmallCases) {
  EXPECT_EQ(efun(MatrixAssignment(Shape::block(1, 2), {2, 3})), 6);
  EXPECT_EQ(efun(MatrixAssignment::unit_columns(2, 2)), 1);
  auto x = MatrixAssignment::unit_columns(2, 2);
  x.at(1, x.shape.block_col(1, 2)) = 0;  // primary submatrix singular
  EXPECT_EQ(efun(x), 0);
  EXPECT_THROW(efun(MatrixAssignment(Shape::block(13, 2))), BudgetExceeded);
}

TEST(Efun, Degree) {
  EXPECT_EQ(efun_degree(1, 2), 2u);
  EXPECT_EQ(efun_degree(2, 2), 8u);
  EXPECT_EQ(efun_degree(1, 1), 1u);
  EXPECT_EQ(efun_degree(3, 3), 81u);
}

// Brute force over sigma with Leibniz determinants.
BigInt efun_brute(const MatrixAssignment& x) {
  const std::size_t m = x.shape.m, k = x.shape.k;
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= k;
  BigInt prod = 1;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<BigInt> sub(m * m);
    std::size_t c = code;
    for (std::size_t i = 0; i < m; ++i, c /= k) {
      const std::size_t j = c % k + 1;
      for (std::size_t r = 0; r < m; ++r) sub[r * m + i] = x.at(r, x.shape.block_col(j, i + 1));
    }
    prod *= determinant_naive(sub, m, IntegerRing{});
  }
  return prod;
}

TEST(Efun, PropertyE) {
  Rng rng(8);
  for (auto [m, k] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 2}, {1, 3}, {3, 2}, {2, 3}}) {
    for (int t = 0; t < 10; ++t) {
      const auto x = random_matrix(Shape::block(m, k), rng, -4, 4);
      const BigInt e = efun(x);
      EXPECT_EQ(e, efun_brute(x));
      for (const auto& g : k_generators(m, k)) EXPECT_EQ(efun(apply_group(g, x, Side::Right)), e) << describe(g);
      Diagonal d;
      for (std::size_t i = 0; i < m; ++i) d.entries.push_back(rng.uniform(1, 3));
      BigInt factor;
      mpz_pow_ui(factor.get_mpz_t(), diagonal_product(d).get_mpz_t(), sigma_count(m, k));
      EXPECT_EQ(efun(apply_group(d, x, Side::Left)), factor * e);
      if (m >= 2) {
        EXPECT_EQ(efun(apply_group(ElementaryAdd{1, 2, rng.uniform(-5, 5)}, x, Side::Left)), e);
        const BigInt sign = (sigma_count(m, k) & 1) ? -1 : 1;
        EXPECT_EQ(efun(apply_group(PermSwap{1}, x, Side::Left)), sign * e);
      }
    }
  }
}

TEST(Efun, VanishesOnSingularPrimary) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    auto x = random_matrix(Shape::block(3, 2), rng);
    // Primary column 3 = column 1 + column 2.
    for (std::size_t r = 0; r < 3; ++r) x.at(r, 2) = x.at(r, 0) + x.at(r, 1);
    EXPECT_EQ(efun(x), 0);
  }
}

TEST(ReferenceCircuits, MatchOracles) {
  Rng rng(10);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto pc = permanent_circuit(n), dc = determinant_circuit(n);
    for (int t = 0; t < 5; ++t) {
      const auto x = random_matrix(Shape::square(n), rng);
      EXPECT_EQ(evaluate(pc, x.entries), permanent(x));
      EXPECT_EQ(evaluate(dc, x.entries), determinant(x));
    }
  }
  for (auto [m, k] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 2}, {1, 3}, {2, 3}}) {
    const auto ec = efun_circuit(m, k);
    for (int t = 0; t < 5; ++t) {
      const auto x = random_matrix(Shape::block(m, k), rng);
      EXPECT_EQ(evaluate(ec, x.entries), efun(x));
    }
  }
}

TEST(EfunPolynomial, AgreesWithOracle) {
  Rng rng(11);
  for (auto [m, k] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 2}, {1, 3}}) {
    const auto p = efun_polynomial(m, k);
    EXPECT_EQ(p.total_degree(), efun_degree(m, k));
    for (int t = 0; t < 5; ++t) {
      const auto x = random_matrix(Shape::block(m, k), rng);
      EXPECT_EQ(p.evaluate(x.entries), efun(x));
    }
  }
  EXPECT_EQ(efun_polynomial(1, 2).to_string(), "x0*x1");
}

TEST(MatrixAssignment, SerializeRoundtrip) {
  Rng rng(12);
  for (const auto s : {Shape::square(3), Shape::block(2, 3)}) {
    const auto x = random_matrix(s, rng);
    EXPECT_EQ(MatrixAssignment::parse(x.serialize()), x);
  }
  EXPECT_EQ(square(2, {1, -2, 3, 4}).serialize(), "square 2\n1 -2\n3 4\n");
  EXPECT_THROW(MatrixAssignment::parse("square 2\n1 2 3"), MalformedEncoding);
  EXPECT_THROW(MatrixAssignment::parse("cube 2"), MalformedEncoding);
}

}  // namespace
}  // namespace flipcheck
