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

#include "flipcheck/polynomial.hpp"
#include "flipcheck/rng.hpp"

namespace flipcheck {
namespace {

SparsePoly x(std::size_t n, std::size_t i) { return SparsePoly::variable(n, i); }
SparsePoly c(std::size_t n, long v) { return SparsePoly::constant(n, BigInt(v)); }

TEST(SparsePoly, DifferenceOfSquaresCancels) {
  const auto p = (x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1)) - x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.to_string(), "0");
}

TEST(SparsePoly, ToStringAndDegree) {
  const auto p = x(4, 0) * x(4, 3) - c(4, 2) * x(4, 1) * x(4, 1);
  EXPECT_EQ(p.to_string(), "x0*x3 + -2*x1^2");
  EXPECT_EQ(p.total_degree(), 2u);
  EXPECT_EQ(c(3, 0).total_degree(), 0u);
}

TEST(SparsePoly, EvaluateMatchesHornerFreeExpansion) {
  Rng rng(3);
  const auto p = (x(3, 0) + c(3, 3)) * (x(3, 1) - x(3, 2)) * x(3, 2);
  for (int i = 0; i < 20; ++i) {
    std::vector<BigInt> pt = {rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(-50, 50)};
    EXPECT_EQ(p.evaluate(pt), (pt[0] + 3) * (pt[1] - pt[2]) * pt[2]);
  }
  std::vector<BigInt> bad = {1};
  EXPECT_THROW(p.evaluate(bad), ArityMismatch);
}

TEST(SparsePoly, MultiplyRespectsBudget) {
  const auto p = x(3, 0) + x(3, 1) + x(3, 2);
  EXPECT_THROW(p.multiply(p, 5), TermBudgetExceeded);
  EXPECT_EQ(p.multiply(p, 6).num_terms(), 6u);
}

TEST(SparsePoly, ConstantMultiples) {
  const auto p = x(2, 0) * x(2, 1) + x(2, 0);
  EXPECT_TRUE((c(2, -3) * p).is_nonzero_multiple_of(p));
  EXPECT_TRUE(p.is_nonzero_multiple_of(c(2, 2) * p));
  EXPECT_FALSE((p + x(2, 1)).is_nonzero_multiple_of(p));
  EXPECT_FALSE(SparsePoly(2).is_nonzero_multiple_of(p));
  EXPECT_FALSE(p.is_nonzero_multiple_of(SparsePoly(2)));
  // Same support but ratios differ.
  EXPECT_FALSE((x(2, 0) * x(2, 1) + c(2, 2) * x(2, 0)).is_nonzero_multiple_of(p));
}

}  // namespace
}  // namespace flipcheck
