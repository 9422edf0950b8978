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

#include <fstream>

#include "flipcheck/circuit.hpp"
#include "flipcheck/rng.hpp"

namespace flipcheck {
namespace {

const std::string kData = FLIPCHECK_DATA_DIR;

Circuit perm2() { return Circuit::load(kData + "/circuits/perm2.ac"); }

// Builds a random circuit over `n` inputs with `gates` binary gates.
Circuit random_circuit(std::size_t n, std::size_t gates, Rng& rng) {
  CircuitBuilder b(n);
  std::vector<std::uint32_t> ids;
  for (std::uint32_t v = 0; v < n; ++v) ids.push_back(b.input(v));
  ids.push_back(b.constant(rng.uniform(-3, 3)));
  for (std::size_t g = 0; g < gates; ++g) {
    const auto a = ids[rng.below(ids.size())], c = ids[rng.below(ids.size())];
    switch (rng.below(3)) {
      case 0: ids.push_back(b.add(a, c)); break;
      case 1: ids.push_back(b.sub(a, c)); break;
      default: ids.push_back(b.mul(a, c)); break;
    }
  }
  return b.build(ids.back());
}

TEST(CircuitParse, Identity) {
  const auto c = Circuit::parse("ninputs 1\ng0 = input 0\noutput g0\n");
  EXPECT_EQ(c.size(), 1u);
  std::vector<BigInt> pt = {5};
  EXPECT_EQ(evaluate(c, pt), 5);
}

TEST(CircuitParse, PermanentFile) {
  const auto c = perm2();
  EXPECT_EQ(c.size(), 7u);
  std::vector<BigInt> pt = {1, 2, 3, 4};
  EXPECT_EQ(evaluate(c, pt), 10);
  EXPECT_EQ(c.formal_degree(), 2u);
}

TEST(CircuitParse, Errors) {
  try {
    Circuit::parse("ninputs 1\ng0 = input 0\ng1 = add g0 g5\noutput g1\n");
    FAIL();
  } catch (const DagViolation& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(Circuit::parse("ninputs 1\ng0 = input 0 1\noutput g0"), BadArity);
  EXPECT_THROW(Circuit::parse("ninputs 1\ng0 = mul g0\noutput g0"), BadArity);
  EXPECT_THROW(Circuit::parse("ninputs 1\ng0 = input 3\noutput g0"), ParseError);
  EXPECT_THROW(Circuit::parse("ninputs 1\ng1 = input 0\ng0 = input 0\noutput g0"), ParseError);
  EXPECT_THROW(Circuit::parse("ninputs 1\ng0 = input 0\n"), ParseError);
  EXPECT_THROW(Circuit::parse("ninputs 1\ng0 = pow g0 g0\noutput g0"), ParseError);
  EXPECT_THROW(Circuit::parse("ninputs 1\ng0 = const 1x\noutput g0"), ParseError);
  EXPECT_THROW(Circuit::parse("g0 = input 0\noutput g0"), ParseError);
}

TEST(CircuitParse, SparseIdsAndComments) {
  const auto c = Circuit::parse("# demo\nninputs 2\n\ng3 = input 1  # y\ng7 = const -4\ng9 = mul g3 g7\noutput g9\n");
  EXPECT_EQ(c.serialize(), "ninputs 2\ng0 = input 1\ng1 = const -4\ng2 = mul g0 g1\noutput g2\n");
  EXPECT_EQ(c.bitsize(), 3u + 3u);
}

TEST(CircuitParse, RoundtripPreservesMetrics) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto c = random_circuit(3, 8, rng);
    const auto d = Circuit::parse(c.serialize());
    EXPECT_EQ(d, c);
    EXPECT_EQ(d.size(), c.size());
    EXPECT_EQ(d.bitsize(), c.bitsize());
    EXPECT_EQ(d.serialize(), c.serialize());
  }
}

TEST(CircuitEval, ArityMismatch) {
  std::vector<BigInt> pt = {1};
  EXPECT_THROW(evaluate(perm2(), pt), ArityMismatch);
}

TEST(CircuitEval, ZeroPointNoConstants) {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    CircuitBuilder b(2);
    auto g = b.mul(b.input(0), b.add(b.input(1), b.input(0)));
    const auto c = b.build(b.sub(g, b.input(1)));
    std::vector<BigInt> pt = {0, 0};
    EXPECT_EQ(evaluate(c, pt), 0);
  }
}

TEST(CircuitEval, ModularAgreesWithReducedInteger) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto c = random_circuit(3, 10, rng);
    std::vector<BigInt> pt = {rng.uniform(-1000, 1000), rng.uniform(-1000, 1000), rng.uniform(-1000, 1000)};
    const std::uint64_t p = random_prime(31, rng.next());
    EXPECT_EQ(evaluate_mod(c, pt, p), mod_u64(evaluate(c, pt), p));
  }
}

TEST(CircuitEval, RepeatedSquaringMod) {
  CircuitBuilder b(0);
  auto g = b.constant(2);
  for (int i = 0; i < 6; ++i) g = b.mul(g, g);  // 2^64
  const auto c = b.build(g);
  const auto r = evaluate_mod_random_prime(c, {}, 31, 99);
  EXPECT_EQ(r.residue, mod_u64(BigInt(1) << 64, r.prime));
  EXPECT_GE(r.prime, std::uint64_t{1} << 30);
  EXPECT_LT(r.prime, std::uint64_t{1} << 31);
  const auto r2 = evaluate_mod_random_prime(c, {}, 31, 99);
  EXPECT_EQ(r.prime, r2.prime);
  EXPECT_EQ(r.residue, r2.residue);
  EXPECT_THROW(evaluate_mod_random_prime(c, {}, 8, 1), ConfigError);
}

TEST(CircuitEval, ZeroPolynomialModEveryPrime) {
  const auto c = Circuit::parse("ninputs 1\ng0 = input 0\ng1 = sub g0 g0\noutput g1");
  std::vector<BigInt> pt = {123456789};
  for (std::uint64_t s = 0; s < 10; ++s) EXPECT_EQ(evaluate_mod_random_prime(c, pt, 20, s).residue, 0u);
}

TEST(Specialize, IdentityToConstant) {
  const auto c = Circuit::parse("ninputs 1\ng0 = input 0\noutput g0");
  const auto s = specialize(c, {{0, BigInt(7)}});
  EXPECT_EQ(s.num_inputs(), 0u);
  EXPECT_EQ(evaluate(s, {}), 7);
  EXPECT_THROW(specialize(c, {{1, BigInt(0)}}), IndexOutOfRange);
}

TEST(Specialize, EmptyBindingsPreservesPolynomial) {
  Rng rng(8);
  const auto c = random_circuit(3, 9, rng);
  const auto s = specialize(c, {});
  for (int i = 0; i < 10; ++i) {
    std::vector<BigInt> pt = {rng.uniform(-99, 99), rng.uniform(-99, 99), rng.uniform(-99, 99)};
    EXPECT_EQ(evaluate(s, pt), evaluate(c, pt));
  }
}

TEST(Specialize, LowerRightEmbedding) {
  // Naive 3x3 permanent circuit.
  CircuitBuilder b(9);
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::uint32_t acc = 0;
  for (int p = 0; p < 6; ++p) {
    auto t = b.mul(b.mul(b.input(perms[p][0]), b.input(3 + perms[p][1])), b.input(6 + perms[p][2]));
    acc = p == 0 ? t : b.add(acc, t);
  }
  const auto c3 = b.build(acc);
  const auto c2 = embed_lower_right(c3, 3, 2);
  ASSERT_EQ(c2.num_inputs(), 4u);
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    std::vector<BigInt> y = {rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9)};
    EXPECT_EQ(evaluate(c2, y), y[0] * y[3] + y[1] * y[2]);
  }
  const auto c1 = embed_lower_right(c3, 3, 1);
  std::vector<BigInt> one = {42};
  EXPECT_EQ(evaluate(c1, one), 42);
}

TEST(Expand, PermanentAndBudget) {
  const auto p = expand_to_polynomial(perm2(), 100);
  EXPECT_EQ(p.to_string(), "x0*x3 + x1*x2");
  CircuitBuilder b(2);
  auto g = b.add(b.input(0), b.input(1));
  for (int i = 0; i < 40; ++i) g = b.mul(g, g);
  EXPECT_THROW(expand_to_polynomial(b.build(g), 1000), TermBudgetExceeded);
}

TEST(Expand, AgreesWithEvaluation) {
  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    const auto c = random_circuit(3, 7, rng);
    const auto p = expand_to_polynomial(c, 100000);
    EXPECT_LE(p.total_degree(), c.formal_degree());
    for (int j = 0; j < 5; ++j) {
      std::vector<BigInt> pt = {rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(-20, 20)};
      EXPECT_EQ(p.evaluate(pt), evaluate(c, pt));
    }
  }
}

TEST(Circuit, FormalDegreeBoundedBySize) {
  Rng rng(30);
  for (int i = 0; i < 50; ++i) {
    const auto c = random_circuit(2, 12, rng);
    EXPECT_LE(c.formal_degree(), std::uint64_t{1} << c.size());
  }
}

TEST(Circuit, RegimeNames) {
  EXPECT_EQ(parse_regime("size"), Regime::Size);
  EXPECT_EQ(parse_regime(regime_name(Regime::BitSize)), Regime::BitSize);
  EXPECT_THROW(parse_regime("weird"), ConfigError);
}

}  // namespace
}  // namespace flipcheck
