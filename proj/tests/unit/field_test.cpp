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

#include "flipcheck/field.hpp"

namespace flipcheck {
namespace {

// Brute-force x^q by repeated multiplication, independent of ExtField::pow.
ExtFieldElement slow_power(const ExtField& f, const ExtFieldElement& x, std::uint64_t e) {
  ExtFieldElement acc = f.one();
  for (std::uint64_t i = 0; i < e; ++i) acc = f.mul(acc, x);
  return acc;
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(1), NotPrime);
  EXPECT_THROW(PrimeField(91), NotPrime);
  EXPECT_NO_THROW(PrimeField(97));
}

TEST(PrimeField, ArithmeticAgreesWithBigInt) {
  const std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  PrimeField fp(p);
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t a = rng.below(p), b = rng.below(p);
    BigInt prod = from_u64(a) * from_u64(b);
    EXPECT_EQ(fp.mul(a, b), mod_u64(prod, p));
    EXPECT_EQ(fp.add(a, b), mod_u64(from_u64(a) + from_u64(b), p));
    EXPECT_EQ(fp.sub(a, b), mod_u64(from_u64(a) - from_u64(b), p));
    if (a != 0) EXPECT_EQ(fp.mul(a, fp.inv(a)), 1u);
  }
  EXPECT_EQ(fp.from_bigint(BigInt(-1)), p - 1);
}

TEST(Irreducible, KnownModuli) {
  PrimeField f2(2), f3(3);
  EXPECT_EQ(find_irreducible(f2, 2), (FqPoly{1, 1, 1}));
  EXPECT_EQ(find_irreducible(f2, 3), (FqPoly{1, 1, 0, 1}));
  EXPECT_EQ(find_irreducible(f3, 2), (FqPoly{1, 0, 1}));
  EXPECT_FALSE(is_irreducible(f2, {1, 0, 1}));  // (t+1)^2
  EXPECT_THROW(ExtField(2, FqPoly{1, 0, 1}), NotIrreducible);
}

TEST(Irreducible, AgreesWithRootlessnessForLowDegree) {
  // For degree 2 and 3, irreducible iff no root in F_q.
  for (std::uint64_t q : {2, 3, 5, 7}) {
    PrimeField fq(q);
    for (std::size_t l : {2, 3}) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < l; ++i) total *= q;
      for (std::uint64_t code = 0; code < total; ++code) {
        FqPoly f(l + 1, 0);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < l; ++i) { f[i] = c % q; c /= q; }
        f[l] = 1;
        bool has_root = false;
        for (std::uint64_t x = 0; x < q && !has_root; ++x) {
          std::uint64_t v = 0;
          for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % q;
          has_root = v == 0;
        }
        EXPECT_EQ(is_irreducible(fq, f), !has_root) << "q=" << q << " code=" << code;
      }
    }
  }
}

TEST(ExtField, TraceInF4) {
  ExtField f4(2, 2);
  EXPECT_EQ(f4.trace(f4.zero()), 0u);
  EXPECT_EQ(f4.trace(f4.generator()), 1u);
  EXPECT_EQ(f4.trace(f4.one()), 0u);
}

TEST(ExtField, GramMatrixF4) {
  ExtField f4(2, 2);
  EXPECT_EQ(f4.trace_form_gram(), (FqMatrix{{0, 1}, {1, 1}}));
}

TEST(ExtField, GramMatrixF9Invertible) {
  ExtField f9(3, FqPoly{1, 0, 1});
  const auto g = f9.trace_form_gram();
  EXPECT_EQ(g, (FqMatrix{{2, 0}, {0, 1}}));  // trace(1)=2, trace(t^2)=trace(-1)=-2=1
  EXPECT_NE(determinant(f9.base(), g), 0u);
}

TEST(ExtField, DualBasisF4) {
  ExtField f4(2, 2);
  // G^{-1} = [[1,1],[1,0]]: b0* = 1 + t, b1* = 1.
  const auto dual = f4.dual_basis();
  ASSERT_EQ(dual.size(), 2u);
  EXPECT_EQ(dual[0].coeffs, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(dual[1].coeffs, (std::vector<std::uint64_t>{1, 0}));
}

TEST(ExtField, DualOfDualIsOriginalF8) {
  ExtField f8(2, FqPoly{1, 1, 0, 1});
  const auto dual = f8.dual_basis();
  ExtField swapped = f8.with_basis(dual);
  EXPECT_EQ(swapped.dual_basis(), f8.basis());
}

TEST(ExtField, ExtractCoeffsRoundtrip) {
  ExtField f9(3, 2);
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto x = f9.random(rng);
    EXPECT_EQ(f9.extract_coeffs(x), x.coeffs);
  }
  EXPECT_EQ(f9.extract_coeffs(f9.zero()), (std::vector<std::uint64_t>{0, 0}));
  for (std::size_t j = 0; j < 2; ++j) {
    std::vector<std::uint64_t> unit(2, 0);
    unit[j] = 1;
    EXPECT_EQ(f9.extract_coeffs(f9.basis()[j]), unit);
  }
}

TEST(ExtField, ExtractCoeffsInNonPowerBasis) {
  ExtField f8(2, 3);
  const auto t = f8.generator();
  // {1+t, t+t^2, t^2} is a basis of F_8 over F_2.
  ExtField g = f8.with_basis({f8.add(f8.one(), t), f8.add(t, f8.mul(t, t)), f8.mul(t, t)});
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::uint64_t> coords = {rng.below(2), rng.below(2), rng.below(2)};
    EXPECT_EQ(g.extract_coeffs(g.from_basis_coords(coords)), coords);
  }
  EXPECT_THROW(f8.with_basis({f8.one(), f8.one(), t}), ConfigError);
}

class TraceGrid : public ::testing::TestWithParam<std::pair<std::uint64_t, std::size_t>> {};

TEST_P(TraceGrid, FieldAxiomsAndTraceProperties) {
  const auto [q, l] = GetParam();
  ExtField f(q, l);
  Rng rng(q * 100 + l);
  for (int i = 0; i < 60; ++i) {
    const auto x = f.random(rng), y = f.random(rng), z = f.random(rng);
    EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
    EXPECT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
    if (!f.is_zero(x)) EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
    EXPECT_EQ(f.frobenius(x), slow_power(f, x, q));
    EXPECT_EQ(f.trace(f.add(x, y)), f.base().add(f.trace(x), f.trace(y)));
    EXPECT_EQ(f.trace(f.frobenius(x)), f.trace(x));
  }
  const auto dual = f.dual_basis();
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      EXPECT_EQ(f.trace(f.mul(dual[i], f.basis()[j])), i == j ? 1u : 0u);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, TraceGrid,
                         ::testing::Values(std::pair<std::uint64_t, std::size_t>{2, 2},
                                           std::pair<std::uint64_t, std::size_t>{2, 3},
                                           std::pair<std::uint64_t, std::size_t>{3, 2},
                                           std::pair<std::uint64_t, std::size_t>{5, 2},
                                           std::pair<std::uint64_t, std::size_t>{7, 3}));

TEST(ExtField, SerializeRoundtrip) {
  ExtField f(5, 2);
  const std::string s = f.serialize();
  EXPECT_EQ(ExtField::parse(s).serialize(), s);
  EXPECT_THROW(ExtField::parse("4 2 1 0 1"), NotPrime);
  EXPECT_THROW(ExtField::parse("2 2 1 1"), ConfigError);
}

TEST(ExtField, SingularGramRaises) {
  ExtField f4(2, 2);
  EXPECT_THROW(dual_from_gram(f4, f4.basis(), FqMatrix{{1, 1}, {1, 1}}), SingularTraceForm);
}

}  // namespace
}  // namespace flipcheck
