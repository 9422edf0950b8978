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
#include "flipcheck/queries.hpp"

namespace flipcheck {
namespace {

Circuit scaled(const Circuit& c, long factor) {
  auto nodes = c.nodes();
  nodes.push_back(Node::constant(factor));
  nodes.push_back(Node::mul(static_cast<std::uint32_t>(c.output()), static_cast<std::uint32_t>(nodes.size() - 1)));
  return Circuit(c.num_inputs(), nodes, nodes.size() - 1);
}

Circuit zero_circuit(std::size_t inputs) { return Circuit(inputs, {Node::constant(0)}, 0); }

QueryConfig small_config(std::size_t count = 40) {
  QueryConfig cfg;
  cfg.count = count;
  return cfg;
}

TEST(Queries, GenerationIsDeterministic) {
  const auto a = gen_queries_P(3, small_config(), 17);
  const auto b = gen_queries_P(3, small_config(), 17);
  const auto c = gen_queries_P(3, small_config(), 18);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(gen_queries_E(2, 2, small_config(), 5), gen_queries_E(2, 2, small_config(), 5));
}

TEST(Queries, PointCounts) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& q : gen_queries_P(n, small_config(), n)) EXPECT_LE(q.points.size(), 2u) << q.key();
    for (const auto& q : gen_queries_selfreduce(n, small_config(), n)) {
      if (q.kind == QueryKind::SelfReduce) {
        EXPECT_EQ(q.points.size(), q.param + 1);
      } else {
        EXPECT_EQ(q.points.size(), 1u);
      }
    }
  }
  for (const auto& q : gen_queries_E(3, 2, small_config(), 1)) EXPECT_LE(q.points.size(), 2u);
}

TEST(Queries, PermLeftHasSwappedPoint) {
  const auto qs = gen_queries_P(3, small_config(), 2);
  bool found = false;
  for (const auto& q : qs) {
    if (q.kind != QueryKind::PPermLeft || q.param != 1) continue;
    found = true;
    ASSERT_EQ(q.points.size(), 2u);
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_EQ(q.points[1].at(0, c), q.points[0].at(1, c));
      EXPECT_EQ(q.points[1].at(1, c), q.points[0].at(0, c));
      EXPECT_EQ(q.points[1].at(2, c), q.points[0].at(2, c));
    }
  }
  EXPECT_TRUE(found);
}

TEST(Queries, KindsCovered) {
  std::set<QueryKind> kinds;
  for (const auto& q : gen_queries_P(2, small_config(), 3)) kinds.insert(q.kind);
  EXPECT_EQ(kinds, (std::set<QueryKind>{QueryKind::PNonZero, QueryKind::PPermLeft, QueryKind::PPermRight,
                                        QueryKind::PDiagLeft, QueryKind::PDiagRight, QueryKind::Normalize}));
  kinds.clear();
  for (const auto& q : gen_queries_E(3, 2, small_config(60), 3)) kinds.insert(q.kind);
  EXPECT_EQ(kinds, (std::set<QueryKind>{QueryKind::ENonZero, QueryKind::EElem, QueryKind::EKGen,
                                        QueryKind::EPrimaryVanish, QueryKind::Normalize}));
}

TEST(Queries, DiagonalIdentityHoldsForPermanentOracle) {
  for (const auto& q : gen_queries_P(3, small_config(), 4)) {
    if (q.nonzero) continue;
    BigInt lhs = 0;
    for (std::size_t t = 0; t < q.points.size(); ++t) lhs += q.coeffs[t] * permanent(q.points[t]);
    EXPECT_EQ(lhs, q.rhs) << q.key();
  }
}

TEST(Queries, SelfReductionHoldsForPermanentOracle) {
  for (const auto& q : gen_queries_selfreduce(4, small_config(), 9)) {
    BigInt lhs = 0;
    for (std::size_t t = 0; t < q.points.size(); ++t) lhs += q.coeffs[t] * permanent(q.points[t]);
    EXPECT_EQ(lhs, q.rhs) << q.key();
  }
}

TEST(Queries, EIdentitiesHoldForOracle) {
  for (auto mode : {DetFactorMode::DetCorrected, DetFactorMode::Literal}) {
    QueryConfig cfg = small_config(60);
    cfg.det_mode = mode;
    cfg.sample_bits = 8;
    for (auto [m, k] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 2}, {3, 2}, {1, 3}}) {
      for (const auto& q : gen_queries_E(m, k, cfg, m * 10 + k)) {
        if (q.nonzero) continue;
        BigInt lhs = 0;
        for (std::size_t t = 0; t < q.points.size(); ++t) lhs += q.coeffs[t] * efun(q.points[t]);
        EXPECT_EQ(lhs, q.rhs) << q.key();
        if (mode == DetFactorMode::Literal && q.group && !is_k_generator(*q.group)) {
          EXPECT_EQ(group_det(*q.group), 1);
        }
      }
    }
  }
}

TEST(Queries, PrimaryVanishPoint) {
  const auto qs = gen_queries_E(3, 2, small_config(60), 1);
  for (const auto& q : qs) {
    if (q.kind != QueryKind::EPrimaryVanish) continue;
    const auto& x = q.points[0];
    EXPECT_EQ(x.at(0, 0), 1);
    EXPECT_EQ(x.at(1, 0), 0);
    EXPECT_EQ(x.at(1, 1), 1);
    EXPECT_EQ(x.at(2, 2), 0);
    EXPECT_EQ(efun(x), 0);
  }
}

class PermVerify : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PermVerify, ReferenceCircuitAccepted) {
  const std::size_t n = GetParam();
  VerifyConfig cfg;
  cfg.queries.count = 200;
  cfg.route = VerifyConfig::Route::Both;
  const auto rep = verify_claims_perm(permanent_circuit(n), n, cfg, 7);
  EXPECT_TRUE(rep.accept) << rep.transcript;
  cfg.ring.kind = RingConfig::Kind::Integer;
  EXPECT_TRUE(verify_claims_perm(permanent_circuit(n), n, cfg, 8).accept);
}

INSTANTIATE_TEST_SUITE_P(Sizes, PermVerify, ::testing::Values(1, 2, 3, 4));

TEST(PermVerify, DeterminantRejected) {
  VerifyConfig cfg;
  const auto rep = verify_claims_perm(determinant_circuit(2), 2, cfg, 7);
  EXPECT_FALSE(rep.accept);
  bool perm_fail = false;
  for (const auto& v : rep.run.verdicts) perm_fail |= !v.pass && v.kind == QueryKind::PPermLeft;
  EXPECT_TRUE(perm_fail);
  EXPECT_NE(rep.transcript.find("REJECT"), std::string::npos);
}

TEST(PermVerify, ZeroCircuitRejected) {
  const auto rep = verify_claims_perm(zero_circuit(4), 2, VerifyConfig{}, 1);
  EXPECT_FALSE(rep.accept);
  EXPECT_FALSE(rep.run.verdicts[0].pass);  // PNonZero sorts first
  EXPECT_EQ(rep.run.verdicts[0].kind, QueryKind::PNonZero);
}

TEST(PermVerify, ScaledPermanentAndNormalization) {
  const auto c = scaled(permanent_circuit(2), 2);
  VerifyConfig cfg;
  const auto rep = verify_claims_perm(c, 2, cfg, 3);
  EXPECT_FALSE(rep.accept);
  std::size_t fails = 0;
  for (const auto& v : rep.run.verdicts) {
    if (v.pass) continue;
    ++fails;
    EXPECT_EQ(v.kind, QueryKind::Normalize);
    EXPECT_EQ(v.witness[0], MatrixAssignment::identity(2));
  }
  EXPECT_EQ(fails, 1u);
  cfg.queries.normalize = false;
  EXPECT_TRUE(verify_claims_perm(c, 2, cfg, 3).accept);
}

TEST(PermVerify, SerialAndParallelAgree) {
  VerifyConfig cfg;
  cfg.queries.count = 60;
  const auto serial = verify_claims_perm(determinant_circuit(3), 3, cfg, 11);
  cfg.threads = 4;
  const auto parallel = verify_claims_perm(determinant_circuit(3), 3, cfg, 11);
  EXPECT_EQ(serial.transcript, parallel.transcript);
}

TEST(PermVerify, ArityChecked) {
  EXPECT_THROW(verify_claims_perm(permanent_circuit(2), 3, VerifyConfig{}, 1), ArityMismatch);
}

TEST(EfunVerify, ExpandedCircuitsAccepted) {
  for (auto [m, k] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 2}, {1, 3}, {3, 2}}) {
    VerifyConfig cfg;
    cfg.queries.count = 60;
    EXPECT_TRUE(verify_claims_efun(efun_circuit(m, k), m, k, cfg, 5).accept) << m << "," << k;
    cfg.queries.det_mode = DetFactorMode::Literal;
    EXPECT_TRUE(verify_claims_efun(efun_circuit(m, k), m, k, cfg, 5).accept) << m << "," << k;
  }
}

TEST(EfunVerify, WrongCircuitsRejected) {
  const auto square = Circuit::parse("ninputs 2\ng0 = input 0\ng1 = mul g0 g0\noutput g1");
  const auto rep = verify_claims_efun(square, 1, 2, VerifyConfig{}, 5);
  EXPECT_FALSE(rep.accept);
  bool sym_fail = false;
  for (const auto& v : rep.run.verdicts)
    sym_fail |= !v.pass && (v.kind == QueryKind::EKGen || v.kind == QueryKind::EPrimaryVanish);
  EXPECT_TRUE(sym_fail);
  const auto zero = verify_claims_efun(zero_circuit(2), 1, 2, VerifyConfig{}, 5);
  EXPECT_FALSE(zero.accept);
  EXPECT_EQ(zero.run.verdicts[0].kind, QueryKind::ENonZero);
  EXPECT_FALSE(zero.run.verdicts[0].pass);
}

TEST(Exhaustive, Decisions) {
  const auto p = permanent_circuit(2);
  EXPECT_TRUE(verify_claims_perm_exhaustive(p, 2, true).accept);
  EXPECT_FALSE(verify_claims_perm_exhaustive(scaled(p, 2), 2, true).accept);
  EXPECT_TRUE(verify_claims_perm_exhaustive(scaled(p, -3), 2, false).accept);
  EXPECT_EQ(verify_claims_perm_exhaustive(scaled(p, 2), 2, true).failed, "Normalize");
  EXPECT_FALSE(verify_claims_perm_exhaustive(determinant_circuit(2), 2, false).accept);
  EXPECT_EQ(verify_claims_perm_exhaustive(zero_circuit(4), 2, false).failed, "PNonZero");
  const auto diag = Circuit::parse("ninputs 4\ng0 = input 0\ng1 = input 3\ng2 = mul g0 g1\noutput g2");
  EXPECT_FALSE(verify_claims_perm_exhaustive(diag, 2, false).accept);
  EXPECT_TRUE(verify_claims_perm_exhaustive(permanent_circuit(3), 3, true).accept);
  EXPECT_FALSE(verify_claims_perm_exhaustive(determinant_circuit(3), 3, true).accept);
}

TEST(Nullspace, PermanentIsUnique) {
  for (std::size_t n : {1u, 2u}) {
    const auto basis = perm_symmetry_nullspace(n, 2, 1);
    ASSERT_EQ(basis.size(), 1u);
    const auto ref = expand_to_polynomial(permanent_circuit(n), 1000);
    EXPECT_TRUE(basis[0].is_nonzero_multiple_of(ref));
  }
}

TEST(EmbedLowerRight, Placement) {
  const auto y = MatrixAssignment(Shape::square(1), {BigInt(9)});
  const auto x = embed_lower_right(y, 3);
  EXPECT_EQ(x.serialize(), "square 3\n1 0 0\n0 1 0\n0 0 9\n");
  EXPECT_EQ(permanent(x), 9);
}

}  // namespace
}  // namespace flipcheck
