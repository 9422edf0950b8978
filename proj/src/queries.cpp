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

#include "flipcheck/queries.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <tuple>
#include <map>
#include <thread>

#include "flipcheck/field.hpp"
#include "flipcheck/oracles.hpp"
#include "flipcheck/rng.hpp"

namespace flipcheck {

namespace {

constexpr std::uint64_t kStreamP = 0x50;
constexpr std::uint64_t kStreamSelfReduce = 0x53;
constexpr std::uint64_t kStreamE = 0x45;

std::string flat(const MatrixAssignment& x) {
  std::string s = "[";
  for (std::size_t r = 0; r < x.shape.rows(); ++r) {
    if (r) s += ";";
    for (std::size_t c = 0; c < x.shape.cols(); ++c) {
      if (c) s += ",";
      s += x.at(r, c).get_str();
    }
  }
  return s + "]";
}

MatrixAssignment random_matrix(Shape s, Rng& rng, std::size_t bits) {
  MatrixAssignment x(s);
  for (auto& e : x.entries) e = rng.in_box(bits);
  return x;
}

Diagonal random_diagonal(std::size_t dim, Rng& rng, std::size_t bits) {
  Diagonal d;
  for (std::size_t i = 0; i < dim; ++i) d.entries.push_back(rng.in_box(bits));
  return d;
}

Query pair_query(QueryKind kind, std::size_t param, GroupElement g, MatrixAssignment x, Side side,
                 const BigInt& factor) {
  Query q;
  q.kind = kind;
  q.param = param;
  auto gx = apply_group(g, x, side);
  q.group = std::move(g);
  q.points = {std::move(x), std::move(gx)};
  q.coeffs = {-factor, 1};
  q.rhs = 0;
  return q;
}

Query nonzero_query(QueryKind kind, MatrixAssignment x) {
  Query q;
  q.kind = kind;
  q.points = {std::move(x)};
  q.nonzero = true;
  return q;
}

Query value_query(QueryKind kind, MatrixAssignment x, BigInt value) {
  Query q;
  q.kind = kind;
  q.points = {std::move(x)};
  q.coeffs = {1};
  q.rhs = std::move(value);
  return q;
}

BigInt power(const BigInt& base, std::uint64_t e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

std::string_view query_kind_name(QueryKind k) {
  switch (k) {
    case QueryKind::PNonZero: return "PNonZero";
    case QueryKind::PPermLeft: return "PPermLeft";
    case QueryKind::PPermRight: return "PPermRight";
    case QueryKind::PDiagLeft: return "PDiagLeft";
    case QueryKind::PDiagRight: return "PDiagRight";
    case QueryKind::SelfReduceBase: return "SelfReduceBase";
    case QueryKind::SelfReduce: return "SelfReduce";
    case QueryKind::ENonZero: return "ENonZero";
    case QueryKind::EElem: return "EElem";
    case QueryKind::EKGen: return "EKGen";
    case QueryKind::EPrimaryVanish: return "EPrimaryVanish";
    case QueryKind::Normalize: return "Normalize";
  }
  return "?";
}

std::string Query::key() const {
  std::string s(query_kind_name(kind));
  s += " " + std::to_string(param);
  s += " " + (group ? describe(*group) : std::string("-"));
  if (nonzero) {
    s += " nonzero";
  } else {
    s += " rel";
    for (const auto& c : coeffs) s += " " + c.get_str();
    s += " = " + rhs.get_str();
  }
  for (const auto& p : points) s += " " + flat(p);
  return s;
}

std::string_view det_mode_name(DetFactorMode m) { return m == DetFactorMode::Literal ? "literal" : "det-corrected"; }

DetFactorMode parse_det_mode(std::string_view text) {
  if (text == "literal") return DetFactorMode::Literal;
  if (text == "det-corrected") return DetFactorMode::DetCorrected;
  throw ConfigError("det factor mode must be 'literal' or 'det-corrected'");
}

std::size_t sample_bits_for(std::size_t size_bound, std::size_t max_bits) {
  if (size_bound != 0 && size_bound < 16 && size_bound * size_bound < max_bits) return size_bound * size_bound;
  return max_bits;
}

void canonicalize(std::vector<Query>& qs) {
  std::vector<std::pair<std::tuple<int, std::size_t, std::string>, Query>> keyed;
  keyed.reserve(qs.size());
  for (auto& q : qs) keyed.push_back({{static_cast<int>(q.kind), q.param, q.key()}, std::move(q)});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  qs.clear();
  for (auto& kq : keyed) qs.push_back(std::move(kq.second));
}

MatrixAssignment embed_lower_right(const MatrixAssignment& y, std::size_t n) {
  const std::size_t i = y.shape.m;
  if (y.shape.kind != Shape::Kind::Square || i > n) throw ShapeMismatch("cannot embed a larger matrix");
  auto x = MatrixAssignment::identity(n);
  const std::size_t off = n - i;
  for (std::size_t r = 0; r < i; ++r)
    for (std::size_t c = 0; c < i; ++c) x.at(off + r, off + c) = y.at(r, c);
  return x;
}

std::vector<Query> gen_queries_P(std::size_t n, const QueryConfig& cfg, std::uint64_t seed) {
  if (n == 0) throw ConfigError("n must be positive");
  const Shape shape = Shape::square(n);
  enum class T { SwapL, SwapR, DiagL, DiagR };
  std::vector<std::pair<T, std::size_t>> templates;
  for (std::size_t i = 1; i < n; ++i) {
    templates.push_back({T::SwapL, i});
    templates.push_back({T::SwapR, i});
  }
  templates.push_back({T::DiagL, 0});
  templates.push_back({T::DiagR, 0});

  std::vector<Query> qs;
  std::size_t nonzero = 0;
  std::size_t cursor = 0;
  for (std::size_t t = 0; t < cfg.count; ++t) {
    Rng rng(derive_seed(seed, kStreamP, t));
    if (cfg.normalize && t == 0) {
      qs.push_back(value_query(QueryKind::Normalize, MatrixAssignment::identity(n), 1));
      continue;
    }
    auto x = random_matrix(shape, rng, cfg.sample_bits);
    if (nonzero < cfg.nonzero_count) {
      ++nonzero;
      qs.push_back(nonzero_query(QueryKind::PNonZero, std::move(x)));
      continue;
    }
    const auto [kind, i] = templates[cursor++ % templates.size()];
    switch (kind) {
      case T::SwapL: qs.push_back(pair_query(QueryKind::PPermLeft, i, PermSwap{i}, std::move(x), Side::Left, 1)); break;
      case T::SwapR: qs.push_back(pair_query(QueryKind::PPermRight, i, PermSwap{i}, std::move(x), Side::Right, 1)); break;
      case T::DiagL:
      case T::DiagR: {
        auto d = random_diagonal(n, rng, cfg.sample_bits);
        const BigInt factor = diagonal_product(d);
        qs.push_back(pair_query(kind == T::DiagL ? QueryKind::PDiagLeft : QueryKind::PDiagRight, 0, std::move(d),
                                std::move(x), kind == T::DiagL ? Side::Left : Side::Right, factor));
        break;
      }
    }
  }
  canonicalize(qs);
  return qs;
}

std::vector<Query> gen_queries_selfreduce(std::size_t n, const QueryConfig& cfg, std::uint64_t seed) {
  if (n == 0) throw ConfigError("n must be positive");
  std::vector<Query> qs;
  for (std::size_t t = 0; t < cfg.count; ++t) {
    Rng rng(derive_seed(seed, kStreamSelfReduce, t));
    const std::size_t i = t % n + 1;
    if (i == 1) {
      const BigInt y = rng.in_box(cfg.sample_bits);
      auto q = value_query(QueryKind::SelfReduceBase, embed_lower_right(MatrixAssignment(Shape::square(1), {y}), n), y);
      q.param = 1;
      qs.push_back(std::move(q));
      continue;
    }
    const auto y = random_matrix(Shape::square(i), rng, cfg.sample_bits);
    Query q;
    q.kind = QueryKind::SelfReduce;
    q.param = i;
    q.points.push_back(embed_lower_right(y, n));
    q.coeffs.push_back(1);
    for (std::size_t j = 0; j < i; ++j) {
      MatrixAssignment minor(Shape::square(i - 1));
      for (std::size_t r = 1; r < i; ++r)
        for (std::size_t c = 0, cc = 0; c < i; ++c)
          if (c != j) minor.at(r - 1, cc++) = y.at(r, c);
      q.points.push_back(embed_lower_right(minor, n));
      q.coeffs.push_back(-y.at(0, j));
    }
    q.rhs = 0;
    qs.push_back(std::move(q));
  }
  canonicalize(qs);
  return qs;
}

std::vector<Query> gen_queries_E(std::size_t m, std::size_t k, const QueryConfig& cfg, std::uint64_t seed) {
  const std::uint64_t exponent = sigma_count(m, k, UINT64_MAX);
  const Shape shape = Shape::block(m, k);
  const bool literal = cfg.det_mode == DetFactorMode::Literal;

  std::vector<GroupElement> elems;  // template elements; diagonals are resampled
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      if (i != j) elems.push_back(ElementaryAdd{i, j, 0});
  elems.push_back(Diagonal{});
  if (literal) {
    for (std::size_t j = 3; j <= m; ++j) elems.push_back(RowCycle{1, 2, j});
  } else {
    for (std::size_t i = 1; i < m; ++i) elems.push_back(PermSwap{i});
  }
  const auto gens = k_generators(m, k);
  enum class T { Elem, KGen, Vanish };
  std::vector<std::pair<T, std::size_t>> templates;
  for (std::size_t e = 0; e < elems.size(); ++e) templates.push_back({T::Elem, e});
  for (std::size_t g = 0; g < gens.size(); ++g) templates.push_back({T::KGen, g});
  templates.push_back({T::Vanish, 0});

  std::vector<Query> qs;
  std::size_t nonzero = 0;
  std::size_t cursor = 0;
  for (std::size_t t = 0; t < cfg.count; ++t) {
    Rng rng(derive_seed(seed, kStreamE, t));
    if (cfg.normalize && t == 0) {
      qs.push_back(value_query(QueryKind::Normalize, MatrixAssignment::unit_columns(m, k), 1));
      continue;
    }
    auto x = random_matrix(shape, rng, cfg.sample_bits);
    if (nonzero < cfg.nonzero_count) {
      ++nonzero;
      qs.push_back(nonzero_query(QueryKind::ENonZero, std::move(x)));
      continue;
    }
    const auto [kind, idx] = templates[cursor++ % templates.size()];
    if (kind == T::Vanish) {
      for (std::size_t i = 1; i <= m; ++i) {
        const std::size_t col = shape.block_col(1, i);
        if (i < m) {
          for (std::size_t r = 0; r < m; ++r) x.at(r, col) = r + 1 == i ? 1 : 0;
        } else {
          x.at(m - 1, col) = 0;
        }
      }
      Query q = value_query(QueryKind::EPrimaryVanish, std::move(x), 0);
      qs.push_back(std::move(q));
    } else if (kind == T::KGen) {
      qs.push_back(pair_query(QueryKind::EKGen, idx + 1, gens[idx], std::move(x), Side::Right, 1));
    } else {
      GroupElement e = elems[idx];
      if (auto* add = std::get_if<ElementaryAdd>(&e)) {
        add->y = rng.in_box(cfg.sample_bits);
      } else if (auto* d = std::get_if<Diagonal>(&e)) {
        if (literal) {
          // Random signs with product one.
          BigInt sign = 1;
          for (std::size_t i = 0; i + 1 < m; ++i) {
            d->entries.push_back(rng.coin() ? 1 : -1);
            sign *= d->entries.back();
          }
          d->entries.push_back(sign);
        } else {
          *d = random_diagonal(m, rng, cfg.sample_bits);
        }
      }
      const BigInt factor = literal ? BigInt(1) : power(group_det(e), exponent);
      qs.push_back(pair_query(QueryKind::EElem, idx + 1, std::move(e), std::move(x), Side::Left, factor));
    }
  }
  canonicalize(qs);
  return qs;
}

namespace {

struct PointValues {
  bool pass = true;
  std::string detail;
};

std::string render_values(const std::vector<std::string>& vals) {
  std::string s = "values=";
  for (std::size_t i = 0; i < vals.size(); ++i) s += (i ? "," : "") + vals[i];
  return s;
}

PointValues check_integer(const Circuit& c, const Query& q) {
  std::vector<BigInt> vals;
  for (const auto& p : q.points) vals.push_back(evaluate(c, p.entries));
  std::vector<std::string> strs;
  for (const auto& v : vals) strs.push_back(v.get_str());
  if (q.nonzero) return {sgn(vals[0]) != 0, render_values(strs)};
  BigInt lhs = 0;
  for (std::size_t t = 0; t < vals.size(); ++t) lhs += q.coeffs[t] * vals[t];
  return {lhs == q.rhs, render_values(strs) + " lhs=" + lhs.get_str() + " rhs=" + q.rhs.get_str()};
}

PointValues check_modular(const Circuit& c, const Query& q, const RingConfig& ring, std::uint64_t seed,
                          std::size_t index) {
  bool any_nonzero = false;
  for (std::size_t r = 0; r < ring.primes; ++r) {
    const std::uint64_t p = random_prime(ring.prime_bits, derive_seed(seed, 0x7072696d65ULL + index, r));
    PrimeField fp(p);
    std::vector<std::uint64_t> vals;
    for (const auto& pt : q.points) vals.push_back(evaluate_mod(c, pt.entries, p));
    if (q.nonzero) {
      any_nonzero = any_nonzero || vals[0] != 0;
      continue;
    }
    std::uint64_t lhs = 0;
    for (std::size_t t = 0; t < vals.size(); ++t) lhs = fp.add(lhs, fp.mul(fp.from_bigint(q.coeffs[t]), vals[t]));
    const std::uint64_t rhs = fp.from_bigint(q.rhs);
    if (lhs != rhs) {
      std::vector<std::string> strs;
      for (auto v : vals) strs.push_back(std::to_string(v));
      return {false, "mod " + std::to_string(p) + " " + render_values(strs) + " lhs=" + std::to_string(lhs) +
                         " rhs=" + std::to_string(rhs)};
    }
  }
  if (q.nonzero && !any_nonzero) {
    if (c.formal_degree() <= ring.exact_recheck_degree) return check_integer(c, q);
    return {false, "zero modulo " + std::to_string(ring.primes) + " random primes"};
  }
  return {true, ""};
}

}  // namespace

RunResult run_queries(const Circuit& c, const std::vector<Query>& qs, const RingConfig& ring, std::uint64_t seed,
                      std::size_t threads) {
  for (const auto& q : qs)
    for (const auto& p : q.points)
      if (p.entries.size() != c.num_inputs()) {
        throw ArityMismatch("query points have " + std::to_string(p.entries.size()) + " entries but the circuit has " +
                            std::to_string(c.num_inputs()) + " inputs");
      }
  RunResult result;
  result.verdicts.resize(qs.size());
  auto work = [&](std::size_t t) {
    const Query& q = qs[t];
    const PointValues pv = ring.kind == RingConfig::Kind::Integer ? check_integer(c, q) : check_modular(c, q, ring, seed, t);
    Verdict& v = result.verdicts[t];
    v.index = t;
    v.kind = q.kind;
    v.pass = pv.pass;
    if (!pv.pass) {
      v.witness = q.points;
      v.detail = pv.detail;
    }
  };
  if (threads <= 1) {
    for (std::size_t t = 0; t < qs.size(); ++t) work(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < qs.size(); t = next++) work(t);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& q : qs)
    result.evaluations += q.points.size() * (ring.kind == RingConfig::Kind::Integer ? 1 : ring.primes);
  result.accept = std::all_of(result.verdicts.begin(), result.verdicts.end(), [](const Verdict& v) { return v.pass; });
  return result;
}

std::string format_transcript(const std::vector<Query>& qs, const RunResult& r) {
  std::string out;
  for (const auto& v : r.verdicts) {
    out += "QUERY " + std::to_string(v.index) + " " + std::string(query_kind_name(v.kind)) + (v.pass ? " pass" : " fail");
    if (!v.pass) {
      const Query& q = qs[v.index];
      if (q.group) out += " group=" + describe(*q.group);
      out += " " + v.detail + " points=";
      for (std::size_t i = 0; i < v.witness.size(); ++i) out += (i ? "," : "") + flat(v.witness[i]);
    }
    out += "\n";
  }
  out += r.accept ? "ACCEPT\n" : "REJECT\n";
  return out;
}

namespace {

VerifyReport finish(const Circuit& c, std::vector<Query> qs, const VerifyConfig& cfg, std::uint64_t seed,
                    std::size_t rows) {
  VerifyReport rep;
  rep.run = run_queries(c, qs, cfg.ring, seed, cfg.threads);
  rep.accept = rep.run.accept;
  rep.queries = std::move(qs);
  const double box = cfg.queries.sample_bits >= 1000 ? 1e300 : std::ldexp(1.0, static_cast<int>(cfg.queries.sample_bits));
  rep.error_bound = std::min(1.0, (static_cast<double>(c.formal_degree()) + static_cast<double>(rows)) / box);
  rep.transcript = format_transcript(rep.queries, rep.run);
  return rep;
}

}  // namespace

VerifyReport verify_claims_perm(const Circuit& c, std::size_t n, const VerifyConfig& cfg, std::uint64_t seed) {
  if (c.num_inputs() != n * n) {
    throw ArityMismatch("permanent circuit must have n^2 = " + std::to_string(n * n) + " inputs");
  }
  std::vector<Query> qs;
  if (cfg.route != VerifyConfig::Route::SelfReduce) qs = gen_queries_P(n, cfg.queries, seed);
  if (cfg.route != VerifyConfig::Route::Symmetry) {
    auto sr = gen_queries_selfreduce(n, cfg.queries, seed);
    qs.insert(qs.end(), std::make_move_iterator(sr.begin()), std::make_move_iterator(sr.end()));
    canonicalize(qs);
  }
  return finish(c, std::move(qs), cfg, seed, n);
}

VerifyReport verify_claims_efun(const Circuit& c, std::size_t m, std::size_t k, const VerifyConfig& cfg,
                                std::uint64_t seed) {
  if (c.num_inputs() != k * m * m) {
    throw ArityMismatch("E(X) circuit must have k*m^2 = " + std::to_string(k * m * m) + " inputs");
  }
  return finish(c, gen_queries_E(m, k, cfg.queries, seed), cfg, seed, m);
}

namespace {

// Signed 64-bit ring that throws on overflow; the exhaustive verifier falls
// back to BigInt when it does.
struct CheckedRing {
  using value_type = std::int64_t;
  struct Overflow {};
  value_type from_bigint(const BigInt& x) const {
    if (!x.fits_slong_p()) throw Overflow{};
    return x.get_si();
  }
  value_type add(value_type a, value_type b) const {
    value_type r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  value_type sub(value_type a, value_type b) const {
    value_type r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  value_type mul(value_type a, value_type b) const {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
};

BigInt eval_small(const Circuit& c, const std::vector<std::int64_t>& pt) {
  try {
    return BigInt(static_cast<long>(evaluate<CheckedRing>(c, pt, CheckedRing{})));
  } catch (const CheckedRing::Overflow&) {
    std::vector<BigInt> big(pt.begin(), pt.end());
    for (std::size_t i = 0; i < pt.size(); ++i) big[i] = static_cast<long>(pt[i]);
    return evaluate(c, big);
  }
}

// True iff f vanishes on the grid prod_v [0, sizes[v]).
template <class F>
bool vanishes_on_grid(const std::vector<std::uint64_t>& sizes, std::uint64_t budget, F f) {
  std::uint64_t total = 1;
  for (auto s : sizes) {
    if (s > budget || total > budget / s) throw BudgetExceeded("exhaustive grid exceeds its budget");
    total *= s;
  }
  std::vector<std::int64_t> pt(sizes.size(), 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    if (sgn(f(pt)) != 0) return false;
    for (std::size_t v = 0; v < pt.size(); ++v) {
      if (static_cast<std::uint64_t>(++pt[v]) < sizes[v]) break;
      pt[v] = 0;
    }
  }
  return true;
}

}  // namespace

ExhaustiveVerdict verify_claims_perm_exhaustive(const Circuit& c, std::size_t n, bool normalize,
                                                std::uint64_t grid_budget) {
  const std::size_t nv = n * n;
  if (c.num_inputs() != nv) throw ArityMismatch("permanent circuit must have n^2 inputs");
  const auto deg = c.variable_degrees();
  auto grid = [&](std::uint64_t d) { return d == UINT64_MAX ? d : d + 1; };

  std::vector<std::uint64_t> sizes(nv);
  for (std::size_t v = 0; v < nv; ++v) sizes[v] = grid(deg[v]);
  const bool zero = vanishes_on_grid(sizes, grid_budget, [&](const std::vector<std::int64_t>& x) -> BigInt { return eval_small(c, x); });
  if (zero) return {false, "PNonZero"};

  for (const Side side : {Side::Left, Side::Right}) {
    const bool left = side == Side::Left;
    for (std::size_t i = 1; i < n; ++i) {
      // Variable v of C(e_i X) reads entry perm(v) of X.
      std::vector<std::size_t> perm(nv);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col) {
          std::size_t rr = r, cc = col;
          std::size_t& moved = left ? rr : cc;
          if (moved == i - 1) moved = i; else if (moved == i) moved = i - 1;
          perm[r * n + col] = rr * n + cc;
        }
      for (std::size_t v = 0; v < nv; ++v) sizes[v] = grid(std::max(deg[v], deg[perm[v]]));
      const bool ok = vanishes_on_grid(sizes, grid_budget, [&](const std::vector<std::int64_t>& x) -> BigInt {
        std::vector<std::int64_t> y(nv);
        for (std::size_t v = 0; v < nv; ++v) y[v] = x[perm[v]];
        return eval_small(c, y) - eval_small(c, x);
      });
      if (!ok) return {false, std::string(left ? "PPermLeft(" : "PPermRight(") + std::to_string(i) + ")"};
    }
    // C(mu X) - p(mu) C(X) with mu as n extra variables.
    std::vector<std::uint64_t> dsizes(nv + n);
    for (std::size_t v = 0; v < nv; ++v) dsizes[v] = grid(deg[v]);
    for (std::size_t l = 0; l < n; ++l) {
      std::uint64_t line = 0;
      for (std::size_t t = 0; t < n; ++t) {
        const auto d = deg[left ? l * n + t : t * n + l];
        line = d > UINT64_MAX - line ? UINT64_MAX : line + d;
      }
      dsizes[nv + l] = grid(std::max<std::uint64_t>(1, line));
    }
    const bool ok = vanishes_on_grid(dsizes, grid_budget, [&](const std::vector<std::int64_t>& z) -> BigInt {
      std::vector<std::int64_t> x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(nv));
      std::vector<std::int64_t> scaled = x;
      BigInt pmu = 1;
      for (std::size_t l = 0; l < n; ++l) {
        pmu *= static_cast<long>(z[nv + l]);
        for (std::size_t t = 0; t < n; ++t) {
          const std::size_t v = left ? l * n + t : t * n + l;
          scaled[v] = x[v] * z[nv + l];  // grid values are tiny
        }
      }
      return eval_small(c, scaled) - pmu * eval_small(c, x);
    });
    if (!ok) return {false, left ? "PDiagLeft" : "PDiagRight"};
  }
  if (normalize) {
    std::vector<std::int64_t> id(nv, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    if (eval_small(c, id) != 1) return {false, "Normalize"};
  }
  return {true, ""};
}

std::vector<SparsePoly> perm_symmetry_nullspace(std::size_t n, std::size_t diag_samples, std::uint64_t seed) {
  const std::size_t nv = n * n;
  // All exponent vectors of total degree <= n.
  std::vector<Monomial> monos;
  Monomial cur(nv, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t v, std::uint64_t left) {
    if (v == nv) {
      monos.push_back(cur);
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      cur[v] = e;
      rec(v + 1, left - e);
    }
    cur[v] = 0;
  };
  rec(0, n);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  const std::size_t cols = monos.size();

  // Incremental reduced row echelon form over Q.
  std::vector<std::vector<mpq_class>> rows;
  std::vector<std::size_t> pivots;
  auto add_row = [&](std::vector<mpq_class> row) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (sgn(row[pivots[r]]) == 0) continue;
      const mpq_class f = row[pivots[r]];
      for (std::size_t c = 0; c < cols; ++c)
        if (sgn(rows[r][c]) != 0) row[c] -= f * rows[r][c];
    }
    std::size_t p = 0;
    while (p < cols && sgn(row[p]) == 0) ++p;
    if (p == cols) return;
    const mpq_class inv = 1 / row[p];
    for (auto& e : row) e *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (sgn(rows[r][p]) == 0) continue;
      const mpq_class f = rows[r][p];
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] -= f * row[c];
    }
    rows.push_back(std::move(row));
    pivots.push_back(p);
  };

  for (const bool left : {true, false}) {
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t mi = 0; mi < cols; ++mi) {
        Monomial img(nv);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) {
            std::size_t rr = r, cc = c;
            std::size_t& moved = left ? rr : cc;
            if (moved == i - 1) moved = i; else if (moved == i) moved = i - 1;
            img[rr * n + cc] = monos[mi][r * n + c];
          }
        const std::size_t mj = index.at(img);
        if (mj == mi) continue;
        std::vector<mpq_class> row(cols, 0);
        row[mi] = 1;
        row[mj] = -1;
        add_row(std::move(row));
      }
    }
    Rng rng(derive_seed(seed, left ? 0x4c : 0x52));
    for (std::size_t s = 0; s < diag_samples; ++s) {
      std::vector<BigInt> mu(n);
      BigInt pmu = 1;
      for (auto& x : mu) {
        x = rng.uniform(2, 1000);
        pmu *= x;
      }
      for (std::size_t mi = 0; mi < cols; ++mi) {
        BigInt scale = 1;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) {
            BigInt f;
            mpz_pow_ui(f.get_mpz_t(), mu[left ? r : c].get_mpz_t(), monos[mi][r * n + c]);
            scale *= f;
          }
        if (scale == pmu) continue;
        std::vector<mpq_class> row(cols, 0);
        row[mi] = 1;
        add_row(std::move(row));
      }
    }
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<SparsePoly> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> vec(cols, 0);
    vec[f] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) vec[pivots[r]] = -rows[r][f];
    BigInt lcm = 1;
    for (const auto& e : vec)
      if (sgn(e) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den_mpz_t());
    SparsePoly p(nv);
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(vec[c]) == 0) continue;
      mpq_class scaled = vec[c] * lcm;
      p.add_term(monos[c], scaled.get_num());
    }
    basis.push_back(std::move(p));
  }
  return basis;
}

}  // namespace flipcheck
