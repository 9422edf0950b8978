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

#include "flipcheck/pit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "flipcheck/rng.hpp"

namespace flipcheck {

namespace {

std::string join(const std::vector<BigInt>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i].get_str();
  return s;
}

std::vector<BigInt> parse_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(parse_bigint(tok));
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const auto x = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + key + ": '" + v + "'");
  }
}

}  // namespace

std::string ClassParams::serialize() const {
  std::string s = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " alphabet=" + join(alphabet, ",") +
                  " regime=" + std::string(regime_name(regime));
  if (max_degree) s += " max_degree=" + std::to_string(*max_degree);
  return s;
}

ClassParams ClassParams::parse(std::string_view text) {
  ClassParams p;
  p.alphabet.clear();
  std::istringstream in{std::string(text)};
  std::string tok;
  bool have_n = false, have_m = false;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq), v = tok.substr(eq + 1);
    if (key == "n") {
      p.n = parse_u64(key, v);
      have_n = true;
    } else if (key == "m") {
      p.m = parse_u64(key, v);
      have_m = true;
    } else if (key == "alphabet") {
      p.alphabet = v.empty() ? std::vector<BigInt>{} : parse_list(v);
    } else if (key == "regime") {
      p.regime = parse_regime(v);
    } else if (key == "max_degree") {
      p.max_degree = parse_u64(key, v);
    } else if (key == "budget") {
      p.budget = parse_u64(key, v);
    } else {
      throw ConfigError("unknown class parameter '" + key + "'");
    }
  }
  if (!have_n || !have_m) throw ConfigError("class needs n and m");
  return p;
}

bool ClassParams::operator==(const ClassParams& o) const {
  return n == o.n && m == o.m && alphabet == o.alphabet && regime == o.regime && max_degree == o.max_degree;
}

namespace {

struct Expr {
  Node node;                        // operands refer to expression ids
  std::vector<std::uint32_t> nodes;  // sorted ids of every distinct subexpression
  std::uint64_t cost = 0;
};

}  // namespace

std::vector<Circuit> enumerate_circuits(const ClassParams& cls) {
  std::vector<BigInt> alphabet = cls.alphabet;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

  std::vector<Expr> exprs;
  std::vector<std::uint64_t> node_cost;
  auto add_leaf = [&](Node n, std::uint64_t cost) {
    if (cost > cls.m) return;
    const auto id = static_cast<std::uint32_t>(exprs.size());
    exprs.push_back({std::move(n), {id}, cost});
    node_cost.push_back(cost);
  };
  for (std::uint32_t v = 0; v < cls.n; ++v) add_leaf(Node::input(v), 1);
  for (const auto& a : alphabet) add_leaf(Node::constant(a), 1 + (cls.regime == Regime::BitSize ? bitlength(a) : 0));

  std::vector<std::uint32_t> merged;
  for (std::uint64_t target = 2; target <= cls.m; ++target) {
    const std::size_t existing = exprs.size();
    for (std::size_t i = 0; i < existing; ++i) {
      for (std::size_t j = 0; j < existing; ++j) {
        const auto& a = exprs[i];
        const auto& b = exprs[j];
        if (a.cost + b.cost + 1 < target) continue;
        if (std::max(a.cost, b.cost) + 1 > target) continue;
        merged.clear();
        std::set_union(a.nodes.begin(), a.nodes.end(), b.nodes.begin(), b.nodes.end(), std::back_inserter(merged));
        std::uint64_t cost = 1;
        for (auto id : merged) cost += node_cost[id];
        if (cost != target) continue;
        for (Op op : {Op::Add, Op::Sub, Op::Mul}) {
          if (op != Op::Sub && j < i) continue;
          const auto id = static_cast<std::uint32_t>(exprs.size());
          Expr e;
          e.node = Node{op, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0};
          e.nodes = merged;
          e.nodes.push_back(id);
          e.cost = cost;
          exprs.push_back(std::move(e));
          node_cost.push_back(1);
          if (exprs.size() > cls.budget) {
            throw BudgetExceeded("circuit class exceeds the enumeration budget of " + std::to_string(cls.budget));
          }
        }
      }
    }
  }

  std::vector<std::pair<std::pair<std::uint64_t, std::string>, Circuit>> keyed;
  keyed.reserve(exprs.size());
  for (const auto& e : exprs) {
    std::vector<std::uint32_t> dense(exprs.size());
    std::vector<Node> nodes;
    nodes.reserve(e.nodes.size());
    for (auto id : e.nodes) {
      Node n = exprs[id].node;
      if (!n.is_leaf()) {
        n.a = dense[n.a];
        n.b = dense[n.b];
      }
      dense[id] = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back(std::move(n));
    }
    Circuit c(cls.n, std::move(nodes), e.nodes.size() - 1);
    if (cls.max_degree && expand_to_polynomial(c, 1u << 20).total_degree() > *cls.max_degree) continue;
    auto text = c.serialize();
    keyed.push_back({{e.cost, std::move(text)}, std::move(c)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Circuit> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

std::size_t count_circuits(const ClassParams& cls) { return enumerate_circuits(cls).size(); }

PitResult pit_random(const Circuit& c, std::size_t trials, std::uint64_t seed, const BigInt& box,
                     std::size_t prime_bits) {
  if (trials == 0) throw ConfigError("pit needs at least one trial");
  if (box < 1) throw ConfigError("sample box must be nonempty");
  PitResult r;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, 0x706974, t));
    Point p(c.num_inputs());
    for (auto& x : p) x = rng.uniform(1, box);
    ++r.trials_run;
    if (prime_bits == 0) {
      const BigInt v = evaluate(c, p);
      if (sgn(v) != 0) {
        r.nonzero = true;
        r.witness = std::move(p);
        r.value = v.get_str();
        return r;
      }
    } else {
      const auto m = evaluate_mod_random_prime(c, p, prime_bits, derive_seed(seed, 0x7072, t));
      if (m.residue != 0) {
        r.nonzero = true;
        r.witness = std::move(p);
        r.value = std::to_string(m.residue) + " mod " + std::to_string(m.prime);
        return r;
      }
    }
  }
  const double ratio = std::min(1.0, static_cast<double>(c.formal_degree()) / box.get_d());
  r.error_bound = std::pow(ratio, static_cast<double>(trials));
  return r;
}

std::size_t HittingSet::total_bits() const {
  std::size_t bits = 0;
  for (const auto& p : points)
    for (const auto& x : p) bits += std::max<std::size_t>(1, bitlength(x));
  return bits;
}

std::string HittingSet::serialize() const {
  std::string s = "hitting-set\nclass " + cls.serialize() + "\npoints " + std::to_string(points.size()) + "\n";
  for (const auto& p : points) s += join(p, " ") + "\n";
  return s;
}

HittingSet HittingSet::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  // Lines starting with '#' carry provenance and are skipped.
  auto next = [&] {
    while (std::getline(in, line))
      if (line.empty() || line[0] != '#') return true;
    return false;
  };
  if (!next() || line != "hitting-set") throw MalformedEncoding("missing `hitting-set` header");
  if (!next() || line.rfind("class ", 0) != 0) throw MalformedEncoding("missing class line");
  HittingSet h;
  h.cls = ClassParams::parse(line.substr(6));
  if (!next() || line.rfind("points ", 0) != 0) throw MalformedEncoding("missing points line");
  const std::size_t count = parse_u64("points", line.substr(7));
  for (std::size_t i = 0; i < count; ++i) {
    if (!next()) throw MalformedEncoding("truncated point list");
    std::istringstream row(line);
    Point p;
    std::string tok;
    while (row >> tok) p.push_back(parse_bigint(tok));
    if (p.size() != h.cls.n) throw MalformedEncoding("point has the wrong number of coordinates");
    h.points.push_back(std::move(p));
  }
  while (next()) {
    if (!line.empty()) throw MalformedEncoding("trailing data after points");
  }
  return h;
}

std::vector<Point> candidate_pool(std::size_t n, std::size_t family, const PoolOptions& opts) {
  if (opts.box < 1 || opts.pool_size == 0) throw ConfigError("pool needs a nonempty box and size");
  BigInt total;
  mpz_pow_ui(total.get_mpz_t(), opts.box.get_mpz_t(), n);
  const BigInt end = BigInt(static_cast<unsigned long>(family + 1)) * static_cast<unsigned long>(opts.pool_size);
  if (end > total) throw PoolExhausted("candidate space holds fewer than " + end.get_str() + " points");
  Rng rng(derive_seed(opts.seed, 0x706f6f6c));
  BigInt mult = total > 1 ? rng.uniform(1, total - 1) : BigInt(1);
  BigInt g;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), mult.get_mpz_t(), total.get_mpz_t());
    if (g == 1) break;
    mult += 1;
    if (mult >= total) mult = 1;
  }
  const BigInt shift = rng.uniform(0, total - 1);
  std::vector<Point> pool;
  for (std::size_t j = 0; j < opts.pool_size; ++j) {
    const BigInt t = BigInt(static_cast<unsigned long>(family)) * static_cast<unsigned long>(opts.pool_size) +
                     static_cast<unsigned long>(j);
    BigInt idx = (mult * t + shift) % total;
    Point p(n);
    for (std::size_t v = 0; v < n; ++v) {
      BigInt digit = idx % opts.box;
      idx /= opts.box;
      p[v] = digit + 1;
    }
    pool.push_back(std::move(p));
  }
  return pool;
}

bool hits(const Circuit& c, const Point& p) {
  constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
  if (evaluate_mod(c, p, kMersenne61) != 0) return true;
  return sgn(evaluate(c, p)) != 0;
}

std::vector<Circuit> nonzero_members(const std::vector<Circuit>& circuits) {
  std::vector<Circuit> out;
  for (const auto& c : circuits)
    if (!expand_to_polynomial(c, 1u << 20).is_zero()) out.push_back(c);
  return out;
}

std::vector<Point> greedy_cover(const std::vector<Circuit>& nonzero, const std::vector<Point>& candidates) {
  const std::size_t words = (nonzero.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> hit(candidates.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t p = 0; p < candidates.size(); ++p)
    for (std::size_t c = 0; c < nonzero.size(); ++c)
      if (hits(nonzero[c], candidates[p])) hit[p][c / 64] |= std::uint64_t{1} << (c % 64);

  std::vector<std::uint64_t> open(words, 0);
  for (std::size_t c = 0; c < nonzero.size(); ++c) open[c / 64] |= std::uint64_t{1} << (c % 64);
  std::size_t remaining = nonzero.size();
  std::vector<Point> chosen;
  while (remaining > 0) {
    std::size_t best = candidates.size(), best_gain = 0;
    for (std::size_t p = 0; p < candidates.size(); ++p) {
      std::size_t gain = 0;
      for (std::size_t w = 0; w < words; ++w) gain += static_cast<std::size_t>(__builtin_popcountll(hit[p][w] & open[w]));
      if (gain > best_gain) {
        best_gain = gain;
        best = p;
      }
    }
    if (best == candidates.size()) {
      throw PoolExhausted(std::to_string(remaining) + " circuits vanish on every candidate point");
    }
    for (std::size_t w = 0; w < words; ++w) open[w] &= ~hit[best][w];
    remaining -= best_gain;
    chosen.push_back(candidates[best]);
  }
  return chosen;
}

HittingSet build_hitting_set_greedy(const ClassParams& cls, const PoolOptions& opts, std::size_t family) {
  const auto members = enumerate_circuits(cls);
  HittingSet h;
  h.cls = cls;
  h.points = greedy_cover(nonzero_members(members), candidate_pool(cls.n, family, opts));
  if (!verify_hitting_set(h.points, members).valid) throw std::logic_error("greedy cover failed verification");
  return h;
}

HittingVerdict verify_hitting_set(const std::vector<Point>& points, const std::vector<Circuit>& circuits) {
  for (const auto& c : circuits) {
    bool hit = false;
    for (const auto& p : points) {
      if (hits(c, p)) {
        hit = true;
        break;
      }
    }
    if (hit) continue;
    if (!expand_to_polynomial(c, 1u << 20).is_zero()) return {false, c};
  }
  return {true, std::nullopt};
}

HittingVerdict verify_hitting_set(const HittingSet& h) {
  for (const auto& p : h.points)
    if (p.size() != h.cls.n) throw ArityMismatch("hitting-set point has the wrong number of coordinates");
  return verify_hitting_set(h.points, enumerate_circuits(h.cls));
}

FamilyReport disjoint_hitting_families(const ClassParams& cls, std::size_t target_count, const PoolOptions& opts) {
  FamilyReport rep;
  if (target_count == 0) return rep;
  const auto members = enumerate_circuits(cls);
  const auto nonzero = nonzero_members(members);
  for (std::size_t f = 0; rep.sets.size() < target_count; ++f) {
    try {
      HittingSet h;
      h.cls = cls;
      h.points = greedy_cover(nonzero, candidate_pool(cls.n, f, opts));
      if (!verify_hitting_set(h.points, members).valid) throw std::logic_error("greedy cover failed verification");
      rep.sets.push_back(std::move(h));
    } catch (const PoolExhausted&) {
      break;
    }
  }
  rep.achieved = rep.sets.size();
  return rep;
}

}  // namespace flipcheck
