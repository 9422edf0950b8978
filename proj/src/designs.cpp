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

#include "flipcheck/designs.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "flipcheck/rng.hpp"

namespace flipcheck {

namespace {

std::size_t popcount(std::uint64_t x) { return static_cast<std::size_t>(__builtin_popcountll(x)); }

std::uint64_t ceil_log2(std::uint64_t x) {
  std::uint64_t bits = 0;
  while ((std::uint64_t{1} << bits) < x) ++bits;
  return bits;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<std::uint64_t> all_subsets(std::size_t l, std::size_t r) {
  std::vector<std::uint64_t> out;
  std::function<void(std::size_t, std::size_t, std::uint64_t)> rec = [&](std::size_t start, std::size_t left,
                                                                         std::uint64_t mask) {
    if (left == 0) {
      out.push_back(mask);
      return;
    }
    for (std::size_t e = start; e + left <= l; ++e) rec(e + 1, left - 1, mask | (std::uint64_t{1} << e));
  };
  rec(0, r, 0);
  return out;
}

bool compatible(const std::vector<std::uint64_t>& rows, std::uint64_t cand, std::size_t k_cap) {
  for (auto row : rows)
    if (popcount(row & cand) > k_cap) return false;
  return true;
}

}  // namespace

void DesignParams::validate(bool allow_loose_cap) const {
  if (m_prime < 1) throw InvalidDesign("a design needs at least one set");
  if (l > 64) throw InvalidDesign("universe size limited to 64");
  if (r > l) throw InvalidDesign("set size r exceeds universe size l");
  if (k_cap >= r && !allow_loose_cap) throw InvalidDesign("intersection cap must be below the set size");
  if (m_prime > 65535 || l > 65535) throw InvalidDesign("parameters must fit in 16 bits");
}

DesignParams DesignParams::from_log_scale(const LogScale& s) {
  if (s.m < 2) throw ConfigError("log-scale designs need m >= 2");
  if (!(s.c < s.a && s.a < s.b)) throw ConfigError("log-scale designs need c < a < b");
  const std::uint64_t lg = ceil_log2(s.m);
  BigInt mp;
  mpz_ui_pow_ui(mp.get_mpz_t(), s.m, s.c);
  if (mp > 65535) throw ConfigError("m^c exceeds 65535 sets");
  DesignParams p;
  p.m_prime = mp.get_ui();
  p.r = s.a * lg;
  p.l = s.b * lg;
  p.k_cap = ceil_log2(p.m_prime);
  p.origin = s;
  return p;
}

std::string Design::to_string() const {
  std::string s;
  for (auto row : rows) {
    s += "{";
    bool first = true;
    for (std::size_t e = 0; e < 64; ++e) {
      if (!((row >> e) & 1)) continue;
      s += (first ? "" : ",") + std::to_string(e + 1);
      first = false;
    }
    s += "}\n";
  }
  return s;
}

std::string DesignVerdict::describe() const {
  switch (kind) {
    case Kind::Valid: return "valid";
    case Kind::Cardinality:
      return "row " + std::to_string(i) + " has " + std::to_string(value) + " elements";
    case Kind::Intersection:
      return "rows " + std::to_string(i) + " and " + std::to_string(j) + " share " + std::to_string(value) +
             " elements";
    case Kind::Shape: return "row count or universe does not match the parameters";
  }
  return "?";
}

DesignVerdict verify_design(const Design& d) {
  const auto& p = d.params;
  const std::uint64_t universe = p.l >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.l) - 1;
  if (d.rows.size() != p.m_prime) return {DesignVerdict::Kind::Shape, 0, 0, d.rows.size()};
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    if (d.rows[i] & ~universe) return {DesignVerdict::Kind::Shape, i, 0, 0};
    if (popcount(d.rows[i]) != p.r) return {DesignVerdict::Kind::Cardinality, i, 0, popcount(d.rows[i])};
  }
  for (std::size_t i = 0; i < d.rows.size(); ++i)
    for (std::size_t j = i + 1; j < d.rows.size(); ++j) {
      const auto shared = popcount(d.rows[i] & d.rows[j]);
      if (shared > p.k_cap) return {DesignVerdict::Kind::Intersection, i, j, shared};
    }
  return {};
}

namespace {

// One randomized attempt; returns the rows reached.
std::vector<std::uint64_t> attempt(const DesignParams& p, std::uint64_t seed, std::size_t tries) {
  Rng rng(seed);
  std::vector<std::uint64_t> rows;
  std::vector<std::size_t> perm(p.l);
  while (rows.size() < p.m_prime) {
    bool placed = false;
    for (std::size_t t = 0; t < tries && !placed; ++t) {
      for (std::size_t e = 0; e < p.l; ++e) perm[e] = e;
      std::uint64_t mask = 0;
      for (std::size_t s = 0; s < p.r; ++s) {
        const std::size_t pick = s + rng.below(p.l - s);
        std::swap(perm[s], perm[pick]);
        mask |= std::uint64_t{1} << perm[s];
      }
      if (compatible(rows, mask, p.k_cap)) {
        rows.push_back(mask);
        placed = true;
      }
    }
    if (!placed) break;
  }
  return rows;
}

// Rows are distinct since k_cap < r, so searching increasing subset indices
// loses nothing.
std::optional<std::vector<std::uint64_t>> exhaustive_search(const DesignParams& p, std::uint64_t node_budget,
                                                            std::size_t& best) {
  const auto subsets = all_subsets(p.l, p.r);
  std::vector<std::uint64_t> rows;
  std::uint64_t nodes = 0;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    best = std::max(best, rows.size());
    if (rows.size() == p.m_prime) return true;
    if (++nodes > node_budget) return false;
    for (std::size_t i = start; i + (p.m_prime - rows.size()) <= subsets.size(); ++i) {
      if (!compatible(rows, subsets[i], p.k_cap)) continue;
      rows.push_back(subsets[i]);
      if (rec(i + 1)) return true;
      rows.pop_back();
    }
    return false;
  };
  if (rec(0)) return rows;
  return std::nullopt;
}

}  // namespace

Design build_design_greedy(const DesignParams& p, std::uint64_t seed, const BuildOptions& opts) {
  p.validate();
  if (p.m_prime >= 2 && 2 * p.r > p.l && 2 * p.r - p.l > p.k_cap) {
    throw ConstructionFailed(1, "any two " + std::to_string(p.r) + "-subsets of a " + std::to_string(p.l) +
                                    "-set share at least " + std::to_string(2 * p.r - p.l) + " elements");
  }
  std::size_t best = 0;
  const std::size_t threads = std::max<std::size_t>(1, opts.threads);
  for (std::size_t base = 0; base < opts.restarts; base += threads) {
    const std::size_t batch = std::min(threads, opts.restarts - base);
    std::vector<std::vector<std::uint64_t>> results(batch);
    auto run = [&](std::size_t t) { results[t] = attempt(p, derive_seed(seed, 0x64657369676eULL, base + t), opts.attempts_per_row); };
    if (batch == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < batch; ++t) pool.emplace_back(run, t);
      for (auto& th : pool) th.join();
    }
    for (auto& rows : results) {  // lowest restart index wins
      best = std::max(best, rows.size());
      if (rows.size() == p.m_prime) return Design{p, std::move(rows)};
    }
  }
  if (binomial(p.l, p.r) <= opts.exhaustive_limit) {
    if (auto rows = exhaustive_search(p, opts.exhaustive_nodes, best)) return Design{p, std::move(*rows)};
  }
  throw ConstructionFailed(best, "no design found; best attempt placed " + std::to_string(best) + " of " +
                                     std::to_string(p.m_prime) + " rows");
}

BigInt count_designs_exhaustive(const DesignParams& p, std::uint64_t budget, const std::vector<std::size_t>* relabel) {
  p.validate(true);
  BigInt space;
  mpz_pow_ui(space.get_mpz_t(), binomial(p.l, p.r).get_mpz_t(), p.m_prime);
  if (space > BigInt(std::to_string(budget))) {
    throw BudgetExceeded("C(l, r)^m' = " + space.get_str() + " exceeds the budget of " + std::to_string(budget));
  }
  auto subsets = all_subsets(p.l, p.r);
  if (relabel) {
    if (relabel->size() != p.l) throw ConfigError("relabeling must permute the whole universe");
    for (auto& s : subsets) {
      std::uint64_t t = 0;
      for (std::size_t e = 0; e < p.l; ++e)
        if ((s >> e) & 1) t |= std::uint64_t{1} << (*relabel)[e];
      s = t;
    }
  }
  std::vector<std::uint64_t> rows;
  BigInt count = 0;
  std::function<void()> rec = [&]() {
    if (rows.size() == p.m_prime) {
      ++count;
      return;
    }
    for (auto s : subsets) {
      if (!compatible(rows, s, p.k_cap)) continue;
      rows.push_back(s);
      rec();
      rows.pop_back();
    }
  };
  rec();
  return count;
}

std::size_t encoded_bits(const DesignParams& p) { return 64 + p.m_prime * p.l; }

std::vector<std::uint8_t> encode_design(const Design& d) {
  const auto& p = d.params;
  p.validate();
  if (d.rows.size() != p.m_prime) throw InvalidDesign("row count does not match m'");
  std::vector<std::uint8_t> out;
  for (std::size_t v : {p.m_prime, p.l, p.r, p.k_cap}) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
  }
  const std::size_t bits = p.m_prime * p.l;
  out.resize(8 + (bits + 7) / 8, 0);
  for (std::size_t i = 0; i < p.m_prime; ++i)
    for (std::size_t e = 0; e < p.l; ++e)
      if ((d.rows[i] >> e) & 1) {
        const std::size_t bit = i * p.l + e;
        out[8 + bit / 8] |= static_cast<std::uint8_t>(0x80 >> (bit % 8));
      }
  return out;
}

Design decode_design(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 8) throw MalformedEncoding("design header needs 8 bytes");
  auto u16 = [&](std::size_t at) { return static_cast<std::size_t>(bytes[at] << 8 | bytes[at + 1]); };
  Design d;
  d.params.m_prime = u16(0);
  d.params.l = u16(2);
  d.params.r = u16(4);
  d.params.k_cap = u16(6);
  if (d.params.l > 64) throw MalformedEncoding("universe size above 64");
  const std::size_t bits = d.params.m_prime * d.params.l;
  const std::size_t expected = 8 + (bits + 7) / 8;
  if (bytes.size() < expected) throw MalformedEncoding("design matrix truncated");
  if (bytes.size() > expected) throw MalformedEncoding("trailing bytes after design matrix");
  d.rows.assign(d.params.m_prime, 0);
  for (std::size_t bit = 0; bit < (bytes.size() - 8) * 8; ++bit) {
    const bool set = bytes[8 + bit / 8] & (0x80 >> (bit % 8));
    if (!set) continue;
    if (bit >= bits) throw MalformedEncoding("nonzero padding bits");
    d.rows[bit / d.params.l] |= std::uint64_t{1} << (bit % d.params.l);
  }
  return d;
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (auto b : bytes) {
    s += digits[b >> 4];
    s += digits[b & 15];
  }
  return s;
}

std::vector<std::uint8_t> from_hex(const std::string& text) {
  if (text.size() % 2) throw MalformedEncoding("odd-length hex string");
  auto nibble = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw MalformedEncoding(std::string("bad hex digit '") + ch + "'");
  };
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < text.size(); i += 2)
    out.push_back(static_cast<std::uint8_t>(nibble(text[i]) << 4 | nibble(text[i + 1])));
  return out;
}

}  // namespace flipcheck
