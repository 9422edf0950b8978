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

#include "flipcheck/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "flipcheck/errors.hpp"

namespace flipcheck {

SparsePoly SparsePoly::constant(std::size_t num_vars, const BigInt& c) {
  SparsePoly p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t num_vars, std::size_t v) {
  SparsePoly p(num_vars);
  Monomial m(num_vars, 0);
  m.at(v) = 1;
  p.add_term(m, 1);
  return p;
}

std::uint64_t SparsePoly::total_degree() const {
  std::uint64_t best = 0;
  for (const auto& [m, c] : terms_) {
    best = std::max(best, std::accumulate(m.begin(), m.end(), std::uint64_t{0}));
  }
  return best;
}

void SparsePoly::add_term(const Monomial& m, const BigInt& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(num_vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

SparsePoly SparsePoly::multiply(const SparsePoly& o, std::size_t max_terms) const {
  SparsePoly out(num_vars_);
  Monomial prod(num_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t v = 0; v < num_vars_; ++v) {
        if (ma[v] > UINT64_MAX - mb[v]) throw TermBudgetExceeded("exponent overflow during expansion");
        prod[v] = ma[v] + mb[v];
      }
      out.add_term(prod, ca * cb);
      if (out.terms_.size() > max_terms) {
        throw TermBudgetExceeded("expansion exceeds " + std::to_string(max_terms) + " terms");
      }
    }
  }
  return out;
}

BigInt SparsePoly::evaluate(std::span<const BigInt> point) const {
  if (point.size() != num_vars_) throw ArityMismatch("point has wrong number of coordinates");
  BigInt sum = 0;
  BigInt term;
  BigInt power;
  for (const auto& [m, c] : terms_) {
    term = c;
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (m[v] == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), point[v].get_mpz_t(), m[v]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

bool SparsePoly::is_nonzero_multiple_of(const SparsePoly& other) const {
  if (is_zero() || other.is_zero() || terms_.size() != other.terms_.size()) return false;
  const auto& [m0, a0] = *terms_.begin();
  const auto& [n0, b0] = *other.terms_.begin();
  if (m0 != n0) return false;
  // a_m * b_0 == b_m * a_0 for every monomial m.
  auto it = other.terms_.begin();
  for (const auto& [m, a] : terms_) {
    if (it->first != m) return false;
    if (a * b0 != it->second * a0) return false;
    ++it;
  }
  return true;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Print highest monomials first, which reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v);
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else if (c == -1) {
      out += "-" + mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace flipcheck
