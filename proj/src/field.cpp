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

#include "flipcheck/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "flipcheck/errors.hpp"

namespace flipcheck {

IntegerRing::value_type IntegerRing::div_exact(const value_type& a, const value_type& b) const {
  BigInt out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (q >= (std::uint64_t{1} << 63) || !is_prime_u64(q)) {
    throw NotPrime(std::to_string(q) + " is not a prime below 2^63");
  }
}

PrimeField::value_type PrimeField::from_int(std::int64_t x) const {
  const std::int64_t r = x % static_cast<std::int64_t>(q_);
  return r < 0 ? static_cast<value_type>(r + static_cast<std::int64_t>(q_)) : static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const {
  value_type r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  return pow(a, q_ - 2);
}

// ---------------------------------------------------------------------------
// Polynomials over F_q

namespace {

void trim(FqPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

FqPoly poly_mul(const PrimeField& fq, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = fq.add(out[i + j], fq.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

// Remainder of a modulo a nonzero b.
FqPoly poly_mod(const PrimeField& fq, FqPoly a, const FqPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = fq.inv(b.back());
  while (a.size() >= b.size()) {
    const std::uint64_t factor = fq.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = fq.sub(a[shift + i], fq.mul(factor, b[i]));
    trim(a);
  }
  return a;
}

FqPoly poly_gcd(const PrimeField& fq, FqPoly a, FqPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FqPoly r = poly_mod(fq, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FqPoly poly_powmod(const PrimeField& fq, FqPoly base, std::uint64_t e, const FqPoly& f) {
  FqPoly result{1};
  base = poly_mod(fq, base, f);
  while (e) {
    if (e & 1) result = poly_mod(fq, poly_mul(fq, result, base), f);
    base = poly_mod(fq, poly_mul(fq, base, base), f);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_irreducible(const PrimeField& fq, const FqPoly& f) {
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t l = f.size() - 1;
  // f is irreducible iff gcd(f, t^{q^i} - t) = 1 for every i <= l/2.
  FqPoly h{0, 1};
  for (std::size_t i = 1; i <= l / 2; ++i) {
    h = poly_powmod(fq, h, fq.modulus(), f);
    FqPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = fq.sub(diff[1], 1);
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(fq, f, diff).size() > 1) return false;
  }
  return true;
}

FqPoly find_irreducible(const PrimeField& fq, std::size_t l) {
  if (l == 0) throw ConfigError("extension degree must be at least 1");
  const std::uint64_t q = fq.modulus();
  FqPoly f(l + 1, 0);
  f[l] = 1;
  for (;;) {
    if (is_irreducible(fq, f)) return f;
    std::size_t i = 0;
    while (i < l && ++f[i] == q) f[i++] = 0;
    if (i == l) break;
  }
  throw NotIrreducible("no irreducible polynomial of degree " + std::to_string(l));
}

// ---------------------------------------------------------------------------
// Linear algebra over F_q

std::uint64_t determinant(const PrimeField& fq, FqMatrix a) {
  const std::size_t n = a.size();
  std::uint64_t det = fq.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = fq.neg(det);
    }
    det = fq.mul(det, a[col][col]);
    const std::uint64_t inv = fq.inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const std::uint64_t factor = fq.mul(a[r][col], inv);
      for (std::size_t c = col; c < n; ++c) a[r][c] = fq.sub(a[r][c], fq.mul(factor, a[col][c]));
    }
  }
  return det;
}

std::optional<FqMatrix> invert(const PrimeField& fq, const FqMatrix& m) {
  const std::size_t n = m.size();
  FqMatrix a = m;
  FqMatrix inv(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = fq.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const std::uint64_t s = fq.inv(a[col][col]);
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] = fq.mul(a[col][c], s);
      inv[col][c] = fq.mul(inv[col][c], s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const std::uint64_t factor = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] = fq.sub(a[r][c], fq.mul(factor, a[col][c]));
        inv[r][c] = fq.sub(inv[r][c], fq.mul(factor, inv[col][c]));
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Extension field

ExtField::ExtField(std::uint64_t q, std::size_t l) : ExtField(q, find_irreducible(PrimeField(q), l)) {}

ExtField::ExtField(std::uint64_t q, FqPoly modulus) : fq_(q), l_(0), f_(std::move(modulus)) {
  for (auto& c : f_) {
    if (c >= q) throw ConfigError("modulus coefficient " + std::to_string(c) + " not reduced mod " + std::to_string(q));
  }
  if (f_.size() < 2 || f_.back() != 1) throw NotIrreducible("modulus must be monic of degree >= 1");
  if (!is_irreducible(fq_, f_)) throw NotIrreducible("modulus is reducible over F_" + std::to_string(q));
  l_ = f_.size() - 1;
  basis_.reserve(l_);
  for (std::size_t i = 0; i < l_; ++i) {
    ExtFieldElement b{std::vector<std::uint64_t>(l_, 0)};
    b.coeffs[i] = 1;
    basis_.push_back(std::move(b));
  }
  dual_ = dual_from_gram(*this, basis_, trace_form_gram());
}

ExtField ExtField::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::uint64_t q = 0;
  std::size_t l = 0;
  if (!(in >> q >> l) || l == 0) throw ConfigError("field description: expected `q l f_0 ... f_l`");
  FqPoly f(l + 1);
  for (auto& c : f) {
    if (!(in >> c)) throw ConfigError("field description: expected " + std::to_string(l + 1) + " modulus coefficients");
  }
  std::string extra;
  if (in >> extra) throw ConfigError("field description: trailing token '" + extra + "'");
  return ExtField(q, std::move(f));
}

std::string ExtField::serialize() const {
  std::string out = std::to_string(fq_.modulus()) + " " + std::to_string(l_);
  for (auto c : f_) out += " " + std::to_string(c);
  return out;
}

BigInt ExtField::order() const {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), from_u64(fq_.modulus()).get_mpz_t(), l_);
  return out;
}

ExtField ExtField::with_basis(std::vector<ExtFieldElement> basis) const {
  if (basis.size() != l_) throw ConfigError("basis must have exactly l elements");
  FqMatrix coords;
  for (const auto& b : basis) {
    check_element(b);
    coords.push_back(b.coeffs);
  }
  if (determinant(fq_, coords) == 0) throw ConfigError("basis elements are linearly dependent");
  ExtField out = *this;
  out.basis_ = std::move(basis);
  out.dual_ = dual_from_gram(out, out.basis_, out.trace_form_gram());
  return out;
}

void ExtField::check_element(const value_type& a) const {
  if (a.coeffs.size() != l_) throw ConfigError("element has wrong number of coordinates");
  for (auto c : a.coeffs) {
    if (c >= fq_.modulus()) throw ConfigError("element coordinate not reduced");
  }
}

ExtField::value_type ExtField::zero() const { return {std::vector<std::uint64_t>(l_, 0)}; }

ExtField::value_type ExtField::one() const {
  auto out = zero();
  out.coeffs[0] = fq_.one();
  return out;
}

ExtField::value_type ExtField::from_bigint(const BigInt& x) const {
  auto out = zero();
  out.coeffs[0] = fq_.from_bigint(x);
  return out;
}

ExtField::value_type ExtField::from_coeffs(std::vector<std::uint64_t> power_coeffs) const {
  ExtFieldElement out{std::move(power_coeffs)};
  check_element(out);
  return out;
}

ExtField::value_type ExtField::from_basis_coords(std::span<const std::uint64_t> coords) const {
  if (coords.size() != l_) throw ConfigError("expected l basis coordinates");
  auto out = zero();
  for (std::size_t i = 0; i < l_; ++i) {
    for (std::size_t j = 0; j < l_; ++j) {
      out.coeffs[j] = fq_.add(out.coeffs[j], fq_.mul(fq_.from_bigint(from_u64(coords[i])), basis_[i].coeffs[j]));
    }
  }
  return out;
}

ExtField::value_type ExtField::generator() const {
  if (l_ == 1) {
    // F_q[t]/(t - c): t is the constant c.
    return from_coeffs({fq_.neg(f_[0])});
  }
  auto out = zero();
  out.coeffs[1] = 1;
  return out;
}

ExtField::value_type ExtField::add(const value_type& a, const value_type& b) const {
  auto out = zero();
  for (std::size_t i = 0; i < l_; ++i) out.coeffs[i] = fq_.add(a.coeffs[i], b.coeffs[i]);
  return out;
}

ExtField::value_type ExtField::sub(const value_type& a, const value_type& b) const {
  auto out = zero();
  for (std::size_t i = 0; i < l_; ++i) out.coeffs[i] = fq_.sub(a.coeffs[i], b.coeffs[i]);
  return out;
}

ExtField::value_type ExtField::neg(const value_type& a) const {
  auto out = zero();
  for (std::size_t i = 0; i < l_; ++i) out.coeffs[i] = fq_.neg(a.coeffs[i]);
  return out;
}

ExtField::value_type ExtField::mul(const value_type& a, const value_type& b) const {
  std::vector<std::uint64_t> prod(2 * l_ - 1, 0);
  for (std::size_t i = 0; i < l_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < l_; ++j) prod[i + j] = fq_.add(prod[i + j], fq_.mul(a.coeffs[i], b.coeffs[j]));
  }
  // f is monic: t^l = -(f_0 + ... + f_{l-1} t^{l-1}).
  for (std::size_t d = prod.size(); d-- > l_;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < l_; ++i) prod[d - l_ + i] = fq_.sub(prod[d - l_ + i], fq_.mul(c, f_[i]));
  }
  prod.resize(l_);
  return {std::move(prod)};
}

ExtField::value_type ExtField::pow(const value_type& a, const BigInt& e) const {
  if (sgn(e) < 0) return pow(inv(a), -e);
  value_type result = one();
  const std::size_t bits = bitlength(e);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

ExtField::value_type ExtField::inv(const value_type& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in F_{q^l}");
  return pow(a, order() - 2);
}

ExtField::value_type ExtField::frobenius(const value_type& a) const { return pow(a, from_u64(fq_.modulus())); }

bool ExtField::is_zero(const value_type& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](auto c) { return c == 0; });
}

std::string ExtField::to_string(const value_type& a) const {
  std::string out = "[";
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.coeffs[i]);
  }
  return out + "]";
}

ExtField::value_type ExtField::random(Rng& rng) const {
  auto out = zero();
  for (auto& c : out.coeffs) c = rng.below(fq_.modulus());
  return out;
}

std::uint64_t ExtField::trace(const value_type& x) const {
  check_element(x);
  value_type sum = zero();
  value_type conj = x;
  for (std::size_t i = 0; i < l_; ++i) {
    sum = add(sum, conj);
    conj = frobenius(conj);
  }
  for (std::size_t i = 1; i < l_; ++i) {
    if (sum.coeffs[i] != 0) throw std::logic_error("trace left the base field");
  }
  return sum.coeffs[0];
}

FqMatrix ExtField::trace_form_gram() const {
  FqMatrix g(l_, std::vector<std::uint64_t>(l_, 0));
  for (std::size_t i = 0; i < l_; ++i) {
    for (std::size_t j = i; j < l_; ++j) {
      g[i][j] = g[j][i] = trace(mul(basis_[i], basis_[j]));
    }
  }
  return g;
}

std::vector<ExtFieldElement> ExtField::dual_basis() const { return dual_; }

std::vector<std::uint64_t> ExtField::extract_coeffs(const value_type& x) const {
  std::vector<std::uint64_t> out(l_);
  for (std::size_t i = 0; i < l_; ++i) out[i] = trace(mul(dual_[i], x));
  return out;
}

std::vector<ExtFieldElement> dual_from_gram(const ExtField& field, const std::vector<ExtFieldElement>& basis,
                                            const FqMatrix& gram) {
  const auto& fq = field.base();
  auto inv = invert(fq, gram);
  if (!inv) throw SingularTraceForm("trace form Gram matrix is singular");
  std::vector<ExtFieldElement> dual;
  dual.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto acc = field.zero();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (std::size_t c = 0; c < field.degree(); ++c) {
        acc.coeffs[c] = fq.add(acc.coeffs[c], fq.mul((*inv)[i][j], basis[j].coeffs[c]));
      }
    }
    dual.push_back(std::move(acc));
  }
  return dual;
}

}  // namespace flipcheck
