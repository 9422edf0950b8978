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

#include "flipcheck/bigint.hpp"

#include <cctype>

#include "flipcheck/errors.hpp"
#include "flipcheck/rng.hpp"

namespace flipcheck {

std::size_t bitlength(const BigInt& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

BigInt parse_bigint(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  if (start == text.size()) throw ConfigError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ConfigError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text), 10);
}

std::uint64_t mod_u64(const BigInt& x, std::uint64_t q) {
  BigInt r;
  BigInt m = from_u64(q);
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

BigInt from_u64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a proven witness set for n < 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling on the top of the range keeps this exactly uniform.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

BigInt Rng::uniform(const BigInt& lo, const BigInt& hi) {
  const BigInt span = hi - lo + 1;
  if (span.fits_ulong_p() && span.get_ui() != 0) {
    return lo + from_u64(below(span.get_ui()));
  }
  const std::size_t bits = bitlength(span);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  for (;;) {
    BigInt x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = engine_();
      if (w == 0 && top_bits < 64) word &= (std::uint64_t{1} << top_bits) - 1;
      x <<= 64;
      x += from_u64(word);
    }
    if (x < span) return lo + x;
  }
}

BigInt Rng::in_box(std::size_t bits) {
  BigInt hi = 1;
  hi <<= bits;
  return uniform(BigInt(1), hi);
}

}  // namespace flipcheck
