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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace flipcheck {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Number of bits in the binary representation of |x|; 0 for x == 0.
std::size_t bitlength(const BigInt& x);

/// Parses a decimal integer with an optional leading '-'. Throws ConfigError.
BigInt parse_bigint(std::string_view text);

/// Least non-negative residue of x modulo q (q > 0).
std::uint64_t mod_u64(const BigInt& x, std::uint64_t q);

BigInt from_u64(std::uint64_t v);

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace flipcheck
