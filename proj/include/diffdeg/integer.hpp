/*
 * Copyright 2026 The diffdeg Authors
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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace diffdeg {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

/// Canonical residue of `v` modulo `q` in [0, q); `q == 0` leaves `v` unchanged.
Int reduce(Int v, Int q) noexcept;

/// Canonical residue of an arbitrary-precision integer, `q >= 1`.
Int residue(const BigInt &v, Int q);

/// Narrows to Int, throwing `unsupported` on overflow.
Int narrow(const BigInt &v);

Int add_mod(Int a, Int b, Int q);
Int sub_mod(Int a, Int b, Int q);
Int mul_mod(Int a, Int b, Int q);

/// Binomial coefficient binom(top, k) = top(top-1)...(top-k+1)/k! for any
/// integer `top`, including negative values.
BigInt binomial(Int top, std::uint64_t k);

bool is_prime(Int n) noexcept;

/// Prime factorization of `n >= 1` as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

/// Total number of prime factors counted with multiplicity.
unsigned prime_omega(Int n);

/// Exponent of `p` in `n`, for `n >= 1`.
unsigned valuation(Int n, Int p) noexcept;

/// `base^exp`, throwing `unsupported` when the result does not fit in Int.
Int checked_pow(Int base, unsigned exp);

Int gcd(Int a, Int b) noexcept;

/// Inverse of `a` modulo `q` for coprime `a`, `q >= 1`.
Int inverse_mod(Int a, Int q);

} // namespace diffdeg
