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

#include "diffdeg/integer.hpp"

#include "diffdeg/error.hpp"

#include <limits>
#include <numeric>

namespace diffdeg {

const char *to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::mismatch: return "mismatch";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::no_representation: return "no-representation";
    case ErrorKind::inconsistency: return "internal-inconsistency";
    }
    return "unknown";
}

Int reduce(Int v, Int q) noexcept {
    if (q <= 0)
        return v;
    Int r = v % q;
    return r < 0 ? r + q : r;
}

Int residue(const BigInt &v, Int q) {
    if (q < 1)
        fail(ErrorKind::invalid_input, "residue modulus must be positive");
    BigInt r = v % q;
    if (r < 0)
        r += q;
    return r.convert_to<Int>();
}

Int narrow(const BigInt &v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        fail(ErrorKind::unsupported, "integer value exceeds 64-bit range");
    return v.convert_to<Int>();
}

Int add_mod(Int a, Int b, Int q) {
    if (q == 0) {
        Int out;
        if (__builtin_add_overflow(a, b, &out))
            fail(ErrorKind::unsupported, "integer addition overflows 64-bit range");
        return out;
    }
    return static_cast<Int>((static_cast<__int128>(a) + b) % q + q) % q;
}

Int sub_mod(Int a, Int b, Int q) {
    if (q == 0) {
        Int out;
        if (__builtin_sub_overflow(a, b, &out))
            fail(ErrorKind::unsupported, "integer subtraction overflows 64-bit range");
        return out;
    }
    return static_cast<Int>(((static_cast<__int128>(a) - b) % q + q) % q);
}

Int mul_mod(Int a, Int b, Int q) {
    if (q == 0) {
        Int out;
        if (__builtin_mul_overflow(a, b, &out))
            fail(ErrorKind::unsupported, "integer product overflows 64-bit range");
        return out;
    }
    __int128 r = (static_cast<__int128>(a) * b) % q;
    return static_cast<Int>(r < 0 ? r + q : r);
}

BigInt binomial(Int top, std::uint64_t k) {
    if (k == 0)
        return 1;
    if (top < 0) {
        // binom(-m, k) = (-1)^k binom(m + k - 1, k)
        BigInt v = binomial(static_cast<Int>(k) - top - 1, k);
        return (k % 2 == 0) ? v : BigInt(-v);
    }
    if (static_cast<std::uint64_t>(top) < k)
        return 0;
    std::uint64_t kk = std::min<std::uint64_t>(k, static_cast<std::uint64_t>(top) - k);
    BigInt acc = 1;
    for (std::uint64_t i = 1; i <= kk; ++i) {
        acc *= static_cast<std::uint64_t>(top) - kk + i;
        acc /= i;
    }
    return acc;
}

bool is_prime(Int n) noexcept {
    if (n < 2)
        return false;
    for (Int d = 2; d <= n / d; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n < 1)
        fail(ErrorKind::invalid_input, "factorize expects a positive integer");
    std::vector<std::pair<Int, unsigned>> out;
    for (Int d = 2; d <= n / d; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0)
            out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

unsigned prime_omega(Int n) {
    unsigned total = 0;
    for (auto [p, e] : factorize(n))
        total += e;
    return total;
}

unsigned valuation(Int n, Int p) noexcept {
    unsigned e = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

Int checked_pow(Int base, unsigned exp) {
    Int acc = 1;
    for (unsigned i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(acc, base, &acc))
            fail(ErrorKind::unsupported, "power exceeds 64-bit range");
    return acc;
}

Int gcd(Int a, Int b) noexcept { return std::gcd(a, b); }

Int inverse_mod(Int a, Int q) {
    if (q == 1)
        return 0;
    Int t = 0, new_t = 1, r = q, new_r = reduce(a, q);
    while (new_r != 0) {
        Int quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (r != 1)
        fail(ErrorKind::invalid_input, "value is not invertible modulo " + std::to_string(q));
    return reduce(t, q);
}

} // namespace diffdeg
