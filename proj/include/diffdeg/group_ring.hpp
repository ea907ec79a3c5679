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

#include "diffdeg/group.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace diffdeg {

// An element of Z_m[G] for a finite abelian G, stored as a dense coefficient
// array in `Group::enumerate()` order.
class GroupRingElement {
public:
    /// The zero element.
    GroupRingElement(Int modulus, Group group);

    static GroupRingElement one(Int modulus, const Group &group);
    /// The basis element x_g.
    static GroupRingElement basis(Int modulus, const GroupElement &g);

    Int modulus() const noexcept { return modulus_; }
    const Group &group() const noexcept { return group_; }
    std::span<const Int> coefficients() const noexcept { return coeffs_; }
    Int coefficient(const GroupElement &g) const;
    void set_coefficient(const GroupElement &g, Int value);

    bool is_zero() const noexcept;
    /// Sum of all coefficients.
    Int augmentation() const noexcept;

    GroupRingElement &operator+=(const GroupRingElement &other);
    GroupRingElement &operator-=(const GroupRingElement &other);

    friend bool operator==(const GroupRingElement &, const GroupRingElement &) = default;

private:
    friend GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b);

    Int modulus_;
    Group group_;
    std::vector<Int> coeffs_;
};

GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b);
GroupRingElement operator-(GroupRingElement a, const GroupRingElement &b);
/// Convolution: (ab)(h) = sum_g a(g) b(h - g) mod m.
GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b);

/// Square-and-multiply power; `a^0` is the identity.
GroupRingElement power(const GroupRingElement &a, std::uint64_t exponent);

/// x_{e_i} - 1.
GroupRingElement generator_difference(Int modulus, const Group &group, std::size_t i);

/// Nilpotency degree of the augmentation ideal of Z_m[G]: the smallest nu
/// such that every product prod_i (x_{e_i} - 1)^{d_i} with sum d = nu
/// vanishes. Products factor over the cyclic coordinates, so each cyclic
/// factor is computed by actual group-ring multiplication and the vanishing
/// of a product is decided from the p-adic contents of its factors.
/// Throws `unsupported` when the ideal is not nilpotent.
std::uint64_t nilpotency_oracle(Int modulus, const Group &group);

/// The same quantity by multiplying full products in Z_m[G] level by level.
/// Cost grows with |G|^2 times the number of multi-indices; desk-scale only.
std::uint64_t nilpotency_oracle_direct(Int modulus, const Group &group);

/// (x - 1)^delta in Z_{p^beta}[x] / (x^{p^alpha} - 1), coefficients of
/// 1, x, ..., x^{p^alpha - 1}.
std::vector<Int> quotient_power(Int p, unsigned alpha, unsigned beta, std::uint64_t delta);

} // namespace diffdeg
