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

#include "diffdeg/integer.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diffdeg {

class GroupElement;

// A finitely generated commutative group Z_{q_1} x ... x Z_{q_n}. A modulus
// of 0 stands for the integers, a modulus of 1 for the trivial factor. The
// coordinate order is significant and never normalized.
class Group {
public:
    explicit Group(std::vector<Int> moduli);

    /// Parses a comma-separated modulus list such as "4,3,5".
    static Group parse(std::string_view spec);

    std::size_t rank() const noexcept { return moduli_.size(); }
    const std::vector<Int> &moduli() const noexcept { return moduli_; }
    Int modulus(std::size_t i) const { return moduli_.at(i); }

    bool is_finite() const noexcept;
    bool is_trivial() const noexcept;
    /// Number of elements; throws `unsupported` for infinite groups.
    Int order() const;

    /// Canonical representatives of raw coordinates.
    std::vector<Int> reduce(std::vector<Int> coords) const;
    GroupElement element(std::vector<Int> coords) const;
    GroupElement zero() const;
    /// The generator e_i, zero-based `i`; equals zero when q_i = 1.
    GroupElement unit_vector(std::size_t i) const;

    /// All elements, lexicographic on canonical coordinates (last coordinate fastest).
    std::vector<GroupElement> enumerate() const;

    /// Position of a canonical coordinate tuple in `enumerate()` order.
    std::size_t index_of(std::span<const Int> coords) const;
    std::vector<Int> coords_at(std::size_t index) const;

    // Coordinatewise arithmetic on canonical coordinate spans.
    void add_into(std::span<Int> acc, std::span<const Int> v) const;
    void sub_into(std::span<Int> acc, std::span<const Int> v) const;

    std::string to_string() const;

    friend bool operator==(const Group &, const Group &) = default;

private:
    std::vector<Int> moduli_;
};

class GroupElement {
public:
    GroupElement(Group group, std::vector<Int> coords);

    const Group &group() const noexcept { return group_; }
    const std::vector<Int> &coords() const noexcept { return coords_; }
    Int operator[](std::size_t i) const { return coords_.at(i); }
    bool is_zero() const noexcept;

    std::string to_string() const;

    friend bool operator==(const GroupElement &, const GroupElement &) = default;

private:
    Group group_;
    std::vector<Int> coords_;
};

GroupElement operator+(const GroupElement &a, const GroupElement &b);
GroupElement operator-(const GroupElement &a, const GroupElement &b);
GroupElement operator-(const GroupElement &a);

inline GroupElement add(const GroupElement &a, const GroupElement &b) { return a + b; }

std::string join(std::span<const Int> values, char sep = ',');
std::vector<Int> parse_int_list(std::string_view text);

struct PrimaryComponent {
    Int prime;
    /// Moduli are the p-parts > 1 of the original moduli, or (1) when trivial.
    Group group;
    /// Original coordinate feeding each component coordinate; empty when trivial.
    std::vector<std::size_t> sources;
};

// Splitting of a finite group into p-primary components via the Chinese
// remainder theorem. Components are ordered by ascending prime; inside a
// component the original coordinate order is kept.
class PrimaryDecomposition {
public:
    /// Uses the primes dividing the group order.
    explicit PrimaryDecomposition(Group group);
    /// Uses the given primes, which must include every prime dividing the order;
    /// primes not dividing the order get the trivial component (1).
    PrimaryDecomposition(Group group, std::span<const Int> primes);

    const Group &group() const noexcept { return group_; }
    std::size_t size() const noexcept { return components_.size(); }
    const PrimaryComponent &component(std::size_t j) const;
    std::vector<Int> primes() const;
    std::optional<std::size_t> index_of_prime(Int p) const;

    GroupElement project(const GroupElement &x, std::size_t j) const;
    /// Inverse of projecting onto every component.
    GroupElement reassemble(std::span<const GroupElement> parts) const;
    /// The element whose j-th projection is `part` and all others are zero.
    GroupElement embed(const GroupElement &part, std::size_t j) const;

private:
    void build(std::span<const Int> primes);

    Group group_;
    std::vector<PrimaryComponent> components_;
};

inline PrimaryDecomposition primary_decomposition(const Group &g) { return PrimaryDecomposition(g); }

inline GroupElement project_to_component(const GroupElement &x, const PrimaryDecomposition &d,
                                         std::size_t j) {
    return d.project(x, j);
}

} // namespace diffdeg
