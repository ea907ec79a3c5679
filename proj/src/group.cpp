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

#include "diffdeg/group.hpp"

#include "diffdeg/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace diffdeg {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

std::string join(std::span<const Int> values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::vector<Int> parse_int_list(std::string_view text) {
    std::vector<Int> out;
    text = trim(text);
    if (text.empty())
        fail(ErrorKind::invalid_input, "empty integer list");
    while (true) {
        auto comma = text.find(',');
        std::string_view item = trim(text.substr(0, comma));
        Int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            fail(ErrorKind::invalid_input, "malformed integer '" + std::string(item) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

Group::Group(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty())
        fail(ErrorKind::invalid_input, "a group needs at least one modulus");
    for (Int q : moduli_)
        if (q < 0)
            fail(ErrorKind::invalid_input, "moduli must be non-negative");
}

Group Group::parse(std::string_view spec) { return Group(parse_int_list(spec)); }

bool Group::is_finite() const noexcept {
    return std::all_of(moduli_.begin(), moduli_.end(), [](Int q) { return q >= 1; });
}

bool Group::is_trivial() const noexcept {
    return std::all_of(moduli_.begin(), moduli_.end(), [](Int q) { return q == 1; });
}

Int Group::order() const {
    if (!is_finite())
        fail(ErrorKind::unsupported, "group " + to_string() + " is infinite");
    Int n = 1;
    for (Int q : moduli_)
        if (__builtin_mul_overflow(n, q, &n))
            fail(ErrorKind::unsupported, "group order exceeds 64-bit range");
    return n;
}

std::vector<Int> Group::reduce(std::vector<Int> coords) const {
    if (coords.size() != rank())
        fail(ErrorKind::mismatch, "coordinate count " + std::to_string(coords.size()) +
                                      " does not match group rank " + std::to_string(rank()));
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = diffdeg::reduce(coords[i], moduli_[i]);
    return coords;
}

GroupElement Group::element(std::vector<Int> coords) const {
    return GroupElement(*this, reduce(std::move(coords)));
}

GroupElement Group::zero() const { return GroupElement(*this, std::vector<Int>(rank(), 0)); }

GroupElement Group::unit_vector(std::size_t i) const {
    if (i >= rank())
        fail(ErrorKind::out_of_range, "coordinate index " + std::to_string(i) + " out of range");
    std::vector<Int> c(rank(), 0);
    c[i] = 1;
    return element(std::move(c));
}

std::vector<GroupElement> Group::enumerate() const {
    std::size_t n = static_cast<std::size_t>(order());
    std::vector<GroupElement> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.emplace_back(*this, coords_at(k));
    return out;
}

std::size_t Group::index_of(std::span<const Int> coords) const {
    if (coords.size() != rank())
        fail(ErrorKind::mismatch, "coordinate count does not match group rank");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (moduli_[i] < 1)
            fail(ErrorKind::unsupported, "cannot index elements of an infinite group");
        idx = idx * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(coords[i]);
    }
    return idx;
}

std::vector<Int> Group::coords_at(std::size_t index) const {
    if (!is_finite())
        fail(ErrorKind::unsupported, "cannot index elements of an infinite group");
    std::vector<Int> c(rank());
    for (std::size_t i = rank(); i-- > 0;) {
        auto q = static_cast<std::size_t>(moduli_[i]);
        c[i] = static_cast<Int>(index % q);
        index /= q;
    }
    return c;
}

void Group::add_into(std::span<Int> acc, std::span<const Int> v) const {
    for (std::size_t i = 0; i < rank(); ++i)
        acc[i] = add_mod(acc[i], v[i], moduli_[i]);
}

void Group::sub_into(std::span<Int> acc, std::span<const Int> v) const {
    for (std::size_t i = 0; i < rank(); ++i)
        acc[i] = sub_mod(acc[i], v[i], moduli_[i]);
}

std::string Group::to_string() const { return join(moduli_); }

GroupElement::GroupElement(Group group, std::vector<Int> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
    if (coords_.size() != group_.rank())
        fail(ErrorKind::mismatch, "coordinate count does not match group rank");
}

bool GroupElement::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

std::string GroupElement::to_string() const { return join(coords_); }

GroupElement operator+(const GroupElement &a, const GroupElement &b) {
    if (a.group() != b.group())
        fail(ErrorKind::mismatch, "adding elements of different groups");
    std::vector<Int> c = a.coords();
    a.group().add_into(c, b.coords());
    return GroupElement(a.group(), std::move(c));
}

GroupElement operator-(const GroupElement &a, const GroupElement &b) {
    if (a.group() != b.group())
        fail(ErrorKind::mismatch, "subtracting elements of different groups");
    std::vector<Int> c = a.coords();
    a.group().sub_into(c, b.coords());
    return GroupElement(a.group(), std::move(c));
}

GroupElement operator-(const GroupElement &a) { return a.group().zero() - a; }

// ---------------------------------------------------------------------------

PrimaryDecomposition::PrimaryDecomposition(Group group) : group_(std::move(group)) {
    std::vector<Int> primes;
    for (auto [p, e] : factorize(group_.order()))
        primes.push_back(p);
    build(primes);
}

PrimaryDecomposition::PrimaryDecomposition(Group group, std::span<const Int> primes)
    : group_(std::move(group)) {
    build(primes);
}

void PrimaryDecomposition::build(std::span<const Int> primes) {
    Int order = group_.order();
    std::set<Int> sorted(primes.begin(), primes.end());
    for (Int p : sorted)
        if (!is_prime(p))
            fail(ErrorKind::invalid_input, std::to_string(p) + " is not prime");
    for (auto [p, e] : factorize(order))
        if (!sorted.count(p))
            fail(ErrorKind::invalid_input,
                 "prime " + std::to_string(p) + " divides the order but was not requested");

    for (Int p : sorted) {
        std::vector<Int> moduli;
        std::vector<std::size_t> sources;
        for (std::size_t i = 0; i < group_.rank(); ++i) {
            unsigned v = valuation(group_.modulus(i), p);
            if (v > 0) {
                moduli.push_back(checked_pow(p, v));
                sources.push_back(i);
            }
        }
        if (moduli.empty())
            moduli.push_back(1);
        components_.push_back({p, Group(std::move(moduli)), std::move(sources)});
    }
}

const PrimaryComponent &PrimaryDecomposition::component(std::size_t j) const {
    if (j >= components_.size())
        fail(ErrorKind::out_of_range, "component index " + std::to_string(j) + " out of range");
    return components_[j];
}

std::vector<Int> PrimaryDecomposition::primes() const {
    std::vector<Int> out;
    for (const auto &c : components_)
        out.push_back(c.prime);
    return out;
}

std::optional<std::size_t> PrimaryDecomposition::index_of_prime(Int p) const {
    for (std::size_t j = 0; j < components_.size(); ++j)
        if (components_[j].prime == p)
            return j;
    return std::nullopt;
}

GroupElement PrimaryDecomposition::project(const GroupElement &x, std::size_t j) const {
    if (x.group() != group_)
        fail(ErrorKind::mismatch, "element is not in the decomposed group");
    const auto &comp = component(j);
    if (comp.sources.empty())
        return comp.group.zero();
    std::vector<Int> c;
    c.reserve(comp.sources.size());
    for (std::size_t k = 0; k < comp.sources.size(); ++k)
        c.push_back(diffdeg::reduce(x[comp.sources[k]], comp.group.modulus(k)));
    return GroupElement(comp.group, std::move(c));
}

GroupElement PrimaryDecomposition::reassemble(std::span<const GroupElement> parts) const {
    if (parts.size() != components_.size())
        fail(ErrorKind::mismatch, "wrong number of component elements");
    // CRT per original coordinate: x_i = sum_p r_p * M_p * (M_p^{-1} mod p^v).
    std::vector<Int> coords(group_.rank(), 0);
    for (std::size_t j = 0; j < components_.size(); ++j) {
        const auto &comp = components_[j];
        if (parts[j].group() != comp.group)
            fail(ErrorKind::mismatch, "component element has the wrong group");
        for (std::size_t k = 0; k < comp.sources.size(); ++k) {
            std::size_t i = comp.sources[k];
            Int q = group_.modulus(i);
            Int pk = comp.group.modulus(k);
            Int cofactor = q / pk;
            Int term = mul_mod(mul_mod(parts[j][k], cofactor, q), inverse_mod(cofactor, pk), q);
            coords[i] = add_mod(coords[i], term, q);
        }
    }
    return GroupElement(group_, std::move(coords));
}

GroupElement PrimaryDecomposition::embed(const GroupElement &part, std::size_t j) const {
    std::vector<GroupElement> parts;
    for (std::size_t k = 0; k < components_.size(); ++k)
        parts.push_back(k == j ? part : components_[k].group.zero());
    return reassemble(parts);
}

} // namespace diffdeg
