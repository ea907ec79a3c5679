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

#include "diffdeg/group_ring.hpp"

#include "diffdeg/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace diffdeg {

GroupRingElement::GroupRingElement(Int modulus, Group group)
    : modulus_(modulus), group_(std::move(group)) {
    if (modulus_ < 2)
        fail(ErrorKind::invalid_input, "group ring modulus must be at least 2");
    if (!group_.is_finite())
        fail(ErrorKind::unsupported, "group rings need a finite group");
    coeffs_.assign(static_cast<std::size_t>(group_.order()), 0);
}

GroupRingElement GroupRingElement::one(Int modulus, const Group &group) {
    return basis(modulus, group.zero());
}

GroupRingElement GroupRingElement::basis(Int modulus, const GroupElement &g) {
    GroupRingElement out(modulus, g.group());
    out.set_coefficient(g, 1);
    return out;
}

Int GroupRingElement::coefficient(const GroupElement &g) const {
    if (g.group() != group_)
        fail(ErrorKind::mismatch, "element is not in the ring's group");
    return coeffs_[group_.index_of(g.coords())];
}

void GroupRingElement::set_coefficient(const GroupElement &g, Int value) {
    if (g.group() != group_)
        fail(ErrorKind::mismatch, "element is not in the ring's group");
    coeffs_[group_.index_of(g.coords())] = reduce(value, modulus_);
}

bool GroupRingElement::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

Int GroupRingElement::augmentation() const noexcept {
    Int s = 0;
    for (Int c : coeffs_)
        s = add_mod(s, c, modulus_);
    return s;
}

namespace {

void require_same_ring(const GroupRingElement &a, const GroupRingElement &b) {
    if (a.modulus() != b.modulus() || a.group() != b.group())
        fail(ErrorKind::mismatch, "group ring elements live in different rings");
}

} // namespace

GroupRingElement &GroupRingElement::operator+=(const GroupRingElement &other) {
    require_same_ring(*this, other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] = add_mod(coeffs_[k], other.coeffs_[k], modulus_);
    return *this;
}

GroupRingElement &GroupRingElement::operator-=(const GroupRingElement &other) {
    require_same_ring(*this, other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] = sub_mod(coeffs_[k], other.coeffs_[k], modulus_);
    return *this;
}

GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b) { return a += b; }
GroupRingElement operator-(GroupRingElement a, const GroupRingElement &b) { return a -= b; }

GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b) {
    require_same_ring(a, b);
    const Group &G = a.group_;
    const std::size_t n = a.coeffs_.size();
    const std::size_t r = G.rank();
    std::vector<Int> coords(n * r);
    for (std::size_t k = 0; k < n; ++k) {
        auto c = G.coords_at(k);
        std::copy(c.begin(), c.end(), coords.begin() + static_cast<std::ptrdiff_t>(k * r));
    }
    std::vector<std::size_t> support_b;
    for (std::size_t k = 0; k < n; ++k)
        if (b.coeffs_[k] != 0)
            support_b.push_back(k);

    GroupRingElement out(a.modulus_, G);
    for (std::size_t g = 0; g < n; ++g) {
        if (a.coeffs_[g] == 0)
            continue;
        for (std::size_t h : support_b) {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < r; ++i) {
                Int q = G.modulus(i);
                Int s = coords[g * r + i] + coords[h * r + i];
                idx = idx * static_cast<std::size_t>(q) + static_cast<std::size_t>(s >= q ? s - q : s);
            }
            auto &slot = out.coeffs_[idx];
            slot = add_mod(slot, mul_mod(a.coeffs_[g], b.coeffs_[h], a.modulus_), a.modulus_);
        }
    }
    return out;
}

GroupRingElement power(const GroupRingElement &a, std::uint64_t exponent) {
    GroupRingElement result = GroupRingElement::one(a.modulus(), a.group());
    GroupRingElement base = a;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * base;
        exponent >>= 1U;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

GroupRingElement generator_difference(Int modulus, const Group &group, std::size_t i) {
    return GroupRingElement::basis(modulus, group.unit_vector(i)) - GroupRingElement::one(modulus, group);
}

namespace {

// Content valuations c[d] = min(beta, min_g v_p((x - 1)^d (g))) in
// Z_{p^beta}[Z_q], for d = 0 until the power vanishes (c = beta).
std::vector<unsigned> content_profile(Int p, unsigned beta, Int q) {
    const Int pb = checked_pow(p, beta);
    const Group cyclic({q});
    const GroupRingElement step = generator_difference(pb, cyclic, 0);
    GroupRingElement cur = GroupRingElement::one(pb, cyclic);
    std::set<std::vector<Int>> seen;
    std::vector<unsigned> profile;
    while (true) {
        if (cur.is_zero()) {
            profile.push_back(beta);
            return profile;
        }
        std::vector<Int> key(cur.coefficients().begin(), cur.coefficients().end());
        if (!seen.insert(key).second)
            fail(ErrorKind::unsupported, "augmentation ideal of Z_" + std::to_string(pb) + "[Z_" +
                                             std::to_string(q) + "] is not nilpotent");
        unsigned content = beta;
        for (Int c : key)
            if (c != 0)
                content = std::min(content, valuation(c, p));
        profile.push_back(content);
        cur = cur * step;
    }
}

// Smallest nu >= 1 such that every d with sum d = nu has sum_i profile_i[d_i] >= beta
// (entries past a profile's end count as beta).
std::uint64_t smallest_vanishing_total(const std::vector<std::vector<unsigned>> &profiles, unsigned beta) {
    constexpr unsigned unreachable = std::numeric_limits<unsigned>::max();
    // best[s]: least total content over d with sum s and d_i inside each profile.
    std::vector<unsigned> best{0};
    for (const auto &prof : profiles) {
        std::vector<unsigned> next(best.size() + prof.size() - 1, unreachable);
        for (std::size_t s = 0; s < best.size(); ++s) {
            if (best[s] == unreachable)
                continue;
            for (std::size_t d = 0; d < prof.size(); ++d) {
                unsigned cost = std::min(beta, best[s] + prof[d]);
                next[s + d] = std::min(next[s + d], cost);
            }
        }
        best = std::move(next);
    }
    for (std::size_t s = 1; s < best.size(); ++s)
        if (best[s] >= beta)
            return s;
    return best.size();
}

} // namespace

std::uint64_t nilpotency_oracle(Int modulus, const Group &group) {
    if (modulus < 2)
        fail(ErrorKind::invalid_input, "group ring modulus must be at least 2");
    if (!group.is_finite())
        fail(ErrorKind::unsupported, "group rings need a finite group");
    std::uint64_t nu = 1;
    for (auto [p, beta] : factorize(modulus)) {
        std::map<Int, std::vector<unsigned>> cache;
        std::vector<std::vector<unsigned>> profiles;
        for (Int q : group.moduli()) {
            auto it = cache.find(q);
            if (it == cache.end())
                it = cache.emplace(q, content_profile(p, beta, q)).first;
            profiles.push_back(it->second);
        }
        nu = std::max(nu, smallest_vanishing_total(profiles, beta));
    }
    return nu;
}

std::uint64_t nilpotency_oracle_direct(Int modulus, const Group &group) {
    if (modulus < 2)
        fail(ErrorKind::invalid_input, "group ring modulus must be at least 2");
    if (!group.is_finite())
        fail(ErrorKind::unsupported, "group rings need a finite group");
    // Powers of the ideal strictly shrink until they stabilize.
    const std::uint64_t cap = static_cast<std::uint64_t>(group.order() - 1) * prime_omega(modulus) + 1;

    std::vector<GroupRingElement> steps;
    for (std::size_t i = 0; i < group.rank(); ++i)
        steps.push_back(generator_difference(modulus, group, i));

    using Level = std::map<std::vector<std::uint32_t>, GroupRingElement>;
    Level level;
    level.emplace(std::vector<std::uint32_t>(group.rank(), 0), GroupRingElement::one(modulus, group));
    for (std::uint64_t k = 1; k <= cap + 1; ++k) {
        Level next;
        std::set<std::vector<std::uint32_t>> vanished;
        for (const auto &[d, elem] : level) {
            for (std::size_t i = 0; i < steps.size(); ++i) {
                auto e = d;
                ++e[i];
                if (next.count(e) || vanished.count(e))
                    continue;
                auto prod = elem * steps[i];
                if (prod.is_zero())
                    vanished.insert(std::move(e));
                else
                    next.emplace(std::move(e), std::move(prod));
            }
        }
        if (next.empty())
            return k;
        level = std::move(next);
    }
    fail(ErrorKind::unsupported, "augmentation ideal of Z_" + std::to_string(modulus) + "[" +
                                     group.to_string() + "] is not nilpotent");
}

std::vector<Int> quotient_power(Int p, unsigned alpha, unsigned beta, std::uint64_t delta) {
    if (!is_prime(p))
        fail(ErrorKind::invalid_input, std::to_string(p) + " is not prime");
    if (alpha < 1 || beta < 1)
        fail(ErrorKind::invalid_input, "exponents alpha and beta must be positive");
    const Group cyclic({checked_pow(p, alpha)});
    auto x_minus_one = generator_difference(checked_pow(p, beta), cyclic, 0);
    auto r = power(x_minus_one, delta);
    return {r.coefficients().begin(), r.coefficients().end()};
}

} // namespace diffdeg
