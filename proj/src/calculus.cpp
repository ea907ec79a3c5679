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

#include "diffdeg/calculus.hpp"

#include "diffdeg/bounds.hpp"
#include "diffdeg/error.hpp"

#include <map>
#include <set>

namespace diffdeg {

namespace {

// Index of x + g for every x, in enumeration order.
std::vector<std::size_t> shift_permutation(const Group &domain, std::span<const Int> g) {
    const auto n = static_cast<std::size_t>(domain.order());
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto x = domain.coords_at(k);
        domain.add_into(x, g);
        perm[k] = domain.index_of(x);
    }
    return perm;
}

std::vector<Int> apply_delta(const std::vector<Int> &values, const std::vector<std::size_t> &perm,
                             const Group &codomain) {
    const std::size_t w = codomain.rank();
    std::vector<Int> out(values.size());
    for (std::size_t k = 0; k < perm.size(); ++k)
        for (std::size_t c = 0; c < w; ++c)
            out[k * w + c] = sub_mod(values[perm[k] * w + c], values[k * w + c], codomain.modulus(c));
    return out;
}

bool all_zero(const std::vector<Int> &v) {
    for (Int x : v)
        if (x != 0)
            return false;
    return true;
}

void require_finite(const FunctionTable &f) {
    if (!f.codomain().is_finite())
        fail(ErrorKind::unsupported, "degree computation needs a finite codomain");
}

std::uint64_t degree_cap(const Group &domain, const Group &codomain) {
    return max_degree_general(domain, codomain).bound;
}

} // namespace

FunctionTable delta(const FunctionTable &f, const GroupElement &g) {
    if (g.group() != f.domain())
        fail(ErrorKind::mismatch, "shift element is not in the domain");
    auto perm = shift_permutation(f.domain(), g.coords());
    return FunctionTable(f.domain(), f.codomain(), apply_delta(f.values(), perm, f.codomain()));
}

FunctionTable delta(const FunctionTable &f, std::size_t i) {
    return delta(f, f.domain().unit_vector(i));
}

Degree functional_degree(const FunctionTable &f, std::uint64_t cap) {
    require_finite(f);
    const Group &A = f.domain();
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> active; // coordinates with q_i > 1; the others give Delta_i = 0
    for (std::size_t i = 0; i < A.rank(); ++i) {
        perms.push_back(shift_permutation(A, A.unit_vector(i).coords()));
        if (A.modulus(i) > 1)
            active.push_back(i);
    }

    using Level = std::map<std::vector<std::uint32_t>, std::vector<Int>>;
    Level level;
    if (!f.is_zero())
        level.emplace(std::vector<std::uint32_t>(A.rank(), 0), f.values());
    if (level.empty())
        return Degree(0);

    for (std::uint64_t k = 1;; ++k) {
        Level next;
        std::set<std::vector<std::uint32_t>> vanished;
        for (const auto &[d, values] : level) {
            for (std::size_t i : active) {
                auto e = d;
                ++e[i];
                if (next.count(e) || vanished.count(e))
                    continue;
                auto t = apply_delta(values, perms[i], f.codomain());
                if (all_zero(t))
                    vanished.insert(std::move(e));
                else
                    next.emplace(std::move(e), std::move(t));
            }
        }
        if (next.empty())
            return Degree(k - 1);
        if (k > cap)
            return Degree::infinite();
        level = std::move(next);
    }
}

Degree functional_degree(const FunctionTable &f) {
    require_finite(f);
    return functional_degree(f, degree_cap(f.domain(), f.codomain()));
}

Degree partial_degree(const FunctionTable &f, std::size_t i) {
    require_finite(f);
    const Group &A = f.domain();
    if (i >= A.rank())
        fail(ErrorKind::out_of_range, "coordinate index " + std::to_string(i) + " out of range");
    // Every section is a map Z_{q_i} -> B, so a finite partial degree obeys
    // that pair's bound.
    const std::uint64_t cap = degree_cap(Group({A.modulus(i)}), f.codomain());
    auto perm = shift_permutation(A, A.unit_vector(i).coords());

    std::vector<Int> t = f.values();
    std::set<std::vector<Int>> orbit;
    for (std::uint64_t k = 0;; ++k) {
        // t = Delta_i^k f
        if (all_zero(t))
            return Degree(k == 0 ? 0 : k - 1);
        if (k > cap || !orbit.insert(t).second)
            return Degree::infinite();
        t = apply_delta(t, perm, f.codomain());
    }
}

DegreeReport degree_report(const FunctionTable &f) {
    DegreeReport r{functional_degree(f), {}};
    for (std::size_t i = 0; i < f.domain().rank(); ++i)
        r.partial.push_back(partial_degree(f, i));
    return r;
}

FunctionTable section(const FunctionTable &f, std::size_t i, const GroupElement &a) {
    if (a.group() != f.domain())
        fail(ErrorKind::mismatch, "base point is not in the domain");
    if (i >= f.domain().rank())
        fail(ErrorKind::out_of_range, "coordinate index " + std::to_string(i) + " out of range");
    Group line({f.domain().modulus(i)});
    FunctionTable out(line, f.codomain());
    auto x = a.coords();
    for (Int v = 0; v < line.modulus(0); ++v) {
        x[i] = v;
        out.set(static_cast<std::size_t>(v), f.value(f.domain().index_of(x)));
    }
    return out;
}

FunctionTable lagrange(const Group &domain, const Group &codomain) {
    FunctionTable chi(domain, codomain);
    chi.set(0, std::vector<Int>(codomain.rank(), 1));
    return chi;
}

std::uint64_t chain_length_bound(const Group &domain, const Group &codomain) {
    return static_cast<std::uint64_t>(domain.order() - 1) * prime_omega(codomain.order());
}

Classification classify(const FunctionTable &f) {
    require_finite(f);
    const Group &A = f.domain();
    const Group &B = f.codomain();

    std::set<Int> prime_set;
    for (auto [p, e] : factorize(A.order()))
        prime_set.insert(p);
    for (auto [p, e] : factorize(B.order()))
        prime_set.insert(p);

    Classification result;
    result.primes.assign(prime_set.begin(), prime_set.end());
    PrimaryDecomposition dA(A, result.primes);
    PrimaryDecomposition dB(B, result.primes);
    const auto elements = A.enumerate();

    for (std::size_t j = 0; j < result.primes.size(); ++j) {
        const Group &Aj = dA.component(j).group;
        const Group &Bj = dB.component(j).group;
        FunctionTable fj(Aj, Bj);
        // For each A_j-element, the first x seen with that projection.
        std::vector<std::optional<std::size_t>> first(static_cast<std::size_t>(Aj.order()));
        for (std::size_t k = 0; k < elements.size(); ++k) {
            auto a = dA.project(elements[k], j);
            auto b = dB.project(f(elements[k]), j);
            auto ai = Aj.index_of(a.coords());
            if (!first[ai]) {
                first[ai] = k;
                fj.set(ai, b.coords());
                continue;
            }
            if (std::equal(b.coords().begin(), b.coords().end(), fj.value(ai).begin()))
                continue;
            // Same p_j-part, different p_j-output: the difference of the two
            // arguments lives in other components, one of which f listens to.
            auto diff = elements[k] - elements[*first[ai]];
            for (std::size_t j1 = 0; j1 < result.primes.size(); ++j1) {
                if (!dA.project(diff, j1).is_zero()) {
                    result.witness = std::make_pair(result.primes[j1], result.primes[j]);
                    break;
                }
            }
            result.finite = false;
            result.components.clear();
            return result;
        }
        result.components.push_back(std::move(fj));
    }
    result.finite = true;
    return result;
}

} // namespace diffdeg
