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

#include "diffdeg/bounds.hpp"

#include "diffdeg/error.hpp"
#include "diffdeg/group_ring.hpp"

#include <algorithm>
#include <optional>

namespace diffdeg {

namespace {

void require_prime(Int p) {
    if (!is_prime(p))
        fail(ErrorKind::invalid_input, std::to_string(p) + " is not prime");
}

void require_positive(unsigned e, const char *what) {
    if (e < 1)
        fail(ErrorKind::invalid_input, std::string(what) + " must be at least 1");
}

std::uint64_t upow(Int p, unsigned e) { return static_cast<std::uint64_t>(checked_pow(p, e)); }

// sum_j p^{alpha_j} - n + (beta - 1)(p - 1) p^{alpha_max - 1}
std::uint64_t p_group_bound(Int p, const std::vector<unsigned> &alphas, unsigned beta) {
    std::uint64_t total = 0;
    for (unsigned a : alphas)
        total += upow(p, a) - 1;
    unsigned amax = *std::max_element(alphas.begin(), alphas.end());
    return total + static_cast<std::uint64_t>(beta - 1) * static_cast<std::uint64_t>(p - 1) *
                       upow(p, amax - 1);
}

} // namespace

PGroupSpec::PGroupSpec(Int prime, std::vector<unsigned> alphas, std::vector<unsigned> betas)
    : prime_(prime), alphas_(std::move(alphas)), betas_(std::move(betas)) {
    require_prime(prime_);
    if (alphas_.empty() || betas_.empty())
        fail(ErrorKind::invalid_input, "a p-group spec needs at least one alpha and one beta");
    for (unsigned a : alphas_)
        require_positive(a, "alpha");
    for (unsigned b : betas_)
        require_positive(b, "beta");
}

unsigned PGroupSpec::alpha_max() const noexcept { return *std::max_element(alphas_.begin(), alphas_.end()); }
unsigned PGroupSpec::beta_max() const noexcept { return *std::max_element(betas_.begin(), betas_.end()); }

Group PGroupSpec::domain() const {
    std::vector<Int> q;
    for (unsigned a : alphas_)
        q.push_back(checked_pow(prime_, a));
    return Group(std::move(q));
}

Group PGroupSpec::codomain() const {
    std::vector<Int> r;
    for (unsigned b : betas_)
        r.push_back(checked_pow(prime_, b));
    return Group(std::move(r));
}

const char *to_string(MaxDegreeVerdict::Kind kind) noexcept {
    switch (kind) {
    case MaxDegreeVerdict::Kind::bound: return "bound";
    case MaxDegreeVerdict::Kind::constants_only: return "constants_only";
    case MaxDegreeVerdict::Kind::trivial: return "trivial";
    }
    return "unknown";
}

BigInt c_hat_exact(std::uint64_t delta, unsigned alpha, Int p) {
    require_prime(p);
    require_positive(alpha, "alpha");
    const auto period = upow(p, alpha);
    BigInt sum = 0;
    for (std::uint64_t i = delta % period; i <= delta; i += period) {
        BigInt term = binomial(static_cast<Int>(delta), i);
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

Int c_hat(std::uint64_t delta, unsigned alpha, Int p, unsigned beta) {
    require_positive(beta, "beta");
    BigInt exact = c_hat_exact(delta, alpha, p);
    return residue(exact, checked_pow(p, beta));
}

Int c_hat_via_reduction(std::uint64_t delta, unsigned alpha, Int p, unsigned beta) {
    // The constant term of (x-1)^delta is sum (-1)^(delta-k) binom(delta,k)
    // over k = 0 mod p^alpha, i.e. exactly c_hat after k -> delta - k. The
    // coefficient of x^(delta mod p^alpha) carries an extra (-1)^delta.
    auto coeffs = quotient_power(p, alpha, beta, delta);
    return coeffs[0];
}

std::uint64_t max_degree_cyclic(Int p, unsigned alpha, unsigned beta) {
    require_prime(p);
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    return beta * upow(p, alpha) - (beta - 1) * upow(p, alpha - 1) - 1;
}

std::uint64_t max_degree_p_group(const PGroupSpec &spec) {
    if (spec.betas().size() != 1)
        fail(ErrorKind::invalid_input, "expected a cyclic codomain (a single beta)");
    return p_group_bound(spec.prime(), spec.alphas(), spec.betas()[0]);
}

std::uint64_t max_degree_p_to_product(const PGroupSpec &spec) {
    return p_group_bound(spec.prime(), spec.alphas(), spec.beta_max());
}

MaxDegreeVerdict max_degree_general(const Group &domain, const Group &codomain) {
    const Int a = domain.order();
    const Int b = codomain.order();
    if (a == 1 || b == 1)
        return {MaxDegreeVerdict::Kind::trivial, 0, {}};
    const Int g = gcd(a, b);
    if (g == 1)
        return {MaxDegreeVerdict::Kind::constants_only, 0, {}};

    MaxDegreeVerdict verdict{MaxDegreeVerdict::Kind::bound, 0, {}};
    for (auto [p, e] : factorize(g)) {
        std::vector<unsigned> alphas, betas;
        std::vector<Int> aq, bq;
        for (Int q : domain.moduli())
            if (unsigned v = valuation(q, p); v > 0) {
                alphas.push_back(v);
                aq.push_back(checked_pow(p, v));
            }
        for (Int r : codomain.moduli())
            if (unsigned v = valuation(r, p); v > 0) {
                betas.push_back(v);
                bq.push_back(checked_pow(p, v));
            }
        std::uint64_t bound = max_degree_p_to_product(PGroupSpec(p, alphas, betas));
        verdict.per_prime.push_back({p, Group(std::move(aq)), Group(std::move(bq)), bound});
        verdict.bound = std::max(verdict.bound, bound);
    }
    return verdict;
}

std::uint64_t nilpotency_degree(const PGroupSpec &spec) { return max_degree_p_group(spec) + 1; }

Polyfract lagrange_coefficients(Int p, const std::vector<unsigned> &alphas, unsigned beta) {
    PGroupSpec spec(p, alphas, beta);
    const Group ring({checked_pow(p, beta)});
    std::optional<Polyfract> product;
    for (unsigned a : alphas) {
        Polyfract chi(1, ring);
        const auto top = max_degree_cyclic(p, a, beta);
        for (std::uint64_t d = 0; d <= top; ++d) {
            Int c = c_hat(d, a, p, beta);
            chi.add_term(MultiIndex({static_cast<std::uint32_t>(d)}), std::span<const Int>(&c, 1));
        }
        product = product ? tensor_product(*product, chi) : chi;
    }
    return *product;
}

} // namespace diffdeg
