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
#include "diffdeg/polyfract.hpp"

#include <cstdint>
#include <vector>

namespace diffdeg {

// Domain Z_{p^a_1} x ... x Z_{p^a_n} and codomain Z_{p^b_1} x ... x Z_{p^b_t}
// for a single prime p, stored by exponents.
class PGroupSpec {
public:
    PGroupSpec(Int prime, std::vector<unsigned> alphas, std::vector<unsigned> betas);
    PGroupSpec(Int prime, std::vector<unsigned> alphas, unsigned beta)
        : PGroupSpec(prime, std::move(alphas), std::vector<unsigned>{beta}) {}

    Int prime() const noexcept { return prime_; }
    const std::vector<unsigned> &alphas() const noexcept { return alphas_; }
    const std::vector<unsigned> &betas() const noexcept { return betas_; }
    unsigned alpha_max() const noexcept;
    unsigned beta_max() const noexcept;

    Group domain() const;
    Group codomain() const;

private:
    Int prime_;
    std::vector<unsigned> alphas_;
    std::vector<unsigned> betas_;
};

struct PrimeBound {
    Int prime;
    Group domain_part;
    Group codomain_part;
    std::uint64_t bound;
};

struct MaxDegreeVerdict {
    enum class Kind { bound, constants_only, trivial };

    Kind kind;
    /// The largest finite degree; 0 unless `kind == Kind::bound`.
    std::uint64_t bound = 0;
    /// One entry per prime dividing gcd(|A|, |B|), ascending.
    std::vector<PrimeBound> per_prime;
};

const char *to_string(MaxDegreeVerdict::Kind kind) noexcept;

/// Integer representative of the delta-th Taylor coefficient of the
/// indicator of 0 on Z_{p^alpha}: the alternating sum of binom(delta, i)
/// over 0 <= i <= delta with i = delta (mod p^alpha). Exact, not reduced.
BigInt c_hat_exact(std::uint64_t delta, unsigned alpha, Int p);

/// `c_hat_exact` reduced modulo p^beta.
Int c_hat(std::uint64_t delta, unsigned alpha, Int p, unsigned beta);

/// The same residue read off the constant term of (x-1)^delta in
/// Z_{p^beta}[x]/(x^{p^alpha} - 1).
Int c_hat_via_reduction(std::uint64_t delta, unsigned alpha, Int p, unsigned beta);

/// beta p^alpha - (beta-1) p^(alpha-1) - 1, the degree of the indicator
/// Z_{p^alpha} -> Z_{p^beta}.
std::uint64_t max_degree_cyclic(Int p, unsigned alpha, unsigned beta);

/// sum_j p^{alpha_j} - n + (beta-1)(p-1)p^{alpha_max-1}; requires one beta.
std::uint64_t max_degree_p_group(const PGroupSpec &spec);

/// As `max_degree_p_group` with beta replaced by the largest codomain exponent.
std::uint64_t max_degree_p_to_product(const PGroupSpec &spec);

/// Largest finite functional degree of a map between two finite groups.
MaxDegreeVerdict max_degree_general(const Group &domain, const Group &codomain);

/// Nilpotency degree of the augmentation ideal of Z_{p^beta}[domain]; one beta.
std::uint64_t nilpotency_degree(const PGroupSpec &spec);

/// Binomial-basis expansion over Z_{p^beta} of the indicator of 0 on
/// Z_{p^alpha_1} x ... x Z_{p^alpha_n}, assembled as a tensor product of the
/// univariate expansions.
Polyfract lagrange_coefficients(Int p, const std::vector<unsigned> &alphas, unsigned beta);

} // namespace diffdeg
