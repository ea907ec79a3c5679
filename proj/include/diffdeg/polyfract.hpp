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

#include "diffdeg/function_table.hpp"
#include "diffdeg/group.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diffdeg {

// Exponent tuple (delta_1, ..., delta_n) of a monofract
// binom(X_1, delta_1) ... binom(X_n, delta_n).
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}
    static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<std::uint32_t>(n, 0)); }

    std::size_t size() const noexcept { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_.at(i); }
    std::uint32_t &operator[](std::size_t i) { return e_.at(i); }
    const std::vector<std::uint32_t> &exponents() const noexcept { return e_; }

    std::uint64_t total() const noexcept;
    /// Componentwise partial order.
    bool divides(const MultiIndex &other) const;

    friend auto operator<=>(const MultiIndex &, const MultiIndex &) = default;
    friend bool operator==(const MultiIndex &, const MultiIndex &) = default;

private:
    std::vector<std::uint32_t> e_;
};

/// prod_i binom(x_i, delta_i) in exact integers; x may be negative.
BigInt monofract_value(std::span<const Int> x, const MultiIndex &delta);

// A finite B-linear combination of monofracts in `vars` variables with
// coefficients in the codomain group. Always canonical: no zero coefficient
// is stored, so structural equality is functional equality.
class Polyfract {
public:
    using Terms = std::map<MultiIndex, std::vector<Int>, std::greater<>>;

    Polyfract(std::size_t vars, Group codomain);

    std::size_t vars() const noexcept { return vars_; }
    const Group &codomain() const noexcept { return codomain_; }
    /// Terms in descending lexicographic order of their multi-index.
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds `coeff * binom(X, delta)`, dropping the term if it cancels.
    void add_term(const MultiIndex &delta, std::span<const Int> coeff);
    /// Coefficient at `delta`, zero when absent.
    std::vector<Int> coefficient(const MultiIndex &delta) const;

    /// Total degree; 0 for the zero polyfract.
    std::uint64_t degree() const noexcept;
    /// Degree in variable i; 0 for the zero polyfract.
    std::uint64_t degree(std::size_t i) const;

    std::vector<Int> evaluate(std::span<const Int> x) const;

    friend bool operator==(const Polyfract &, const Polyfract &) = default;

private:
    std::size_t vars_;
    Group codomain_;
    Terms terms_;
};

/// Scalar action of the integers on a codomain element.
std::vector<Int> scale(const Group &codomain, std::span<const Int> b, const BigInt &s);

Polyfract operator+(const Polyfract &p, const Polyfract &q);
Polyfract operator-(const Polyfract &p, const Polyfract &q);
Polyfract operator-(const Polyfract &p);

/// Symbolic Delta_i via Pascal's rule: binom(X_i, l+1) -> binom(X_i, l), binom(X_i, 0) -> 0.
Polyfract delta_symbolic(const Polyfract &p, std::size_t i);

/// The polyfract of X -> P(X + a), from binom(X + a, d) = sum_k binom(a, d - k) binom(X, k).
Polyfract shift(const Polyfract &p, std::span<const Int> a);

/// True iff shifting by q_i e_i leaves P unchanged for every q_i >= 1.
bool is_periodic(const Polyfract &p, const Group &periods);

/// Product of polyfracts in disjoint variable blocks over a common Z_m:
/// variables of `p` come first.
Polyfract tensor_product(const Polyfract &p, const Polyfract &q);

/// Discrete Taylor interpolation on the box [0, d_1] x ... x [0, d_n]:
/// the coefficient at delta is [Delta^delta f](0). `values` holds the box in
/// row-major order, `codomain.rank()` entries per point.
Polyfract taylor_interpolate(const Group &codomain, const MultiIndex &box,
                             std::span<const Int> values);

struct PeriodicPolyfract {
    Polyfract polyfract;
    Group periods;
};

/// The periodic polyfract representing a finite-degree table; throws
/// `no_representation` when the table has infinite degree.
PeriodicPolyfract interpolate_table(const FunctionTable &f);

/// Values of a periodic polyfract on the representatives of `domain`.
/// Throws `invalid_input` if P is not periodic with those periods.
FunctionTable tabulate(const Polyfract &p, const Group &domain);

/// Text format:
///
///     vars: 3
///     codomain: 2,9,7,7
///     3,0,0 : 1,0,0,0
///
/// one line per nonzero term, descending multi-index order.
std::string format_polyfract(const Polyfract &p);
/// Rejects zero coefficients and repeated multi-indices.
Polyfract parse_polyfract(std::string_view text);

} // namespace diffdeg
