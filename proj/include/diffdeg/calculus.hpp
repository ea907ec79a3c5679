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

#include "diffdeg/degree.hpp"
#include "diffdeg/function_table.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace diffdeg {

/// (Delta_g f)(x) = f(x + g) - f(x).
FunctionTable delta(const FunctionTable &f, const GroupElement &g);

/// Delta along the generator e_i (zero-based `i`).
FunctionTable delta(const FunctionTable &f, std::size_t i);

/// Smallest m such that every Delta_1^{d_1}...Delta_n^{d_n} f with
/// sum d = m + 1 vanishes. Multi-indices are explored level by level,
/// pruning zero tables; INFINITE once level `cap + 1` still has a nonzero
/// table. Requires a finite codomain.
Degree functional_degree(const FunctionTable &f, std::uint64_t cap);

/// `functional_degree` capped by the largest finite degree possible between
/// the two groups, which makes the answer exact.
Degree functional_degree(const FunctionTable &f);

/// Smallest m with Delta_i^{m+1} f = 0, INFINITE if none.
Degree partial_degree(const FunctionTable &f, std::size_t i);

struct DegreeReport {
    Degree total;
    std::vector<Degree> partial;
};

DegreeReport degree_report(const FunctionTable &f);

/// The univariate map x -> f(a_1, ..., a_{i-1}, x, a_{i+1}, ..., a_n) on Z_{q_i}.
FunctionTable section(const FunctionTable &f, std::size_t i, const GroupElement &a);

/// Indicator of 0: every codomain coordinate 1 at the origin, 0 elsewhere.
FunctionTable lagrange(const Group &domain, const Group &codomain);

/// (|A| - 1) * Omega(|B|): the subgroups of maps of degree <= k strictly grow
/// until they stabilize, so any finite degree is at most this. Independent of
/// the closed-form bounds.
std::uint64_t chain_length_bound(const Group &domain, const Group &codomain);

struct Classification {
    bool finite = false;
    /// Primes dividing |A| |B|, ascending.
    std::vector<Int> primes;
    /// When finite: f_j from the p_j-component of A to that of B.
    std::vector<FunctionTable> components;
    /// When infinite: (p_1, p_2) with the p_2-part of f(x) depending on the
    /// p_1-part of x.
    std::optional<std::pair<Int, Int>> witness;
};

/// Decides whether f splits as (f_1(x_1), ..., f_t(x_t)) over the primary
/// components, which is exactly the finite-degree condition.
Classification classify(const FunctionTable &f);

} // namespace diffdeg
