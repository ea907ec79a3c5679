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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace diffdeg {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Exact, exhaustive or seeded-random checks of the library's formulas
// against its brute-force routes. Each returns one verdict.

/// Brute-force degree of the indicator Z_{p^a} -> Z_{p^b} matches the closed
/// form for p in {2,3}, a, b in {1,2}.
CheckResult check_cyclic_attainment();
/// Every map Z_2 x Z_2 -> Z_2 and Z_3 -> Z_3 stays within the p-group bound,
/// which is attained.
CheckResult check_p_group_supremacy();
/// Finite classification agrees with finite brute-force degree on all maps
/// Z_2 x Z_3 -> Z_3 and Z_2 x Z_3 -> Z_2.
CheckResult check_classification_biconditional();
/// Valuation behaviour of the indicator's Taylor coefficients for
/// p in {2,3,5}, alpha, beta in {1,2,3}, and agreement of both c-hat routes.
CheckResult check_lemma_valuations();
/// Closed-form nilpotency degree equals the group-ring computation.
CheckResult check_nilpotency_formula();
/// Interpolation then evaluation reproduces random finite-degree tables, and
/// polyfract degrees equal brute-force degrees.
CheckResult check_interpolation_roundtrip();
/// Random nonzero polyfracts are nonzero at a minimal support index.
CheckResult check_injectivity();
/// pdeg_i <= fdeg <= sum pdeg and pdeg_i = max over sections.
CheckResult check_degree_inequalities();
/// Worked instance Z_60 -> Z_126 x Z_7.
CheckResult check_worked_instance();

/// Seeded random maps of finite degree: random domain and codomain of order
/// <= 60, built from random maps between matching primary components.
std::vector<FunctionTable> random_finite_degree_tables(std::size_t count, std::uint64_t seed);

/// The map (x1, x2, x3) -> (binom(x1,3) + x1, 6 x2 + 3, 4, 5) from
/// Z_4 x Z_3 x Z_5 to Z_2 x Z_9 x Z_7 x Z_7, tabulated directly.
FunctionTable worked_example_table();

/// Suite names: small, lemma51, roundtrip, nilpotency.
const std::vector<std::string> &suite_names();
/// Throws `invalid_input` for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view name);

} // namespace diffdeg
