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

#include "diffdeg/verify.hpp"

#include "diffdeg/bounds.hpp"
#include "diffdeg/calculus.hpp"
#include "diffdeg/error.hpp"
#include "diffdeg/group_ring.hpp"
#include "diffdeg/polyfract.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace diffdeg {

namespace {

// Visits every map A -> B.
void for_each_map(const Group &A, const Group &B, const std::function<void(const FunctionTable &)> &visit) {
    const auto na = static_cast<std::size_t>(A.order());
    const auto nb = static_cast<std::size_t>(B.order());
    std::vector<std::size_t> digits(na, 0);
    FunctionTable f(A, B);
    while (true) {
        for (std::size_t k = 0; k < na; ++k)
            f.set(k, B.coords_at(digits[k]));
        visit(f);
        std::size_t k = 0;
        while (k < na && ++digits[k] == nb)
            digits[k++] = 0;
        if (k == na)
            return;
    }
}

CheckResult make(std::string name, bool ok, std::string detail) {
    return {std::move(name), ok, std::move(detail)};
}

Group random_group(std::mt19937_64 &rng, Int max_order, const std::vector<Int> &preferred) {
    std::uniform_int_distribution<int> rank_dist(1, 3);
    std::bernoulli_distribution prefer(0.5);
    const int rank = rank_dist(rng);
    std::vector<Int> moduli;
    Int order = 1;
    for (int i = 0; i < rank; ++i) {
        Int room = std::min<Int>(max_order / order, 16);
        if (room < 1)
            break;
        Int q;
        std::vector<Int> fits;
        for (Int c : preferred)
            if (c <= room)
                fits.push_back(c);
        if (!fits.empty() && prefer(rng)) {
            q = fits[std::uniform_int_distribution<std::size_t>(0, fits.size() - 1)(rng)];
        } else {
            q = std::uniform_int_distribution<Int>(1, room)(rng);
        }
        moduli.push_back(q);
        order *= q;
    }
    return Group(std::move(moduli));
}

} // namespace

std::vector<FunctionTable> random_finite_degree_tables(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<FunctionTable> out;
    out.reserve(count);
    while (out.size() < count) {
        Group A = random_group(rng, 60, {});
        // Bias the codomain towards moduli sharing primes with the domain.
        std::vector<Int> preferred;
        for (auto [p, e] : factorize(A.order()))
            for (Int q = p; q <= 16; q *= p)
                preferred.push_back(q);
        Group B = random_group(rng, 60, preferred);

        std::set<Int> prime_set;
        for (auto [p, e] : factorize(A.order()))
            prime_set.insert(p);
        for (auto [p, e] : factorize(B.order()))
            prime_set.insert(p);
        std::vector<Int> primes(prime_set.begin(), prime_set.end());
        PrimaryDecomposition dA(A, primes), dB(B, primes);

        std::vector<FunctionTable> parts;
        for (std::size_t j = 0; j < primes.size(); ++j) {
            const Group &Aj = dA.component(j).group;
            const Group &Bj = dB.component(j).group;
            std::uniform_int_distribution<Int> pick(0, Bj.order() - 1);
            FunctionTable fj(Aj, Bj);
            for (std::size_t k = 0; k < fj.size(); ++k)
                fj.set(k, Bj.coords_at(static_cast<std::size_t>(pick(rng))));
            parts.push_back(std::move(fj));
        }
        out.push_back(FunctionTable::tabulate(A, B, [&](const GroupElement &x) {
            std::vector<GroupElement> ys;
            for (std::size_t j = 0; j < primes.size(); ++j)
                ys.push_back(parts[j](dA.project(x, j)));
            return dB.reassemble(ys).coords();
        }));
    }
    return out;
}

FunctionTable worked_example_table() {
    return FunctionTable::tabulate(Group({4, 3, 5}), Group({2, 9, 7, 7}), [](const GroupElement &x) {
        Int x1 = x[0], x2 = x[1];
        Int f = x1 * (x1 - 1) * (x1 - 2) / 6 + x1;
        return std::vector<Int>{f, 6 * x2 + 3, 4, 5};
    });
}

CheckResult check_cyclic_attainment() {
    std::ostringstream detail;
    bool ok = true;
    int cases = 0;
    for (Int p : {2, 3})
        for (unsigned alpha : {1U, 2U})
            for (unsigned beta : {1U, 2U}) {
                Group A({checked_pow(p, alpha)}), B({checked_pow(p, beta)});
                Degree got = functional_degree(lagrange(A, B), chain_length_bound(A, B));
                auto want = max_degree_cyclic(p, alpha, beta);
                ++cases;
                if (got != Degree(want)) {
                    ok = false;
                    detail << "Z_" << A.modulus(0) << "->Z_" << B.modulus(0) << ": brute force "
                           << got.to_string() << ", formula " << want << "; ";
                }
            }
    if (ok)
        detail << cases << " cyclic pairs, brute force equals closed form";
    return make("cyclic-attainment", ok, detail.str());
}

CheckResult check_p_group_supremacy() {
    struct Case {
        Group A, B;
        PGroupSpec spec;
    };
    std::vector<Case> cases{{Group({2, 2}), Group({2}), PGroupSpec(2, {1, 1}, 1U)},
                            {Group({3}), Group({3}), PGroupSpec(3, {1}, 1U)}};
    std::ostringstream detail;
    bool ok = true;
    for (const auto &c : cases) {
        const auto bound = max_degree_p_group(c.spec);
        const auto cap = chain_length_bound(c.A, c.B);
        std::uint64_t best = 0, maps = 0, infinite = 0;
        for_each_map(c.A, c.B, [&](const FunctionTable &f) {
            ++maps;
            Degree d = functional_degree(f, cap);
            if (!d.is_finite())
                ++infinite;
            else
                best = std::max(best, d.value());
        });
        bool case_ok = infinite == 0 && best == bound;
        ok = ok && case_ok;
        detail << c.A.to_string() << "->" << c.B.to_string() << ": " << maps << " maps, max degree "
               << best << ", bound " << bound;
        if (infinite)
            detail << ", " << infinite << " infinite";
        if (&c != &cases.back())
            detail << "; ";
    }
    return make("p-group-supremacy", ok, detail.str());
}

CheckResult check_classification_biconditional() {
    std::ostringstream detail;
    bool ok = true;
    const std::vector<Group> codomains{Group({3}), Group({2})};
    for (const Group &B : codomains) {
        Group A({2, 3});
        std::uint64_t maps = 0, finite = 0, disagreements = 0;
        for_each_map(A, B, [&](const FunctionTable &f) {
            ++maps;
            bool by_split = classify(f).finite;
            bool by_degree = functional_degree(f).is_finite();
            finite += by_split;
            disagreements += by_split != by_degree;
        });
        ok = ok && disagreements == 0;
        detail << A.to_string() << "->" << B.to_string() << ": " << maps << " maps, " << finite
               << " finite, " << disagreements << " disagreements";
        if (&B != &codomains.back())
            detail << "; ";
    }
    return make("classification-biconditional", ok, detail.str());
}

CheckResult check_lemma_valuations() {
    std::ostringstream detail;
    std::size_t failures = 0;
    auto note = [&](const std::string &msg) {
        if (failures++ < 5)
            detail << msg << "; ";
    };
    std::uint64_t evaluated = 0;
    for (Int p : {2, 3, 5})
        for (unsigned alpha = 1; alpha <= 3; ++alpha)
            for (unsigned beta = 1; beta <= 3; ++beta) {
                const Int pb = checked_pow(p, beta);
                const Int period = checked_pow(p, alpha);
                const auto star = max_degree_cyclic(p, alpha, beta);
                const Int expected_top = reduce(checked_pow(-p, beta - 1), pb);
                const std::string where = "p=" + std::to_string(p) + " alpha=" + std::to_string(alpha) +
                                          " beta=" + std::to_string(beta);
                for (std::uint64_t d = 0; d <= star + 2 * static_cast<std::uint64_t>(period); ++d) {
                    const Int direct = c_hat(d, alpha, p, beta);
                    const Int reduced = c_hat_via_reduction(d, alpha, p, beta);
                    ++evaluated;
                    const std::string at = where + " delta=" + std::to_string(d);
                    if (direct != reduced)
                        note(at + ": routes give " + std::to_string(direct) + " and " + std::to_string(reduced));
                    if (d == star && (direct == 0 || direct != expected_top))
                        note(at + ": threshold coefficient " + std::to_string(direct) + ", expected " +
                             std::to_string(expected_top));
                    if (d > star && direct != 0)
                        note(at + ": coefficient " + std::to_string(direct) + " is not divisible");
                }
            }
    if (failures > 5)
        detail << failures - 5 << " more failures";
    if (failures == 0)
        detail << "27 parameter triples, " << evaluated << " coefficients, both routes agree";
    return make("lemma-valuations", failures == 0, detail.str());
}

namespace {

void for_each_alpha_tuple(Int p, Int budget, std::vector<unsigned> &prefix,
                          const std::function<void(const std::vector<unsigned> &)> &visit) {
    if (!prefix.empty())
        visit(prefix);
    for (unsigned a = 1;; ++a) {
        Int q = checked_pow(p, a);
        if (q > budget)
            break;
        prefix.push_back(a);
        for_each_alpha_tuple(p, budget - q, prefix, visit);
        prefix.pop_back();
    }
}

} // namespace

CheckResult check_nilpotency_formula() {
    std::ostringstream detail;
    bool ok = true;
    std::uint64_t tuples = 0, direct_checked = 0;
    for (Int p : {2, 3}) {
        std::vector<unsigned> prefix;
        for_each_alpha_tuple(p, 32, prefix, [&](const std::vector<unsigned> &alphas) {
            for (unsigned beta = 1; beta <= 3; ++beta) {
                PGroupSpec spec(p, alphas, beta);
                const Group G = spec.domain();
                const Int m = checked_pow(p, beta);
                auto formula = nilpotency_degree(spec);
                auto oracle = nilpotency_oracle(m, G);
                ++tuples;
                bool agree = formula == oracle;
                if (G.order() <= 16) {
                    ++direct_checked;
                    agree = agree && nilpotency_oracle_direct(m, G) == oracle;
                }
                if (!agree) {
                    ok = false;
                    detail << "Z_" << m << "[" << G.to_string() << "]: formula " << formula
                           << ", oracle " << oracle << "; ";
                }
            }
        });
    }
    if (ok)
        detail << tuples << " (alpha-tuple, beta) cases agree; " << direct_checked
               << " also confirmed by full group-ring products";
    return make("nilpotency-formula", ok, detail.str());
}

CheckResult check_interpolation_roundtrip() {
    static const char *kWorkedPayload = "vars: 3\n"
                                        "codomain: 2,9,7,7\n"
                                        "3,0,0 : 1,0,0,0\n"
                                        "1,0,0 : 1,0,0,0\n"
                                        "0,1,0 : 0,6,0,0\n"
                                        "0,0,0 : 0,3,4,5\n";
    std::ostringstream detail;
    bool ok = true;

    auto worked = worked_example_table();
    auto worked_poly = interpolate_table(worked);
    if (format_polyfract(worked_poly.polyfract) != kWorkedPayload) {
        ok = false;
        detail << "worked example interpolates to\n" << format_polyfract(worked_poly.polyfract);
    }
    if (tabulate(worked_poly.polyfract, worked.domain()) != worked) {
        ok = false;
        detail << "worked example does not round-trip; ";
    }

    std::size_t failures = 0;
    std::size_t index = 0;
    for (const auto &f : random_finite_degree_tables(1000, 20210628)) {
        auto P = interpolate_table(f);
        bool good = tabulate(P.polyfract, f.domain()) == f;
        good = good && functional_degree(f) == Degree(P.polyfract.degree());
        for (std::size_t i = 0; good && i < f.domain().rank(); ++i)
            good = partial_degree(f, i) == Degree(P.polyfract.degree(i));
        if (!good && failures++ < 3)
            detail << "table #" << index << " (" << f.domain().to_string() << " -> "
                   << f.codomain().to_string() << ") fails; ";
        ++index;
    }
    ok = ok && failures == 0;
    if (ok)
        detail << "worked example byte-exact; 1000 random tables round-trip with matching degrees";
    return make("interpolation-roundtrip", ok, detail.str());
}

CheckResult check_injectivity() {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> vars_dist(1, 3), terms_dist(1, 6), exp_dist(0, 6), rank_dist(1, 3);
    std::uniform_int_distribution<Int> mod_dist(0, 12), int_coeff(-50, 50);
    std::size_t failures = 0;
    std::ostringstream detail;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Int> moduli;
        for (int r = rank_dist(rng); r > 0; --r) {
            Int q = mod_dist(rng);
            moduli.push_back(q == 1 ? 2 : q); // Z_1 carries no nonzero coefficient
        }
        Group B(moduli);
        const auto n = static_cast<std::size_t>(vars_dist(rng));
        Polyfract P(n, B);
        while (P.is_zero()) {
            for (int t = terms_dist(rng); t > 0; --t) {
                std::vector<std::uint32_t> e(n);
                for (auto &x : e)
                    x = static_cast<std::uint32_t>(exp_dist(rng));
                std::vector<Int> b;
                for (Int q : moduli)
                    b.push_back(q == 0 ? int_coeff(rng) : std::uniform_int_distribution<Int>(0, q - 1)(rng));
                P.add_term(MultiIndex(e), b);
            }
        }
        // A support index with no other support index below it.
        const MultiIndex *minimal = nullptr;
        for (const auto &[d, b] : P.terms()) {
            bool is_min = true;
            for (const auto &[other, c] : P.terms())
                if (other != d && other.divides(d)) {
                    is_min = false;
                    break;
                }
            if (is_min) {
                minimal = &d;
                break;
            }
        }
        std::vector<Int> at(minimal->exponents().begin(), minimal->exponents().end());
        auto value = P.evaluate(at);
        bool good = value == P.coefficient(*minimal) &&
                    std::any_of(value.begin(), value.end(), [](Int v) { return v != 0; });
        if (!good && failures++ < 3)
            detail << "trial " << trial << ":\n" << format_polyfract(P);
    }
    if (failures == 0)
        detail << "1000 random nonzero polyfracts evaluate to their coefficient at a minimal index";
    return make("injectivity", failures == 0, detail.str());
}

CheckResult check_degree_inequalities() {
    std::size_t failures = 0;
    std::ostringstream detail;
    std::size_t index = 0;
    for (const auto &f : random_finite_degree_tables(1000, 20210628)) {
        const Group &A = f.domain();
        Degree total = functional_degree(f);
        std::uint64_t sum = 0;
        bool good = total.is_finite();
        for (std::size_t i = 0; good && i < A.rank(); ++i) {
            Degree pd = partial_degree(f, i);
            good = pd.is_finite() && pd <= total;
            if (!good)
                break;
            sum += pd.value();
            // Sections only depend on the coordinates other than i.
            std::uint64_t best = 0;
            for (std::size_t k = 0; k < f.size(); ++k) {
                auto a = A.coords_at(k);
                if (a[i] != 0)
                    continue;
                Degree sd = functional_degree(section(f, i, A.element(a)));
                good = good && sd.is_finite();
                if (good)
                    best = std::max(best, sd.value());
            }
            good = good && best == pd.value();
        }
        good = good && total.value() <= sum;
        if (!good && failures++ < 3)
            detail << "table #" << index << " (" << A.to_string() << " -> " << f.codomain().to_string()
                   << ") violates the inequalities; ";
        ++index;
    }
    if (failures == 0)
        detail << "1000 random tables satisfy pdeg_i <= fdeg <= sum pdeg and pdeg_i = max section degree";
    return make("degree-inequalities", failures == 0, detail.str());
}

CheckResult check_worked_instance() {
    std::ostringstream detail;
    const Group A({60}), B({126, 7});
    auto verdict = max_degree_general(A, B);
    bool ok = verdict.kind == MaxDegreeVerdict::Kind::bound && verdict.bound == 4 &&
              verdict.per_prime.size() == 2 && verdict.per_prime[0].prime == 2 &&
              verdict.per_prime[0].bound == 3 && verdict.per_prime[1].prime == 3 &&
              verdict.per_prime[1].bound == 4;
    detail << "bound " << verdict.bound << " (";
    for (const auto &pb : verdict.per_prime)
        detail << (&pb == &verdict.per_prime.front() ? "" : ", ") << "p=" << pb.prime << ": " << pb.bound;
    detail << ")";
    const Group A3({3}), B9({9});
    Degree attained = functional_degree(lagrange(A3, B9), chain_length_bound(A3, B9));
    ok = ok && attained == Degree(4);
    detail << "; indicator Z_3 -> Z_9 has degree " << attained.to_string();
    return make("worked-instance", ok, detail.str());
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"small", "lemma51", "roundtrip", "nilpotency"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view name) {
    if (name == "small")
        return {check_cyclic_attainment(), check_p_group_supremacy(), check_classification_biconditional(),
                check_worked_instance()};
    if (name == "lemma51")
        return {check_lemma_valuations()};
    if (name == "roundtrip")
        return {check_interpolation_roundtrip(), check_injectivity(), check_degree_inequalities()};
    if (name == "nilpotency")
        return {check_nilpotency_formula()};
    fail(ErrorKind::invalid_input, "unknown suite '" + std::string(name) + "'");
}

} // namespace diffdeg
