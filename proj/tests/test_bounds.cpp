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
#include "diffdeg/calculus.hpp"
#include "diffdeg/error.hpp"
#include "diffdeg/group_ring.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace diffdeg;

namespace {

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

// All ways to write a group of order `order` as an ordered product of
// cyclic factors with moduli >= 2.
void factorizations(Int order, std::vector<Int> &prefix, std::vector<Group> &out) {
    if (order == 1) {
        if (!prefix.empty())
            out.emplace_back(prefix);
        return;
    }
    for (Int q = 2; q <= order; ++q)
        if (order % q == 0) {
            prefix.push_back(q);
            factorizations(order / q, prefix, out);
            prefix.pop_back();
        }
}

} // namespace

TEST(CHat, Examples) {
    EXPECT_EQ(c_hat_exact(1, 1, 2), -1);
    EXPECT_EQ(c_hat(1, 1, 2, 1), 1);
    EXPECT_EQ(c_hat_exact(2, 1, 2), 2);
    EXPECT_EQ(c_hat(2, 1, 2, 1), 0);
    EXPECT_EQ(c_hat_exact(3, 1, 2), -4);
    EXPECT_EQ(c_hat(3, 1, 2, 2), 0);
    EXPECT_EQ(c_hat(0, 2, 3, 2), 1);
    EXPECT_EQ(c_hat_via_reduction(0, 2, 3, 2), 1);
    EXPECT_THROW(c_hat(1, 1, 4, 1), Error);
    EXPECT_THROW(c_hat_via_reduction(1, 1, 6, 1), Error);
}

TEST(CHat, RoutesAgree) {
    for (Int p : {2, 3, 5})
        for (unsigned alpha = 1; alpha <= 3; ++alpha)
            for (unsigned beta = 1; beta <= 3; ++beta)
                for (std::uint64_t d = 0; d <= 200; ++d)
                    ASSERT_EQ(c_hat(d, alpha, p, beta), c_hat_via_reduction(d, alpha, p, beta))
                        << "p=" << p << " alpha=" << alpha << " beta=" << beta << " delta=" << d;
}

TEST(CHat, ThresholdBehaviour) {
    for (Int p : {2, 3, 5})
        for (unsigned alpha = 1; alpha <= 3; ++alpha)
            for (unsigned beta = 1; beta <= 3; ++beta) {
                const Int pb = checked_pow(p, beta);
                const auto star = max_degree_cyclic(p, alpha, beta);
                EXPECT_EQ(c_hat(star, alpha, p, beta), reduce(checked_pow(-p, beta - 1), pb));
                for (std::uint64_t d = star + 1; d <= star + 2 * checked_pow(p, alpha); ++d)
                    EXPECT_EQ(c_hat(d, alpha, p, beta), 0);
            }
}

TEST(MaxDegree, Cyclic) {
    EXPECT_EQ(max_degree_cyclic(2, 1, 1), 1u);
    EXPECT_EQ(max_degree_cyclic(2, 2, 2), 5u);
    EXPECT_EQ(max_degree_cyclic(3, 1, 2), 4u);
    EXPECT_THROW(max_degree_cyclic(4, 1, 1), Error);
    EXPECT_THROW(max_degree_cyclic(2, 0, 1), Error);
    for (Int p : {2, 3, 5, 7})
        for (unsigned a = 1; a <= 4; ++a)
            for (unsigned b = 1; b <= 4; ++b) {
                EXPECT_LT(max_degree_cyclic(p, a, b), max_degree_cyclic(p, a + 1, b));
                EXPECT_LT(max_degree_cyclic(p, a, b), max_degree_cyclic(p, a, b + 1));
                EXPECT_EQ(max_degree_p_group(PGroupSpec(p, {a}, b)), max_degree_cyclic(p, a, b));
            }
}

TEST(MaxDegree, PGroup) {
    EXPECT_EQ(max_degree_p_group(PGroupSpec(2, {1, 1}, 1U)), 2u);
    EXPECT_EQ(max_degree_p_group(PGroupSpec(2, {2}, 1U)), 3u);
    EXPECT_EQ(max_degree_p_to_product(PGroupSpec(2, {1}, std::vector<unsigned>{1, 2})), 2u);
    EXPECT_EQ(max_degree_p_to_product(PGroupSpec(3, {1, 1}, std::vector<unsigned>{2, 1})), 6u);
    EXPECT_EQ(max_degree_p_to_product(PGroupSpec(3, {2, 1}, 2U)), max_degree_p_group(PGroupSpec(3, {2, 1}, 2U)));
    EXPECT_THROW(max_degree_p_group(PGroupSpec(3, {1}, std::vector<unsigned>{1, 2})), Error);
    EXPECT_THROW(PGroupSpec(6, {1}, 1U), Error);
    EXPECT_THROW(PGroupSpec(2, {}, 1U), Error);
    EXPECT_THROW(PGroupSpec(2, {0}, 1U), Error);
}

TEST(MaxDegree, General) {
    auto v = max_degree_general(Group({60}), Group({126, 7}));
    EXPECT_EQ(v.kind, MaxDegreeVerdict::Kind::bound);
    EXPECT_EQ(v.bound, 4u);
    ASSERT_EQ(v.per_prime.size(), 2u);
    EXPECT_EQ(v.per_prime[0].prime, 2);
    EXPECT_EQ(v.per_prime[0].domain_part, Group({4}));
    EXPECT_EQ(v.per_prime[0].codomain_part, Group({2}));
    EXPECT_EQ(v.per_prime[0].bound, 3u);
    EXPECT_EQ(v.per_prime[1].prime, 3);
    EXPECT_EQ(v.per_prime[1].codomain_part, Group({9}));
    EXPECT_EQ(v.per_prime[1].bound, 4u);

    EXPECT_EQ(max_degree_general(Group({2}), Group({3})).kind, MaxDegreeVerdict::Kind::constants_only);
    EXPECT_EQ(max_degree_general(Group({2}), Group({3})).bound, 0u);
    auto z2 = max_degree_general(Group({2}), Group({2}));
    EXPECT_EQ(z2.kind, MaxDegreeVerdict::Kind::bound);
    EXPECT_EQ(z2.bound, 1u);
    EXPECT_EQ(max_degree_general(Group({1}), Group({5})).kind, MaxDegreeVerdict::Kind::trivial);
    EXPECT_EQ(max_degree_general(Group({4, 3, 5}), Group({2, 9, 7, 7})).bound, 4u);
    EXPECT_THROW(max_degree_general(Group({0}), Group({2})), Error);
    EXPECT_STREQ(to_string(MaxDegreeVerdict::Kind::constants_only), "constants_only");
}

TEST(MaxDegree, AttainedByIndicators) {
    // For every pair of groups of order <= 27 sharing a prime, each per-prime
    // bound is the brute-force degree of the indicator between the components.
    std::size_t pairs = 0;
    std::vector<Group> groups;
    for (Int n = 2; n <= 27; ++n) {
        std::vector<Int> prefix;
        factorizations(n, prefix, groups);
    }
    for (const auto &A : groups)
        for (const auto &B : groups) {
            if (gcd(A.order(), B.order()) == 1 || A.rank() > 3 || B.rank() > 2)
                continue;
            auto v = max_degree_general(A, B);
            ASSERT_EQ(v.kind, MaxDegreeVerdict::Kind::bound);
            std::uint64_t best = 0;
            for (const auto &pb : v.per_prime) {
                Degree d = functional_degree(lagrange(pb.domain_part, pb.codomain_part),
                                             chain_length_bound(pb.domain_part, pb.codomain_part));
                EXPECT_EQ(d, Degree(pb.bound)) << pb.domain_part.to_string() << " -> " << pb.codomain_part.to_string();
                best = std::max(best, pb.bound);
            }
            EXPECT_EQ(best, v.bound);
            ++pairs;
        }
    EXPECT_GT(pairs, 500u);
}

TEST(MaxDegree, NeverExceeded) {
    for (const auto &[A, B] : std::vector<std::pair<Group, Group>>{
             {Group({2, 2}), Group({4})}, {Group({4}), Group({4})}, {Group({2}), Group({8})},
             {Group({2, 2, 2}), Group({2})}, {Group({4}), Group({2, 2})}, {Group({3}), Group({9})},
             {Group({2, 2}), Group({2, 2})}, {Group({6}), Group({6})}, {Group({5}), Group({5})},
             {Group({3, 3}), Group({3})}, {Group({9}), Group({3})}, {Group({8}), Group({4})},
             {Group({2, 4}), Group({4})}, {Group({2, 2, 2, 2}), Group({2})}}) {
        auto v = max_degree_general(A, B);
        std::uint64_t best = 0;
        for_each_map(A, B, [&](const FunctionTable &f) {
            Degree d = functional_degree(f, chain_length_bound(A, B));
            if (d.is_finite())
                best = std::max(best, d.value());
        });
        EXPECT_EQ(best, v.bound) << A.to_string() << " -> " << B.to_string();
    }
}

TEST(Nilpotency, Formula) {
    EXPECT_EQ(nilpotency_degree(PGroupSpec(2, {1}, 1U)), 2u);
    EXPECT_EQ(nilpotency_degree(PGroupSpec(2, {1}, 2U)), 3u);
    EXPECT_EQ(nilpotency_degree(PGroupSpec(2, {1, 1}, 1U)), 3u);
    EXPECT_EQ(nilpotency_degree(PGroupSpec(3, {1}, 2U)), 5u);
    for (Int p : {2, 3, 5})
        for (unsigned a = 1; a <= 3; ++a)
            for (unsigned b = 1; b <= 3; ++b) {
                PGroupSpec spec(p, {a, 1, a}, b);
                EXPECT_EQ(nilpotency_degree(spec), max_degree_p_group(spec) + 1);
            }
    EXPECT_THROW(nilpotency_degree(PGroupSpec(2, {1}, std::vector<unsigned>{1, 2})), Error);
}

TEST(LagrangeCoefficients, Examples) {
    auto chi = lagrange_coefficients(2, {1}, 1);
    Polyfract expected(1, Group({2}));
    expected.add_term(MultiIndex({0}), std::vector<Int>{1});
    expected.add_term(MultiIndex({1}), std::vector<Int>{1});
    EXPECT_EQ(chi, expected);

    for (Int p : {2, 3})
        for (const auto &alphas : std::vector<std::vector<unsigned>>{{1}, {2}, {1, 1}, {2, 1}, {1, 1, 1}})
            for (unsigned beta = 1; beta <= 2; ++beta) {
                PGroupSpec spec(p, alphas, beta);
                auto P = lagrange_coefficients(p, alphas, beta);
                EXPECT_EQ(P.degree(), max_degree_p_group(spec));
                EXPECT_EQ(tabulate(P, spec.domain()), lagrange(spec.domain(), spec.codomain()));
            }
}
