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

#include <gtest/gtest.h>

#include <random>

using namespace diffdeg;

namespace {

GroupRingElement random_element(std::mt19937_64 &rng, Int m, const Group &G) {
    GroupRingElement a(m, G);
    for (const auto &g : G.enumerate())
        a.set_coefficient(g, static_cast<Int>(rng() % static_cast<std::uint64_t>(m)));
    return a;
}

} // namespace

TEST(GroupRing, Multiplication) {
    Group z2({2});
    auto g = GroupRingElement::basis(2, z2.element({1}));
    auto d = g - GroupRingElement::one(2, z2);
    EXPECT_FALSE(d.is_zero());
    EXPECT_TRUE((d * d).is_zero());

    auto d4 = generator_difference(4, z2, 0);
    auto sq = d4 * d4;
    EXPECT_EQ(sq.coefficient(z2.element({0})), 2);
    EXPECT_EQ(sq.coefficient(z2.element({1})), 2);
    EXPECT_TRUE((sq * d4).is_zero());

    std::mt19937_64 rng(2);
    Group G({3, 4});
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_element(rng, 6, G), b = random_element(rng, 6, G), c = random_element(rng, 6, G);
        EXPECT_EQ(a * GroupRingElement::one(6, G), a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b).augmentation(), mul_mod(a.augmentation(), b.augmentation(), 6));
    }
    EXPECT_THROW(GroupRingElement(2, G) * GroupRingElement(3, G), Error);
    EXPECT_THROW(GroupRingElement(2, G) * GroupRingElement(2, Group({12})), Error);
    EXPECT_THROW(GroupRingElement(1, G), Error);
    EXPECT_THROW(GroupRingElement(2, Group({0})), Error);
}

TEST(GroupRing, GeneratorOrders) {
    for (const auto &G : {Group({4, 3}), Group({2, 2, 5}), Group({9})})
        for (Int m : {2, 6, 9})
            for (std::size_t i = 0; i < G.rank(); ++i) {
                auto x = generator_difference(m, G, i) + GroupRingElement::one(m, G);
                EXPECT_EQ(power(x, static_cast<std::uint64_t>(G.modulus(i))), GroupRingElement::one(m, G));
            }
}

TEST(Nilpotency, OracleExamples) {
    EXPECT_EQ(nilpotency_oracle(2, Group({2})), 2u);
    EXPECT_EQ(nilpotency_oracle(4, Group({2})), 3u);
    EXPECT_EQ(nilpotency_oracle(3, Group({3})), 3u);
    EXPECT_EQ(nilpotency_oracle(2, Group({2, 2})), 3u);
    EXPECT_EQ(nilpotency_oracle(9, Group({3})), 5u);
    EXPECT_EQ(nilpotency_oracle_direct(2, Group({2})), 2u);
    EXPECT_EQ(nilpotency_oracle_direct(4, Group({2})), 3u);
    EXPECT_EQ(nilpotency_oracle_direct(3, Group({3})), 3u);
    // Coprime parts keep the ideal from being nilpotent.
    EXPECT_THROW(nilpotency_oracle(2, Group({3})), Error);
    EXPECT_THROW(nilpotency_oracle_direct(6, Group({2})), Error);
}

TEST(Nilpotency, OracleRoutesAgree) {
    // Composite moduli and mixed groups as long as the ideal is nilpotent.
    for (const auto &G : {Group({2}), Group({4}), Group({2, 2}), Group({2, 4}), Group({8}), Group({3}), Group({9}),
                          Group({3, 3}), Group({5}), Group({2, 2, 2}), Group({1, 4})})
        for (Int m : {2, 3, 4, 5, 8, 9, 25, 27}) {
            bool nilpotent = true;
            for (auto [p, e] : factorize(G.order() == 1 ? 2 : G.order()))
                nilpotent = nilpotent && m % p == 0 && factorize(m).size() == 1;
            if (G.order() == 1 || !nilpotent)
                continue;
            EXPECT_EQ(nilpotency_oracle(m, G), nilpotency_oracle_direct(m, G)) << m << " " << G.to_string();
        }
}

TEST(Nilpotency, FormulaSmallGrid) {
    for (Int p : {2, 3})
        for (const auto &alphas : std::vector<std::vector<unsigned>>{{1}, {2}, {1, 1}, {1, 2}, {2, 1}, {1, 1, 1}})
            for (unsigned beta = 1; beta <= 3; ++beta) {
                PGroupSpec spec(p, alphas, beta);
                EXPECT_EQ(nilpotency_oracle(checked_pow(p, beta), spec.domain()), nilpotency_degree(spec));
            }
}

TEST(QuotientPower, Examples) {
    EXPECT_EQ(quotient_power(3, 1, 2, 0), (std::vector<Int>{1, 0, 0}));
    for (Int p : {2, 3, 5})
        for (unsigned alpha = 1; alpha <= 2; ++alpha)
            for (unsigned beta = 1; beta <= 3; ++beta) {
                const auto star = max_degree_cyclic(p, alpha, beta);
                const Int top = reduce(checked_pow(-p, beta - 1), checked_pow(p, beta));
                auto at_star = quotient_power(p, alpha, beta, star);
                EXPECT_EQ(at_star, std::vector<Int>(at_star.size(), top));
                auto past = quotient_power(p, alpha, beta, star + 1);
                EXPECT_EQ(past, std::vector<Int>(past.size(), 0));
            }
}

TEST(QuotientPower, CoefficientReadings) {
    // The constant term is c_hat; the coefficient at delta mod p^alpha
    // differs from it by the sign (-1)^delta.
    for (Int p : {2, 3, 5})
        for (unsigned alpha = 1; alpha <= 3; ++alpha)
            for (unsigned beta = 1; beta <= 3; ++beta) {
                const Int pb = checked_pow(p, beta);
                for (std::uint64_t d = 0; d <= 60; ++d) {
                    auto q = quotient_power(p, alpha, beta, d);
                    const Int c = c_hat(d, alpha, p, beta);
                    EXPECT_EQ(q[0], c);
                    EXPECT_EQ(q[d % q.size()], d % 2 ? reduce(-c, pb) : c);
                }
            }
}
