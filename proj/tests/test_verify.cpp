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
#include "diffdeg/error.hpp"
#include "diffdeg/verify.hpp"

#include <gtest/gtest.h>

using namespace diffdeg;

TEST(Verify, SuiteNames) {
    EXPECT_EQ(suite_names(), (std::vector<std::string>{"small", "lemma51", "roundtrip", "nilpotency"}));
    try {
        run_suite("everything");
        FAIL() << "unknown suite accepted";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_input);
    }
}

TEST(Verify, SuitesPass) {
    for (const auto &name : suite_names())
        for (const auto &r : run_suite(name))
            EXPECT_TRUE(r.passed) << name << "/" << r.name << ": " << r.detail;
}

TEST(Verify, RandomTablesAreDeterministicAndFinite) {
    auto a = random_finite_degree_tables(50, 17);
    auto b = random_finite_degree_tables(50, 17);
    ASSERT_EQ(a.size(), 50u);
    EXPECT_EQ(a, b);
    for (const auto &f : a) {
        EXPECT_LE(f.domain().order(), 60);
        EXPECT_LE(f.codomain().order(), 60);
        EXPECT_LE(f.domain().rank(), 3u);
        EXPECT_TRUE(classify(f).finite);
    }
    EXPECT_NE(random_finite_degree_tables(50, 18), a);
}

TEST(Verify, WorkedExampleTable) {
    auto f = worked_example_table();
    EXPECT_EQ(f.domain(), Group({4, 3, 5}));
    EXPECT_EQ(f.codomain(), Group({2, 9, 7, 7}));
    EXPECT_EQ(f(f.domain().element({3, 2, 4})).coords(), (std::vector<Int>{0, 6, 4, 5}));
}
