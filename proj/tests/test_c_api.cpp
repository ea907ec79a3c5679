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

#include "diffdeg/diffdeg.h"

#include <gtest/gtest.h>

#include <string>

namespace {

const char *kChiTable = "domain: 2\ncodomain: 4\n0 -> 1\n1 -> 0\n";
const char *kIdentityTable = "domain: 2\ncodomain: 3\n0 -> 0\n1 -> 1\n";

std::string take(char *s) {
    std::string out(s);
    dd_string_free(s);
    return out;
}

} // namespace

TEST(CApi, StatusNames) {
    EXPECT_STREQ(dd_status_name(DD_OK), "ok");
    EXPECT_STREQ(dd_status_name(DD_ERR_NO_REPRESENTATION), "no-representation");
    EXPECT_STREQ(dd_status_name(DD_ERR_INCONSISTENT), "internal-inconsistency");
}

TEST(CApi, Groups) {
    dd_group *g = nullptr;
    ASSERT_EQ(dd_group_parse("4, 3,5", &g), DD_OK);
    char *text = nullptr;
    ASSERT_EQ(dd_group_format(g, &text), DD_OK);
    EXPECT_EQ(take(text), "4,3,5");
    dd_group_free(g);

    dd_group *bad = nullptr;
    EXPECT_EQ(dd_group_parse("4,x", &bad), DD_ERR_INVALID_INPUT);
    EXPECT_EQ(bad, nullptr);
    EXPECT_NE(std::string(dd_last_error()), "");
    EXPECT_EQ(dd_group_parse(nullptr, &bad), DD_ERR_INVALID_INPUT);
}

TEST(CApi, Degrees) {
    dd_table *t = nullptr;
    ASSERT_EQ(dd_table_parse(kChiTable, &t), DD_OK);
    std::uint64_t d = 0;
    ASSERT_EQ(dd_fdeg(t, &d), DD_OK);
    EXPECT_EQ(d, 2u);
    ASSERT_EQ(dd_pdeg(t, 0, &d), DD_OK);
    EXPECT_EQ(d, 2u);
    EXPECT_EQ(dd_pdeg(t, 1, &d), DD_ERR_OUT_OF_RANGE);
    int finite = 0;
    std::int64_t from = -1, to = -1;
    ASSERT_EQ(dd_classify(t, &finite, &from, &to), DD_OK);
    EXPECT_EQ(finite, 1);
    EXPECT_EQ(from, 0);
    char *text = nullptr;
    ASSERT_EQ(dd_table_format(t, &text), DD_OK);
    EXPECT_EQ(take(text), kChiTable);
    dd_table_free(t);

    ASSERT_EQ(dd_table_parse(kIdentityTable, &t), DD_OK);
    ASSERT_EQ(dd_fdeg(t, &d), DD_OK);
    EXPECT_EQ(d, DD_INFINITE);
    ASSERT_EQ(dd_classify(t, &finite, &from, &to), DD_OK);
    EXPECT_EQ(finite, 0);
    EXPECT_EQ(from, 2);
    EXPECT_EQ(to, 3);
    dd_polyfract *p = nullptr;
    EXPECT_EQ(dd_interpolate(t, &p), DD_ERR_NO_REPRESENTATION);
    EXPECT_EQ(p, nullptr);
    dd_table_free(t);

    EXPECT_EQ(dd_table_parse("domain: 2\n", &t), DD_ERR_INVALID_INPUT);
}

TEST(CApi, Polyfracts) {
    dd_table *t = nullptr;
    ASSERT_EQ(dd_table_parse(kChiTable, &t), DD_OK);
    dd_polyfract *p = nullptr;
    ASSERT_EQ(dd_interpolate(t, &p), DD_OK);
    char *text = nullptr;
    ASSERT_EQ(dd_polyfract_format(p, &text), DD_OK);
    EXPECT_EQ(take(text), "vars: 1\ncodomain: 4\n2 : 2\n1 : 3\n0 : 1\n");

    std::size_t n = 0;
    ASSERT_EQ(dd_polyfract_vars(p, &n), DD_OK);
    EXPECT_EQ(n, 1u);
    ASSERT_EQ(dd_polyfract_codomain_rank(p, &n), DD_OK);
    EXPECT_EQ(n, 1u);
    std::uint64_t deg = 0;
    ASSERT_EQ(dd_polyfract_degree(p, &deg), DD_OK);
    EXPECT_EQ(deg, 2u);

    std::int64_t x = 2, y = -1;
    ASSERT_EQ(dd_polyfract_eval(p, &x, 1, &y, 1), DD_OK);
    EXPECT_EQ(y, 1);
    EXPECT_EQ(dd_polyfract_eval(p, &x, 1, &y, 2), DD_ERR_MISMATCH);

    dd_group *two = nullptr, *three = nullptr;
    ASSERT_EQ(dd_group_parse("2", &two), DD_OK);
    ASSERT_EQ(dd_group_parse("3", &three), DD_OK);
    int periodic = -1;
    ASSERT_EQ(dd_polyfract_is_periodic(p, two, &periodic), DD_OK);
    EXPECT_EQ(periodic, 1);
    ASSERT_EQ(dd_polyfract_is_periodic(p, three, &periodic), DD_OK);
    EXPECT_EQ(periodic, 0);

    dd_table *back = nullptr;
    ASSERT_EQ(dd_polyfract_tabulate(p, two, &back), DD_OK);
    ASSERT_EQ(dd_table_format(back, &text), DD_OK);
    EXPECT_EQ(take(text), kChiTable);
    EXPECT_EQ(dd_polyfract_tabulate(p, three, &back), DD_ERR_INVALID_INPUT);

    dd_table_free(back);
    dd_group_free(two);
    dd_group_free(three);
    dd_polyfract_free(p);
    dd_table_free(t);

    EXPECT_EQ(dd_polyfract_parse("vars: 1\ncodomain: 4\n0 : 0\n", &p), DD_ERR_INVALID_INPUT);
}

TEST(CApi, MaxDegree) {
    dd_group *a = nullptr, *b = nullptr;
    ASSERT_EQ(dd_group_parse("60", &a), DD_OK);
    ASSERT_EQ(dd_group_parse("126,7", &b), DD_OK);
    dd_maxdeg *m = nullptr;
    ASSERT_EQ(dd_maxdeg_compute(a, b, &m), DD_OK);
    EXPECT_EQ(dd_maxdeg_get_kind(m), DD_MAXDEG_BOUND);
    EXPECT_EQ(dd_maxdeg_bound(m), 4u);
    ASSERT_EQ(dd_maxdeg_prime_count(m), 2u);
    std::int64_t p = 0;
    std::uint64_t bound = 0;
    char *dom = nullptr, *cod = nullptr;
    ASSERT_EQ(dd_maxdeg_prime(m, 1, &p, &bound, &dom, &cod), DD_OK);
    EXPECT_EQ(p, 3);
    EXPECT_EQ(bound, 4u);
    EXPECT_EQ(take(dom), "3");
    EXPECT_EQ(take(cod), "9");
    EXPECT_EQ(dd_maxdeg_prime(m, 2, &p, &bound, nullptr, nullptr), DD_ERR_OUT_OF_RANGE);
    dd_maxdeg_free(m);
    dd_group_free(a);
    dd_group_free(b);

    ASSERT_EQ(dd_group_parse("2", &a), DD_OK);
    ASSERT_EQ(dd_group_parse("3", &b), DD_OK);
    ASSERT_EQ(dd_maxdeg_compute(a, b, &m), DD_OK);
    EXPECT_EQ(dd_maxdeg_get_kind(m), DD_MAXDEG_CONSTANTS_ONLY);
    dd_maxdeg_free(m);
    dd_group_free(a);
    dd_group_free(b);
}

TEST(CApi, Nilpotency) {
    const unsigned alphas[] = {1, 1};
    std::uint64_t nu = 0, oracle = 0;
    ASSERT_EQ(dd_nilpotency_formula(2, alphas, 2, 1, &nu), DD_OK);
    ASSERT_EQ(dd_nilpotency_oracle(2, alphas, 2, 1, &oracle), DD_OK);
    EXPECT_EQ(nu, 3u);
    EXPECT_EQ(oracle, 3u);
    EXPECT_EQ(dd_nilpotency_formula(4, alphas, 2, 1, &nu), DD_ERR_INVALID_INPUT);
    EXPECT_EQ(dd_nilpotency_formula(2, alphas, 0, 1, &nu), DD_ERR_INVALID_INPUT);
}

TEST(CApi, Verify) {
    ASSERT_EQ(dd_verify_suite_count(), 4u);
    EXPECT_STREQ(dd_verify_suite_name(1), "lemma51");
    EXPECT_EQ(dd_verify_suite_name(4), nullptr);
    dd_report *r = nullptr;
    ASSERT_EQ(dd_verify_run("lemma51", &r), DD_OK);
    ASSERT_EQ(dd_report_count(r), 1u);
    const char *name = nullptr, *detail = nullptr;
    int passed = 0;
    ASSERT_EQ(dd_report_entry(r, 0, &name, &passed, &detail), DD_OK);
    EXPECT_STREQ(name, "lemma-valuations");
    EXPECT_EQ(passed, 1);
    dd_report_free(r);
    EXPECT_EQ(dd_verify_run("bogus", &r), DD_ERR_INVALID_INPUT);
}
