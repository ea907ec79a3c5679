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

#include "diffdeg/bounds.hpp"
#include "diffdeg/calculus.hpp"
#include "diffdeg/error.hpp"
#include "diffdeg/group_ring.hpp"
#include "diffdeg/polyfract.hpp"
#include "diffdeg/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

using namespace diffdeg;

struct dd_group {
    Group value;
};
struct dd_table {
    FunctionTable value;
};
struct dd_polyfract {
    Polyfract value;
};
struct dd_maxdeg {
    MaxDegreeVerdict value;
};
struct dd_report {
    std::vector<CheckResult> value;
};

namespace {

thread_local std::string last_error;

dd_status status_of(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_input:
        return DD_ERR_INVALID_INPUT;
    case ErrorKind::unsupported:
        return DD_ERR_UNSUPPORTED;
    case ErrorKind::mismatch:
        return DD_ERR_MISMATCH;
    case ErrorKind::out_of_range:
        return DD_ERR_OUT_OF_RANGE;
    case ErrorKind::no_representation:
        return DD_ERR_NO_REPRESENTATION;
    case ErrorKind::inconsistency:
        return DD_ERR_INCONSISTENT;
    }
    return DD_ERR_INTERNAL;
}

template <class F> dd_status guarded(F &&body) {
    try {
        body();
        last_error.clear();
        return DD_OK;
    } catch (const Error &e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return DD_ERR_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return DD_ERR_INTERNAL;
    }
}

void require(const void *p, const char *what) {
    if (p == nullptr)
        fail(ErrorKind::invalid_input, std::string("null ") + what);
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::uint64_t degree_value(const Degree &d) { return d.is_finite() ? d.value() : DD_INFINITE; }

PGroupSpec make_spec(std::int64_t p, const unsigned *alphas, std::size_t n, unsigned beta) {
    if (n > 0)
        require(alphas, "alpha array");
    return PGroupSpec(p, std::vector<unsigned>(alphas, alphas + n), beta);
}

} // namespace

extern "C" {

const char *dd_last_error(void) { return last_error.c_str(); }

const char *dd_status_name(dd_status status) {
    switch (status) {
    case DD_OK:
        return "ok";
    case DD_ERR_INVALID_INPUT:
        return "invalid-input";
    case DD_ERR_UNSUPPORTED:
        return "unsupported";
    case DD_ERR_MISMATCH:
        return "mismatch";
    case DD_ERR_OUT_OF_RANGE:
        return "out-of-range";
    case DD_ERR_NO_REPRESENTATION:
        return "no-representation";
    case DD_ERR_INCONSISTENT:
        return "internal-inconsistency";
    case DD_ERR_INTERNAL:
        return "internal";
    }
    return "unknown";
}

void dd_string_free(char *s) { std::free(s); }

dd_status dd_group_parse(const char *spec, dd_group **out) {
    return guarded([&] {
        require(spec, "spec");
        require(out, "output");
        *out = new dd_group{Group::parse(spec)};
    });
}

dd_status dd_group_format(const dd_group *g, char **out) {
    return guarded([&] {
        require(g, "group");
        require(out, "output");
        *out = dup_string(g->value.to_string());
    });
}

void dd_group_free(dd_group *g) { delete g; }

dd_status dd_table_parse(const char *text, dd_table **out) {
    return guarded([&] {
        require(text, "text");
        require(out, "output");
        *out = new dd_table{parse_table(text)};
    });
}

dd_status dd_table_format(const dd_table *t, char **out) {
    return guarded([&] {
        require(t, "table");
        require(out, "output");
        *out = dup_string(format_table(t->value));
    });
}

dd_status dd_table_rank(const dd_table *t, size_t *out) {
    return guarded([&] {
        require(t, "table");
        require(out, "output");
        *out = t->value.domain().rank();
    });
}

void dd_table_free(dd_table *t) { delete t; }

dd_status dd_fdeg(const dd_table *t, uint64_t *out) {
    return guarded([&] {
        require(t, "table");
        require(out, "output");
        *out = degree_value(functional_degree(t->value));
    });
}

dd_status dd_pdeg(const dd_table *t, size_t i, uint64_t *out) {
    return guarded([&] {
        require(t, "table");
        require(out, "output");
        if (i >= t->value.domain().rank())
            fail(ErrorKind::out_of_range, "coordinate index " + std::to_string(i) + " out of range");
        *out = degree_value(partial_degree(t->value, i));
    });
}

dd_status dd_classify(const dd_table *t, int *finite, int64_t *witness_from, int64_t *witness_to) {
    return guarded([&] {
        require(t, "table");
        require(finite, "output");
        Classification c = classify(t->value);
        *finite = c.finite ? 1 : 0;
        if (witness_from)
            *witness_from = c.witness ? c.witness->first : 0;
        if (witness_to)
            *witness_to = c.witness ? c.witness->second : 0;
    });
}

dd_status dd_interpolate(const dd_table *t, dd_polyfract **out) {
    return guarded([&] {
        require(t, "table");
        require(out, "output");
        *out = new dd_polyfract{interpolate_table(t->value).polyfract};
    });
}

dd_status dd_polyfract_parse(const char *text, dd_polyfract **out) {
    return guarded([&] {
        require(text, "text");
        require(out, "output");
        *out = new dd_polyfract{parse_polyfract(text)};
    });
}

dd_status dd_polyfract_format(const dd_polyfract *p, char **out) {
    return guarded([&] {
        require(p, "polyfract");
        require(out, "output");
        *out = dup_string(format_polyfract(p->value));
    });
}

dd_status dd_polyfract_vars(const dd_polyfract *p, size_t *out) {
    return guarded([&] {
        require(p, "polyfract");
        require(out, "output");
        *out = p->value.vars();
    });
}

dd_status dd_polyfract_codomain_rank(const dd_polyfract *p, size_t *out) {
    return guarded([&] {
        require(p, "polyfract");
        require(out, "output");
        *out = p->value.codomain().rank();
    });
}

dd_status dd_polyfract_degree(const dd_polyfract *p, uint64_t *out) {
    return guarded([&] {
        require(p, "polyfract");
        require(out, "output");
        *out = p->value.degree();
    });
}

dd_status dd_polyfract_eval(const dd_polyfract *p, const int64_t *x, size_t n, int64_t *out,
                            size_t out_len) {
    return guarded([&] {
        require(p, "polyfract");
        if (n > 0)
            require(x, "point");
        if (out_len != p->value.codomain().rank())
            fail(ErrorKind::mismatch, "output length does not match codomain rank");
        if (out_len > 0)
            require(out, "output");
        auto value = p->value.evaluate(std::span<const Int>(x, n));
        std::copy(value.begin(), value.end(), out);
    });
}

dd_status dd_polyfract_is_periodic(const dd_polyfract *p, const dd_group *periods, int *out) {
    return guarded([&] {
        require(p, "polyfract");
        require(periods, "periods");
        require(out, "output");
        *out = is_periodic(p->value, periods->value) ? 1 : 0;
    });
}

dd_status dd_polyfract_tabulate(const dd_polyfract *p, const dd_group *domain, dd_table **out) {
    return guarded([&] {
        require(p, "polyfract");
        require(domain, "domain");
        require(out, "output");
        *out = new dd_table{tabulate(p->value, domain->value)};
    });
}

void dd_polyfract_free(dd_polyfract *p) { delete p; }

dd_status dd_maxdeg_compute(const dd_group *domain, const dd_group *codomain, dd_maxdeg **out) {
    return guarded([&] {
        require(domain, "domain");
        require(codomain, "codomain");
        require(out, "output");
        *out = new dd_maxdeg{max_degree_general(domain->value, codomain->value)};
    });
}

dd_maxdeg_kind dd_maxdeg_get_kind(const dd_maxdeg *m) {
    switch (m->value.kind) {
    case MaxDegreeVerdict::Kind::bound:
        return DD_MAXDEG_BOUND;
    case MaxDegreeVerdict::Kind::constants_only:
        return DD_MAXDEG_CONSTANTS_ONLY;
    case MaxDegreeVerdict::Kind::trivial:
        break;
    }
    return DD_MAXDEG_TRIVIAL;
}

uint64_t dd_maxdeg_bound(const dd_maxdeg *m) { return m->value.bound; }

size_t dd_maxdeg_prime_count(const dd_maxdeg *m) { return m->value.per_prime.size(); }

dd_status dd_maxdeg_prime(const dd_maxdeg *m, size_t k, int64_t *prime, uint64_t *bound,
                          char **domain_part, char **codomain_part) {
    return guarded([&] {
        require(m, "verdict");
        if (k >= m->value.per_prime.size())
            fail(ErrorKind::out_of_range, "prime index out of range");
        const PrimeBound &pb = m->value.per_prime[k];
        if (prime)
            *prime = pb.prime;
        if (bound)
            *bound = pb.bound;
        // Allocate both before handing either out.
        std::string d = pb.domain_part.to_string(), c = pb.codomain_part.to_string();
        char *ds = domain_part ? dup_string(d) : nullptr;
        char *cs = nullptr;
        try {
            cs = codomain_part ? dup_string(c) : nullptr;
        } catch (...) {
            std::free(ds);
            throw;
        }
        if (domain_part)
            *domain_part = ds;
        if (codomain_part)
            *codomain_part = cs;
    });
}

void dd_maxdeg_free(dd_maxdeg *m) { delete m; }

dd_status dd_nilpotency_formula(int64_t p, const unsigned *alphas, size_t n, unsigned beta, uint64_t *out) {
    return guarded([&] {
        require(out, "output");
        *out = nilpotency_degree(make_spec(p, alphas, n, beta));
    });
}

dd_status dd_nilpotency_oracle(int64_t p, const unsigned *alphas, size_t n, unsigned beta, uint64_t *out) {
    return guarded([&] {
        require(out, "output");
        PGroupSpec spec = make_spec(p, alphas, n, beta);
        *out = nilpotency_oracle(checked_pow(spec.prime(), beta), spec.domain());
    });
}

size_t dd_verify_suite_count(void) { return suite_names().size(); }

const char *dd_verify_suite_name(size_t k) {
    const auto &names = suite_names();
    return k < names.size() ? names[k].c_str() : nullptr;
}

dd_status dd_verify_run(const char *suite, dd_report **out) {
    return guarded([&] {
        require(suite, "suite");
        require(out, "output");
        *out = new dd_report{run_suite(suite)};
    });
}

size_t dd_report_count(const dd_report *r) { return r->value.size(); }

dd_status dd_report_entry(const dd_report *r, size_t k, const char **name, int *passed, const char **detail) {
    return guarded([&] {
        require(r, "report");
        if (k >= r->value.size())
            fail(ErrorKind::out_of_range, "report index out of range");
        const CheckResult &c = r->value[k];
        if (name)
            *name = c.name.c_str();
        if (passed)
            *passed = c.passed ? 1 : 0;
        if (detail)
            *detail = c.detail.c_str();
    });
}

void dd_report_free(dd_report *r) { delete r; }

} // extern "C"
