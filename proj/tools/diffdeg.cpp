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

// Command-line front end. Talks to the library only through the C API.

#include "diffdeg/diffdeg.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

struct Failure {
    dd_status status;
    std::string message;
};

void check(dd_status s) {
    if (s != DD_OK)
        throw Failure{s, dd_last_error()};
}

int exit_code(dd_status s) { return s == DD_ERR_INCONSISTENT || s == DD_ERR_INTERNAL ? 2 : 1; }

template <class T, void (*Free)(T *)> struct Deleter {
    void operator()(T *p) const { Free(p); }
};
using GroupPtr = std::unique_ptr<dd_group, Deleter<dd_group, dd_group_free>>;
using TablePtr = std::unique_ptr<dd_table, Deleter<dd_table, dd_table_free>>;
using PolyPtr = std::unique_ptr<dd_polyfract, Deleter<dd_polyfract, dd_polyfract_free>>;
using MaxdegPtr = std::unique_ptr<dd_maxdeg, Deleter<dd_maxdeg, dd_maxdeg_free>>;
using ReportPtr = std::unique_ptr<dd_report, Deleter<dd_report, dd_report_free>>;

std::string take(char *s) {
    std::string out(s);
    dd_string_free(s);
    return out;
}

std::string read_input(const std::string &path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Failure{DD_ERR_INVALID_INPUT, "cannot read '" + path + "'"};
        buf << in.rdbuf();
    }
    return buf.str();
}

TablePtr load_table(const std::string &path) {
    dd_table *t = nullptr;
    check(dd_table_parse(read_input(path).c_str(), &t));
    return TablePtr(t);
}

GroupPtr load_group(const std::string &spec) {
    dd_group *g = nullptr;
    check(dd_group_parse(spec.c_str(), &g));
    return GroupPtr(g);
}

std::string degree_text(std::uint64_t d) { return d == DD_INFINITE ? "INFINITE" : std::to_string(d); }

json degree_json(std::uint64_t d) { return d == DD_INFINITE ? json("INFINITE") : json(d); }

std::vector<std::int64_t> parse_point(const std::string &text) {
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception &) {
            throw Failure{DD_ERR_INVALID_INPUT, "bad integer '" + item + "' in '" + text + "'"};
        }
    }
    return out;
}

std::string join(const std::vector<std::string> &items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? "," : "") + items[i];
    return out;
}

struct Options {
    bool json = false;
    std::string file;
    std::string polyfract;
    std::string at;
    std::string eval_domain;
    std::string domain;
    std::string codomain;
    std::int64_t p = 0;
    std::string alphas;
    unsigned beta = 0;
    bool oracle = false;
    std::string suite;
};

int cmd_fdeg(const Options &o) {
    TablePtr t = load_table(o.file);
    std::uint64_t total = 0;
    check(dd_fdeg(t.get(), &total));
    std::size_t rank = 0;
    check(dd_table_rank(t.get(), &rank));
    std::vector<std::uint64_t> partial(rank);
    for (std::size_t i = 0; i < rank; ++i)
        check(dd_pdeg(t.get(), i, &partial[i]));
    std::int64_t from = 0, to = 0;
    if (total == DD_INFINITE) {
        int finite = 0;
        check(dd_classify(t.get(), &finite, &from, &to));
        if (finite)
            throw Failure{DD_ERR_INCONSISTENT, "brute-force degree is infinite but the map splits"};
    }
    if (o.json) {
        json r{{"fdeg", degree_json(total)}, {"pdeg", json::array()}};
        for (auto d : partial)
            r["pdeg"].push_back(degree_json(d));
        if (total == DD_INFINITE)
            r["witness"] = {from, to};
        std::cout << r.dump() << '\n';
    } else {
        std::vector<std::string> items;
        for (auto d : partial)
            items.push_back(degree_text(d));
        std::cout << "fdeg: " << degree_text(total) << '\n' << "pdeg: " << join(items) << '\n';
        if (total == DD_INFINITE)
            std::cout << "witness: " << from << ',' << to << '\n';
    }
    return 0;
}

int cmd_classify(const Options &o) {
    TablePtr t = load_table(o.file);
    int finite = 0;
    std::int64_t from = 0, to = 0;
    check(dd_classify(t.get(), &finite, &from, &to));
    if (o.json) {
        json r{{"classification", finite ? "finite" : "infinite"}};
        if (!finite)
            r["witness"] = {from, to};
        std::cout << r.dump() << '\n';
    } else {
        std::cout << "classification: " << (finite ? "finite" : "infinite") << '\n';
        if (!finite)
            std::cout << "witness: " << from << ',' << to << '\n';
    }
    return 0;
}

int cmd_interpolate(const Options &o) {
    TablePtr t = load_table(o.file);
    dd_polyfract *p = nullptr;
    check(dd_interpolate(t.get(), &p));
    PolyPtr poly(p);
    char *text = nullptr;
    check(dd_polyfract_format(poly.get(), &text));
    std::string payload = take(text);
    if (o.json)
        std::cout << json{{"polyfract", payload}}.dump() << '\n';
    else
        std::cout << payload;
    return 0;
}

int cmd_eval(const Options &o) {
    dd_polyfract *raw = nullptr;
    check(dd_polyfract_parse(read_input(o.polyfract).c_str(), &raw));
    PolyPtr poly(raw);
    if (o.at.empty() == o.eval_domain.empty())
        throw Failure{DD_ERR_INVALID_INPUT, "give exactly one of --at and --domain"};
    if (!o.at.empty()) {
        auto x = parse_point(o.at);
        std::size_t width = 0;
        check(dd_polyfract_codomain_rank(poly.get(), &width));
        std::vector<std::int64_t> value(width);
        check(dd_polyfract_eval(poly.get(), x.data(), x.size(), value.data(), value.size()));
        if (o.json) {
            std::cout << json{{"value", value}}.dump() << '\n';
        } else {
            std::vector<std::string> items;
            for (auto v : value)
                items.push_back(std::to_string(v));
            std::cout << "value: " << join(items) << '\n';
        }
        return 0;
    }
    GroupPtr domain = load_group(o.eval_domain);
    dd_table *t = nullptr;
    check(dd_polyfract_tabulate(poly.get(), domain.get(), &t));
    TablePtr table(t);
    char *text = nullptr;
    check(dd_table_format(table.get(), &text));
    std::string payload = take(text);
    if (o.json)
        std::cout << json{{"table", payload}}.dump() << '\n';
    else
        std::cout << payload;
    return 0;
}

int cmd_maxdeg(const Options &o) {
    GroupPtr a = load_group(o.domain), b = load_group(o.codomain);
    dd_maxdeg *raw = nullptr;
    check(dd_maxdeg_compute(a.get(), b.get(), &raw));
    MaxdegPtr m(raw);
    const dd_maxdeg_kind kind = dd_maxdeg_get_kind(m.get());
    const char *verdict = kind == DD_MAXDEG_BOUND            ? "bound"
                          : kind == DD_MAXDEG_CONSTANTS_ONLY ? "constants_only"
                                                             : "trivial";
    json r{{"verdict", verdict}};
    if (!o.json) {
        std::cout << "verdict: " << verdict << '\n';
        if (kind == DD_MAXDEG_BOUND)
            std::cout << "bound: " << dd_maxdeg_bound(m.get()) << '\n';
    } else if (kind == DD_MAXDEG_BOUND) {
        r["bound"] = dd_maxdeg_bound(m.get());
        r["primes"] = json::array();
    }
    for (std::size_t k = 0; k < dd_maxdeg_prime_count(m.get()); ++k) {
        std::int64_t p = 0;
        std::uint64_t bound = 0;
        char *dom = nullptr, *cod = nullptr;
        check(dd_maxdeg_prime(m.get(), k, &p, &bound, &dom, &cod));
        std::string d = take(dom), c = take(cod);
        if (o.json)
            r["primes"].push_back({{"prime", p}, {"domain", d}, {"codomain", c}, {"bound", bound}});
        else
            std::cout << "prime " << p << ": " << d << " -> " << c << ", bound " << bound << '\n';
    }
    if (o.json)
        std::cout << r.dump() << '\n';
    return 0;
}

int cmd_nilpotency(const Options &o) {
    std::vector<unsigned> alphas;
    for (auto a : parse_point(o.alphas)) {
        if (a < 1 || a > 62)
            throw Failure{DD_ERR_INVALID_INPUT, "alpha " + std::to_string(a) + " out of range"};
        alphas.push_back(static_cast<unsigned>(a));
    }
    std::uint64_t nu = 0;
    check(dd_nilpotency_formula(o.p, alphas.data(), alphas.size(), o.beta, &nu));
    std::uint64_t oracle = 0;
    if (o.oracle)
        check(dd_nilpotency_oracle(o.p, alphas.data(), alphas.size(), o.beta, &oracle));
    if (o.json) {
        json r{{"nu", nu}};
        if (o.oracle)
            r["oracle"] = oracle;
        std::cout << r.dump() << '\n';
    } else {
        std::cout << "nu: " << nu << '\n';
        if (o.oracle)
            std::cout << "oracle: " << oracle << '\n';
    }
    if (o.oracle && oracle != nu) {
        std::cerr << "error: formula and group-ring oracle disagree\n";
        return 2;
    }
    return 0;
}

int cmd_verify(const Options &o) {
    dd_report *raw = nullptr;
    check(dd_verify_run(o.suite.c_str(), &raw));
    ReportPtr report(raw);
    bool all = true;
    for (std::size_t k = 0; k < dd_report_count(report.get()); ++k) {
        const char *name = nullptr, *detail = nullptr;
        int passed = 0;
        check(dd_report_entry(report.get(), k, &name, &passed, &detail));
        all = all && passed;
        if (o.json)
            std::cout << json{{"check", name}, {"passed", passed != 0}, {"detail", detail}}.dump() << '\n';
        else
            std::cout << (passed ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    }
    if (o.json)
        std::cout << json{{"suite", o.suite}, {"passed", all}}.dump() << '\n';
    else
        std::cout << "suite " << o.suite << ": " << (all ? "pass" : "fail") << '\n';
    return all ? 0 : 2;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Difference calculus and functional degrees on finite commutative groups"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "One JSON record per result");

    auto *fdeg = app.add_subcommand("fdeg", "Functional and partial degrees of a table");
    fdeg->add_option("table", o.file, "Table file, - for stdin")->required();
    auto *classify = app.add_subcommand("classify", "Decide finite degree via the primary splitting");
    classify->add_option("table", o.file, "Table file, - for stdin")->required();
    auto *interp = app.add_subcommand("interpolate", "Periodic polyfract of a finite-degree table");
    interp->add_option("table", o.file, "Table file, - for stdin")->required();
    auto *eval = app.add_subcommand("eval", "Evaluate a polyfract at a point or over a group");
    eval->add_option("polyfract", o.polyfract, "Polyfract file, - for stdin")->required();
    eval->add_option("--at", o.at, "Integer point, e.g. 3,1,0");
    eval->add_option("--domain", o.eval_domain, "Tabulate over this group, e.g. 4,3,5");
    auto *maxdeg = app.add_subcommand("maxdeg", "Largest finite degree of maps between two groups");
    maxdeg->add_option("domain", o.domain, "Domain spec")->required();
    maxdeg->add_option("codomain", o.codomain, "Codomain spec")->required();
    auto *nil = app.add_subcommand("nilpotency", "Nilpotency degree of the augmentation ideal");
    nil->add_option("--p", o.p, "Prime")->required();
    nil->add_option("--alphas", o.alphas, "Exponents, e.g. 1,1")->required();
    nil->add_option("--beta", o.beta, "Codomain exponent")->required();
    nil->add_flag("--oracle", o.oracle, "Also compute in the group ring and compare");
    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", o.suite, "small, lemma51, roundtrip or nilpotency")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*fdeg)
            return cmd_fdeg(o);
        if (*classify)
            return cmd_classify(o);
        if (*interp)
            return cmd_interpolate(o);
        if (*eval)
            return cmd_eval(o);
        if (*maxdeg)
            return cmd_maxdeg(o);
        if (*nil)
            return cmd_nilpotency(o);
        return cmd_verify(o);
    } catch (const Failure &f) {
        std::cerr << "error: " << f.message << '\n';
        return exit_code(f.status);
    }
}
