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

#include "diffdeg/polyfract.hpp"

#include "diffdeg/calculus.hpp"
#include "diffdeg/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace diffdeg {

std::uint64_t MultiIndex::total() const noexcept {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool MultiIndex::divides(const MultiIndex &other) const {
    if (other.size() != size())
        fail(ErrorKind::mismatch, "multi-indices of different length");
    for (std::size_t i = 0; i < size(); ++i)
        if (e_[i] > other.e_[i])
            return false;
    return true;
}

BigInt monofract_value(std::span<const Int> x, const MultiIndex &delta) {
    if (x.size() != delta.size())
        fail(ErrorKind::mismatch, "point and multi-index have different length");
    BigInt acc = 1;
    for (std::size_t i = 0; i < x.size() && acc != 0; ++i)
        acc *= binomial(x[i], delta[i]);
    return acc;
}

std::vector<Int> scale(const Group &codomain, std::span<const Int> b, const BigInt &s) {
    std::vector<Int> out(b.size());
    for (std::size_t c = 0; c < b.size(); ++c) {
        Int q = codomain.modulus(c);
        out[c] = q >= 1 ? mul_mod(b[c], residue(s, q), q) : narrow(BigInt(b[c]) * s);
    }
    return out;
}

Polyfract::Polyfract(std::size_t vars, Group codomain) : vars_(vars), codomain_(std::move(codomain)) {
    if (vars_ == 0)
        fail(ErrorKind::invalid_input, "a polyfract needs at least one variable");
}

void Polyfract::add_term(const MultiIndex &delta, std::span<const Int> coeff) {
    if (delta.size() != vars_)
        fail(ErrorKind::mismatch, "multi-index length does not match variable count");
    if (coeff.size() != codomain_.rank())
        fail(ErrorKind::mismatch, "coefficient width does not match codomain rank");
    auto it = terms_.find(delta);
    std::vector<Int> sum = it == terms_.end() ? std::vector<Int>(coeff.size(), 0) : it->second;
    for (std::size_t c = 0; c < coeff.size(); ++c)
        sum[c] = add_mod(sum[c], reduce(coeff[c], codomain_.modulus(c)), codomain_.modulus(c));
    bool zero = std::all_of(sum.begin(), sum.end(), [](Int v) { return v == 0; });
    if (zero) {
        if (it != terms_.end())
            terms_.erase(it);
    } else if (it != terms_.end()) {
        it->second = std::move(sum);
    } else {
        terms_.emplace(delta, std::move(sum));
    }
}

std::vector<Int> Polyfract::coefficient(const MultiIndex &delta) const {
    auto it = terms_.find(delta);
    return it == terms_.end() ? std::vector<Int>(codomain_.rank(), 0) : it->second;
}

std::uint64_t Polyfract::degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto &[delta, b] : terms_)
        d = std::max(d, delta.total());
    return d;
}

std::uint64_t Polyfract::degree(std::size_t i) const {
    if (i >= vars_)
        fail(ErrorKind::out_of_range, "variable index " + std::to_string(i) + " out of range");
    std::uint64_t d = 0;
    for (const auto &[delta, b] : terms_)
        d = std::max<std::uint64_t>(d, delta[i]);
    return d;
}

std::vector<Int> Polyfract::evaluate(std::span<const Int> x) const {
    if (x.size() != vars_)
        fail(ErrorKind::mismatch, "point has " + std::to_string(x.size()) + " coordinates, expected " +
                                      std::to_string(vars_));
    std::vector<Int> acc(codomain_.rank(), 0);
    for (const auto &[delta, b] : terms_) {
        BigInt m = monofract_value(x, delta);
        if (m != 0)
            codomain_.add_into(acc, scale(codomain_, b, m));
    }
    return acc;
}

namespace {

void require_compatible(const Polyfract &p, const Polyfract &q) {
    if (p.vars() != q.vars() || p.codomain() != q.codomain())
        fail(ErrorKind::mismatch, "polyfracts differ in variable count or codomain");
}

} // namespace

Polyfract operator+(const Polyfract &p, const Polyfract &q) {
    require_compatible(p, q);
    Polyfract out = p;
    for (const auto &[delta, b] : q.terms())
        out.add_term(delta, b);
    return out;
}

Polyfract operator-(const Polyfract &p) {
    Polyfract out(p.vars(), p.codomain());
    for (const auto &[delta, b] : p.terms()) {
        std::vector<Int> neg(b.size(), 0);
        p.codomain().sub_into(neg, b);
        out.add_term(delta, neg);
    }
    return out;
}

Polyfract operator-(const Polyfract &p, const Polyfract &q) { return p + (-q); }

Polyfract delta_symbolic(const Polyfract &p, std::size_t i) {
    if (i >= p.vars())
        fail(ErrorKind::out_of_range, "variable index " + std::to_string(i) + " out of range");
    Polyfract out(p.vars(), p.codomain());
    for (const auto &[delta, b] : p.terms()) {
        if (delta[i] == 0)
            continue;
        MultiIndex lowered = delta;
        --lowered[i];
        out.add_term(lowered, b);
    }
    return out;
}

Polyfract shift(const Polyfract &p, std::span<const Int> a) {
    if (a.size() != p.vars())
        fail(ErrorKind::mismatch, "shift vector length does not match variable count");
    Polyfract cur = p;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        Polyfract next(p.vars(), p.codomain());
        for (const auto &[delta, b] : cur.terms()) {
            for (std::uint32_t k = 0; k <= delta[i]; ++k) {
                BigInt s = binomial(a[i], delta[i] - k);
                if (s == 0)
                    continue;
                MultiIndex target = delta;
                target[i] = k;
                next.add_term(target, scale(p.codomain(), b, s));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

bool is_periodic(const Polyfract &p, const Group &periods) {
    if (periods.rank() != p.vars())
        fail(ErrorKind::mismatch, "period count does not match variable count");
    for (std::size_t i = 0; i < p.vars(); ++i) {
        Int q = periods.modulus(i);
        if (q < 1)
            continue;
        std::vector<Int> a(p.vars(), 0);
        a[i] = q;
        if (shift(p, a) != p)
            return false;
    }
    return true;
}

Polyfract tensor_product(const Polyfract &p, const Polyfract &q) {
    if (p.codomain() != q.codomain() || p.codomain().rank() != 1)
        fail(ErrorKind::unsupported, "tensor product needs a common cyclic coefficient ring");
    const Int m = p.codomain().modulus(0);
    Polyfract out(p.vars() + q.vars(), p.codomain());
    for (const auto &[dp, bp] : p.terms()) {
        for (const auto &[dq, bq] : q.terms()) {
            auto e = dp.exponents();
            e.insert(e.end(), dq.exponents().begin(), dq.exponents().end());
            Int c = mul_mod(bp[0], bq[0], m);
            out.add_term(MultiIndex(std::move(e)), std::span<const Int>(&c, 1));
        }
    }
    return out;
}

Polyfract taylor_interpolate(const Group &codomain, const MultiIndex &box,
                             std::span<const Int> values) {
    const std::size_t n = box.size();
    const std::size_t w = codomain.rank();
    std::vector<std::size_t> extent(n), stride(n);
    std::size_t points = 1;
    for (std::size_t i = n; i-- > 0;) {
        extent[i] = static_cast<std::size_t>(box[i]) + 1;
        stride[i] = points;
        points *= extent[i];
    }
    if (values.size() != points * w)
        fail(ErrorKind::invalid_input, "interpolation grid has " + std::to_string(values.size()) +
                                           " entries, expected " + std::to_string(points * w));

    std::vector<Int> grid(values.begin(), values.end());
    for (std::size_t c = 0; c < grid.size(); ++c)
        grid[c] = reduce(grid[c], codomain.modulus(c % w));

    // Forward-difference tableau along each axis in turn; afterwards the
    // entry at delta holds [Delta^delta f](0).
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t base = 0; base < points; ++base) {
            if ((base / stride[k]) % extent[k] != 0)
                continue; // visit each line once, from its first point
            for (std::size_t level = 1; level < extent[k]; ++level) {
                for (std::size_t j = extent[k] - 1; j >= level; --j) {
                    Int *hi = &grid[(base + j * stride[k]) * w];
                    const Int *lo = &grid[(base + (j - 1) * stride[k]) * w];
                    codomain.sub_into(std::span<Int>(hi, w), std::span<const Int>(lo, w));
                }
            }
        }
    }

    Polyfract out(n, codomain);
    std::vector<std::uint32_t> delta(n);
    for (std::size_t pt = 0; pt < points; ++pt) {
        for (std::size_t i = 0; i < n; ++i)
            delta[i] = static_cast<std::uint32_t>((pt / stride[i]) % extent[i]);
        out.add_term(MultiIndex(delta), std::span<const Int>(&grid[pt * w], w));
    }
    return out;
}

PeriodicPolyfract interpolate_table(const FunctionTable &f) {
    const Group &A = f.domain();
    std::vector<std::uint32_t> box(A.rank());
    for (std::size_t i = 0; i < A.rank(); ++i) {
        Degree d = partial_degree(f, i);
        if (!d.is_finite())
            fail(ErrorKind::no_representation,
                 "map has infinite degree in coordinate " + std::to_string(i + 1) +
                     "; no polyfract represents it");
        box[i] = static_cast<std::uint32_t>(d.value());
    }

    // Sample the periodic lift on the box.
    const std::size_t w = f.width();
    std::size_t points = 1;
    for (auto b : box)
        points *= b + 1;
    std::vector<Int> values;
    values.reserve(points * w);
    std::vector<Int> x(A.rank());
    for (std::size_t pt = 0; pt < points; ++pt) {
        std::size_t rest = pt;
        for (std::size_t i = A.rank(); i-- > 0;) {
            x[i] = reduce(static_cast<Int>(rest % (box[i] + 1)), A.modulus(i));
            rest /= box[i] + 1;
        }
        auto v = f.value(A.index_of(x));
        values.insert(values.end(), v.begin(), v.end());
    }
    return {taylor_interpolate(f.codomain(), MultiIndex(box), values), A};
}

FunctionTable tabulate(const Polyfract &p, const Group &domain) {
    if (domain.rank() != p.vars())
        fail(ErrorKind::mismatch, "domain rank does not match variable count");
    if (!domain.is_finite())
        fail(ErrorKind::unsupported, "tabulation needs a finite domain");
    if (!is_periodic(p, domain))
        fail(ErrorKind::invalid_input,
             "polyfract is not periodic with periods " + domain.to_string());
    FunctionTable out(domain, p.codomain());
    for (std::size_t k = 0; k < out.size(); ++k)
        out.set(k, p.evaluate(domain.coords_at(k)));
    return out;
}

std::string format_polyfract(const Polyfract &p) {
    std::string out = "vars: " + std::to_string(p.vars()) + "\n";
    out += "codomain: " + p.codomain().to_string() + "\n";
    for (const auto &[delta, b] : p.terms()) {
        std::vector<Int> e(delta.exponents().begin(), delta.exponents().end());
        out += join(e) + " : " + join(b) + "\n";
    }
    return out;
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::optional<std::string_view> header_value(std::string_view line, std::string_view key) {
    if (line.substr(0, key.size()) != key)
        return std::nullopt;
    line = strip(line.substr(key.size()));
    if (line.empty() || line.front() != ':')
        return std::nullopt;
    return strip(line.substr(1));
}

} // namespace

Polyfract parse_polyfract(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::optional<std::size_t> vars;
    std::optional<Polyfract> out;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = strip(raw);
        if (line.empty() || line.front() == '#')
            continue;
        auto where = "line " + std::to_string(lineno) + ": ";
        if (!vars) {
            auto v = header_value(line, "vars");
            if (!v)
                fail(ErrorKind::invalid_input, where + "expected 'vars: <n>'");
            auto list = parse_int_list(*v);
            if (list.size() != 1 || list[0] < 1)
                fail(ErrorKind::invalid_input, where + "variable count must be a positive integer");
            vars = static_cast<std::size_t>(list[0]);
            continue;
        }
        if (!out) {
            auto v = header_value(line, "codomain");
            if (!v)
                fail(ErrorKind::invalid_input, where + "expected 'codomain: <moduli>'");
            out.emplace(*vars, Group::parse(*v));
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string_view::npos)
            fail(ErrorKind::invalid_input, where + "expected '<multi-index> : <coefficient>'");
        std::vector<Int> e;
        std::vector<Int> b;
        try {
            e = parse_int_list(line.substr(0, colon));
            b = out->codomain().reduce(parse_int_list(line.substr(colon + 1)));
        } catch (const Error &err) {
            fail(ErrorKind::invalid_input, where + err.what());
        }
        if (e.size() != *vars)
            fail(ErrorKind::invalid_input, where + "multi-index has the wrong length");
        std::vector<std::uint32_t> exps;
        for (Int x : e) {
            if (x < 0 || x > static_cast<Int>(UINT32_MAX))
                fail(ErrorKind::invalid_input, where + "exponents must be non-negative");
            exps.push_back(static_cast<std::uint32_t>(x));
        }
        if (std::all_of(b.begin(), b.end(), [](Int v) { return v == 0; }))
            fail(ErrorKind::invalid_input, where + "zero coefficients are not allowed");
        MultiIndex delta(std::move(exps));
        if (out->terms().count(delta))
            fail(ErrorKind::invalid_input, where + "repeated multi-index");
        out->add_term(delta, b);
    }
    if (!out)
        fail(ErrorKind::invalid_input, "missing 'vars:' or 'codomain:' header");
    return *out;
}

} // namespace diffdeg
