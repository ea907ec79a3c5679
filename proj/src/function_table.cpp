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

#include "diffdeg/function_table.hpp"

#include "diffdeg/degree.hpp"
#include "diffdeg/error.hpp"

#include <algorithm>
#include <sstream>

namespace diffdeg {

std::uint64_t Degree::value() const {
    if (!finite_)
        fail(ErrorKind::unsupported, "degree is infinite");
    return value_;
}

std::string Degree::to_string() const { return finite_ ? std::to_string(value_) : "INFINITE"; }

FunctionTable::FunctionTable(Group domain, Group codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      size_(static_cast<std::size_t>(domain_.order())), values_(size_ * codomain_.rank(), 0) {}

FunctionTable::FunctionTable(Group domain, Group codomain, std::vector<Int> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      size_(static_cast<std::size_t>(domain_.order())), values_(std::move(values)) {
    if (values_.size() != size_ * codomain_.rank())
        fail(ErrorKind::invalid_input, "function table has " + std::to_string(values_.size()) +
                                           " entries, expected " +
                                           std::to_string(size_ * codomain_.rank()));
    const std::size_t w = width();
    for (std::size_t k = 0; k < values_.size(); ++k)
        values_[k] = reduce(values_[k], codomain_.modulus(k % w));
}

FunctionTable FunctionTable::tabulate(Group domain, Group codomain,
                                      const std::function<std::vector<Int>(const GroupElement &)> &f) {
    FunctionTable t(std::move(domain), std::move(codomain));
    std::size_t k = 0;
    for (const auto &x : t.domain_.enumerate())
        t.set(k++, t.codomain_.reduce(f(x)));
    return t;
}

std::span<const Int> FunctionTable::value(std::size_t index) const {
    if (index >= size_)
        fail(ErrorKind::out_of_range, "table index out of range");
    return {values_.data() + index * width(), width()};
}

GroupElement FunctionTable::operator()(const GroupElement &x) const {
    if (x.group() != domain_)
        fail(ErrorKind::mismatch, "argument is not in the table's domain");
    auto v = value(domain_.index_of(x.coords()));
    return GroupElement(codomain_, std::vector<Int>(v.begin(), v.end()));
}

void FunctionTable::set(std::size_t index, std::span<const Int> v) {
    if (index >= size_)
        fail(ErrorKind::out_of_range, "table index out of range");
    if (v.size() != width())
        fail(ErrorKind::mismatch, "value width does not match codomain rank");
    for (std::size_t i = 0; i < width(); ++i)
        values_[index * width() + i] = reduce(v[i], codomain_.modulus(i));
}

bool FunctionTable::is_zero() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](Int v) { return v == 0; });
}

bool FunctionTable::is_constant() const noexcept {
    const std::size_t w = width();
    for (std::size_t k = w; k < values_.size(); ++k)
        if (values_[k] != values_[k % w])
            return false;
    return true;
}

namespace {

void require_compatible(const FunctionTable &f, const FunctionTable &g) {
    if (f.domain() != g.domain() || f.codomain() != g.codomain())
        fail(ErrorKind::mismatch, "function tables have different domains or codomains");
}

} // namespace

FunctionTable operator+(const FunctionTable &f, const FunctionTable &g) {
    require_compatible(f, g);
    std::vector<Int> v = f.values();
    const auto w = f.width();
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = add_mod(v[k], g.values()[k], f.codomain().modulus(k % w));
    return FunctionTable(f.domain(), f.codomain(), std::move(v));
}

FunctionTable operator-(const FunctionTable &f, const FunctionTable &g) {
    require_compatible(f, g);
    std::vector<Int> v = f.values();
    const auto w = f.width();
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = sub_mod(v[k], g.values()[k], f.codomain().modulus(k % w));
    return FunctionTable(f.domain(), f.codomain(), std::move(v));
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

// Splits "key: value" headers; returns false when the line has another shape.
bool header(std::string_view line, std::string_view key, std::string_view &value) {
    if (line.substr(0, key.size()) != key)
        return false;
    line.remove_prefix(key.size());
    line = strip(line);
    if (line.empty() || line.front() != ':')
        return false;
    value = strip(line.substr(1));
    return true;
}

} // namespace

FunctionTable parse_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::optional<Group> domain, codomain;
    std::vector<Int> values;
    std::vector<bool> seen;
    std::size_t filled = 0;
    std::size_t lineno = 0;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = strip(raw);
        if (line.empty() || line.front() == '#')
            continue;
        auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
        std::string_view rest;
        if (!domain) {
            if (!header(line, "domain", rest))
                fail(ErrorKind::invalid_input, where() + "expected 'domain: <moduli>'");
            domain = Group::parse(rest);
            if (!domain->is_finite())
                fail(ErrorKind::unsupported, where() + "table domain must be finite");
            continue;
        }
        if (!codomain) {
            if (!header(line, "codomain", rest))
                fail(ErrorKind::invalid_input, where() + "expected 'codomain: <moduli>'");
            codomain = Group::parse(rest);
            auto n = static_cast<std::size_t>(domain->order());
            values.assign(n * codomain->rank(), 0);
            seen.assign(n, false);
            continue;
        }
        auto arrow = line.find("->");
        if (arrow == std::string_view::npos)
            fail(ErrorKind::invalid_input, where() + "expected '<x> -> <f(x)>'");
        std::vector<Int> x;
        std::vector<Int> y;
        try {
            x = domain->reduce(parse_int_list(line.substr(0, arrow)));
            y = codomain->reduce(parse_int_list(line.substr(arrow + 2)));
        } catch (const Error &e) {
            fail(ErrorKind::invalid_input, where() + e.what());
        }
        std::size_t idx = domain->index_of(x);
        if (seen[idx])
            fail(ErrorKind::invalid_input, where() + "duplicate entry for " + join(x));
        seen[idx] = true;
        ++filled;
        std::copy(y.begin(), y.end(), values.begin() + static_cast<std::ptrdiff_t>(idx * y.size()));
    }
    if (!domain || !codomain)
        fail(ErrorKind::invalid_input, "missing 'domain:' or 'codomain:' header");
    if (filled != seen.size())
        fail(ErrorKind::invalid_input, "table lists " + std::to_string(filled) + " of " +
                                           std::to_string(seen.size()) + " domain elements");
    return FunctionTable(*domain, *codomain, std::move(values));
}

std::string format_table(const FunctionTable &f) {
    std::string out = "domain: " + f.domain().to_string() + "\n";
    out += "codomain: " + f.codomain().to_string() + "\n";
    for (std::size_t k = 0; k < f.size(); ++k) {
        auto x = f.domain().coords_at(k);
        out += join(x) + " -> " + join(f.value(k)) + "\n";
    }
    return out;
}

} // namespace diffdeg
