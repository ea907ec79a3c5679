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

#include "diffdeg/group.hpp"

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diffdeg {

// A total map from a finite group to a codomain group, stored densely in
// `Group::enumerate()` order. Values are canonical codomain representatives.
class FunctionTable {
public:
    /// The zero map.
    FunctionTable(Group domain, Group codomain);
    /// `values` is row-major: |domain| rows of `codomain.rank()` entries.
    FunctionTable(Group domain, Group codomain, std::vector<Int> values);

    static FunctionTable tabulate(Group domain, Group codomain,
                                  const std::function<std::vector<Int>(const GroupElement &)> &f);

    const Group &domain() const noexcept { return domain_; }
    const Group &codomain() const noexcept { return codomain_; }
    std::size_t size() const noexcept { return size_; }
    std::size_t width() const noexcept { return codomain_.rank(); }

    std::span<const Int> value(std::size_t index) const;
    GroupElement operator()(const GroupElement &x) const;
    void set(std::size_t index, std::span<const Int> v);

    const std::vector<Int> &values() const noexcept { return values_; }
    bool is_zero() const noexcept;
    bool is_constant() const noexcept;

    friend bool operator==(const FunctionTable &, const FunctionTable &) = default;

private:
    Group domain_;
    Group codomain_;
    std::size_t size_;
    std::vector<Int> values_;
};

FunctionTable operator+(const FunctionTable &f, const FunctionTable &g);
FunctionTable operator-(const FunctionTable &f, const FunctionTable &g);

/// Reads the line-oriented table format:
///
///     domain: 4,3,5
///     codomain: 2,9,7,7
///     0,0,0 -> 1,3,4,5
///
/// Every domain element must appear exactly once; lines may come in any order
/// and values are reduced to canonical representatives.
FunctionTable parse_table(std::string_view text);

/// Writes the table format with rows in enumeration order.
std::string format_table(const FunctionTable &f);

} // namespace diffdeg
