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

#include <compare>
#include <cstdint>
#include <string>

namespace diffdeg {

// A functional degree: a non-negative integer or infinity.
class Degree {
public:
    constexpr Degree(std::uint64_t value) noexcept : value_(value), finite_(true) {}

    static constexpr Degree infinite() noexcept { return Degree(); }

    constexpr bool is_finite() const noexcept { return finite_; }
    /// Throws `unsupported` when infinite.
    std::uint64_t value() const;

    std::string to_string() const;

    friend constexpr bool operator==(const Degree &, const Degree &) = default;
    // Infinity compares above every finite value.
    friend constexpr std::strong_ordering operator<=>(const Degree &a, const Degree &b) noexcept {
        if (a.finite_ != b.finite_)
            return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.value_ <=> b.value_;
    }

private:
    constexpr Degree() noexcept : value_(0), finite_(false) {}

    std::uint64_t value_;
    bool finite_;
};

} // namespace diffdeg
