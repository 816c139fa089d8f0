/*
   Copyright 2026 The ascyc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <compare>
#include <cstdint>
#include <limits>

#include "ascyc/error.hpp"

namespace ascyc {

/// Polynomial degree with a distinguished minus-infinity for the zero
/// polynomial. Minus infinity compares below every finite degree and
/// absorbs addition.
class Degree {
public:
    static constexpr Degree minus_infinity() noexcept { return Degree(); }
    constexpr explicit Degree(std::int64_t d) noexcept : d_(d), finite_(true) {}

    constexpr bool is_minus_infinity() const noexcept { return !finite_; }
    constexpr bool is_finite() const noexcept { return finite_; }
    std::int64_t value() const {
        if (!finite_) raise(Errc::ZeroPolynomial, "degree of the zero polynomial");
        return d_;
    }

    friend constexpr bool operator==(Degree a, Degree b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.d_ == b.d_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.d_ <=> b.d_;
    }
    friend constexpr bool operator==(Degree a, std::int64_t b) noexcept { return a == Degree(b); }
    friend constexpr std::strong_ordering operator<=>(Degree a, std::int64_t b) noexcept {
        return a <=> Degree(b);
    }
    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (!a.finite_ || !b.finite_) return minus_infinity();
        return Degree(a.d_ + b.d_);
    }

private:
    constexpr Degree() noexcept = default;

    std::int64_t d_ = 0;
    bool finite_ = false;
};

}  // namespace ascyc
