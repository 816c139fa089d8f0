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

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ascyc/irreducible.hpp"
#include "ascyc/poly.hpp"

namespace ascyc {

/// Element of F_q(T) kept as num/den with gcd(num, den) = 1 and den monic,
/// so equality is structural.
class RatFunc {
public:
    explicit RatFunc(FieldPtr field);
    RatFunc(Poly num);  // NOLINT(google-explicit-constructor): polynomials embed
    RatFunc(Poly num, Poly den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    const FieldPtr& field_ptr() const noexcept { return num_.field_ptr(); }
    const Field& field() const noexcept { return num_.field(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    /// deg num - deg den, i.e. -v_inf; r must be nonzero.
    std::int64_t degree() const;

    RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }

    RatFunc scaled(Fq c) const;
    RatFunc pow(std::uint64_t e) const;
    /// r^p.
    RatFunc frobenius() const { return RatFunc(num_.frobenius(), den_.frobenius(), Reduced{}); }
    /// r^p - r.
    RatFunc wp() const { return frobenius() - *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    struct Reduced {};
    RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

/// The place at T = infinity.
struct Infinity {
    friend constexpr bool operator==(Infinity, Infinity) noexcept { return true; }
};
inline constexpr Infinity kInfinity{};

/// Valuation value; nullopt stands for +infinity (the zero function).
using Valuation = std::optional<std::int64_t>;

Valuation valuation(const RatFunc& r, const PrimePoly& at);
Valuation valuation(const RatFunc& r, Infinity);

struct PoleTerm {
    PrimePoly prime;
    std::int64_t exponent;  // order of the pole, >= 1
    Poly numerator;         // deg < exponent * deg prime, coprime to prime
};

struct PartialFractions {
    Poly polypart;
    std::vector<PoleTerm> terms;  // sorted by prime

    RatFunc recombine() const;
};

/// r = polypart + sum f_i / P_i^alpha_i with canonical numerators.
PartialFractions partial_fractions(const RatFunc& r);

/// Digits u_0..u_{n-1} (deg u_k < deg P) of the P-adic expansion of f mod P^n.
std::vector<Poly> padic_digits(const Poly& f, const Poly& prime, std::size_t n);

}  // namespace ascyc
