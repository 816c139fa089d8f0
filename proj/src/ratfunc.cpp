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

#include "ascyc/ratfunc.hpp"

#include <algorithm>

namespace ascyc {

RatFunc::RatFunc(FieldPtr field)
    : num_(field), den_(Poly::constant(field, Field::one())) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field_ptr(), Field::one())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_field(num_.field(), den_.field());
    if (den_.is_zero()) raise(Errc::DivisionByZeroPoly, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field_ptr(), Field::one());
        return;
    }
    const Poly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    const Fq lead = den_.leading();
    if (lead != Field::one()) {
        const Fq inv = num_.field().inv(lead);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

std::int64_t RatFunc::degree() const { return num_.degree().value() - den_.degree().value(); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (a.is_polynomial()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, RatFunc::Reduced{});
    if (b.is_polynomial()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, RatFunc::Reduced{});
    const Poly g = gcd(a.den_, b.den_);
    const Poly ad = a.den_ / g;
    const Poly bd = b.den_ / g;
    return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.field_ptr());
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    return RatFunc((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1), RatFunc::Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) raise(Errc::DivisionByZeroPoly, "division by the zero rational function");
    return a * RatFunc(b.den_, b.num_);
}

RatFunc RatFunc::scaled(Fq c) const {
    if (c.is_zero()) return RatFunc(field_ptr());
    return RatFunc(num_.scaled(c), den_, Reduced{});
}

RatFunc RatFunc::pow(std::uint64_t e) const { return RatFunc(num_.pow(e), den_.pow(e), Reduced{}); }

Valuation valuation(const RatFunc& r, const PrimePoly& at) {
    if (r.is_zero()) return std::nullopt;
    return split_multiplicity(r.num(), at.poly()).first - split_multiplicity(r.den(), at.poly()).first;
}

Valuation valuation(const RatFunc& r, Infinity) {
    if (r.is_zero()) return std::nullopt;
    return -r.degree();
}

RatFunc PartialFractions::recombine() const {
    RatFunc sum(polypart);
    for (const auto& term : terms) {
        sum += RatFunc(term.numerator, term.prime.poly().pow(static_cast<std::uint64_t>(term.exponent)));
    }
    return sum;
}

PartialFractions partial_fractions(const RatFunc& r) {
    auto [polypart, rem] = divmod(r.num(), r.den());
    PartialFractions out{std::move(polypart), {}};
    if (r.is_polynomial()) return out;
    const auto fac = factor(r.den());
    for (const auto& [prime, mult] : fac.factors) {
        const Poly local = prime.poly().pow(static_cast<std::uint64_t>(mult));
        const Poly cofactor = r.den() / local;
        // rem / den = f / local + (...)/cofactor  with  f = rem * cofactor^{-1} mod local
        Poly f = mul_mod(rem, inverse_mod(cofactor, local), local);
        out.terms.push_back(PoleTerm{prime, mult, std::move(f)});
    }
    return out;
}

std::vector<Poly> padic_digits(const Poly& f, const Poly& prime, std::size_t n) {
    std::vector<Poly> digits;
    digits.reserve(n);
    Poly rest = f;
    for (std::size_t k = 0; k < n; ++k) {
        auto [quo, rem] = divmod(rest, prime);
        digits.push_back(std::move(rem));
        rest = std::move(quo);
    }
    return digits;
}

}  // namespace ascyc
