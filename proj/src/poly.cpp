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

#include "ascyc/poly.hpp"

#include <algorithm>

namespace ascyc {

void require_same_field(const Field& a, const Field& b) {
    if (&a != &b && !a.same_as(b)) raise(Errc::FieldMismatch, "operands live over different fields");
}

Poly::Poly(FieldPtr field, std::vector<Fq> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
}

Poly Poly::constant(FieldPtr field, Fq c) { return Poly(std::move(field), std::vector<Fq>{c}); }

Poly Poly::monomial(FieldPtr field, Fq c, std::size_t n) {
    if (c.is_zero()) return Poly(std::move(field));
    std::vector<Fq> coeffs(n + 1);
    coeffs[n] = c;
    return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::variable(FieldPtr field) { return monomial(std::move(field), Field::one(), 1); }

void Poly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t Poly::nonzero_terms() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](Fq c) { return !c.is_zero(); }));
}

Poly Poly::monic() const {
    if (is_zero()) raise(Errc::ZeroPolynomial, "cannot normalize the zero polynomial");
    return scaled(field_->inv(leading()));
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = field_->neg(c);
    return out;
}

Poly& Poly::operator+=(const Poly& other) {
    require_same_field(*field_, *other.field_);
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = field_->add(coeffs_[i], other.coeffs_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    require_same_field(*field_, *other.field_);
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = field_->sub(coeffs_[i], other.coeffs_[i]);
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(*a.field_, *b.field_);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const Field& f = *a.field_;
    // Iterating nonzero terms only keeps products with spread (Frobenius
    // power) operands cheap; for dense inputs this is plain schoolbook.
    std::vector<std::size_t> nz_b;
    nz_b.reserve(b.coeffs_.size());
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (!b.coeffs_[j].is_zero()) nz_b.push_back(j);
    }
    std::vector<Fq> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const Fq ai = a.coeffs_[i];
        if (ai.is_zero()) continue;
        for (const std::size_t j : nz_b) out[i + j] = f.add(out[i + j], f.mul(ai, b.coeffs_[j]));
    }
    return Poly(a.field_, std::move(out));
}

Poly Poly::scaled(Fq c) const {
    if (c.is_zero()) return Poly(field_);
    Poly out = *this;
    for (auto& x : out.coeffs_) x = field_->mul(x, c);
    return out;
}

Poly Poly::shifted(std::size_t n) const {
    if (is_zero() || n == 0) return *this;
    std::vector<Fq> out(n + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(n));
    return Poly(field_, std::move(out));
}

Poly Poly::spread(std::size_t k) const {
    if (is_zero() || k == 1) return *this;
    if (k == 0) {
        Fq sum{};
        for (const Fq c : coeffs_) sum = field_->add(sum, c);
        return constant(field_, sum);
    }
    std::vector<Fq> out((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
    return Poly(field_, std::move(out));
}

Poly Poly::frobenius() const {
    Poly out = spread(field_->p());
    for (auto& c : out.coeffs_) c = field_->frobenius(c);
    return out;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly result = constant(field_, Field::one());
    Poly base = *this;
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return result;
}

Fq Poly::eval(Fq x) const noexcept {
    Fq acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

bool operator==(const Poly& a, const Poly& b) noexcept {
    if (a.field_ != b.field_ && !a.field_->same_as(*b.field_)) return false;
    return a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
        if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    require_same_field(f.field(), g.field());
    if (g.is_zero()) raise(Errc::DivisionByZeroPoly, "division by the zero polynomial");
    const Field& F = f.field();
    if (f.size() < g.size()) return {Poly(f.field_ptr()), f};
    std::vector<Fq> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<Fq> quo(f.size() - g.size() + 1);
    const Fq inv_lead = F.inv(g.leading());
    const auto gc = g.coeffs();
    const std::size_t dg = g.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Fq c = F.mul(rem[k + dg], inv_lead);
        quo[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i <= dg; ++i) {
            if (!gc[i].is_zero()) rem[k + i] = F.sub(rem[k + i], F.mul(c, gc[i]));
        }
    }
    rem.resize(dg);
    return {Poly(f.field_ptr(), std::move(quo)), Poly(f.field_ptr(), std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

Bezout xgcd(const Poly& a, const Poly& b) {
    const FieldPtr& F = a.field_ptr();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(F, Field::one()), s1(F);
    Poly t0(F), t1 = Poly::constant(F, Field::one());
    while (!r1.is_zero()) {
        auto [quo, rem] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(rem));
        s0 = std::exchange(s1, s0 - quo * s1);
        t0 = std::exchange(t1, t0 - quo * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Fq inv = F->inv(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
    auto [g, s, t] = xgcd(a % m, m);
    if (!g.is_one()) raise(Errc::NotAUnit, "polynomial is not invertible modulo m");
    return s % m;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly result = Poly::constant(base.field_ptr(), Field::one()) % m;
    Poly b = base % m;
    while (e != 0) {
        if (e & 1U) result = mul_mod(result, b, m);
        e >>= 1U;
        if (e != 0) b = mul_mod(b, b, m);
    }
    return result;
}

Poly pow_mod(const Poly& base, const Integer& e, const Poly& m) {
    Poly result = Poly::constant(base.field_ptr(), Field::one()) % m;
    Poly b = base % m;
    const std::size_t bits = e == 0 ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(e)) + 1;
    for (std::size_t i = 0; i < bits; ++i) {
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mul_mod(result, b, m);
        if (i + 1 < bits) b = mul_mod(b, b, m);
    }
    return result;
}

std::pair<std::int64_t, Poly> split_multiplicity(const Poly& f, const Poly& prime) {
    if (f.is_zero()) raise(Errc::ZeroPolynomial, "multiplicity in the zero polynomial");
    std::int64_t k = 0;
    Poly rest = f;
    while (true) {
        auto [quo, rem] = divmod(rest, prime);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++k;
    }
    return {k, rest};
}

std::uint64_t monic_count(const Field& field, std::size_t degree) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < degree; ++i) {
        if (n > std::numeric_limits<std::uint64_t>::max() / field.q()) {
            raise(Errc::Overflow, "q^degree does not fit in 64 bits");
        }
        n *= field.q();
    }
    return n;
}

Poly poly_from_code(const FieldPtr& field, std::size_t n, std::uint64_t code) {
    std::vector<Fq> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) {
        coeffs[i] = Fq{static_cast<std::uint16_t>(code % field->q())};
        code /= field->q();
    }
    return Poly(field, std::move(coeffs));
}

Poly monic_from_code(const FieldPtr& field, std::size_t degree, std::uint64_t code) {
    std::vector<Fq> coeffs(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) {
        coeffs[i] = Fq{static_cast<std::uint16_t>(code % field->q())};
        code /= field->q();
    }
    coeffs[degree] = Field::one();
    return Poly(field, std::move(coeffs));
}

std::uint64_t code_of(const Poly& f, std::size_t n) {
    std::uint64_t code = 0;
    for (std::size_t i = n; i-- > 0;) code = code * f.field().q() + f[i].v;
    return code;
}

}  // namespace ascyc
