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
#include <cstddef>
#include <cstdint>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "ascyc/degree.hpp"
#include "ascyc/field.hpp"
#include "ascyc/integer.hpp"

namespace ascyc {

/// Element of F_q[T]. Coefficients are stored low-to-high with no trailing
/// zeros; the zero polynomial has an empty coefficient vector.
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Fq> coeffs);

    static Poly constant(FieldPtr field, Fq c);
    static Poly monomial(FieldPtr field, Fq c, std::size_t n);
    /// The polynomial T.
    static Poly variable(FieldPtr field);

    const FieldPtr& field_ptr() const noexcept { return field_; }
    const Field& field() const noexcept { return *field_; }

    Degree degree() const noexcept {
        return coeffs_.empty() ? Degree::minus_infinity()
                               : Degree(static_cast<std::int64_t>(coeffs_.size()) - 1);
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Field::one(); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const Fq> coeffs() const noexcept { return coeffs_; }
    Fq operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Fq{}; }
    Fq leading() const noexcept { return coeffs_.empty() ? Fq{} : coeffs_.back(); }
    std::size_t nonzero_terms() const noexcept;

    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == Field::one(); }
    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other) { return *this = *this * other; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(Fq c) const;
    /// this * T^n.
    Poly shifted(std::size_t n) const;
    /// this(T^k), coefficients unchanged. Over F_q, f(T)^q = f(T^q).
    Poly spread(std::size_t k) const;
    /// this^p: coefficients go through Frobenius and exponents scale by p.
    Poly frobenius() const;
    Poly pow(std::uint64_t e) const;
    Fq eval(Fq x) const noexcept;

    friend bool operator==(const Poly& a, const Poly& b) noexcept;
    /// Degree first, then coefficients from the top down by index.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

private:
    void trim() noexcept;

    FieldPtr field_;
    std::vector<Fq> coeffs_;
};

/// Raises FieldMismatch unless both fields are the same F_q presentation.
void require_same_field(const Field& a, const Field& b);

/// f = quotient * g + remainder with deg remainder < deg g.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
inline Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
inline Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct Bezout {
    Poly gcd;  // monic, or zero
    Poly s;
    Poly t;
};
/// s*a + t*b = gcd(a, b).
Bezout xgcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m; raises NotAUnit when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m);
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m);
Poly pow_mod(const Poly& base, const Integer& e, const Poly& m);

/// Multiplicity of prime in f (f nonzero), and the cofactor f / prime^k.
std::pair<std::int64_t, Poly> split_multiplicity(const Poly& f, const Poly& prime);

/// Number of monic polynomials of the given degree, q^degree; used for codes.
std::uint64_t monic_count(const Field& field, std::size_t degree);
/// Monic polynomial of the given degree whose non-leading coefficients,
/// read as base-q digits low-to-high, spell out code. Codes enumerate monic
/// polynomials of one degree in the canonical lexicographic order.
Poly monic_from_code(const FieldPtr& field, std::size_t degree, std::uint64_t code);
/// Arbitrary polynomial of degree < n from a base-q code.
Poly poly_from_code(const FieldPtr& field, std::size_t n, std::uint64_t code);
std::uint64_t code_of(const Poly& f, std::size_t n);

}  // namespace ascyc
