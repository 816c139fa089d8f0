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
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace ascyc {

/**
 * Element of F_q stored as its index in the field's enumeration order.
 *
 * The index is the F_p-coefficient tuple of the representative polynomial
 * read as a base-p number, lowest coefficient first: index = sum c_i p^i.
 * Index 0 is zero and index 1 is one.
 */
struct Fq {
    std::uint16_t v = 0;

    constexpr bool is_zero() const noexcept { return v == 0; }
    friend constexpr auto operator<=>(Fq, Fq) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * The finite field F_q = F_p[x]/(modulus), q = p^t <= 2^16.
 *
 * Multiplication goes through discrete log tables built from a primitive
 * element; addition is XOR for p = 2 and Zech logarithms otherwise. All
 * tables are built once at construction and the object is immutable.
 */
class Field {
public:
    static constexpr std::uint32_t kMaxOrder = 1U << 16U;

    /// Builds F_{p^t}. Without a modulus the built-in default table is used
    /// (modulus x for t = 1).
    static FieldPtr make(std::uint32_t p, std::uint32_t t,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t t() const noexcept { return t_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Monic modulus over F_p, coefficients low-to-high, length t + 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    static constexpr Fq zero() noexcept { return Fq{0}; }
    static constexpr Fq one() noexcept { return Fq{1}; }
    /// The class of x in F_p[x]/(modulus); zero when t = 1.
    Fq generator() const noexcept { return generator_; }
    /// Image of an integer under Z -> F_p -> F_q.
    Fq from_int(std::int64_t n) const noexcept;
    Fq element(std::uint32_t index) const;

    Fq add(Fq a, Fq b) const noexcept {
        if (p_ == 2) return Fq{static_cast<std::uint16_t>(a.v ^ b.v)};
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const std::uint32_t la = log_[a.v];
        const std::uint32_t lb = log_[b.v];
        const std::uint32_t n = lb >= la ? lb - la : lb + (q_ - 1) - la;
        const std::int32_t z = zech_[n];
        if (z < 0) return zero();
        return Fq{exp_[la + static_cast<std::uint32_t>(z)]};
    }
    Fq neg(Fq a) const noexcept { return p_ == 2 ? a : neg_[a.v]; }
    Fq sub(Fq a, Fq b) const noexcept { return add(a, neg(b)); }
    Fq mul(Fq a, Fq b) const noexcept {
        if (a.is_zero() || b.is_zero()) return zero();
        return Fq{exp_[log_[a.v] + log_[b.v]]};
    }
    /// Multiplicative inverse; a must be nonzero.
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, std::uint64_t e) const noexcept;

    /// a^p.
    Fq frobenius(Fq a) const noexcept { return frobenius_[a.v]; }
    /// The unique b with b^p = a, equal to a^(q/p).
    Fq pth_root(Fq a) const noexcept { return pth_root_[a.v]; }
    /// Absolute trace Tr_{F_q/F_p}(a) as an integer in [0, p).
    std::uint32_t trace(Fq a) const noexcept { return trace_[a.v]; }
    /// Some b with b^p - b = a, if one exists (iff trace(a) = 0).
    std::optional<Fq> wp_preimage(Fq a) const noexcept;
    /// First element in enumeration order with nonzero absolute trace.
    Fq rho() const noexcept { return rho_; }

    /// F_p coordinates of a, low-to-high, length t.
    std::vector<std::uint32_t> digits(Fq a) const;
    Fq from_digits(std::span<const std::uint32_t> digits) const;

    bool same_as(const Field& other) const noexcept {
        return p_ == other.p_ && t_ == other.t_ && modulus_ == other.modulus_;
    }

private:
    Field() = default;

    std::uint32_t p_ = 0;
    std::uint32_t t_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Fq generator_{};
    Fq rho_{};
    std::vector<std::uint16_t> exp_;  // length 2(q-1) so log sums need no reduction
    std::vector<std::uint32_t> log_;
    std::vector<std::int32_t> zech_;
    std::vector<Fq> neg_;
    std::vector<Fq> frobenius_;
    std::vector<Fq> pth_root_;
    std::vector<std::uint32_t> trace_;
    std::vector<std::int32_t> wp_preimage_;
};

/// Built-in default modulus for F_{p^t}, or nullopt when the table has no
/// entry. Entries are the least monic irreducible in enumeration order.
std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, std::uint32_t t);

/// Irreducibility over F_p of a small dense polynomial (coefficients
/// low-to-high), by trial division with every monic of degree <= deg/2.
bool is_irreducible_over_prime_field(std::span<const std::uint32_t> coeffs, std::uint32_t p);


}  // namespace ascyc

template <>
struct std::hash<ascyc::Fq> {
    std::size_t operator()(ascyc::Fq a) const noexcept { return a.v; }
};
