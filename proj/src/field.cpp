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

#include "ascyc/field.hpp"

#include <algorithm>
#include <string>

#include "ascyc/error.hpp"
#include "ascyc/integer.hpp"
#include "modulus_table.hpp"

namespace ascyc {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NonPrimeP: return "NonPrimeP";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::InvalidAlpha: return "InvalidAlpha";
        case Errc::DegenerateInput: return "DegenerateInput";
        case Errc::RhoInWp: return "RhoInWp";
        case Errc::NotSingleTerm: return "NotSingleTerm";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::ModulusMismatch: return "ModulusMismatch";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::InWpError: return "InWpError";
        case Errc::ParseError: return "ParseError";
        case Errc::GridParseError: return "GridParseError";
        case Errc::Overflow: return "Overflow";
        case Errc::InvariantViolated: return "InvariantViolated";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

using Dense = std::vector<std::uint32_t>;

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over F_p; b has a nonzero leading coefficient.
Dense dense_mod(Dense a, const Dense& b, std::uint32_t p) {
    trim(a);
    const std::uint64_t lead = b.back();
    std::uint64_t inv = 1;
    for (std::uint32_t i = 2; i < p; ++i) inv = inv * lead % p;  // lead^(p-2)
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back() * inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
        }
        trim(a);
    }
    return a;
}

Dense monic_from_code(std::uint32_t degree, std::uint64_t code, std::uint32_t p) {
    Dense f(degree + 1, 0);
    for (std::uint32_t i = 0; i < degree; ++i) {
        f[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    f[degree] = 1;
    return f;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_irreducible_over_prime_field(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
    Dense f(coeffs.begin(), coeffs.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            if (dense_mod(f, monic_from_code(d, code, p), p).empty()) return false;
        }
    }
    return true;
}

std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, std::uint32_t t) {
    if (t == 1) return std::vector<std::uint32_t>{0, 1};
    for (const auto& entry : detail::modulus_table()) {
        if (entry.p == p && entry.t == t) return entry.coeffs;
    }
    return std::nullopt;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t t,
                     std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime_u64(p)) raise(Errc::NonPrimeP, std::to_string(p) + " is not prime");
    if (t == 0) raise(Errc::InvalidArgument, "extension degree t must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        q *= p;
        if (q > kMaxOrder) {
            raise(Errc::FieldTooLarge, "q = " + std::to_string(p) + "^" + std::to_string(t) +
                                           " exceeds 2^16");
        }
    }
    if (!modulus) {
        modulus = default_modulus(p, t);
        if (!modulus) raise(Errc::FieldTooLarge, "no default modulus for this field");
    }
    Dense m = *modulus;
    if (m.size() != t + 1 || m.back() != 1 ||
        std::any_of(m.begin(), m.end(), [p](std::uint32_t c) { return c >= p; })) {
        raise(Errc::ReducibleModulus, "modulus must be a monic polynomial of degree t over F_p");
    }
    if (!is_irreducible_over_prime_field(m, p)) raise(Errc::ReducibleModulus, "modulus is reducible");

    auto field = std::shared_ptr<Field>(new Field());
    Field& f = *field;
    f.p_ = p;
    f.t_ = t;
    f.q_ = static_cast<std::uint32_t>(q);
    f.modulus_ = m;

    const auto to_digits = [&](std::uint32_t index) {
        Dense d(t, 0);
        for (std::uint32_t i = 0; i < t; ++i) {
            d[i] = index % p;
            index /= p;
        }
        return d;
    };
    const auto to_index = [&](const Dense& d) {
        std::uint32_t index = 0;
        for (std::size_t i = d.size(); i-- > 0;) index = index * p + d[i];
        return index;
    };
    const auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
        const Dense da = to_digits(a);
        const Dense db = to_digits(b);
        Dense prod(2 * t, 0);
        for (std::uint32_t i = 0; i < t; ++i) {
            for (std::uint32_t j = 0; j < t; ++j) {
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
            }
        }
        Dense r = dense_mod(prod, m, p);
        r.resize(t, 0);
        return to_index(r);
    };
    const auto slow_add = [&](std::uint32_t a, std::uint32_t b) {
        Dense da = to_digits(a);
        const Dense db = to_digits(b);
        for (std::uint32_t i = 0; i < t; ++i) da[i] = (da[i] + db[i]) % p;
        return to_index(da);
    };

    const std::uint32_t order = f.q_ - 1;
    const auto factors = prime_factors(order);
    std::uint32_t primitive = 1;
    for (std::uint32_t c = 1; c < f.q_; ++c) {
        const auto slow_pow = [&](std::uint64_t e) {
            std::uint32_t r = 1;
            std::uint32_t b = c;
            while (e != 0) {
                if (e & 1U) r = slow_mul(r, b);
                b = slow_mul(b, b);
                e >>= 1U;
            }
            return r;
        };
        if (std::all_of(factors.begin(), factors.end(),
                        [&](std::uint64_t r) { return slow_pow(order / r) != 1; })) {
            primitive = c;
            break;
        }
    }

    f.exp_.assign(2 * static_cast<std::size_t>(order), 0);
    f.log_.assign(f.q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        f.exp_[i] = static_cast<std::uint16_t>(x);
        f.exp_[i + order] = static_cast<std::uint16_t>(x);
        f.log_[x] = i;
        x = slow_mul(x, primitive);
    }

    f.neg_.resize(f.q_);
    for (std::uint32_t a = 0; a < f.q_; ++a) {
        Dense d = to_digits(a);
        for (auto& c : d) c = (p - c) % p;
        f.neg_[a] = Fq{static_cast<std::uint16_t>(to_index(d))};
    }
    if (p != 2) {
        f.zech_.assign(order, -1);
        for (std::uint32_t n = 0; n < order; ++n) {
            const std::uint32_t s = slow_add(1, f.exp_[n]);
            if (s != 0) f.zech_[n] = static_cast<std::int32_t>(f.log_[s]);
        }
    }

    // x mod modulus
    {
        Dense xd{0, 1};
        Dense r = dense_mod(xd, m, p);
        r.resize(t, 0);
        f.generator_ = Fq{static_cast<std::uint16_t>(to_index(r))};
    }

    f.frobenius_.resize(f.q_);
    f.pth_root_.resize(f.q_);
    f.trace_.assign(f.q_, 0);
    for (std::uint32_t a = 0; a < f.q_; ++a) {
        const Fq e{static_cast<std::uint16_t>(a)};
        f.frobenius_[a] = f.pow(e, p);
        f.pth_root_[a] = f.pow(e, f.q_ / p);
        Fq sum = zero();
        Fq term = e;
        for (std::uint32_t i = 0; i < t; ++i) {
            sum = f.add(sum, term);
            term = f.pow(term, p);
        }
        if (sum.v >= p) raise(Errc::InvariantViolated, "trace left the prime field");
        f.trace_[a] = sum.v;
    }
    f.wp_preimage_.assign(f.q_, -1);
    for (std::uint32_t b = 0; b < f.q_; ++b) {
        const Fq e{static_cast<std::uint16_t>(b)};
        const Fq w = f.sub(f.frobenius_[b], e);
        if (f.wp_preimage_[w.v] < 0) f.wp_preimage_[w.v] = static_cast<std::int32_t>(b);
    }
    for (std::uint32_t a = 0; a < f.q_; ++a) {
        if (f.trace_[a] != 0) {
            f.rho_ = Fq{static_cast<std::uint16_t>(a)};
            break;
        }
    }
    return field;
}

Fq Field::from_int(std::int64_t n) const noexcept {
    const auto pp = static_cast<std::int64_t>(p_);
    return Fq{static_cast<std::uint16_t>(((n % pp) + pp) % pp)};
}

Fq Field::element(std::uint32_t index) const {
    if (index >= q_) raise(Errc::InvalidArgument, "element index out of range");
    return Fq{static_cast<std::uint16_t>(index)};
}

Fq Field::inv(Fq a) const {
    if (a.is_zero()) raise(Errc::InvalidArgument, "inverse of zero in F_q");
    const std::uint32_t order = q_ - 1;
    return Fq{exp_[(order - log_[a.v]) % order]};
}

Fq Field::pow(Fq a, std::uint64_t e) const noexcept {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    const std::uint64_t order = q_ - 1;
    return Fq{exp_[(std::uint64_t{log_[a.v]} * (e % order)) % order]};
}

std::optional<Fq> Field::wp_preimage(Fq a) const noexcept {
    const auto b = wp_preimage_[a.v];
    if (b < 0) return std::nullopt;
    return Fq{static_cast<std::uint16_t>(b)};
}

std::vector<std::uint32_t> Field::digits(Fq a) const {
    std::vector<std::uint32_t> d(t_, 0);
    std::uint32_t index = a.v;
    for (std::uint32_t i = 0; i < t_; ++i) {
        d[i] = index % p_;
        index /= p_;
    }
    return d;
}

Fq Field::from_digits(std::span<const std::uint32_t> digits) const {
    std::uint32_t index = 0;
    for (std::size_t i = digits.size(); i-- > 0;) index = index * p_ + digits[i] % p_;
    return element(index);
}

}  // namespace ascyc
