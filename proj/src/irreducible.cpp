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

#include "ascyc/irreducible.hpp"

#include <algorithm>
#include <map>

namespace ascyc {

PrimePoly::PrimePoly(Poly f) : poly_(std::move(f)) {
    if (!poly_.is_monic() || !is_irreducible(poly_)) {
        raise(Errc::NotIrreducible, "expected a monic irreducible polynomial");
    }
}

PrimePoly PrimePoly::trusted(Poly f) { return PrimePoly(std::move(f), Trusted{}); }

namespace {

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
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

bool is_irreducible(const Poly& f) {
    if (f.is_zero()) raise(Errc::ZeroPolynomial, "irreducibility of the zero polynomial");
    const auto n = static_cast<std::uint64_t>(f.degree().value());
    if (n == 0) return false;
    if (n == 1) return true;
    const Poly g = f.monic();
    const FieldPtr& F = g.field_ptr();
    const Poly x = Poly::variable(F);
    const std::uint64_t q = F->q();

    // frob[k] = T^(q^k) mod g
    std::vector<Poly> frob{x % g};
    for (std::uint64_t k = 1; k <= n; ++k) frob.push_back(pow_mod(frob.back(), q, g));
    if (frob[n] != x % g) return false;
    for (const auto r : distinct_prime_factors(n)) {
        if (!gcd(frob[n / r] - x, g).is_one()) return false;
    }
    return true;
}

IrreducibleStream::IrreducibleStream(FieldPtr field, std::size_t d_max)
    : field_(std::move(field)), d_max_(d_max) {
    code_end_ = monic_count(*field_, 1);
}

IrreducibleStream IrreducibleStream::range(FieldPtr field, std::size_t degree, std::uint64_t code_begin,
                                           std::uint64_t code_end) {
    IrreducibleStream s(std::move(field), degree);
    s.degree_ = degree;
    s.code_ = code_begin;
    s.code_end_ = std::min(code_end, monic_count(*s.field_, degree));
    s.single_degree_ = true;
    return s;
}

std::optional<PrimePoly> IrreducibleStream::next() {
    while (degree_ <= d_max_) {
        while (code_ < code_end_) {
            Poly f = monic_from_code(field_, degree_, code_++);
            if (is_irreducible(f)) return PrimePoly::trusted(std::move(f));
        }
        if (single_degree_) return std::nullopt;
        ++degree_;
        code_ = 0;
        if (degree_ <= d_max_) code_end_ = monic_count(*field_, degree_);
    }
    return std::nullopt;
}

std::vector<PrimePoly> monic_irreducibles(const FieldPtr& field, std::size_t d_max) {
    std::vector<PrimePoly> out;
    IrreducibleStream s(field, d_max);
    while (auto P = s.next()) out.push_back(std::move(*P));
    return out;
}

std::vector<PrimePoly> monic_irreducibles_of_degree(const FieldPtr& field, std::size_t degree) {
    std::vector<PrimePoly> out;
    auto s = IrreducibleStream::range(field, degree, 0, monic_count(*field, degree));
    while (auto P = s.next()) out.push_back(std::move(*P));
    return out;
}

Poly derivative(const Poly& f) {
    const Field& F = f.field();
    std::vector<Fq> out(f.size() > 0 ? f.size() - 1 : 0);
    for (std::size_t i = 1; i < f.size(); ++i) {
        out[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i % F.p())), f[i]);
    }
    return Poly(f.field_ptr(), std::move(out));
}

namespace {

// f(T) = g(T)^p for a polynomial with f' = 0; returns g.
Poly poly_pth_root(const Poly& f) {
    const Field& F = f.field();
    const std::size_t p = F.p();
    std::vector<Fq> out(f.size() / p + 1);
    for (std::size_t i = 0; i < f.size(); i += p) out[i / p] = F.pth_root(f[i]);
    return Poly(f.field_ptr(), std::move(out));
}

// Squarefree parts: f = prod_i part_i^mult_i with part_i squarefree and pairwise coprime.
void squarefree(const Poly& f, std::int64_t scale, std::vector<std::pair<Poly, std::int64_t>>& out) {
    if (f.is_constant()) return;
    Poly c = gcd(f, derivative(f));
    Poly w = f / c;
    std::int64_t i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (!fac.is_one()) out.emplace_back(fac.monic(), i * scale);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_constant()) squarefree(poly_pth_root(c.monic()), scale * static_cast<std::int64_t>(f.field().p()), out);
}

// Nullspace of an n x n matrix over F_q, as row vectors.
std::vector<std::vector<Fq>> nullspace(std::vector<std::vector<Fq>> m, const Field& F) {
    const std::size_t n = m.size();
    std::vector<std::ptrdiff_t> pivot_col_of_row;
    std::vector<bool> is_pivot(n, false);
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row_for_col(n, n);
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) continue;
        std::swap(m[sel], m[row]);
        const Fq inv = F.inv(m[row][col]);
        for (auto& x : m[row]) x = F.mul(x, inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const Fq factor = m[r][col];
            for (std::size_t k = 0; k < n; ++k) m[r][k] = F.sub(m[r][k], F.mul(factor, m[row][k]));
        }
        is_pivot[col] = true;
        pivot_row_for_col[col] = row;
        ++row;
    }
    std::vector<std::vector<Fq>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Fq> v(n);
        v[free] = Field::one();
        for (std::size_t col = 0; col < n; ++col) {
            if (is_pivot[col]) v[col] = F.neg(m[pivot_row_for_col[col]][free]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Splits a monic squarefree polynomial into its monic irreducible factors.
std::vector<Poly> berlekamp(const Poly& g) {
    const FieldPtr& Fp = g.field_ptr();
    const Field& F = *Fp;
    const auto n = static_cast<std::size_t>(g.degree().value());
    if (n <= 1) return {g};

    const Poly xq = pow_mod(Poly::variable(Fp), std::uint64_t{F.q()}, g);
    // rows[i] = T^(q i) mod g; v^q = sum v_i rows[i] for v with F_q coefficients.
    std::vector<std::vector<Fq>> mt(n, std::vector<Fq>(n));
    Poly row = Poly::constant(Fp, Field::one());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Fq entry = row[j];
            if (i == j) entry = F.sub(entry, Field::one());
            mt[j][i] = entry;  // transpose: solve (B - I)^T v = 0
        }
        row = mul_mod(row, xq, g);
    }
    const auto kernel = nullspace(std::move(mt), F);
    const std::size_t k = kernel.size();
    if (k == 1) return {g};

    std::vector<Poly> parts{g};
    for (const auto& vec : kernel) {
        const Poly v(Fp, vec);
        if (v.is_constant()) continue;
        for (std::uint32_t basis = 0; basis < F.t(); ++basis) {
            std::uint32_t index = 1;
            for (std::uint32_t i = 0; i < basis; ++i) index *= F.p();
            const Poly lv = v.scaled(F.element(index));
            Poly w = lv % g;
            Poly term = w;
            for (std::uint32_t i = 1; i < F.t(); ++i) {
                term = term.frobenius() % g;
                w += term;
            }
            std::vector<Poly> next;
            for (const Poly& h : parts) {
                if (h.degree() == 1) {
                    next.push_back(h);
                    continue;
                }
                const Poly wh = w % h;
                Poly rest = h;
                for (std::uint32_t c = 0; c < F.p() && !rest.is_one(); ++c) {
                    Poly d = gcd(rest, wh - Poly::constant(Fp, F.from_int(c)));
                    if (d.is_one()) continue;
                    next.push_back(d);
                    rest = rest / d;
                }
                if (!rest.is_one()) next.push_back(rest.monic());
            }
            parts = std::move(next);
            if (parts.size() == k) return parts;
        }
    }
    if (parts.size() != k) raise(Errc::InvariantViolated, "Berlekamp splitting did not separate all factors");
    return parts;
}

}  // namespace

Factorization factor(const Poly& f) {
    if (f.is_zero()) raise(Errc::ZeroPolynomial, "factorization of the zero polynomial");
    Factorization out{f.leading(), {}};
    std::vector<std::pair<Poly, std::int64_t>> parts;
    squarefree(f.monic(), 1, parts);
    std::map<Poly, std::int64_t> merged;
    for (const auto& [part, mult] : parts) {
        for (Poly& prime : berlekamp(part)) merged[prime.monic()] += mult;
    }
    for (auto& [prime, mult] : merged) out.factors.emplace_back(PrimePoly::trusted(prime), mult);
    return out;
}

}  // namespace ascyc
