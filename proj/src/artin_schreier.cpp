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

#include "ascyc/artin_schreier.hpp"

#include <algorithm>

namespace ascyc {

RatFunc NormalForm::value() const {
    RatFunc sum(polypart + Poly::constant(field, constant));
    for (const auto& term : terms) {
        sum += RatFunc(term.numerator, term.prime.poly().pow(static_cast<std::uint64_t>(term.exponent)));
    }
    return sum;
}

NormalForm NormalForm::scaled(std::uint32_t j) const {
    const Fq c = field->from_int(j);
    NormalForm out(field);
    if (c.is_zero()) return out;
    out.constant = field->mul(constant, c);
    out.polypart = polypart.scaled(c);
    out.terms = terms;
    for (auto& term : out.terms) term.numerator = term.numerator.scaled(c);
    return out;
}

bool operator==(const NormalForm& a, const NormalForm& b) {
    if (a.constant != b.constant || a.polypart != b.polypart || a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const auto& x = a.terms[i];
        const auto& y = b.terms[i];
        if (x.prime != y.prime || x.exponent != y.exponent || x.numerator != y.numerator) return false;
    }
    return true;
}

Poly residue_pth_root(const Poly& u, const Poly& prime) {
    const Field& F = u.field();
    // Frobenius has order t*d on F_q[T]/(P); its (t*d - 1)-th power inverts it.
    const auto steps = static_cast<std::uint64_t>(F.t()) * static_cast<std::uint64_t>(prime.degree().value()) - 1;
    Poly b = u % prime;
    for (std::uint64_t i = 0; i < steps; ++i) b = b.frobenius() % prime;
    return b;
}

namespace {

// Kills every P-adic digit of f / P^m sitting at a pole order divisible by p,
// highest order first. Returns the reduced term (if any survives) and adds
// the accumulated witness.
std::optional<PoleTerm> reduce_pole(const PoleTerm& term, RatFunc& witness) {
    const Poly& P = term.prime.poly();
    const FieldPtr& F = P.field_ptr();
    const auto p = static_cast<std::int64_t>(F->p());
    const std::int64_t m = term.exponent;
    const auto raw = padic_digits(term.numerator, P, static_cast<std::size_t>(m));
    // by_order[o] is the digit multiplying P^(-o), o = 1..m
    std::vector<Poly> by_order(static_cast<std::size_t>(m) + 1, Poly(F));
    for (std::int64_t k = 0; k < m; ++k) by_order[static_cast<std::size_t>(m - k)] = raw[static_cast<std::size_t>(k)];

    for (std::int64_t o = m - m % p; o >= p; o -= p) {
        const Poly& digit = by_order[static_cast<std::size_t>(o)];
        if (digit.is_zero()) continue;
        const Poly b = residue_pth_root(digit, P);
        // wp(b / P^(o/p)) = b^p / P^o - b / P^(o/p)
        const auto bp = padic_digits(b.frobenius(), P, static_cast<std::size_t>(p));
        for (std::int64_t k = 0; k < p; ++k) {
            auto& slot = by_order[static_cast<std::size_t>(o - k)];
            slot = (slot - bp[static_cast<std::size_t>(k)]) % P;
        }
        auto& low = by_order[static_cast<std::size_t>(o / p)];
        low = (low + b) % P;
        witness += RatFunc(b, P.pow(static_cast<std::uint64_t>(o / p)));
    }

    std::int64_t top = m;
    while (top > 0 && by_order[static_cast<std::size_t>(top)].is_zero()) --top;
    if (top == 0) return std::nullopt;
    Poly f(F);
    for (std::int64_t o = 1; o <= top; ++o) f = f * P + by_order[static_cast<std::size_t>(o)];
    return PoleTerm{term.prime, top, std::move(f)};
}

}  // namespace

Reduction wp_reduce(const RatFunc& s) {
    const FieldPtr& Fp = s.field_ptr();
    const Field& F = *Fp;
    const std::size_t p = F.p();
    Reduction out{NormalForm(Fp), RatFunc(Fp)};
    const PartialFractions pf = partial_fractions(s);

    for (const auto& term : pf.terms) {
        if (auto reduced = reduce_pole(term, out.witness)) out.form.terms.push_back(std::move(*reduced));
    }

    std::vector<Fq> h(pf.polypart.coeffs().begin(), pf.polypart.coeffs().end());
    if (h.empty()) h.resize(1);
    for (std::size_t k = h.size() - 1; k >= p; --k) {
        if (k % p != 0 || h[k].is_zero()) continue;
        // wp(c T^(k/p)) = c^p T^k - c T^(k/p) with c^p = h[k]
        const Fq c = F.pth_root(h[k]);
        h[k] = Fq{};
        h[k / p] = F.add(h[k / p], c);
        out.witness += RatFunc(Poly::monomial(Fp, c, k / p));
    }

    const Fq a = h[0];
    h[0] = Fq{};
    const Fq rho = F.rho();
    const Fq ratio = F.div(F.from_int(F.trace(a)), F.from_int(F.trace(rho)));
    out.form.constant = F.mul(ratio, rho);
    const auto b = F.wp_preimage(F.sub(a, out.form.constant));
    if (!b) raise(Errc::InvariantViolated, "constant left a nonzero trace after folding");
    out.witness += RatFunc(Poly::constant(Fp, *b));
    out.form.polypart = Poly(Fp, std::move(h));
    return out;
}

bool in_wp(const RatFunc& s) { return wp_reduce(s).form.is_zero(); }

std::optional<Equivalence> find_equivalence(const NormalForm& nf1, const NormalForm& nf2) {
    require_same_field(*nf1.field, *nf2.field);
    if (nf1.is_zero() || nf2.is_zero()) {
        raise(Errc::DegenerateInput, "an element of wp(K) defines no degree-p extension");
    }
    const RatFunc v1 = nf1.value();
    const RatFunc v2 = nf2.value();
    for (std::uint32_t j = 1; j < nf1.field->p(); ++j) {
        Reduction r = wp_reduce(v2 - v1.scaled(nf1.field->from_int(j)));
        if (r.form.is_zero()) return Equivalence{j, std::move(r.witness)};
    }
    return std::nullopt;
}

std::optional<std::uint32_t> is_equivalent(const NormalForm& nf1, const NormalForm& nf2) {
    if (auto e = find_equivalence(nf1, nf2)) return e->j;
    return std::nullopt;
}

std::int64_t checked_alpha0(std::int64_t alpha, std::uint32_t p) {
    if (alpha < 1 || alpha % static_cast<std::int64_t>(p) == 0) {
        raise(Errc::InvalidAlpha, "alpha = " + std::to_string(alpha) + " must be positive and prime to p = " +
                                      std::to_string(p));
    }
    return alpha / static_cast<std::int64_t>(p);
}

GeneratorData equivalent_generator_data(const PrimePoly& prime, std::int64_t alpha) {
    const Field& F = prime.poly().field();
    const std::int64_t alpha0 = checked_alpha0(alpha, F.p());
    const auto d = static_cast<std::int64_t>(prime.degree());
    GeneratorData out;
    out.count_z = Integer(F.p() - 1) * ipow(Integer(F.q()), static_cast<std::uint64_t>(d * alpha0 + 1));
    out.count_eq = out.count_z / F.p();
    return out;
}

TwistFamily twist_family(const NormalForm& base, Fq rho) {
    if (base.terms.size() != 1 || !base.polypart.is_zero() || !base.constant.is_zero()) {
        raise(Errc::NotSingleTerm, "twists need a single pole term with no constant or polynomial part");
    }
    const Field& F = *base.field;
    if (F.trace(rho) == 0) raise(Errc::RhoInWp, "rho has zero absolute trace");
    const auto& term = base.terms.front();
    const Poly Palpha = term.prime.poly().pow(static_cast<std::uint64_t>(term.exponent));
    TwistFamily out{base, rho, {}, {}};
    for (std::uint32_t i = 0; i < F.p(); ++i) {
        Poly g = term.numerator + Palpha.scaled(F.mul(F.from_int(i), rho));
        out.members.emplace_back(g, Palpha);
        out.numerators.push_back(std::move(g));
    }
    return out;
}

}  // namespace ascyc
