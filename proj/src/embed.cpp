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

#include "ascyc/embed.hpp"

#include "ascyc/error.hpp"
#include "ascyc/irreducible.hpp"

namespace ascyc {

Poly EmbeddingCertificate::modulus() const {
    Poly m = Poly::constant(field, Field::one());
    for (const auto& [P, e] : finite_modulus) m *= P.poly().pow(static_cast<std::uint64_t>(e));
    return m;
}

EmbeddingCertificate certify(const RatFunc& s) {
    const NormalForm nf = wp_reduce(s).form;
    if (nf.is_zero()) raise(Errc::InWpError, "s lies in wp(K) and defines no extension");
    EmbeddingCertificate cert{s.field_ptr(), {}, 0, s.field().p(), nf, {}, std::nullopt, false};
    for (const auto& t : nf.terms) {
        cert.finite_modulus.emplace_back(t.prime, t.exponent + 1);
        NormalForm piece(nf.field);
        piece.terms.push_back(t);
        cert.components.push_back(std::move(piece));
    }
    if (!nf.polypart.is_zero()) {
        cert.infinite_exponent = nf.polypart.degree().value() + 1;
        NormalForm piece(nf.field);
        piece.polypart = nf.polypart;
        cert.components.push_back(std::move(piece));
    }
    if (!nf.constant.is_zero()) {
        cert.needs_constant_part = true;
        NormalForm piece(nf.field);
        piece.constant = nf.constant;
        cert.components.push_back(std::move(piece));
    }
    cert.minimal_for_cyclotomic_part = cert.components.size() == 1 && nf.constant.is_zero();
    return cert;
}

std::string SmokeReport::status() const {
    if (violations > 0) return "violations";
    return vacuous() ? "vacuous" : "ok";
}

std::uint32_t trace_at_root(const RatFunc& s, const Poly& Q) {
    const Field& F = Q.field();
    const Poly x = mul_mod(s.num() % Q, inverse_mod(s.den() % Q, Q), Q);
    // Tr to F_q is the sum of the q-power conjugates
    Poly acc(Q.field_ptr()), y = x;
    for (std::int64_t i = 0; i < Q.degree().value(); ++i) {
        acc += y;
        y = pow_mod(y, F.q(), Q);
    }
    acc = acc % Q;
    if (!acc.is_constant()) raise(Errc::InvariantViolated, "trace to F_q is not a constant");
    return F.trace(acc[0]);
}

bool splits_at_infinity(const Poly& Q, std::int64_t n) {
    if (n <= 0) return true;
    const std::int64_t D = Q.degree().value();
    if (Q[0] != Field::one()) return false;
    for (std::int64_t k = 1; k < n; ++k) {
        if (D - k < 0) break;
        if (!Q[static_cast<std::size_t>(D - k)].is_zero()) return false;
    }
    return true;
}

SmokeReport splitting_smoke_test(const EmbeddingCertificate& cert, std::int64_t degree_bound) {
    if (degree_bound < 1) raise(Errc::InvalidArgument, "degree_bound must be positive");
    const FieldPtr& F = cert.field;
    const auto p = static_cast<std::int64_t>(F->p());
    const Poly M = cert.modulus();
    const std::int64_t m = M.degree().value();
    const Poly one = Poly::constant(F, Field::one());
    const RatFunc s = cert.source.value();

    SmokeReport report;
    report.infinite_conditions = cert.infinite_exponent > 0;
    for (std::int64_t D = p; D <= degree_bound; D += p) {
        if (D < m || (D == m && m > 0)) continue;  // Q = 1 + M k needs deg k >= 0 and Q != 1
        const auto kdeg = static_cast<std::size_t>(D - m);
        for (std::uint64_t code = 0; code < monic_count(*F, kdeg); ++code) {
            const Poly Q = one + M * monic_from_code(F, kdeg, code);
            ++report.candidates;
            if (!splits_at_infinity(Q, cert.infinite_exponent) || !is_irreducible(Q)) continue;
            if (!s.den().is_zero() && !gcd(s.den(), Q).is_one()) continue;
            const std::uint32_t tr = trace_at_root(s, Q);
            if (tr != 0) ++report.violations;
            report.tested.push_back({Q, tr});
        }
    }
    return report;
}

}  // namespace ascyc
