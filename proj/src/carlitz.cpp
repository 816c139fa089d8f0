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

#include "ascyc/carlitz.hpp"

#include <algorithm>

#include "ascyc/error.hpp"
#include "ascyc/unit_group.hpp"

namespace ascyc {

namespace {

void trim(std::vector<Poly>& c) {
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
}

}  // namespace

Integer CarlitzOperator::degree() const {
    std::size_t top = coeffs.size();
    while (top > 0 && coeffs[top - 1].is_zero()) --top;
    if (top == 0) raise(Errc::ZeroPolynomial, "the zero operator has no degree");
    return ipow(Integer(M.field().q()), top - 1);
}

CarlitzOperator carlitz_action(const Poly& M) {
    if (M.is_zero()) raise(Errc::ZeroPolynomial, "carlitz_action of the zero polynomial");
    const FieldPtr& F = M.field_ptr();
    const std::size_t q = F->q();
    const Poly T = Poly::variable(F);
    const std::size_t n = static_cast<std::size_t>(M.degree().value());
    // Horner: X <- [T] o X + [m_i], where ([T] o X)_j = T X_j + X_(j-1)^q
    std::vector<Poly> X{Poly::constant(F, M[n])};
    for (std::size_t i = n; i-- > 0;) {
        std::vector<Poly> next(X.size() + 1, Poly(F));
        for (std::size_t j = 0; j < X.size(); ++j) {
            next[j] += T * X[j];
            next[j + 1] += X[j].spread(q);
        }
        next[0] += Poly::constant(F, M[i]);
        X = std::move(next);
    }
    return {M, std::move(X)};
}

CarlitzOperator compose(const CarlitzOperator& a, const CarlitzOperator& b) {
    require_same_field(a.M.field(), b.M.field());
    const FieldPtr& F = a.M.field_ptr();
    const std::size_t q = F->q();
    std::vector<Poly> c(a.coeffs.size() + b.coeffs.size() - 1, Poly(F));
    std::size_t qi = 1;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i, qi *= q) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j].spread(qi);
    }
    trim(c);
    return {a.M * b.M, std::move(c)};
}

CarlitzOperator operator+(const CarlitzOperator& a, const CarlitzOperator& b) {
    require_same_field(a.M.field(), b.M.field());
    std::vector<Poly> c(std::max(a.coeffs.size(), b.coeffs.size()), Poly(a.M.field_ptr()));
    for (std::size_t j = 0; j < a.coeffs.size(); ++j) c[j] += a.coeffs[j];
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[j] += b.coeffs[j];
    trim(c);
    return {a.M + b.M, std::move(c)};
}

Integer torsion_degree(const Poly& M) {
    const CarlitzOperator op = carlitz_action(M);
    const Integer deg = op.degree();
    if (deg != ipow(Integer(M.field().q()), static_cast<std::uint64_t>(M.degree().value()))) {
        raise(Errc::InvariantViolated, "deg_u [M] differs from q^(deg M)");
    }
    return deg;
}

Integer torsion_difference(const PrimePoly& prime, std::int64_t beta) {
    if (beta < 1) raise(Errc::InvalidArgument, "beta must be positive");
    const Integer diff = torsion_degree(prime.poly().pow(static_cast<std::uint64_t>(beta))) -
                         torsion_degree(prime.poly().pow(static_cast<std::uint64_t>(beta - 1)));
    if (diff != phi(prime, beta)) raise(Errc::InvariantViolated, "torsion count differs from Phi(P^beta)");
    return diff;
}

RamificationData ramification_data(const NormalForm& nf) {
    if (nf.is_zero()) raise(Errc::DegenerateInput, "the zero form defines no extension");
    const auto p = static_cast<std::int64_t>(nf.field->p());
    RamificationData out;
    auto add = [&](Place place, std::int64_t alpha) {
        out.terms.push_back({std::move(place), alpha, (alpha + 1) * (p - 1), alpha + 1});
    };
    for (const auto& t : nf.terms) add(t.prime, t.exponent);
    if (!nf.polypart.is_zero()) add(InfinitePrime{}, nf.polypart.degree().value());
    return out;
}

}  // namespace ascyc
