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

#include <gtest/gtest.h>

#include "ascyc/carlitz.hpp"
#include "ascyc/unit_group.hpp"
#include "test_support.hpp"

namespace ascyc {
namespace {

using testing::F;
using testing::P;
using testing::R;

// Value-level oracle in A = F_q[T]/(Q): phi_T(x) = T x + x^q, iterated and
// combined with the coefficients of M; no coefficient lists involved.
Poly act_by_values(const Poly& M, const Poly& x, const Poly& Q) {
    const Field& F = Q.field();
    const Poly T = Poly::variable(Q.field_ptr());
    Poly acc(Q.field_ptr()), y = x % Q;
    for (std::size_t i = 0; i < M.size(); ++i) {
        acc += y.scaled(M[i]);
        y = (mul_mod(T, y, Q) + pow_mod(y, F.q(), Q)) % Q;
    }
    return acc % Q;
}

Poly act_by_coeffs(const CarlitzOperator& op, const Poly& x, const Poly& Q) {
    const Field& F = Q.field();
    Poly acc(Q.field_ptr()), y = x % Q;
    for (const Poly& c : op.coeffs) {
        acc += mul_mod(c % Q, y, Q);
        y = pow_mod(y, F.q(), Q);
    }
    return acc % Q;
}

TEST(Carlitz, Examples) {
    const auto f2 = F(2);
    const auto one = carlitz_action(P(f2, "1"));
    ASSERT_EQ(one.coeffs.size(), 1U);
    EXPECT_TRUE(one.coeffs[0].is_one());
    const auto t = carlitz_action(P(f2, "T"));
    EXPECT_EQ(t.coeffs, (std::vector<Poly>{P(f2, "T"), P(f2, "1")}));
    const auto t2 = carlitz_action(P(f2, "T^2"));
    EXPECT_EQ(t2.coeffs, (std::vector<Poly>{P(f2, "T^2"), P(f2, "T^2+T"), P(f2, "1")}));
    EXPECT_EQ(compose(t, t), t2);
    EXPECT_EQ(torsion_degree(P(f2, "T")), 2);
    EXPECT_EQ(torsion_degree(P(f2, "T^2")), 4);
    EXPECT_EQ(torsion_degree(P(f2, "T^2+T")), 4);
    EXPECT_EQ(torsion_difference(testing::prime(f2, "T"), 2), 2);
    try {
        carlitz_action(Poly(f2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroPolynomial);
    }
}

TEST(Carlitz, ConstantsActByScalars) {
    const auto f9 = F(3, 2);
    const Fq g = f9->generator();
    const auto op = carlitz_action(Poly::constant(f9, g));
    ASSERT_EQ(op.coeffs.size(), 1U);
    EXPECT_EQ(op.coeffs[0], Poly::constant(f9, g));
}

TEST(Carlitz, Laws) {
    std::mt19937_64 rng(53);
    for (const auto& f : {F(2), F(3), F(2, 2)}) {
        const Poly Q = monic_irreducibles_of_degree(f, 5).front().poly();
        for (int n = 0; n < 60; ++n) {
            const Poly M = testing::random_nonzero_poly(f, 4, rng);
            const Poly N = testing::random_nonzero_poly(f, 4, rng);
            const auto a = carlitz_action(M), b = carlitz_action(N);
            EXPECT_EQ(compose(a, b), carlitz_action(M * N));
            EXPECT_EQ(compose(b, a), carlitz_action(M * N));
            if (!(M + N).is_zero()) EXPECT_EQ(a + b, carlitz_action(M + N));
            EXPECT_EQ(a.coeffs.front(), M);
            EXPECT_EQ(a.degree(), ipow(Integer(f->q()), static_cast<std::uint64_t>(M.degree().value())));
            const Poly x = testing::random_poly(f, 4, rng);
            EXPECT_EQ(act_by_coeffs(a, x, Q), act_by_values(M, x, Q));
        }
    }
}

TEST(Carlitz, TorsionDifferenceIsPhi) {
    for (const auto& f : testing::grid_fields()) {
        for (const auto& pr : monic_irreducibles(f, 2)) {
            for (std::int64_t beta = 1; beta <= 6; ++beta) {
                if (ipow(Integer(f->q()), pr.degree() * static_cast<std::size_t>(beta)) > 4096) break;
                EXPECT_EQ(torsion_difference(pr, beta), phi(pr, beta));
            }
        }
    }
}

TEST(Ramification, Examples) {
    const auto f2 = F(2), f3 = F(3);
    {
        const auto r = ramification_data(wp_reduce(R(f2, "1/T")).form);
        ASSERT_EQ(r.terms.size(), 1U);
        EXPECT_EQ(r.terms[0].different_exponent, 2);
        EXPECT_EQ(r.terms[0].conductor_exponent, 2);
    }
    {
        const auto r = ramification_data(wp_reduce(R(f2, "T")).form);
        ASSERT_EQ(r.terms.size(), 1U);
        EXPECT_TRUE(std::holds_alternative<InfinitePrime>(r.terms[0].place));
        EXPECT_EQ(r.terms[0].conductor_exponent, 2);
    }
    {
        const auto r = ramification_data(wp_reduce(R(f3, "1/T^2")).form);
        ASSERT_EQ(r.terms.size(), 1U);
        EXPECT_EQ(r.terms[0].conductor_exponent, 3);
        EXPECT_EQ(r.terms[0].different_exponent, 6);
    }
    EXPECT_TRUE(ramification_data(wp_reduce(R(f2, "1")).form).terms.empty());
    try {
        ramification_data(wp_reduce(R(f2, "T^2+T")).form);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegenerateInput);
    }
}

TEST(Ramification, ConductorDiscriminant) {
    std::mt19937_64 rng(59);
    for (const auto& f : testing::grid_fields()) {
        for (int n = 0; n < 50; ++n) {
            const auto nf = wp_reduce(testing::random_ratfunc(f, 5, rng)).form;
            if (nf.is_zero()) continue;
            for (const auto& t : ramification_data(nf).terms) {
                EXPECT_NE(t.alpha % f->p(), 0);
                EXPECT_EQ(t.different_exponent, (f->p() - 1) * t.conductor_exponent);
            }
        }
    }
}

}  // namespace
}  // namespace ascyc
