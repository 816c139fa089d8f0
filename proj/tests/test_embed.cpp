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
#include "ascyc/embed.hpp"
#include "test_support.hpp"

namespace ascyc {
namespace {

using testing::F;
using testing::P;
using testing::R;

// Trace of multiplication by s(T) on F_q[T]/(Q) with basis 1, T, ..., T^(D-1).
std::uint32_t trace_by_matrix(const RatFunc& s, const Poly& Q) {
    const Field& F = Q.field();
    const Poly x = mul_mod(s.num() % Q, inverse_mod(s.den() % Q, Q), Q);
    Fq tr = Field::zero();
    for (std::int64_t i = 0; i < Q.degree().value(); ++i) {
        const Poly col = mul_mod(x, Poly::monomial(Q.field_ptr(), Field::one(), static_cast<std::size_t>(i)), Q);
        tr = F.add(tr, col[static_cast<std::size_t>(i)]);
    }
    return F.trace(tr);
}

// Q viewed from infinity: S^D Q(1/S), made monic, must be 1 mod S^n.
bool splits_at_infinity_by_substitution(const Poly& Q, std::int64_t n) {
    const FieldPtr& f = Q.field_ptr();
    const std::int64_t D = Q.degree().value();
    const Poly S = Poly::variable(f);
    RatFunc at_inf(f);
    for (std::int64_t i = 0; i <= D; ++i) {
        at_inf += RatFunc(Poly::constant(f, Q[static_cast<std::size_t>(i)]), S.pow(static_cast<std::uint64_t>(i)));
    }
    at_inf = at_inf * RatFunc(S.pow(static_cast<std::uint64_t>(D)));
    EXPECT_TRUE(at_inf.is_polynomial());
    const Poly rev = at_inf.num().monic() - Poly::constant(f, Field::one());
    return (rev % S.pow(static_cast<std::uint64_t>(n))).is_zero();
}

TEST(Certify, Examples) {
    const auto f2 = F(2);
    {
        const auto c = certify(R(f2, "1/(T*(T+1))"));
        ASSERT_EQ(c.finite_modulus.size(), 2U);
        EXPECT_EQ(c.modulus(), P(f2, "T^2*(T+1)^2"));
        EXPECT_EQ(c.finite_modulus[0].second, 2);
        EXPECT_EQ(c.finite_modulus[1].second, 2);
        EXPECT_EQ(c.infinite_exponent, 0);
        EXPECT_EQ(c.constant_degree, 2U);
        EXPECT_FALSE(c.needs_constant_part.has_value());
        EXPECT_FALSE(c.minimal_for_cyclotomic_part);
        EXPECT_EQ(c.components.size(), 2U);
    }
    {
        const auto c = certify(R(f2, "T"));
        EXPECT_TRUE(c.finite_modulus.empty());
        EXPECT_EQ(c.infinite_exponent, 2);
        EXPECT_EQ(c.constant_degree, 2U);
        EXPECT_TRUE(c.minimal_for_cyclotomic_part);
    }
    {
        const auto c = certify(R(f2, "1/T + 1"));
        EXPECT_EQ(c.needs_constant_part, true);
        EXPECT_EQ(c.modulus(), P(f2, "T^2"));
    }
    try {
        certify(R(f2, "T^2+T"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InWpError);
    }
}

TEST(Certify, IdempotentAndMatchesRamification) {
    std::mt19937_64 rng(61);
    for (const auto& f : testing::grid_fields()) {
        for (int n = 0; n < 80; ++n) {
            const RatFunc s = testing::random_ratfunc(f, 5, rng);
            if (in_wp(s)) continue;
            const auto c = certify(s);
            const auto again = certify(c.source.value());
            EXPECT_EQ(again.finite_modulus, c.finite_modulus);
            EXPECT_EQ(again.infinite_exponent, c.infinite_exponent);
            EXPECT_EQ(again.source, c.source);
            EXPECT_EQ(c.constant_degree, f->p());
            std::size_t k = 0;
            for (const auto& t : ramification_data(c.source).terms) {
                if (std::holds_alternative<InfinitePrime>(t.place)) {
                    EXPECT_EQ(t.conductor_exponent, c.infinite_exponent);
                } else {
                    ASSERT_LT(k, c.finite_modulus.size());
                    EXPECT_EQ(std::get<PrimePoly>(t.place), c.finite_modulus[k].first);
                    EXPECT_EQ(t.conductor_exponent, c.finite_modulus[k].second);
                    ++k;
                }
            }
            EXPECT_EQ(k, c.finite_modulus.size());
        }
    }
}

TEST(TraceAtRoot, AgreesWithMatrixTrace) {
    std::mt19937_64 rng(67);
    for (const auto& f : testing::grid_fields()) {
        for (const auto& Q : monic_irreducibles(f, 3)) {
            for (int n = 0; n < 5; ++n) {
                const RatFunc s = testing::random_ratfunc(f, 4, rng);
                if (!gcd(s.den(), Q.poly()).is_one()) continue;
                EXPECT_EQ(trace_at_root(s, Q.poly()), trace_by_matrix(s, Q.poly()));
            }
        }
    }
}

TEST(SplitsAtInfinity, AgreesWithSubstitution) {
    for (const auto& f : {F(2), F(3), F(2, 2)}) {
        for (std::size_t D = 1; D <= 4; ++D) {
            for (std::uint64_t code = 0; code < monic_count(*f, D); ++code) {
                const Poly Q = monic_from_code(f, D, code);
                if (Q[0].is_zero()) continue;
                for (std::int64_t n = 1; n <= 4; ++n) {
                    EXPECT_EQ(splits_at_infinity(Q, n), splits_at_infinity_by_substitution(Q, n)) << to_string(Q) << " " << n;
                }
            }
        }
    }
}

TEST(Smoke, Examples) {
    {
        const auto r = splitting_smoke_test(certify(R(F(2), "1/T")), 4);
        EXPECT_EQ(r.violations, 0U);
        EXPECT_FALSE(r.vacuous());
        for (const auto& c : r.tested) EXPECT_EQ(c.Q.degree().value() % 2, 0);
    }
    {
        const auto r = splitting_smoke_test(certify(R(F(3), "1/T")), 6);
        EXPECT_EQ(r.violations, 0U);
        EXPECT_EQ(r.status(), "ok");
    }
    {
        const auto r = splitting_smoke_test(certify(R(F(2), "1/T^5")), 4);
        EXPECT_TRUE(r.vacuous());
        EXPECT_EQ(r.status(), "vacuous");
    }
    {
        const auto r = splitting_smoke_test(certify(R(F(2), "T^3 + 1/(T^2+T+1)")), 14);
        EXPECT_TRUE(r.infinite_conditions);
        EXPECT_EQ(r.violations, 0U);
        EXPECT_FALSE(r.vacuous());
    }
}

// Dropping any one splitting condition produces primes with nonzero trace,
// so the conditions are what keep the test honest.
TEST(Smoke, ConditionsAreNeeded) {
    const auto f2 = F(2);
    auto count_nonzero = [](const RatFunc& s, std::size_t D, auto keep) {
        int bad = 0;
        for (const auto& Q : monic_irreducibles_of_degree(s.field_ptr(), D)) {
            if (!gcd(s.den(), Q.poly()).is_one() || !keep(Q.poly())) continue;
            if (trace_at_root(s, Q.poly()) != 0) ++bad;
        }
        return bad;
    };
    // congruence mod T^2 dropped
    EXPECT_GT(count_nonzero(R(f2, "1/T"), 4, [](const Poly&) { return true; }), 0);
    // condition at infinity dropped
    EXPECT_GT(count_nonzero(R(f2, "T"), 4, [](const Poly&) { return true; }), 0);
    // only Q(0) = 1 kept at infinity, the T^(D-1) condition dropped
    EXPECT_GT(count_nonzero(R(f2, "T"), 4, [](const Poly& Q) { return Q[0] == Field::one(); }), 0);
    // degree divisible by p dropped for a constant-field piece
    EXPECT_GT(count_nonzero(R(F(2, 2), "g"), 3, [](const Poly&) { return true; }), 0);
    // with every condition imposed nothing goes wrong
    EXPECT_EQ(count_nonzero(R(f2, "T"), 4, [](const Poly& Q) { return splits_at_infinity(Q, 2); }), 0);
}

TEST(Smoke, RandomCertificates) {
    std::mt19937_64 rng(71);
    for (const auto& f : testing::grid_fields()) {
        for (int n = 0; n < 12; ++n) {
            const RatFunc s = testing::random_ratfunc(f, 2, rng);
            if (in_wp(s)) continue;
            const auto r = splitting_smoke_test(certify(s), f->q() > 3 ? 4 : 6);
            EXPECT_EQ(r.violations, 0U) << to_string(s);
        }
    }
}

}  // namespace
}  // namespace ascyc
