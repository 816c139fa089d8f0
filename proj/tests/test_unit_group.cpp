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

#include "ascyc/unit_group.hpp"
#include "test_support.hpp"

namespace ascyc {
namespace {

using testing::F;
using testing::P;
using testing::prime;

// order by repeated multiplication, independent of the factor-stripping path
std::uint64_t naive_order(const Poly& a, const Poly& mod) {
    Poly x = a % mod;
    std::uint64_t n = 1;
    while (!x.is_one()) {
        x = mul_mod(x, a, mod);
        ++n;
    }
    return n;
}

TEST(Residue, MulExamples) {
    const auto f2 = F(2);
    const Residue a(prime(f2, "T"), 3, P(f2, "1+T"));
    EXPECT_EQ(residue_mul(a, a).rep(), P(f2, "1+T^2"));
    EXPECT_EQ(residue_mul(a, Residue::one(prime(f2, "T"), 3)), a);
    const Residue b(prime(f2, "T"), 2, P(f2, "1+T"));
    EXPECT_TRUE(residue_mul(b, b).is_one());
    try {
        residue_mul(a, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ModulusMismatch);
    }
}

TEST(ElementOrder, Examples) {
    const auto f2 = F(2);
    const auto T = prime(f2, "T");
    EXPECT_EQ(element_order(Residue::one(T, 3)), 1);
    EXPECT_EQ(element_order(Residue(T, 3, P(f2, "1+T"))), 4);
    EXPECT_EQ(element_order(Residue(T, 3, P(f2, "1+T^2"))), 2);
    try {
        element_order(Residue(T, 3, P(f2, "T^2")));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotAUnit);
    }
}

TEST(ElementOrder, AgreesWithNaiveOrder) {
    for (const auto& f : testing::grid_fields()) {
        for (const auto& pr : monic_irreducibles(f, 2)) {
            for (std::int64_t beta = 1; beta <= 3; ++beta) {
                const auto n = pr.degree() * static_cast<std::size_t>(beta);
                if (monic_count(*f, n) > 729) continue;
                const Poly mod = pr.poly().pow(static_cast<std::uint64_t>(beta));
                for (std::uint64_t code = 0; code < monic_count(*f, n); ++code) {
                    const Poly a = poly_from_code(f, n, code);
                    if ((a % pr.poly()).is_zero()) continue;
                    EXPECT_EQ(element_order(Residue(pr, beta, a)), naive_order(a, mod));
                }
            }
        }
    }
}

TEST(Counts, Examples) {
    const auto f2 = F(2), f3 = F(3);
    EXPECT_EQ(phi(prime(f2, "T"), 1), 1);
    EXPECT_EQ(phi(prime(f2, "T"), 2), 2);
    EXPECT_EQ(phi(prime(f3, "T^2+1"), 1), 8);

    EXPECT_EQ(count_order_p(prime(f2, "T"), 1), 0);
    EXPECT_EQ(count_order_p(prime(f2, "T"), 2), 1);
    EXPECT_EQ(count_order_p(prime(f2, "T"), 3), 1);
    EXPECT_EQ(count_order_p(prime(f2, "T"), 5), 3);

    EXPECT_EQ(count_order_p_bruteforce(prime(f2, "T"), 2, 1 << 16), 1);
    EXPECT_EQ(count_order_p_bruteforce(prime(f2, "T"), 3, 1 << 16), 1);
    EXPECT_EQ(count_order_p_bruteforce(prime(f2, "T"), 5, 1 << 16), 3);
    EXPECT_EQ(count_order_p_bruteforce(prime(f3, "T"), 2, 1 << 16), 2);
    const auto s = scan_units(prime(F(2, 2), "T^2+T+g"), 1, 1 << 16);
    EXPECT_EQ(s.units, 15U);
    const auto s2 = scan_units(prime(f2, "T^2+T+1"), 2, 1 << 16);
    EXPECT_EQ(s2.units, 12U);
    EXPECT_EQ(s2.order_p, 3U);

    EXPECT_EQ(n_beta(prime(f2, "T"), 1), 0);
    EXPECT_EQ(n_beta(prime(f2, "T"), 2), 1);
    EXPECT_EQ(n_beta(prime(f2, "T"), 5), 3);
    EXPECT_EQ(n_beta(prime(f3, "T"), 2), 1);

    EXPECT_EQ(n_beta_difference(prime(f2, "T"), 1), 1);
    EXPECT_EQ(n_beta_difference(prime(f2, "T"), 3), 2);
    EXPECT_EQ(n_beta_difference(prime(f3, "T"), 1), 1);
    try {
        n_beta_difference(prime(f3, "T"), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidAlpha);
    }
    try {
        scan_units(prime(f2, "T"), 17, 1 << 16);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BudgetExceeded);
    }
}

TEST(Counts, ScanMatchesFormulasOnSmallModuli) {
    for (const auto& f : testing::grid_fields()) {
        for (const auto& pr : monic_irreducibles(f, 2)) {
            for (std::int64_t beta = 1; beta <= 6; ++beta) {
                if (ipow(Integer(f->q()), pr.degree() * static_cast<std::size_t>(beta)) > 4096) continue;
                const auto s = scan_units(pr, beta, 4096, true);
                const Integer r = ipow(Integer(f->q()), pr.degree());
                EXPECT_EQ(s.units, phi(pr, beta));
                EXPECT_EQ(s.one_units, ipow(r, static_cast<std::uint64_t>(beta - 1)));
                EXPECT_EQ(s.units, s.one_units * (r - 1));
                EXPECT_TRUE(s.lagrange);
                EXPECT_EQ(s.order_p, count_order_p(pr, beta));
                EXPECT_EQ(s.subgroups, n_beta(pr, beta));
            }
        }
    }
}

TEST(Counts, GeometricGrowth) {
    for (const auto& f : testing::grid_fields()) {
        for (const auto& pr : monic_irreducibles(f, 2)) {
            for (std::int64_t a = 1; a < 7; ++a) {
                EXPECT_EQ(phi(pr, a + 1), ipow(Integer(f->q()), pr.degree()) * phi(pr, a));
            }
        }
    }
}

}  // namespace
}  // namespace ascyc
