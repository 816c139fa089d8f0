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

#include <set>

#include "ascyc/artin_schreier.hpp"
#include "test_support.hpp"

namespace ascyc {
namespace {

using testing::F;
using testing::P;
using testing::R;

NormalForm nf_of(const FieldPtr& f, const char* text) { return wp_reduce(R(f, text)).form; }

void expect_canonical(const NormalForm& nf) {
    const auto p = static_cast<std::int64_t>(nf.field->p());
    const Field& F = *nf.field;
    EXPECT_EQ(F.mul(F.from_int(F.trace(nf.constant)), F.inv(F.from_int(F.trace(F.rho())))),
              nf.constant.is_zero() ? Field::zero() : F.div(nf.constant, F.rho()));
    EXPECT_TRUE(nf.polypart[0].is_zero());
    if (!nf.polypart.is_zero()) {
        EXPECT_NE(nf.polypart.degree().value() % p, 0);
        for (std::size_t k = static_cast<std::size_t>(p); k < nf.polypart.size(); k += static_cast<std::size_t>(p)) {
            EXPECT_TRUE(nf.polypart[k].is_zero());
        }
    }
    for (std::size_t i = 0; i < nf.terms.size(); ++i) {
        const auto& t = nf.terms[i];
        EXPECT_NE(t.exponent % p, 0);
        EXPECT_FALSE(t.numerator.is_zero());
        EXPECT_TRUE(gcd(t.numerator, t.prime.poly()).is_one());
        EXPECT_LT(t.numerator.degree(), Degree(t.exponent * static_cast<std::int64_t>(t.prime.degree())));
        const auto digits = padic_digits(t.numerator, t.prime.poly(), static_cast<std::size_t>(t.exponent));
        for (std::int64_t k = 0; k < t.exponent; ++k) {
            if ((t.exponent - k) % p == 0) EXPECT_TRUE(digits[static_cast<std::size_t>(k)].is_zero());
        }
        if (i > 0) EXPECT_LT(nf.terms[i - 1].prime, t.prime);
    }
}

TEST(WpReduce, Examples) {
    const auto f2 = F(2);
    {
        const auto [nf, w] = wp_reduce(R(f2, "1/T^2"));
        ASSERT_EQ(nf.terms.size(), 1U);
        EXPECT_EQ(nf.terms[0].prime.poly(), P(f2, "T"));
        EXPECT_EQ(nf.terms[0].exponent, 1);
        EXPECT_EQ(nf.terms[0].numerator, P(f2, "1"));
        EXPECT_TRUE(nf.constant.is_zero());
        EXPECT_TRUE(nf.polypart.is_zero());
        EXPECT_EQ(w, R(f2, "1/T"));
        // 1/T^2 - 1/T = c^2 - c at c = 1/T
        EXPECT_EQ(R(f2, "1/T^2") - R(f2, "1/T"), w.wp());
    }
    {
        const auto [nf, w] = wp_reduce(R(f2, "T^2+T"));
        EXPECT_TRUE(nf.is_zero());
        EXPECT_EQ(w, R(f2, "T"));
    }
    {
        const auto [nf, w] = wp_reduce(R(f2, "1"));
        EXPECT_EQ(nf.constant, Field::one());
        EXPECT_TRUE(nf.terms.empty());
        EXPECT_TRUE(w.is_zero());
    }
}

TEST(WpReduce, KillsInteriorDigitsToo) {
    // 1/T^3 + 1/T^2 over F_2: the order-2 digit is removed via wp(1/T)
    const auto f2 = F(2);
    const auto [nf, w] = wp_reduce(R(f2, "1/T^3 + 1/T^2"));
    EXPECT_EQ(nf.value(), R(f2, "1/T^3 + 1/T"));
    EXPECT_EQ(nf.value() + w.wp(), R(f2, "1/T^3 + 1/T^2"));
}

TEST(InWp, Examples) {
    const auto f2 = F(2);
    EXPECT_TRUE(in_wp(RatFunc(f2)));
    EXPECT_FALSE(in_wp(R(f2, "1/T")));
    EXPECT_TRUE(in_wp(R(f2, "T^2+T")));

    // exhaustive oracle over F_4: is there b with b^2 - b = g?
    const auto f4 = F(2, 2);
    bool found = false;
    for (std::uint32_t i = 0; i < f4->q(); ++i) {
        const Fq b = f4->element(i);
        found = found || f4->sub(f4->mul(b, b), b) == f4->generator();
    }
    EXPECT_FALSE(found);
    EXPECT_FALSE(in_wp(R(f4, "g")));
    EXPECT_TRUE(in_wp(R(f4, "1")));  // Tr(1) = 0 in F_4 / F_2
}

TEST(WpReduce, SoundIdempotentCanonical) {
    std::mt19937_64 rng(31);
    for (const auto& f : testing::grid_fields()) {
        for (int n = 0; n < 200; ++n) {
            const RatFunc s = testing::random_ratfunc(f, 6, rng);
            const auto [nf, w] = wp_reduce(s);
            EXPECT_EQ(s - nf.value(), w.wp()) << to_string(s);
            expect_canonical(nf);
            const auto again = wp_reduce(nf.value());
            EXPECT_EQ(again.form, nf);
            EXPECT_TRUE(again.witness.is_zero());
        }
    }
}

TEST(WpReduce, ClassInvariantUnderWp) {
    // s and s + wp(b) reduce to the same form; the map is F_p-linear
    std::mt19937_64 rng(37);
    for (const auto& f : testing::grid_fields()) {
        for (int n = 0; n < 60; ++n) {
            const RatFunc s = testing::random_ratfunc(f, 4, rng);
            const RatFunc b = testing::random_ratfunc(f, 3, rng);
            EXPECT_EQ(wp_reduce(s + b.wp()).form, wp_reduce(s).form);
            const RatFunc s2 = testing::random_ratfunc(f, 4, rng);
            const std::uint32_t j = std::uniform_int_distribution<std::uint32_t>(1, f->p() - 1)(rng);
            const auto lhs = wp_reduce(s2 - s.scaled(f->from_int(j))).form;
            EXPECT_EQ(lhs.value(), wp_reduce(s2).form.value() - wp_reduce(s).form.scaled(j).value());
        }
    }
}

TEST(Equivalence, Examples) {
    const auto f2 = F(2), f3 = F(3);
    EXPECT_EQ(is_equivalent(nf_of(f2, "1/T"), nf_of(f2, "1/T")), 1U);
    EXPECT_FALSE(is_equivalent(nf_of(f2, "1/T"), nf_of(f2, "1/T + 1")).has_value());
    EXPECT_EQ(is_equivalent(nf_of(f3, "1/T"), nf_of(f3, "2/T")), 2U);
    EXPECT_EQ(is_equivalent(nf_of(f2, "1/T"), nf_of(f2, "1/T^2")), 1U);
    try {
        is_equivalent(nf_of(f2, "T^2+T"), nf_of(f2, "1/T"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegenerateInput);
    }
}

TEST(Equivalence, RelationProperties) {
    std::mt19937_64 rng(41);
    for (const auto& f : {F(3), F(3, 2), F(2, 2)}) {
        const std::uint32_t p = f->p();
        // small pool with planted equivalences: s, j*s + wp(b)
        std::vector<NormalForm> pool;
        for (int n = 0; n < 4; ++n) {
            const RatFunc s = RatFunc(testing::random_nonzero_poly(f, 2, rng), P(f, "T^2+T"));
            for (std::uint32_t j = 1; j < p; ++j) {
                const RatFunc b = RatFunc(testing::random_poly(f, 1, rng), P(f, "T"));
                auto nf = wp_reduce(s.scaled(f->from_int(j)) + b.wp()).form;
                if (!nf.is_zero()) pool.push_back(nf);
            }
        }
        for (const auto& a : pool) {
            EXPECT_EQ(is_equivalent(a, a), 1U);
            for (const auto& b : pool) {
                const auto ab = is_equivalent(a, b);
                const auto ba = is_equivalent(b, a);
                ASSERT_EQ(ab.has_value(), ba.has_value());
                if (ab) EXPECT_EQ((*ab * *ba) % p, 1U);
                for (const auto& c : pool) {
                    const auto bc = is_equivalent(b, c);
                    if (ab && bc) {
                        const auto ac = is_equivalent(a, c);
                        ASSERT_TRUE(ac.has_value());
                        EXPECT_EQ(*ac, (*ab * *bc) % p);
                    }
                }
            }
        }
    }
}

// Oracle for the generator counts: enumerate z = j y + c with c = h / P^alpha0,
// deg h <= d alpha0, and collect the right-hand sides they produce.
std::pair<std::size_t, std::size_t> enumerate_generators(const PrimePoly& P, std::int64_t alpha, const Poly& f) {
    const FieldPtr& F = P.field_ptr();
    const auto p = static_cast<std::int64_t>(F->p());
    const std::int64_t alpha0 = alpha / p;
    const auto d = static_cast<std::size_t>(P.degree());
    const Poly Pa = P.poly().pow(static_cast<std::uint64_t>(alpha));
    const Poly Pa0 = P.poly().pow(static_cast<std::uint64_t>(alpha0));
    std::set<std::vector<std::uint16_t>> equations;
    std::size_t generators = 0;
    const std::size_t hlen = d * static_cast<std::size_t>(alpha0) + 1;
    for (std::int64_t j = 1; j < p; ++j) {
        for (std::uint64_t code = 0; code < monic_count(*F, hlen); ++code) {
            const RatFunc c(poly_from_code(F, hlen, code), Pa0);
            const RatFunc rhs = RatFunc(f, Pa).scaled(F->from_int(j)) + c.wp();
            ++generators;
            const RatFunc g = rhs * RatFunc(Pa);
            EXPECT_TRUE(g.is_polynomial());
            EXPECT_LE(g.num().degree(), Degree(static_cast<std::int64_t>(d) * alpha));
            EXPECT_TRUE(gcd(g.num(), P.poly()).is_one());
            std::vector<std::uint16_t> key;
            for (const Fq x : g.num().coeffs()) key.push_back(x.v);
            equations.insert(key);
        }
    }
    return {generators, equations.size()};
}

TEST(GeneratorData, MatchesEnumeration) {
    struct Case {
        std::uint32_t p, t;
        const char* P;
        std::int64_t alpha;
        const char* f;
        int count_z, count_eq;
    };
    for (const Case c : {Case{2, 1, "T", 1, "1", 2, 1}, Case{2, 1, "T", 3, "T+1", 4, 2},
                         Case{3, 1, "T", 1, "1", 6, 2}, Case{3, 1, "T", 4, "T^3+2", 18, 6},
                         Case{2, 2, "T^2+T+g", 1, "T", 4, 2}, Case{2, 2, "T^2+T+g", 3, "T", 64, 32}}) {
        const auto f = F(c.p, c.t);
        const PrimePoly pr(P(f, c.P));
        const auto data = equivalent_generator_data(pr, c.alpha);
        const auto [z, eq] = enumerate_generators(pr, c.alpha, P(f, c.f));
        EXPECT_EQ(data.count_z, c.count_z);
        EXPECT_EQ(data.count_eq, c.count_eq);
        EXPECT_EQ(static_cast<int>(z), c.count_z);
        EXPECT_EQ(static_cast<int>(eq), c.count_eq);
    }
    try {
        equivalent_generator_data(PrimePoly(P(F(2), "T")), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidAlpha);
    }
}

TEST(TwistFamily, Examples) {
    const auto f2 = F(2), f3 = F(3);
    {
        const auto fam = twist_family(nf_of(f2, "1/T"), Field::one());
        ASSERT_EQ(fam.members.size(), 2U);
        EXPECT_EQ(fam.members[0], R(f2, "1/T"));
        EXPECT_EQ(fam.members[1], R(f2, "(1+T)/T"));
    }
    {
        const auto fam = twist_family(nf_of(f3, "1/T"), Field::one());
        ASSERT_EQ(fam.members.size(), 3U);
        EXPECT_EQ(fam.members[1], R(f3, "(1+T)/T"));
        EXPECT_EQ(fam.members[2], R(f3, "(1+2T)/T"));
    }
    try {
        twist_family(nf_of(F(2, 2), "1/T"), Field::one());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::RhoInWp);
    }
    try {
        twist_family(nf_of(f2, "1/T + 1/(T+1)"), Field::one());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotSingleTerm);
    }
}

TEST(TwistFamily, MembersPairwiseInequivalent) {
    for (const auto& f : testing::grid_fields()) {
        for (const auto& pr : monic_irreducibles(f, 2)) {
            for (std::int64_t alpha : {1, 5}) {
                if (alpha % f->p() == 0) continue;
                const Poly Pa = pr.poly().pow(static_cast<std::uint64_t>(alpha));
                const auto base = wp_reduce(RatFunc(Poly::variable(f) + Poly::constant(f, Field::one()), Pa)).form;
                if (base.terms.size() != 1 || !base.constant.is_zero()) continue;
                const auto fam = twist_family(base, f->rho());
                EXPECT_EQ(fam.members[0], base.value());
                for (std::size_t i = 0; i < fam.members.size(); ++i) {
                    EXPECT_LE(fam.numerators[i].degree(), Degree(alpha * static_cast<std::int64_t>(pr.degree())));
                    EXPECT_TRUE(gcd(fam.numerators[i], pr.poly()).is_one());
                    for (std::size_t k = i + 1; k < fam.members.size(); ++k) {
                        EXPECT_FALSE(is_equivalent(wp_reduce(fam.members[i]).form, wp_reduce(fam.members[k]).form));
                    }
                }
            }
        }
    }
}

}  // namespace
}  // namespace ascyc
