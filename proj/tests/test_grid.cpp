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

#include "ascyc/grid.hpp"
#include "ascyc/text.hpp"
#include "test_support.hpp"

namespace ascyc {
namespace {

using testing::F;
using testing::R;

Errc grid_errc(const char* text) {
    try {
        parse_grid(text);
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvariantViolated;
}

TEST(Grid, Parses) {
    const auto g = parse_grid(
        "# header\n"
        "budget 4096\n"
        "\n"
        "2 1 T census 1,3 # trailing\n"
        "3 2 all<=1 units 1..3,5\n");
    EXPECT_EQ(g.budget, 4096U);
    ASSERT_EQ(g.entries.size(), 2U);
    EXPECT_EQ(g.entries[0].params, (std::vector<std::int64_t>{1, 3}));
    EXPECT_EQ(g.entries[1].mode, GridMode::Units);
    EXPECT_EQ(g.entries[1].params, (std::vector<std::int64_t>{1, 2, 3, 5}));
    EXPECT_EQ(g.entries[1].line, 5U);
    EXPECT_EQ(expand_primes(F(3, 2), "all<=1").size(), 9U);
    EXPECT_TRUE(parse_grid("").entries.empty());
}

TEST(Grid, Rejects) {
    EXPECT_EQ(grid_errc("2 1 T census 2\n"), Errc::GridParseError);
    EXPECT_EQ(grid_errc("3 1 T identity 1..3\n"), Errc::GridParseError);
    EXPECT_EQ(grid_errc("4 1 T census 1\n"), Errc::GridParseError);
    EXPECT_EQ(grid_errc("2 1 T nonsense 1\n"), Errc::GridParseError);
    EXPECT_EQ(grid_errc("2 1 T census\n"), Errc::GridParseError);
    EXPECT_EQ(grid_errc("2 1 T census 3..1\n"), Errc::GridParseError);
    EXPECT_EQ(grid_errc("budget 0\n"), Errc::GridParseError);
    // p | beta is fine for unit groups
    EXPECT_NO_THROW(parse_grid("2 1 T units 2,4\n"));
}

TEST(Grid, RunsEveryMode) {
    const auto g = parse_grid(
        "2 1 T census 1,3\n"
        "2 2 all<=1 units 1..3\n"
        "3 1 T+1 identity 1,2\n"
        "3 1 T splitting 1\n"
        "budget 8\n"
        "2 1 T census 5\n");
    const auto rows = run_grid(g);
    ASSERT_EQ(rows.size(), 2U + 12U + 2U + 1U + 1U);
    for (const auto& r : rows) EXPECT_TRUE(r.passed) << r.note;
    EXPECT_EQ(rows.back().detail["brute_count"], nullptr);
    EXPECT_EQ(rows.front().detail["brute_count"], 2);
}

TEST(Report, PrintedStringsRoundTrip) {
    std::mt19937_64 rng(73);
    for (const auto& f : testing::grid_fields()) {
        for (int n = 0; n < 40; ++n) {
            const RatFunc s = testing::random_ratfunc(f, 5, rng);
            const auto j = report::reduction(s, wp_reduce(s));
            EXPECT_EQ(parse_ratfunc(f, j["input"].get<std::string>()), s);
            const auto r = wp_reduce(s);
            EXPECT_EQ(parse_ratfunc(f, j["normal_form"]["value"].get<std::string>()), r.form.value());
            EXPECT_EQ(parse_ratfunc(f, j["witness"].get<std::string>()), r.witness);
            for (const auto& t : j["normal_form"]["terms"]) {
                EXPECT_TRUE(is_irreducible(parse_poly(f, t["prime"].get<std::string>())));
            }
        }
    }
}

TEST(Report, Shapes) {
    const auto f2 = F(2);
    const auto c = report::certificate(certify(R(f2, "1/(T*(T+1))")));
    EXPECT_EQ(c["infinite_exponent"], 0);
    EXPECT_EQ(c["constant_degree"], 2);
    EXPECT_EQ(c["needs_constant_part"], "unknown");
    EXPECT_EQ(c["finite_modulus"].size(), 2U);
    EXPECT_EQ(c["finite_modulus"][1]["prime"], "T + 1");
    const auto u = report::units(report::units_summary(testing::prime(f2, "T^2+T+1"), 2, 1 << 16));
    EXPECT_EQ(u["group_order"], 12);
    EXPECT_EQ(u["r_p_brute"], 3);
    EXPECT_EQ(u["subgroups_brute"], 3);
    const auto k = report::carlitz(carlitz_action(testing::P(f2, "T^2")));
    EXPECT_EQ(k["operator"].dump(), R"([[0,"T^2"],[1,"T^2 + T"],[2,"1"]])");
    EXPECT_EQ(report::integer(ipow(Integer(2), 70)), "1180591620717411303424");
}

}  // namespace
}  // namespace ascyc
