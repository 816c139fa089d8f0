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

#include "ascyc/grid.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ascyc/error.hpp"
#include "ascyc/text.hpp"
#include "ascyc/unit_group.hpp"

namespace ascyc {

std::string_view mode_name(GridMode m) {
    switch (m) {
        case GridMode::Census: return "census";
        case GridMode::Units: return "units";
        case GridMode::Identity: return "identity";
        case GridMode::Splitting: return "splitting";
    }
    return "?";
}

namespace {

[[noreturn]] void grid_error(std::size_t line, const std::string& msg) {
    raise(Errc::GridParseError, "line " + std::to_string(line) + ": " + msg);
}

std::int64_t to_int(std::string_view s, std::size_t line) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) grid_error(line, "bad integer '" + std::string(s) + "'");
    return v;
}

std::vector<std::int64_t> parse_params(std::string_view s, std::size_t line) {
    std::vector<std::int64_t> out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        const std::string_view item = s.substr(0, comma);
        s = comma == std::string_view::npos ? std::string_view{} : s.substr(comma + 1);
        if (const auto dots = item.find(".."); dots != std::string_view::npos) {
            const std::int64_t lo = to_int(item.substr(0, dots), line), hi = to_int(item.substr(dots + 2), line);
            if (lo > hi) grid_error(line, "empty range '" + std::string(item) + "'");
            for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(to_int(item, line));
        }
    }
    if (out.empty()) grid_error(line, "no parameters");
    return out;
}

GridMode parse_mode(std::string_view s, std::size_t line) {
    for (GridMode m : {GridMode::Census, GridMode::Units, GridMode::Identity, GridMode::Splitting}) {
        if (s == mode_name(m)) return m;
    }
    grid_error(line, "unknown mode '" + std::string(s) + "'");
}

}  // namespace

GridSpec parse_grid(std::string_view text) {
    GridSpec grid;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream words(raw);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        if (tok.size() == 2 && (tok[0] == "budget" || tok[0] == "units_budget" || tok[0] == "smoke_degree")) {
            const std::int64_t v = to_int(tok[1], line);
            if (v < 1) grid_error(line, tok[0] + " must be positive");
            if (tok[0] == "budget") grid.budget = static_cast<std::uint64_t>(v);
            else if (tok[0] == "units_budget") grid.units_budget = static_cast<std::uint64_t>(v);
            else grid.smoke_degree = v;
            continue;
        }
        if (tok.size() != 5) grid_error(line, "expected 'p t prime_expr mode params'");
        GridEntry e;
        e.line = line;
        const std::int64_t p = to_int(tok[0], line), t = to_int(tok[1], line);
        if (p < 2 || p > 65536 || !is_prime_u64(static_cast<std::uint64_t>(p))) grid_error(line, "p must be prime");
        if (t < 1 || t > 16) grid_error(line, "t out of range");
        e.p = static_cast<std::uint32_t>(p);
        e.t = static_cast<std::uint32_t>(t);
        e.prime_expr = tok[2];
        e.mode = parse_mode(tok[3], line);
        e.params = parse_params(tok[4], line);
        for (const std::int64_t v : e.params) {
            if (v < 1) grid_error(line, "parameters must be positive");
            if ((e.mode == GridMode::Census || e.mode == GridMode::Identity) && v % p == 0) {
                grid_error(line, "alpha = " + std::to_string(v) + " is divisible by p = " + std::to_string(p));
            }
        }
        grid.entries.push_back(std::move(e));
    }
    return grid;
}

GridSpec load_grid(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::GridParseError, "cannot read grid file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_grid(ss.str());
}

std::vector<PrimePoly> expand_primes(const FieldPtr& field, std::string_view prime_expr) {
    if (prime_expr.starts_with("all<=")) {
        const std::int64_t n = to_int(prime_expr.substr(5), 0);
        if (n < 1) raise(Errc::GridParseError, "all<=N needs N >= 1");
        return monic_irreducibles(field, static_cast<std::size_t>(n));
    }
    return {PrimePoly(parse_poly(field, prime_expr))};
}

namespace {

GridRow census_row(const PrimePoly& P, std::int64_t alpha, const GridSpec& grid) {
    const CensusReport r = census_report(P, alpha, grid.budget, {0, 8});
    GridRow row{0, GridMode::Census, "", "", alpha, false, "", report::census(r)};
    if (!r.brute_count) {
        row.passed = census_identity_check(P, alpha);
        row.note = "N = " + r.formula_count.str() + " (over budget, formula only)";
    } else {
        row.passed = r.counts_match() && r.class_sizes_match();
        row.note = "N = " + r.formula_count.str() + ", classes = " + r.brute_count->str() + ", class size " +
                   std::to_string(r.min_class_size) + ".." + std::to_string(r.max_class_size) + " (expected " +
                   r.expected_class_size.str() + ")";
    }
    return row;
}

GridRow units_row(const PrimePoly& P, std::int64_t beta, const GridSpec& grid) {
    const auto u = report::units_summary(P, beta, grid.units_budget);
    GridRow row{0, GridMode::Units, "", "", beta, true, "", report::units(u)};
    row.note = "r_p = " + u.r_p_formula.str() + ", subgroups = " + u.subgroups_formula.str();
    if (u.r_p_brute) {
        row.passed = u.matches();
        row.note += " (brute " + u.r_p_brute->str() + ", " + u.subgroups_brute->str() + ")";
    } else {
        row.note += " (over budget, formula only)";
    }
    return row;
}

GridRow identity_row(const PrimePoly& P, std::int64_t alpha, const GridSpec& grid) {
    const Integer diff = n_beta_difference(P, alpha);
    const Integer N = n_alpha(P, alpha);
    GridRow row{0, GridMode::Identity, "", "", alpha, census_identity_check(P, alpha), "", {}};
    row.note = "N = " + N.str() + ", p * diff = " + Integer(diff * P.poly().field().p()).str();
    row.detail = {{"n_alpha", report::integer(N)}, {"n_beta_difference", report::integer(diff)}, {"brute_difference", nullptr}};
    const auto size = ipow(Integer(P.poly().field().q()), P.degree() * static_cast<std::uint64_t>(alpha + 1));
    if (size <= grid.units_budget) {
        const Integer brute = Integer(scan_units(P, alpha + 1, grid.units_budget).subgroups) -
                              Integer(scan_units(P, alpha, grid.units_budget).subgroups);
        row.detail["brute_difference"] = report::integer(brute);
        row.passed = row.passed && brute == diff;
        row.note += ", brute diff = " + brute.str();
    }
    return row;
}

GridRow splitting_row(const PrimePoly& P, std::int64_t alpha, const GridSpec& grid) {
    const FieldPtr& F = P.field_ptr();
    const Poly one = Poly::constant(F, Field::one());
    const RatFunc pole(one, P.poly().pow(static_cast<std::uint64_t>(alpha)));
    GridRow row{0, GridMode::Splitting, "", "", alpha, true, "", report::json::array()};
    std::size_t tested = 0, violations = 0;
    for (const RatFunc& s : {pole, pole + RatFunc(Poly::constant(F, F->rho()))}) {
        if (in_wp(s)) continue;  // 1/P^alpha with p | alpha never reaches here in practice
        const auto cert = certify(s);
        for (const auto& [Q, e] : cert.finite_modulus) {
            const auto v = valuation(s, Q);
            row.passed = row.passed && v && -*v + 1 == e;
        }
        const auto smoke = splitting_smoke_test(cert, grid.smoke_degree);
        tested += smoke.tested.size();
        violations += smoke.violations;
        row.detail.push_back(report::smoke(cert, grid.smoke_degree, smoke));
    }
    row.passed = row.passed && violations == 0;
    row.note = std::to_string(tested) + " primes tested, " + std::to_string(violations) + " violations";
    return row;
}

}  // namespace

std::vector<GridRow> run_grid(const GridSpec& grid, const std::function<void(const GridRow&)>& progress) {
    std::vector<GridRow> rows;
    for (std::size_t i = 0; i < grid.entries.size(); ++i) {
        const GridEntry& e = grid.entries[i];
        const FieldPtr F = Field::make(e.p, e.t);
        for (const PrimePoly& P : expand_primes(F, e.prime_expr)) {
            for (const std::int64_t v : e.params) {
                GridRow row = [&] {
                    switch (e.mode) {
                        case GridMode::Census: return census_row(P, v, grid);
                        case GridMode::Units: return units_row(P, v, grid);
                        case GridMode::Identity: return identity_row(P, v, grid);
                        case GridMode::Splitting: return splitting_row(P, v, grid);
                    }
                    raise(Errc::InvalidArgument, "unknown grid mode");
                }();
                row.entry = i;
                row.field = describe(*F);
                row.prime = to_string(P.poly());
                if (progress) progress(row);
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

}  // namespace ascyc
