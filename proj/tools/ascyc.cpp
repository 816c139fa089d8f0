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

// Command-line front end. Reports go to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 1 a check failed, 2 parse error, 3 field too large,
// 4 degenerate input.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "ascyc/error.hpp"
#include "ascyc/grid.hpp"
#include "ascyc/report.hpp"
#include "ascyc/text.hpp"
#include "ascyc/unit_group.hpp"

#ifndef ASCYC_DEFAULT_GRID
#define ASCYC_DEFAULT_GRID "data/default_grid.txt"
#endif

namespace {

using namespace ascyc;
using report::json;

struct Options {
    std::string q = "2";
    std::string modulus;
    bool json = false;
    std::uint64_t budget = 1U << 20;
    bool budget_given = false;
};

FieldPtr make_field(const Options& o) {
    const auto [p, t] = parse_field_order(o.q);
    if (o.modulus.empty()) return Field::make(p, t);
    std::vector<std::uint32_t> m;
    std::size_t pos = 0;
    while (pos <= o.modulus.size()) {
        const auto comma = o.modulus.find(',', pos);
        const std::string item = o.modulus.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            m.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            raise(Errc::ParseError, "bad --fq-modulus coefficient '" + item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Field::make(p, t, m);
}

int exit_code(Errc c) {
    switch (c) {
        case Errc::ParseError:
        case Errc::GridParseError: return 2;
        case Errc::FieldTooLarge: return 3;
        case Errc::DegenerateInput:
        case Errc::InWpError: return 4;
        default: return 1;
    }
}

void emit(const Options& o, const json& j, const std::string& text) {
    if (o.json) std::cout << j.dump(2) << '\n';
    else std::cout << text;
}

std::string form_text(const NormalForm& nf) {
    std::string out = "normal form: " + to_string(nf.value()) + "\n";
    if (!nf.constant.is_zero()) out += "  constant " + to_string(*nf.field, nf.constant) + "\n";
    if (!nf.polypart.is_zero()) out += "  polynomial part " + to_string(nf.polypart) + "\n";
    for (const auto& t : nf.terms) {
        out += "  term (" + to_string(t.prime.poly()) + ", " + std::to_string(t.exponent) + ", " + to_string(t.numerator) + ")\n";
    }
    return out;
}

int cmd_normalize(const Options& o, const std::string& expr) {
    const auto F = make_field(o);
    const RatFunc s = parse_ratfunc(F, expr);
    const Reduction r = wp_reduce(s);
    std::string text = r.form.is_zero() ? "element of wp(K)\n" : form_text(r.form);
    text += "witness: " + to_string(r.witness) + "\n";
    emit(o, report::reduction(s, r), text);
    return 0;
}

int cmd_equiv(const Options& o, const std::string& e1, const std::string& e2) {
    const auto F = make_field(o);
    const RatFunc s1 = parse_ratfunc(F, e1), s2 = parse_ratfunc(F, e2);
    const Reduction r1 = wp_reduce(s1), r2 = wp_reduce(s2);
    auto eq = find_equivalence(r1.form, r2.form);
    // s2 - j s1 = wp(b + w2 - j w1) since wp is F_p-linear
    if (eq) eq->witness = eq->witness + r2.witness - r1.witness.scaled(F->from_int(eq->j));
    const std::string text = eq ? "j = " + std::to_string(eq->j) + ", witness " + to_string(eq->witness) + "\n" : "inequivalent\n";
    emit(o, report::equivalence(s1, s2, eq), text);
    return 0;
}

int cmd_census(const Options& o, const std::string& prime, std::int64_t alpha, std::size_t reps) {
    const auto F = make_field(o);
    const CensusReport r = census_bruteforce(PrimePoly(parse_poly(F, prime)), alpha, o.budget, {0, reps});
    std::string text = "N_alpha (formula) = " + r.formula_count.str() + "\nequations = " + r.enumerated_equations.str() +
                       "\nclasses = " + r.brute_count->str() + "\nclass size = " + std::to_string(r.min_class_size) +
                       (r.min_class_size == r.max_class_size ? "" : ".." + std::to_string(r.max_class_size)) +
                       " (expected " + r.expected_class_size.str() + ")\n";
    for (const auto& nf : r.representatives) text += "  " + to_string(nf.value()) + "\n";
    if (r.representatives_truncated) text += "  ...\n";
    emit(o, report::census(r), text);
    return r.counts_match() && r.class_sizes_match() ? 0 : 1;
}

int cmd_units(const Options& o, const std::string& prime, std::int64_t beta) {
    const auto F = make_field(o);
    const auto u = report::units_summary(PrimePoly(parse_poly(F, prime)), beta, o.budget);
    const auto brute = [](const std::optional<Integer>& x) { return x ? x->str() : std::string("over budget"); };
    const std::string text = "group order = " + u.group_order.str() + "\nr_p = " + u.r_p_formula.str() + " (brute " +
                             brute(u.r_p_brute) + ")\nsubgroups = " + u.subgroups_formula.str() + " (brute " +
                             brute(u.subgroups_brute) + ")\n";
    emit(o, report::units(u), text);
    return !u.r_p_brute || u.matches() ? 0 : 1;
}

int cmd_carlitz(const Options& o, const std::string& m) {
    const auto F = make_field(o);
    const CarlitzOperator op = carlitz_action(parse_poly(F, m));
    std::string text = "[" + to_string(op.M) + "](u) =";
    bool first = true;
    for (std::size_t j = op.coeffs.size(); j-- > 0;) {
        if (op.coeffs[j].is_zero()) continue;
        const std::string c = to_string(op.coeffs[j]);
        const std::string u = j == 0 ? "u" : "u^" + ipow(Integer(F->q()), j).str();
        text += std::string(first ? " " : " + ") + (c == "1" ? "" : op.coeffs[j].nonzero_terms() > 1 ? "(" + c + ")*" : c + "*") + u;
        first = false;
    }
    emit(o, report::carlitz(op), text + "\n");
    return 0;
}

std::string certificate_text(const EmbeddingCertificate& c) {
    std::string text = "source: " + to_string(c.source.value()) + "\nfinite modulus: " + to_string(c.modulus()) +
                       "\ninfinite exponent: " + std::to_string(c.infinite_exponent) +
                       "\nconstant degree: " + std::to_string(c.constant_degree) + "\nneeds constant part: " +
                       (c.needs_constant_part ? (*c.needs_constant_part ? "true" : "false") : "unknown") + "\n";
    return text;
}

int cmd_certify(const Options& o, const std::string& expr) {
    const auto F = make_field(o);
    const auto cert = certify(parse_ratfunc(F, expr));
    emit(o, report::certificate(cert), certificate_text(cert));
    return 0;
}

int cmd_smoke(const Options& o, const std::string& expr, std::int64_t degree) {
    const auto F = make_field(o);
    const auto cert = certify(parse_ratfunc(F, expr));
    const auto r = splitting_smoke_test(cert, degree);
    std::string text = certificate_text(cert) + "status: " + r.status() + " (" + std::to_string(r.tested.size()) +
                       " primes, " + std::to_string(r.violations) + " violations)\n";
    for (const auto& c : r.tested) text += "  " + to_string(c.Q) + "  trace " + std::to_string(c.trace) + "\n";
    emit(o, report::smoke(cert, degree, r), text);
    return r.violations == 0 ? 0 : 1;
}

int cmd_verify(const Options& o, const std::string& path) {
    GridSpec grid = load_grid(path);
    if (o.budget_given) grid.budget = o.budget;
    std::size_t failed = 0;
    const auto rows = run_grid(grid, [&](const GridRow& r) {
        if (!r.passed) ++failed;
        if (!o.json) {
            std::cout << (r.passed ? "pass " : "FAIL ") << mode_name(r.mode) << "  " << r.field << "  P = " << r.prime
                      << "  " << (r.mode == GridMode::Units ? "beta" : "alpha") << " = " << r.param << "  " << r.note
                      << std::endl;
        }
    });
    if (o.json) {
        json out{{"entries", grid.entries.size()}, {"rows", json::array()}, {"failed", failed}};
        for (const auto& r : rows) {
            out["rows"].push_back({{"entry", r.entry},
                                   {"mode", mode_name(r.mode)},
                                   {"field", r.field},
                                   {"prime", r.prime},
                                   {"param", r.param},
                                   {"passed", r.passed},
                                   {"note", r.note},
                                   {"detail", r.detail}});
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << grid.entries.size() << " entries, " << rows.size() << " checks, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Artin-Schreier extensions of F_q(T): normal forms, censuses and embedding certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--q", o.q, "field order, as q or p^t")->capture_default_str();
    app.add_option("--fq-modulus", o.modulus, "defining polynomial of F_q over F_p, coefficients low to high");
    app.add_flag("--json", o.json, "emit JSON");
    auto* budget = app.add_option("--budget", o.budget, "enumeration budget")->capture_default_str();

    std::string e1, e2, prime, grid_path = ASCYC_DEFAULT_GRID;
    std::int64_t param = 1, degree = 6;
    std::size_t reps = 64;
    int rc = 0;

    auto* normalize = app.add_subcommand("normalize", "reduce s modulo wp(K)");
    normalize->add_option("expr", e1)->required();
    normalize->callback([&] { rc = cmd_normalize(o, e1); });

    auto* equiv = app.add_subcommand("equiv", "test whether two equations define the same field");
    equiv->add_option("s1", e1)->required();
    equiv->add_option("s2", e2)->required();
    equiv->callback([&] { rc = cmd_equiv(o, e1, e2); });

    auto* census = app.add_subcommand("census", "count extensions ramified only at P with conductor exponent alpha+1");
    census->add_option("prime", prime)->required();
    census->add_option("alpha", param)->required();
    census->add_option("--representatives", reps, "representatives to list")->capture_default_str();
    census->callback([&] { rc = cmd_census(o, prime, param, reps); });

    auto* units = app.add_subcommand("units", "order-p elements and subgroups of (F_q[T]/P^beta)^*");
    units->add_option("prime", prime)->required();
    units->add_option("beta", param)->required();
    units->callback([&] { rc = cmd_units(o, prime, param); });

    auto* carlitz = app.add_subcommand("carlitz", "Carlitz action [M](u)");
    carlitz->add_option("M", e1)->required();
    carlitz->callback([&] { rc = cmd_carlitz(o, e1); });

    auto* cert = app.add_subcommand("certify", "cyclotomic and constant field containing K(y), y^p - y = s");
    cert->add_option("expr", e1)->required();
    cert->callback([&] { rc = cmd_certify(o, e1); });

    auto* smoke = app.add_subcommand("smoke", "check the certificate against primes that split in it");
    smoke->add_option("expr", e1)->required();
    smoke->add_option("--degree", degree, "largest degree of Q")->capture_default_str();
    smoke->callback([&] { rc = cmd_smoke(o, e1, degree); });

    auto* verify = app.add_subcommand("verify", "run a verification grid");
    verify->add_option("grid", grid_path, "grid file")->capture_default_str();
    verify->callback([&] {
        o.budget_given = budget->count() > 0;
        rc = cmd_verify(o, grid_path);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.code());
    }
    return rc;
}
