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

#include "ascyc/report.hpp"

#include <limits>

#include "ascyc/text.hpp"
#include "ascyc/unit_group.hpp"

namespace ascyc::report {

json integer(const Integer& n) {
    if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(n);
    if (n < 0 && n >= std::numeric_limits<std::int64_t>::min()) return static_cast<std::int64_t>(n);
    return n.str();
}

json field(const Field& f) {
    return {{"q", f.q()}, {"p", f.p()}, {"t", f.t()}, {"modulus", f.modulus()}, {"text", describe(f)}};
}

json normal_form(const NormalForm& nf) {
    json terms = json::array();
    for (const auto& t : nf.terms) {
        terms.push_back({{"prime", to_string(t.prime.poly())}, {"exponent", t.exponent}, {"numerator", to_string(t.numerator)}});
    }
    return {{"constant", to_string(*nf.field, nf.constant)},
            {"polypart", to_string(nf.polypart)},
            {"terms", terms},
            {"value", to_string(nf.value())}};
}

json reduction(const RatFunc& input, const Reduction& r) {
    return {{"field", field(input.field())},
            {"input", to_string(input)},
            {"normal_form", normal_form(r.form)},
            {"witness", to_string(r.witness)},
            {"in_wp", r.form.is_zero()}};
}

json equivalence(const RatFunc& s1, const RatFunc& s2, const std::optional<Equivalence>& e) {
    json out{{"field", field(s1.field())}, {"s1", to_string(s1)}, {"s2", to_string(s2)}, {"equivalent", e.has_value()}};
    if (e) {
        out["j"] = e->j;
        out["witness"] = to_string(e->witness);
    }
    return out;
}

json census(const CensusReport& r) {
    json reps = json::array();
    for (const auto& nf : r.representatives) reps.push_back(to_string(nf.value()));
    json out{{"field", field(*r.field)},
             {"prime", to_string(r.prime.poly())},
             {"alpha", r.alpha},
             {"alpha0", r.alpha0},
             {"formula_count", integer(r.formula_count)},
             {"brute_count", r.brute_count ? integer(*r.brute_count) : json(nullptr)},
             {"enumerated_equations", integer(r.enumerated_equations)},
             {"expected_class_size", integer(r.expected_class_size)},
             {"representatives", reps},
             {"representatives_truncated", r.representatives_truncated}};
    if (r.brute_count) {
        out["min_class_size"] = r.min_class_size;
        out["max_class_size"] = r.max_class_size;
    }
    return out;
}

UnitsSummary units_summary(const PrimePoly& prime, std::int64_t beta, std::uint64_t budget) {
    UnitsSummary u{prime, beta, phi(prime, beta), count_order_p(prime, beta), std::nullopt, n_beta(prime, beta), std::nullopt};
    const Integer size = ipow(Integer(prime.poly().field().q()), prime.degree() * static_cast<std::uint64_t>(beta));
    if (size <= budget) {
        const UnitScan scan = scan_units(prime, beta, budget);
        u.r_p_brute = scan.order_p;
        u.subgroups_brute = scan.subgroups;
    }
    return u;
}

json units(const UnitsSummary& u) {
    auto opt = [](const std::optional<Integer>& x) { return x ? integer(*x) : json(nullptr); };
    return {{"field", field(u.prime.poly().field())},
            {"prime", to_string(u.prime.poly())},
            {"beta", u.beta},
            {"group_order", integer(u.group_order)},
            {"r_p_formula", integer(u.r_p_formula)},
            {"r_p_brute", opt(u.r_p_brute)},
            {"subgroups_formula", integer(u.subgroups_formula)},
            {"subgroups_brute", opt(u.subgroups_brute)}};
}

json carlitz(const CarlitzOperator& op) {
    json terms = json::array();
    for (std::size_t j = 0; j < op.coeffs.size(); ++j) {
        if (!op.coeffs[j].is_zero()) terms.push_back({j, to_string(op.coeffs[j])});
    }
    return {{"field", field(op.M.field())}, {"M", to_string(op.M)}, {"degree", integer(op.degree())}, {"operator", terms}};
}

json certificate(const EmbeddingCertificate& c) {
    json finite = json::array();
    for (const auto& [P, e] : c.finite_modulus) finite.push_back({{"prime", to_string(P.poly())}, {"exponent", e}});
    json components = json::array();
    for (const auto& nf : c.components) components.push_back(to_string(nf.value()));
    return {{"field", field(*c.field)},
            {"source", to_string(c.source.value())},
            {"finite_modulus", finite},
            {"infinite_exponent", c.infinite_exponent},
            {"constant_degree", c.constant_degree},
            {"needs_constant_part", c.needs_constant_part ? json(*c.needs_constant_part) : json("unknown")},
            {"minimal_for_cyclotomic_part", c.minimal_for_cyclotomic_part},
            {"components", components}};
}

json smoke(const EmbeddingCertificate& c, std::int64_t degree_bound, const SmokeReport& r) {
    json tested = json::array();
    for (const auto& t : r.tested) tested.push_back({{"Q", to_string(t.Q)}, {"trace", t.trace}});
    return {{"certificate", certificate(c)},
            {"degree_bound", degree_bound},
            {"status", r.status()},
            {"infinite_conditions", r.infinite_conditions},
            {"candidates", r.candidates},
            {"violations", r.violations},
            {"tested", tested}};
}

}  // namespace ascyc::report
