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

#pragma once

#include <json.hpp>

#include "ascyc/artin_schreier.hpp"
#include "ascyc/carlitz.hpp"
#include "ascyc/census.hpp"
#include "ascyc/embed.hpp"

namespace ascyc::report {

using nlohmann::json;

/// Number when it fits in 64 bits, decimal string otherwise.
json integer(const Integer& n);

json field(const Field& f);
json normal_form(const NormalForm& nf);
json reduction(const RatFunc& input, const Reduction& r);
json equivalence(const RatFunc& s1, const RatFunc& s2, const std::optional<Equivalence>& e);
json census(const CensusReport& r);

struct UnitsSummary {
    PrimePoly prime;
    std::int64_t beta;
    Integer group_order;
    Integer r_p_formula;
    std::optional<Integer> r_p_brute;        // absent when over budget
    Integer subgroups_formula;
    std::optional<Integer> subgroups_brute;

    bool matches() const { return r_p_brute == r_p_formula && subgroups_brute == subgroups_formula; }
};

/// Formula side always; brute side when q^(beta d) <= budget.
UnitsSummary units_summary(const PrimePoly& prime, std::int64_t beta, std::uint64_t budget);
json units(const UnitsSummary& u);

json carlitz(const CarlitzOperator& op);
json certificate(const EmbeddingCertificate& c);
json smoke(const EmbeddingCertificate& c, std::int64_t degree_bound, const SmokeReport& r);

}  // namespace ascyc::report
