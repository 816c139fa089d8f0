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

#include <cstdint>
#include <variant>
#include <vector>

#include "ascyc/artin_schreier.hpp"
#include "ascyc/integer.hpp"

namespace ascyc {

/// [M](u) = sum_j c_j u^(q^j), with [T](u) = T u + u^q.
struct CarlitzOperator {
    Poly M;
    std::vector<Poly> coeffs;  // c_0 .. c_(deg M)

    /// deg_u [M](u) = q^j for the top nonzero c_j.
    Integer degree() const;

    friend bool operator==(const CarlitzOperator& a, const CarlitzOperator& b) { return a.coeffs == b.coeffs; }
};

CarlitzOperator carlitz_action(const Poly& M);
CarlitzOperator compose(const CarlitzOperator& a, const CarlitzOperator& b);
CarlitzOperator operator+(const CarlitzOperator& a, const CarlitzOperator& b);

/// deg_u [M](u), checked against q^(deg M).
Integer torsion_degree(const Poly& M);
/// deg_u [P^beta] - deg_u [P^(beta-1)], checked against Phi(P^beta).
Integer torsion_difference(const PrimePoly& prime, std::int64_t beta);

struct InfinitePrime {
    friend bool operator==(InfinitePrime, InfinitePrime) { return true; }
};

using Place = std::variant<PrimePoly, InfinitePrime>;

struct RamifiedPlace {
    Place place;
    std::int64_t alpha;
    std::int64_t different_exponent;  // (alpha + 1)(p - 1)
    std::int64_t conductor_exponent;  // alpha + 1
};

struct RamificationData {
    std::vector<RamifiedPlace> terms;
};

RamificationData ramification_data(const NormalForm& nf);

}  // namespace ascyc
