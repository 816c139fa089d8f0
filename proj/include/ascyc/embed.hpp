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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ascyc/artin_schreier.hpp"

namespace ascyc {

struct EmbeddingCertificate {
    FieldPtr field;
    std::vector<std::pair<PrimePoly, std::int64_t>> finite_modulus;  // (P_i, alpha_i + 1)
    std::int64_t infinite_exponent = 0;                              // deg polypart + 1, or 0
    std::uint32_t constant_degree = 0;                               // always p
    NormalForm source;
    std::vector<NormalForm> components;         // single-term pieces of source
    std::optional<bool> needs_constant_part;    // empty: unknown
    bool minimal_for_cyclotomic_part = false;

    /// prod P_i^(alpha_i + 1), or 1.
    Poly modulus() const;
};

/// InWpError when s is in wp(K).
EmbeddingCertificate certify(const RatFunc& s);

struct SmokeCase {
    Poly Q;
    std::uint32_t trace;  // Tr(s(theta)) in F_p, theta a root of Q
};

struct SmokeReport {
    std::vector<SmokeCase> tested;     // qualifying Q in increasing order
    std::uint64_t candidates = 0;      // Q examined before irreducibility
    std::size_t violations = 0;
    bool infinite_conditions = false;  // the condition at infinity was imposed

    bool vacuous() const noexcept { return tested.empty(); }
    std::string status() const;        // "ok", "vacuous" or "violations"
};

/**
 * Every monic irreducible Q with deg Q <= degree_bound, p | deg Q,
 * Q = 1 mod the finite modulus and, when infinite_exponent = n > 0,
 * Q(0) = 1 with the coefficients of T^(deg Q - 1), ..., T^(deg Q - n + 1)
 * zero (Q = 1 mod (1/T)^n after normalizing at infinity). Such Q split
 * completely in the certified composite; a nonzero absolute trace of
 * s(theta) is a violation.
 */
SmokeReport splitting_smoke_test(const EmbeddingCertificate& cert, std::int64_t degree_bound);

/// Tr_{F_(q^deg Q)/F_p}(s(theta)) computed in F_q[T]/(Q).
std::uint32_t trace_at_root(const RatFunc& s, const Poly& Q);

/// Q(0) = 1 and the n - 1 coefficients below the leading one vanish.
bool splits_at_infinity(const Poly& Q, std::int64_t n);

}  // namespace ascyc
