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
#include <vector>

#include "ascyc/integer.hpp"
#include "ascyc/ratfunc.hpp"

namespace ascyc {

/**
 * Canonical representative of a class in K / wp(K), K = F_q(T), where
 * wp(b) = b^p - b.
 *
 * The representative has
 *   - constant in {i * rho : i in F_p}, rho = Field::rho();
 *   - polypart with zero constant term and no coefficient at T^(kp), k >= 1;
 *   - per pole P a numerator f with deg f < alpha * deg P whose P-adic
 *     digit at every pole order divisible by p is zero.
 * In particular every pole order and the polypart degree are prime to p.
 * These conditions pick exactly one element per class, so two forms are
 * equal iff their values differ by an element of wp(K).
 */
struct NormalForm {
    FieldPtr field;
    Fq constant;
    Poly polypart;
    std::vector<PoleTerm> terms;  // sorted by prime

    explicit NormalForm(FieldPtr f) : field(f), polypart(f) {}

    bool is_zero() const noexcept { return constant.is_zero() && polypart.is_zero() && terms.empty(); }
    /// constant + polypart + sum f_i / P_i^alpha_i.
    RatFunc value() const;
    /// Multiplication by j in F_p; keeps the form canonical.
    NormalForm scaled(std::uint32_t j) const;

    friend bool operator==(const NormalForm& a, const NormalForm& b);
};

struct Reduction {
    NormalForm form;
    RatFunc witness;  // s = form.value() + witness^p - witness
};

/// Canonical normal form of s modulo wp(K), with the witness.
Reduction wp_reduce(const RatFunc& s);

/// s in wp(K); constants reduce to an absolute trace test.
bool in_wp(const RatFunc& s);

/// The p-th root of u in F_q[T]/(P), lifted to degree < deg P.
Poly residue_pth_root(const Poly& u, const Poly& prime);

struct Equivalence {
    std::uint32_t j;   // in 1..p-1
    RatFunc witness;   // b with nf2 - j nf1 = b^p - b
};

/// The j in F_p^x with nf2 - j nf1 in wp(K), with its witness. Raises
/// DegenerateInput when either form is zero.
std::optional<Equivalence> find_equivalence(const NormalForm& nf1, const NormalForm& nf2);
std::optional<std::uint32_t> is_equivalent(const NormalForm& nf1, const NormalForm& nf2);

struct GeneratorData {
    Integer count_z;   // generators z with K(z) = K(y) of the same shape
    Integer count_eq;  // distinct right-hand sides among them
};

/// (p-1) q^(d alpha0 + 1) generators and (p-1)/p of that many equations,
/// alpha0 = floor(alpha / p). InvalidAlpha when p | alpha or alpha < 1.
GeneratorData equivalent_generator_data(const PrimePoly& prime, std::int64_t alpha);

/// alpha0 = floor(alpha / p) after validating gcd(alpha, p) = 1.
std::int64_t checked_alpha0(std::int64_t alpha, std::uint32_t p);

struct TwistFamily {
    NormalForm base;
    Fq rho;
    std::vector<Poly> numerators;  // g_i = f + i rho P^alpha
    std::vector<RatFunc> members;  // g_i / P^alpha, i = 0..p-1
};

/// The p constant-field twists of a single-pole form by a trace-nonzero rho.
TwistFamily twist_family(const NormalForm& base, Fq rho);

}  // namespace ascyc
