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
#include <vector>

#include "ascyc/integer.hpp"
#include "ascyc/irreducible.hpp"

namespace ascyc {

/// Residue class modulo P^beta, kept reduced.
class Residue {
public:
    Residue(PrimePoly prime, std::int64_t beta, const Poly& rep);
    static Residue one(PrimePoly prime, std::int64_t beta);

    const PrimePoly& prime() const noexcept { return prime_; }
    std::int64_t beta() const noexcept { return beta_; }
    const Poly& modulus() const noexcept { return modulus_; }
    const Poly& rep() const noexcept { return rep_; }
    bool is_unit() const;
    bool is_one() const noexcept { return rep_.is_one(); }

    friend bool operator==(const Residue& a, const Residue& b) { return a.beta_ == b.beta_ && a.prime_ == b.prime_ && a.rep_ == b.rep_; }

private:
    PrimePoly prime_;
    std::int64_t beta_;
    Poly modulus_;
    Poly rep_;
};

Residue residue_mul(const Residue& a, const Residue& b);
Residue residue_pow(const Residue& a, const Integer& e);

/// Phi(P^beta) = q^((beta-1)d) (q^d - 1).
Integer phi(const PrimePoly& prime, std::int64_t beta);

/// Order of a unit, found by stripping prime factors off Phi(P^beta).
Integer element_order(const Residue& a);

/// r_p = q^((beta - ceil(beta/p)) d) - 1, and 0 for beta = 1.
Integer count_order_p(const PrimePoly& prime, std::int64_t beta);
/// Number of subgroups of order p: r_p / (p - 1).
Integer n_beta(const PrimePoly& prime, std::int64_t beta);
/// N_{alpha+1} - N_alpha, checked against Phi(P^(alpha - alpha0)) / (p - 1).
Integer n_beta_difference(const PrimePoly& prime, std::int64_t alpha);

struct UnitScan {
    std::uint64_t residues = 0;
    std::uint64_t units = 0;
    std::uint64_t one_units = 0;          // units congruent to 1 mod P
    std::uint64_t order_p = 0;
    std::uint64_t subgroups = 0;          // orbits {x, x^2, ..., x^(p-1)}
    bool lagrange = true;                 // every order divides Phi
    std::vector<Poly> order_p_elements;   // in enumeration order
};

/// Walks every residue mod P^beta (q^(beta d) <= budget). Checks that each
/// order-p element is 1 + h P with P^(ceil(beta/p) - 1) | h when beta > p,
/// and raises InvariantViolated otherwise. With full_orders every unit gets
/// its exact order; otherwise only the a^p = 1 candidates are ordered.
UnitScan scan_units(const PrimePoly& prime, std::int64_t beta, std::uint64_t budget, bool full_orders = false);

Integer count_order_p_bruteforce(const PrimePoly& prime, std::int64_t beta, std::uint64_t budget);

}  // namespace ascyc
