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

#include "ascyc/artin_schreier.hpp"
#include "ascyc/integer.hpp"
#include "ascyc/irreducible.hpp"

namespace ascyc {

/// N_alpha = p/(p-1) Phi(P^(alpha - alpha0)), alpha0 = floor(alpha/p).
Integer n_alpha(const PrimePoly& prime, std::int64_t alpha);

/// N_alpha == p (N_(alpha+1) - N_alpha).
bool census_identity_check(const PrimePoly& prime, std::int64_t alpha);

/**
 * The q Phi(P^alpha) right-hand sides a + f / P^alpha with a in F_q,
 * deg f < d alpha and P not dividing f, indexed densely.
 *
 * An equation is stored as its constant a and its P-adic digits D[o]
 * (o = 1..alpha, D[o] multiplying P^(-o), deg D[o] < d, D[alpha] != 0):
 *   index = a + q (D[1] + R (D[2] + ... + R (D[alpha] - 1))),  R = q^d,
 * with residues coded by poly_from_code. Canonical reduction acts on the
 * digits directly and maps the set to itself.
 */
class CensusSpace {
public:
    CensusSpace(PrimePoly prime, std::int64_t alpha);

    const PrimePoly& prime() const noexcept { return prime_; }
    std::int64_t alpha() const noexcept { return alpha_; }
    std::uint64_t size() const noexcept { return size_; }

    RatFunc equation(std::uint64_t index) const;
    std::uint64_t index_of(const RatFunc& s) const;  // InvalidArgument if outside the set
    /// Index of the canonical form of the equation.
    std::uint64_t reduced(std::uint64_t index) const;
    /// Index of j times the equation, j in F_p.
    std::uint64_t scaled(std::uint64_t index, std::uint32_t j) const;

private:
    void decode(std::uint64_t index, std::uint32_t& a, std::vector<std::uint32_t>& digits) const;
    std::uint64_t encode(std::uint32_t a, const std::vector<std::uint32_t>& digits) const;

    PrimePoly prime_;
    std::int64_t alpha_;
    std::uint32_t q_, p_, radix_;
    std::uint64_t size_;
    std::vector<std::uint32_t> add_, neg_, smul_;  // residue tables
    std::vector<std::uint32_t> root_;              // residue p-th root
    std::vector<std::uint32_t> root_pow_digits_;   // P-adic digits of root^p, p per residue
    std::vector<std::uint32_t> fold_constant_, scale_constant_;
};

struct CensusOptions {
    unsigned threads = 0;                // 0: hardware concurrency
    std::size_t max_representatives = 64;
};

struct CensusReport {
    FieldPtr field;
    PrimePoly prime;
    std::int64_t alpha;
    std::int64_t alpha0;
    Integer formula_count;
    std::optional<Integer> brute_count;  // absent when over budget
    Integer enumerated_equations;
    Integer expected_class_size;         // (p-1)/p q^(d alpha0 + 1)
    std::uint64_t min_class_size = 0;
    std::uint64_t max_class_size = 0;
    std::vector<NormalForm> representatives;  // smallest member of each class, reduced
    bool representatives_truncated = false;

    bool counts_match() const { return brute_count && *brute_count == formula_count; }
    bool class_sizes_match() const {
        return brute_count && Integer(min_class_size) == expected_class_size && Integer(max_class_size) == expected_class_size;
    }
};

/// Exhaustive class count; BudgetExceeded if q Phi(P^alpha) > budget.
CensusReport census_bruteforce(const PrimePoly& prime, std::int64_t alpha, std::uint64_t budget,
                               const CensusOptions& options = {});
/// As census_bruteforce but reports an absent brute count instead of throwing.
CensusReport census_report(const PrimePoly& prime, std::int64_t alpha, std::uint64_t budget,
                           const CensusOptions& options = {});

}  // namespace ascyc
