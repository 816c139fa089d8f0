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

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ascyc/poly.hpp"

namespace ascyc {

/// Monic irreducible polynomial of F_q[T].
class PrimePoly {
public:
    /// Validates that f is monic and irreducible (NotIrreducible otherwise).
    explicit PrimePoly(Poly f);
    /// Skips validation; for producers that already know f is prime.
    static PrimePoly trusted(Poly f);

    const Poly& poly() const noexcept { return poly_; }
    std::size_t degree() const noexcept { return poly_.size() - 1; }
    const FieldPtr& field_ptr() const noexcept { return poly_.field_ptr(); }

    friend bool operator==(const PrimePoly& a, const PrimePoly& b) noexcept { return a.poly_ == b.poly_; }
    friend std::strong_ordering operator<=>(const PrimePoly& a, const PrimePoly& b) noexcept {
        return a.poly_ <=> b.poly_;
    }

private:
    struct Trusted {};
    PrimePoly(Poly f, Trusted) : poly_(std::move(f)) {}

    Poly poly_;
};

/// Deterministic irreducibility test (Rabin): T^(q^n) = T mod f and
/// gcd(T^(q^(n/r)) - T, f) = 1 for every prime r | n.
bool is_irreducible(const Poly& f);

/**
 * Stream of the monic irreducibles of degree 1..d_max, degree first and then
 * by code (lexicographic on coefficients, highest non-leading coefficient
 * most significant). A stream can be restricted to a code range of a single
 * degree so workers can split the enumeration.
 */
class IrreducibleStream {
public:
    IrreducibleStream(FieldPtr field, std::size_t d_max);
    static IrreducibleStream range(FieldPtr field, std::size_t degree, std::uint64_t code_begin,
                                   std::uint64_t code_end);

    std::optional<PrimePoly> next();

private:
    FieldPtr field_;
    std::size_t degree_ = 1;
    std::size_t d_max_ = 0;
    std::uint64_t code_ = 0;
    std::uint64_t code_end_ = 0;
    bool single_degree_ = false;
};

std::vector<PrimePoly> monic_irreducibles(const FieldPtr& field, std::size_t d_max);
std::vector<PrimePoly> monic_irreducibles_of_degree(const FieldPtr& field, std::size_t degree);

struct Factorization {
    Fq unit;
    std::vector<std::pair<PrimePoly, std::int64_t>> factors;  // sorted by prime
};

/// Complete factorization of a nonzero polynomial: squarefree decomposition
/// followed by Berlekamp splitting with F_p-trace separators. Deterministic.
Factorization factor(const Poly& f);

/// Formal derivative.
Poly derivative(const Poly& f);

}  // namespace ascyc
