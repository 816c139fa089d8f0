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

#include "ascyc/unit_group.hpp"

#include <string>
#include <unordered_set>
#include <utility>

#include "ascyc/artin_schreier.hpp"
#include "ascyc/error.hpp"

namespace ascyc {

namespace {

void require_beta(std::int64_t beta) {
    if (beta < 1) raise(Errc::InvalidArgument, "beta must be positive, got " + std::to_string(beta));
}

Poly prime_power(const PrimePoly& prime, std::int64_t beta) {
    require_beta(beta);
    return prime.poly().pow(static_cast<std::uint64_t>(beta));
}

Integer qd(const PrimePoly& prime) { return ipow(Integer(prime.poly().field().q()), prime.degree()); }

// Prime factorization of Phi(P^beta) as (prime, exponent) pairs.
std::vector<std::pair<Integer, std::uint64_t>> factor_phi(const PrimePoly& prime, std::int64_t beta) {
    const Field& F = prime.poly().field();
    std::vector<std::pair<Integer, std::uint64_t>> out;
    const auto pexp = static_cast<std::uint64_t>(F.t()) * prime.degree() * static_cast<std::uint64_t>(beta - 1);
    if (pexp > 0) out.emplace_back(Integer(F.p()), pexp);
    Integer m = qd(prime) - 1;
    for (Integer l = 2; l * l <= m; ++l) {
        std::uint64_t e = 0;
        while (m % l == 0) {
            m /= l;
            ++e;
        }
        if (e > 0) out.emplace_back(l, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

}  // namespace

Residue::Residue(PrimePoly prime, std::int64_t beta, const Poly& rep)
    : prime_(std::move(prime)), beta_(beta), modulus_(prime_power(prime_, beta)), rep_(rep % modulus_) {}

Residue Residue::one(PrimePoly prime, std::int64_t beta) {
    const FieldPtr f = prime.field_ptr();
    return Residue(std::move(prime), beta, Poly::constant(f, Field::one()));
}

bool Residue::is_unit() const { return !(rep_ % prime_.poly()).is_zero(); }

Residue residue_mul(const Residue& a, const Residue& b) {
    if (a.beta() != b.beta() || !(a.prime() == b.prime())) raise(Errc::ModulusMismatch, "residues live modulo different P^beta");
    return Residue(a.prime(), a.beta(), mul_mod(a.rep(), b.rep(), a.modulus()));
}

Residue residue_pow(const Residue& a, const Integer& e) {
    return Residue(a.prime(), a.beta(), pow_mod(a.rep(), e, a.modulus()));
}

Integer phi(const PrimePoly& prime, std::int64_t beta) {
    require_beta(beta);
    const Integer r = qd(prime);
    return ipow(r, static_cast<std::uint64_t>(beta - 1)) * (r - 1);
}

Integer element_order(const Residue& a) {
    if (!a.is_unit()) raise(Errc::NotAUnit, "element_order needs a unit");
    Integer n = phi(a.prime(), a.beta());
    for (const auto& [l, e] : factor_phi(a.prime(), a.beta())) {
        for (std::uint64_t k = 0; k < e; ++k) {
            if (!pow_mod(a.rep(), n / l, a.modulus()).is_one()) break;
            n /= l;
        }
    }
    return n;
}

Integer count_order_p(const PrimePoly& prime, std::int64_t beta) {
    require_beta(beta);
    if (beta == 1) return 0;
    const auto p = static_cast<std::int64_t>(prime.poly().field().p());
    return ipow(qd(prime), static_cast<std::uint64_t>(beta - ceil_div(beta, p))) - 1;
}

Integer n_beta(const PrimePoly& prime, std::int64_t beta) {
    return count_order_p(prime, beta) / (prime.poly().field().p() - 1);
}

Integer n_beta_difference(const PrimePoly& prime, std::int64_t alpha) {
    const std::uint32_t p = prime.poly().field().p();
    const std::int64_t alpha0 = checked_alpha0(alpha, p);
    const Integer diff = n_beta(prime, alpha + 1) - n_beta(prime, alpha);
    const Integer expected = phi(prime, alpha - alpha0) / (p - 1);
    if (diff != expected) {
        raise(Errc::InvariantViolated, "N_(alpha+1) - N_alpha = " + diff.str() + " but Phi / (p-1) = " + expected.str());
    }
    return diff;
}

UnitScan scan_units(const PrimePoly& prime, std::int64_t beta, std::uint64_t budget, bool full_orders) {
    require_beta(beta);
    const FieldPtr& F = prime.field_ptr();
    const std::uint32_t p = F->p();
    const auto n = prime.degree() * static_cast<std::size_t>(beta);
    const Integer size = ipow(Integer(F->q()), n);
    if (size > budget) raise(Errc::BudgetExceeded, "q^(beta d) = " + size.str() + " exceeds the budget");

    const Residue unit = Residue::one(prime, beta);
    const Poly& mod = unit.modulus();
    const Integer order_of_group = phi(prime, beta);
    const auto p_ = static_cast<std::int64_t>(p);
    const Poly divisor = prime.poly().pow(beta > p_ ? static_cast<std::uint64_t>(ceil_div(beta, p_) - 1) : 0);

    UnitScan scan;
    scan.residues = static_cast<std::uint64_t>(size);
    std::unordered_set<std::uint64_t> order_p_codes;
    for (std::uint64_t code = 0; code < scan.residues; ++code) {
        const Poly a = poly_from_code(F, n, code);
        if ((a % prime.poly()).is_zero()) continue;
        ++scan.units;
        const Poly h = (a - unit.rep()) / prime.poly();  // exact when a = 1 mod P
        const bool one_unit = ((a - unit.rep()) % prime.poly()).is_zero();
        if (one_unit) ++scan.one_units;
        const Residue r(prime, beta, a);
        if (full_orders && order_of_group % element_order(r) != 0) scan.lagrange = false;
        if (a.is_one() || !pow_mod(a, p, mod).is_one()) continue;
        if (element_order(r) != p) raise(Errc::InvariantViolated, "a^p = 1 but the order is not p");
        if (!one_unit) raise(Errc::InvariantViolated, "order-p element not congruent to 1 mod P");
        if (beta > p_ && !(h % divisor).is_zero()) {
            raise(Errc::InvariantViolated, "order-p element 1 + hP with h not divisible by P^(ceil(beta/p)-1)");
        }
        ++scan.order_p;
        scan.order_p_elements.push_back(a);
        order_p_codes.insert(code);
    }

    std::unordered_set<std::uint64_t> seen;
    for (const Poly& x : scan.order_p_elements) {
        if (!seen.insert(code_of(x, n)).second) continue;
        ++scan.subgroups;
        Poly y = x;
        for (std::uint32_t k = 2; k < p; ++k) {
            y = mul_mod(y, x, mod);
            if (!order_p_codes.contains(code_of(y, n))) raise(Errc::InvariantViolated, "power of an order-p element escaped");
            seen.insert(code_of(y, n));
        }
    }
    return scan;
}

Integer count_order_p_bruteforce(const PrimePoly& prime, std::int64_t beta, std::uint64_t budget) {
    return scan_units(prime, beta, budget).order_p;
}

}  // namespace ascyc
