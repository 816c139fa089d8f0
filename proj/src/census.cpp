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

#include "ascyc/census.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "ascyc/error.hpp"
#include "ascyc/unit_group.hpp"

namespace ascyc {

Integer n_alpha(const PrimePoly& prime, std::int64_t alpha) {
    const std::uint32_t p = prime.poly().field().p();
    const std::int64_t alpha0 = checked_alpha0(alpha, p);
    const Integer scaled = phi(prime, alpha - alpha0) * p;
    if (scaled % (p - 1) != 0) raise(Errc::InvariantViolated, "N_alpha is not an integer");
    return scaled / (p - 1);
}

bool census_identity_check(const PrimePoly& prime, std::int64_t alpha) {
    return n_alpha(prime, alpha) == n_beta_difference(prime, alpha) * prime.poly().field().p();
}

CensusSpace::CensusSpace(PrimePoly prime, std::int64_t alpha) : prime_(std::move(prime)), alpha_(alpha) {
    const FieldPtr& F = prime_.field_ptr();
    checked_alpha0(alpha, F->p());
    q_ = F->q();
    p_ = F->p();
    const std::size_t d = prime_.degree();
    const Integer radix = ipow(Integer(q_), d);
    const Integer size = phi(prime_, alpha) * q_;
    if (radix > (1U << 16) || size > std::numeric_limits<std::uint32_t>::max()) {
        raise(Errc::BudgetExceeded, "census space of size " + size.str() + " is too large to index");
    }
    radix_ = static_cast<std::uint32_t>(radix);
    size_ = static_cast<std::uint64_t>(size);

    const Poly& P = prime_.poly();
    std::vector<Poly> res;
    res.reserve(radix_);
    for (std::uint32_t r = 0; r < radix_; ++r) res.push_back(poly_from_code(F, d, r));
    add_.resize(std::size_t{radix_} * radix_);
    neg_.resize(radix_);
    smul_.resize(std::size_t{p_} * radix_);
    root_.resize(radix_);
    root_pow_digits_.resize(std::size_t{radix_} * p_);
    for (std::uint32_t r = 0; r < radix_; ++r) {
        for (std::uint32_t s = 0; s < radix_; ++s) add_[std::size_t{r} * radix_ + s] = static_cast<std::uint32_t>(code_of(res[r] + res[s], d));
        neg_[r] = static_cast<std::uint32_t>(code_of(-res[r], d));
        for (std::uint32_t j = 0; j < p_; ++j) {
            smul_[std::size_t{j} * radix_ + r] = static_cast<std::uint32_t>(code_of(res[r].scaled(F->from_int(j)), d));
        }
        const Poly b = residue_pth_root(res[r], P);
        root_[r] = static_cast<std::uint32_t>(code_of(b, d));
        const auto digits = padic_digits(b.frobenius(), P, p_);
        for (std::uint32_t k = 0; k < p_; ++k) root_pow_digits_[std::size_t{r} * p_ + k] = static_cast<std::uint32_t>(code_of(digits[k], d));
    }

    fold_constant_.resize(q_);
    scale_constant_.resize(std::size_t{p_} * q_);
    const Fq rho = F->rho();
    const Fq unit = F->div(rho, F->from_int(F->trace(rho)));
    for (std::uint32_t a = 0; a < q_; ++a) {
        const Fq x = F->element(a);
        fold_constant_[a] = F->mul(F->from_int(F->trace(x)), unit).v;
        for (std::uint32_t j = 0; j < p_; ++j) scale_constant_[std::size_t{j} * q_ + a] = F->mul(F->from_int(j), x).v;
    }
}

void CensusSpace::decode(std::uint64_t index, std::uint32_t& a, std::vector<std::uint32_t>& digits) const {
    digits.assign(static_cast<std::size_t>(alpha_) + 1, 0);
    a = static_cast<std::uint32_t>(index % q_);
    index /= q_;
    for (std::int64_t o = 1; o < alpha_; ++o) {
        digits[static_cast<std::size_t>(o)] = static_cast<std::uint32_t>(index % radix_);
        index /= radix_;
    }
    digits[static_cast<std::size_t>(alpha_)] = static_cast<std::uint32_t>(index) + 1;
}

std::uint64_t CensusSpace::encode(std::uint32_t a, const std::vector<std::uint32_t>& digits) const {
    std::uint64_t index = digits[static_cast<std::size_t>(alpha_)] - 1;
    for (std::int64_t o = alpha_ - 1; o >= 1; --o) index = index * radix_ + digits[static_cast<std::size_t>(o)];
    return index * q_ + a;
}

RatFunc CensusSpace::equation(std::uint64_t index) const {
    if (index >= size_) raise(Errc::InvalidArgument, "census index out of range");
    const FieldPtr& F = prime_.field_ptr();
    std::uint32_t a;
    std::vector<std::uint32_t> digits;
    decode(index, a, digits);
    Poly f(F);
    for (std::int64_t o = 1; o <= alpha_; ++o) {
        f = f * prime_.poly() + poly_from_code(F, prime_.degree(), digits[static_cast<std::size_t>(o)]);
    }
    return RatFunc(Poly::constant(F, F->element(a))) + RatFunc(f, prime_.poly().pow(static_cast<std::uint64_t>(alpha_)));
}

std::uint64_t CensusSpace::index_of(const RatFunc& s) const {
    const PartialFractions pf = partial_fractions(s);
    if (!pf.polypart.is_constant() || pf.terms.size() != 1 || !(pf.terms[0].prime == prime_) ||
        pf.terms[0].exponent != alpha_) {
        raise(Errc::InvalidArgument, "not of the form a + f / P^alpha with P prime to f");
    }
    const std::size_t d = prime_.degree();
    const auto raw = padic_digits(pf.terms[0].numerator, prime_.poly(), static_cast<std::size_t>(alpha_));
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(alpha_) + 1, 0);
    for (std::int64_t k = 0; k < alpha_; ++k) {
        digits[static_cast<std::size_t>(alpha_ - k)] = static_cast<std::uint32_t>(code_of(raw[static_cast<std::size_t>(k)], d));
    }
    return encode(pf.polypart[0].v, digits);
}

std::uint64_t CensusSpace::reduced(std::uint64_t index) const {
    std::uint32_t a;
    std::vector<std::uint32_t> D;
    decode(index, a, D);
    const auto p = static_cast<std::int64_t>(p_);
    for (std::int64_t o = alpha_ - alpha_ % p; o >= p; o -= p) {
        const std::uint32_t digit = D[static_cast<std::size_t>(o)];
        if (digit == 0) continue;
        // subtract wp(b / P^(o/p)) with b^p = digit mod P
        const std::uint32_t* bp = &root_pow_digits_[std::size_t{digit} * p_];
        for (std::int64_t k = 0; k < p; ++k) {
            auto& slot = D[static_cast<std::size_t>(o - k)];
            slot = add_[std::size_t{slot} * radix_ + neg_[bp[k]]];
        }
        auto& low = D[static_cast<std::size_t>(o / p)];
        low = add_[std::size_t{low} * radix_ + root_[digit]];
    }
    return encode(fold_constant_[a], D);
}

std::uint64_t CensusSpace::scaled(std::uint64_t index, std::uint32_t j) const {
    std::uint32_t a;
    std::vector<std::uint32_t> D;
    decode(index, a, D);
    j %= p_;
    if (j == 0) raise(Errc::InvalidArgument, "scaling by zero leaves the census space");
    for (auto& x : D) x = smul_[std::size_t{j} * radix_ + x];
    return encode(scale_constant_[std::size_t{j} * q_ + a], D);
}

namespace {

struct DisjointSets {
    std::vector<std::uint32_t> parent;

    explicit DisjointSets(std::uint64_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // the smaller index stays root, so each root is its class minimum
    void join(std::uint32_t x, std::uint32_t y) {
        x = find(x);
        y = find(y);
        if (x < y) parent[y] = x;
        else if (y < x) parent[x] = y;
    }
};

CensusReport empty_report(const PrimePoly& prime, std::int64_t alpha) {
    const FieldPtr& F = prime.field_ptr();
    const std::uint32_t p = F->p();
    const std::int64_t alpha0 = checked_alpha0(alpha, p);
    CensusReport r{F, prime, alpha, alpha0, n_alpha(prime, alpha), std::nullopt, phi(prime, alpha) * F->q(), 0, 0, 0, {}, false};
    r.expected_class_size = ipow(Integer(F->q()), prime.degree() * static_cast<std::uint64_t>(alpha0) + 1) * (p - 1) / p;
    return r;
}

}  // namespace

CensusReport census_bruteforce(const PrimePoly& prime, std::int64_t alpha, std::uint64_t budget,
                               const CensusOptions& options) {
    CensusReport report = empty_report(prime, alpha);
    if (report.enumerated_equations > budget) {
        raise(Errc::BudgetExceeded, "census needs " + report.enumerated_equations.str() + " equations, budget " +
                                        std::to_string(budget));
    }
    const CensusSpace space(prime, alpha);
    const std::uint64_t n = space.size();

    std::vector<std::uint32_t> red(n);
    unsigned workers = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, n / 4096)));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t i = n * w / workers; i < n * (w + 1) / workers; ++i) {
                    red[i] = static_cast<std::uint32_t>(space.reduced(i));
                }
            });
        }
    }

    DisjointSets sets(n);
    const std::uint32_t p = prime.poly().field().p();
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto x = static_cast<std::uint32_t>(i);
        sets.join(x, red[i]);
        if (red[i] == x) {
            for (std::uint32_t j = 2; j < p; ++j) sets.join(x, static_cast<std::uint32_t>(space.scaled(i, j)));
        }
    }

    std::vector<std::uint32_t> size_of(n, 0);
    std::uint64_t classes = 0;
    for (std::uint64_t i = 0; i < n; ++i) ++size_of[sets.find(static_cast<std::uint32_t>(i))];
    report.min_class_size = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t i = 0; i < n; ++i) {
        if (size_of[i] == 0) continue;
        ++classes;
        report.min_class_size = std::min<std::uint64_t>(report.min_class_size, size_of[i]);
        report.max_class_size = std::max<std::uint64_t>(report.max_class_size, size_of[i]);
        if (report.representatives.size() < options.max_representatives) {
            report.representatives.push_back(wp_reduce(space.equation(i)).form);
        } else {
            report.representatives_truncated = true;
        }
    }
    report.brute_count = classes;
    return report;
}

CensusReport census_report(const PrimePoly& prime, std::int64_t alpha, std::uint64_t budget, const CensusOptions& options) {
    CensusReport report = empty_report(prime, alpha);
    if (report.enumerated_equations > budget) return report;
    return census_bruteforce(prime, alpha, budget, options);
}

}  // namespace ascyc
