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

#include <boost/multiprecision/cpp_int.hpp>

namespace ascyc {

/// Exact integer used for closed-form counts, which overflow 64 bits quickly.
using Integer = boost::multiprecision::cpp_int;

inline Integer ipow(const Integer& base, std::uint64_t exp) {
    Integer result = 1;
    Integer b = base;
    while (exp != 0) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp != 0) b *= b;
    }
    return result;
}

/// ceil(a / b) for non-negative a and positive b.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

constexpr std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const auto r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool is_prime_u64(std::uint64_t n);

}  // namespace ascyc
