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
#include <string>
#include <string_view>
#include <utility>

#include "ascyc/ratfunc.hpp"

namespace ascyc {

// Text grammar shared by every command:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary | unary)*    juxtaposition before T, g, '('
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | 'T' | 'g' | '(' expr ')'
// Integers map through Z -> F_p; g is the class of x in F_p[x]/(modulus)
// and is only accepted when t > 1. Whitespace is ignored.

RatFunc parse_ratfunc(const FieldPtr& field, std::string_view text);
/// As parse_ratfunc, but the value must be a polynomial.
Poly parse_poly(const FieldPtr& field, std::string_view text);
/// Accepts "q" or "p^t", e.g. "9" or "3^2"; returns (p, t).
std::pair<std::uint32_t, std::uint32_t> parse_field_order(std::string_view text);

std::string to_string(const Field& field, Fq a);
std::string to_string(const Poly& f);
std::string to_string(const RatFunc& r);
/// "F_9 = F_3[g]/(g^2 + 1)" style description.
std::string describe(const Field& field);

}  // namespace ascyc
