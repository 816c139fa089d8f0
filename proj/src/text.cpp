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

#include "ascyc/text.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace ascyc {

namespace {

constexpr std::uint64_t kMaxExponent = 1U << 20U;

class Parser {
public:
    Parser(const FieldPtr& field, std::string_view text) : field_(field) {
        for (const char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
        }
    }

    RatFunc parse() {
        if (src_.empty()) fail("empty expression");
        RatFunc r = expr();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        raise(Errc::ParseError, what + " at offset " + std::to_string(pos_));
    }
    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    RatFunc expr() {
        RatFunc acc = term();
        while (peek() == '+' || peek() == '-') {
            const char op = src_[pos_++];
            RatFunc rhs = term();
            acc = op == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    RatFunc term() {
        RatFunc acc = unary();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos_;
                RatFunc rhs = unary();
                if (rhs.is_zero()) fail("division by zero");
                acc = acc / rhs;
            } else if (c == 'T' || c == 'g' || c == '(') {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    RatFunc unary() {
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        if (peek() != '^') return base;
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer");
        const std::uint64_t e = integer();
        if (e > kMaxExponent) fail("exponent too large");
        return base.pow(e);
    }

    std::uint64_t integer() {
        std::uint64_t n = 0;
        bool any = false;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            const auto digit = static_cast<std::uint64_t>(src_[pos_++] - '0');
            if (n > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("integer too large");
            n = n * 10 + digit;
            any = true;
        }
        if (!any) fail("expected an integer");
        return n;
    }

    RatFunc atom() {
        const char c = peek();
        if (c == 'T') {
            ++pos_;
            return RatFunc(Poly::variable(field_));
        }
        if (c == 'g') {
            if (field_->t() == 1) fail("generator symbol g requires a non-prime field");
            ++pos_;
            return RatFunc(Poly::constant(field_, field_->generator()));
        }
        if (c == '(') {
            ++pos_;
            RatFunc inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t n = integer();
            return RatFunc(Poly::constant(field_, field_->from_int(static_cast<std::int64_t>(n % field_->p()))));
        }
        if (at_end()) fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const FieldPtr& field_;
    std::string src_;
    std::size_t pos_ = 0;
};

std::string monomial(const std::string& coeff, bool coeff_is_one, bool coeff_is_sum, const char* var,
                     std::size_t k) {
    std::string power;
    if (k >= 1) {
        power = var;
        if (k > 1) power += "^" + std::to_string(k);
    }
    if (k == 0) return coeff;
    if (coeff_is_one) return power;
    return (coeff_is_sum ? "(" + coeff + ")" : coeff) + "*" + power;
}

bool is_sum(const std::string& s) { return s.find('+') != std::string::npos; }

}  // namespace

RatFunc parse_ratfunc(const FieldPtr& field, std::string_view text) { return Parser(field, text).parse(); }

Poly parse_poly(const FieldPtr& field, std::string_view text) {
    RatFunc r = parse_ratfunc(field, text);
    if (!r.is_polynomial()) raise(Errc::ParseError, "expected a polynomial, got a proper fraction");
    return r.num();
}

std::pair<std::uint32_t, std::uint32_t> parse_field_order(std::string_view text) {
    const auto parse_u = [&](std::string_view s) {
        if (s.empty() || s.size() > 9) raise(Errc::ParseError, "bad field order '" + std::string(text) + "'");
        std::uint32_t n = 0;
        for (const char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                raise(Errc::ParseError, "bad field order '" + std::string(text) + "'");
            }
            n = n * 10 + static_cast<std::uint32_t>(c - '0');
        }
        return n;
    };
    if (const auto caret = text.find('^'); caret != std::string_view::npos) {
        return {parse_u(text.substr(0, caret)), parse_u(text.substr(caret + 1))};
    }
    std::uint64_t q = parse_u(text);
    if (q < 2) raise(Errc::ParseError, "field order must be at least 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t t = 0;
    while (q % p == 0) {
        q /= p;
        ++t;
    }
    if (q != 1) raise(Errc::NonPrimeP, "field order is not a prime power");
    return {p, t};
}

std::string to_string(const Field& field, Fq a) {
    if (field.t() == 1) return std::to_string(a.v);
    if (a.is_zero()) return "0";
    const auto d = field.digits(a);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        out += monomial(std::to_string(d[i]), d[i] == 1, false, "g", i);
    }
    return out;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t k = f.size(); k-- > 0;) {
        const Fq c = f[k];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string cs = to_string(f.field(), c);
        out += monomial(cs, c == Field::one(), is_sum(cs), "T", k);
    }
    return out;
}

std::string to_string(const RatFunc& r) {
    if (r.is_polynomial()) return to_string(r.num());
    const auto wrap = [](const Poly& f) {
        std::string s = to_string(f);
        return f.nonzero_terms() > 1 || is_sum(s) ? "(" + s + ")" : s;
    };
    return wrap(r.num()) + "/" + wrap(r.den());
}

std::string describe(const Field& field) {
    std::string s = "F_" + std::to_string(field.q());
    if (field.t() == 1) return s;
    std::string m;
    const auto& mod = field.modulus();
    for (std::size_t i = mod.size(); i-- > 0;) {
        if (mod[i] == 0) continue;
        if (!m.empty()) m += " + ";
        m += monomial(std::to_string(mod[i]), mod[i] == 1, false, "g", i);
    }
    return s + " = F_" + std::to_string(field.p()) + "[g]/(" + m + ")";
}

}  // namespace ascyc
