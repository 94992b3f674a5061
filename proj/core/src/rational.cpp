// Copyright 2026 The sierpharm Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sierpharm/rational.hpp"

#include <cctype>
#include <ostream>

#include "sierpharm/errors.hpp"

namespace sierpharm {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt pow5(unsigned long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 5, k);
    return r;
}

BigInt pow2(unsigned long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    return make_rational(num, den);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw ParseError("not a rational number: '" + std::string(whole) + "'");
    }
    BigInt v(std::string(s), 10);
    return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("empty rational");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), text);
        BigInt den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
        return make_rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            int_part.remove_prefix(1);
        }
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw ParseError("not a decimal number: '" + std::string(text) + "'");
        }
        std::string digits = std::string(int_part) + std::string(frac_part);
        BigInt num(digits.empty() ? std::string("0") : digits, 10);
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
        Rational q = make_rational(num, den);
        return negative ? Rational(-q) : q;
    }
    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational Vec3Q::max_abs() const {
    Rational m = abs(x);
    if (abs(y) > m) m = abs(y);
    if (abs(z) > m) m = abs(z);
    return m;
}

bool Vec3Q::in_triangle() const {
    return sum() == 1 && sgn(x) >= 0 && sgn(y) >= 0 && sgn(z) >= 0;
}

std::string to_string(const Vec3Q& v) {
    return to_string(v.x) + " " + to_string(v.y) + " " + to_string(v.z);
}

std::ostream& operator<<(std::ostream& os, const Vec3Q& v) {
    return os << "(" << to_string(v.x) << ", " << to_string(v.y) << ", " << to_string(v.z) << ")";
}

}  // namespace sierpharm
