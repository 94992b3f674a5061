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

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace sierpharm {

using BigInt = mpz_class;
// mpq_class keeps numerator/denominator reduced with a positive denominator as
// long as it is built through canonical operations; make_rational enforces it
// for hand-assembled values.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

// 5^k and 2^k as exact integers.
BigInt pow5(unsigned long k);
BigInt pow2(unsigned long k);

Rational rational_pow(const Rational& base, unsigned long exponent);

// "p/q", "p", or an exact decimal "0.125" / "-1.5".
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Point or vector of R^3 in the basis (e_0, e_1, e_omega).
struct Vec3Q {
    Rational x;
    Rational y;
    Rational z;

    static Vec3Q e0() { return {1, 0, 0}; }
    static Vec3Q e1() { return {0, 1, 0}; }
    static Vec3Q e_omega() { return {0, 0, 1}; }

    Rational sum() const { return x + y + z; }
    Rational dot(const Vec3Q& other) const { return x * other.x + y * other.y + z * other.z; }

    // Max-norm |.|_inf.
    Rational max_abs() const;

    // True on the triangle K = {x+y+z = 1, all coordinates >= 0}.
    bool in_triangle() const;

    friend Vec3Q operator+(const Vec3Q& a, const Vec3Q& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3Q operator-(const Vec3Q& a, const Vec3Q& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3Q operator*(const Rational& k, const Vec3Q& a) { return {k * a.x, k * a.y, k * a.z}; }
    friend bool operator==(const Vec3Q& a, const Vec3Q& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
};

std::string to_string(const Vec3Q& v);
std::ostream& operator<<(std::ostream& os, const Vec3Q& v);

}  // namespace sierpharm
