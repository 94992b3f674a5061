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

#include <array>
#include <iosfwd>
#include <string>

#include "sierpharm/interval.hpp"
#include "sierpharm/matrix.hpp"
#include "sierpharm/rational.hpp"

namespace sierpharm {

// Exact element a + b*sqrt(d) of Q(sqrt d), d >= 0 rational.
//
// Eigenvalues of 2x2 restrictions come out as (t + sqrt(d))/2 with t the trace
// and d the discriminant; from_half_form builds that shape. Radicands that are
// perfect squares are folded into the rational part, so the conjugate of a
// nonzero value is nonzero. Binary operations require a common radicand unless
// one operand is rational.
class QuadraticValue {
public:
    QuadraticValue() = default;
    QuadraticValue(Rational rational);  // NOLINT(google-explicit-constructor)
    QuadraticValue(Rational rational_part, Rational radical_coeff, Rational radicand);

    static QuadraticValue from_half_form(const Rational& t, const Rational& d);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    const Rational& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    // The (t, d) pair when the value has the shape (t +- sqrt d)/2.
    Rational half_form_t() const { return 2 * a_; }
    Rational half_form_d() const { return 4 * b_ * b_ * d_; }

    QuadraticValue conjugate() const { return {a_, -b_, d_}; }
    // a^2 - b^2 d, the product with the conjugate.
    Rational norm() const { return a_ * a_ - b_ * b_ * d_; }

    int sign() const;
    double to_double() const;
    Interval enclose(mpfr_prec_t precision) const;

    friend QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator-(const QuadraticValue& x);
    friend QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator/(const QuadraticValue& x, const QuadraticValue& y);
    friend bool operator==(const QuadraticValue& x, const QuadraticValue& y) { return (x - y).sign() == 0; }
    friend bool operator<(const QuadraticValue& x, const QuadraticValue& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadraticValue& x, const QuadraticValue& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadraticValue& x, const QuadraticValue& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadraticValue& x, const QuadraticValue& y) { return (x - y).sign() >= 0; }

private:
    void normalize();

    Rational a_ = 0;
    Rational b_ = 0;
    Rational d_ = 0;
};

std::string to_string(const QuadraticValue& q);
std::ostream& operator<<(std::ostream& os, const QuadraticValue& q);

// Eigen-data of a 2x2 restriction with two distinct real eigenvalues.
struct EigenData {
    QuadraticValue lambda;  // larger eigenvalue
    QuadraticValue mu;      // smaller eigenvalue
    // Eigenvector of lambda in the coordinates of the matrix's basis.
    std::array<QuadraticValue, 2> eigvec;
};

// Throws DegenerateError when trace^2 - 4 det <= 0.
EigenData dominant_eigen(const ScaledIntMat2& m);

}  // namespace sierpharm
