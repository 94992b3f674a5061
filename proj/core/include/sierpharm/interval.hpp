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

#include <mpfr.h>

#include <string>

#include "sierpharm/rational.hpp"

namespace sierpharm {

// RAII handle around an mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

    double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }

private:
    mpfr_t value_;
    bool live_ = true;
};

// Closed interval [lo, hi] with outward-rounded endpoints. Every operation
// returns an enclosure of the exact result for all inputs in the operands.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision);
    static Interval point(const Rational& q, mpfr_prec_t precision);
    static Interval log2_constant(mpfr_prec_t precision);

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    mpfr_prec_t precision() const { return lo_.precision(); }

    double lower() const { return lo_.to_double(MPFR_RNDD); }
    double upper() const { return hi_.to_double(MPFR_RNDU); }
    double midpoint() const;
    // Width rounded up to double.
    double width() const;

    bool contains(double x) const;
    // True when every point of the interval is strictly below / above q.
    bool below(const Rational& q) const;
    bool above(const Rational& q) const;
    bool positive() const;
    bool negative() const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    // Divisor must exclude zero.
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval sqrt(const Interval& a);
    // Argument must be strictly positive.
    friend Interval log(const Interval& a);

private:
    BigFloat lo_;
    BigFloat hi_;
};

std::string to_string(const Interval& iv);

}  // namespace sierpharm
