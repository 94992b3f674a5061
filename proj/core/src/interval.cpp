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

#include "sierpharm/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "sierpharm/errors.hpp"

namespace sierpharm {

BigFloat::BigFloat(mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    // Steal the limb pointer; the moved-from object is left unowned.
    *value_ = *other.value_;
    other.live_ = false;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        if (!live_) {
            mpfr_init2(value_, mpfr_get_prec(other.value_));
            live_ = true;
        }
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) {
        std::swap(*value_, *other.value_);
        std::swap(live_, other.live_);
    }
    return *this;
}

BigFloat::~BigFloat() {
    if (live_) {
        mpfr_clear(value_);
    }
}

Interval::Interval(mpfr_prec_t precision) : lo_(precision), hi_(precision) {}

Interval Interval::point(const Rational& q, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::log2_constant(mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_const_log2(r.lo_.get(), MPFR_RNDD);
    mpfr_const_log2(r.hi_.get(), MPFR_RNDU);
    return r;
}

double Interval::midpoint() const {
    BigFloat m(precision() + 1);
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m.to_double(MPFR_RNDN);
}

double Interval::width() const {
    BigFloat w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w.to_double(MPFR_RNDU);
}

bool Interval::contains(double x) const {
    return mpfr_cmp_d(lo_.get(), x) <= 0 && mpfr_cmp_d(hi_.get(), x) >= 0;
}

bool Interval::below(const Rational& q) const {
    return mpfr_cmp_q(hi_.get(), q.get_mpq_t()) < 0;
}

bool Interval::above(const Rational& q) const {
    return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) > 0;
}

bool Interval::positive() const {
    return mpfr_sgn(lo_.get()) > 0;
}

bool Interval::negative() const {
    return mpfr_sgn(hi_.get()) < 0;
}

namespace {

mpfr_prec_t joint_precision(const Interval& a, const Interval& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(joint_precision(a, b));
    mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(joint_precision(a, b));
    mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = joint_precision(a, b);
    Interval r(prec);
    BigFloat t(prec);
    const mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
    const mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), r.lo_.get())) {
                mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
            }
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), r.hi_.get())) {
                mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
            }
            first = false;
        }
    }
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (!b.positive() && !b.negative()) {
        throw DomainError("interval division by an interval containing zero");
    }
    const mpfr_prec_t prec = joint_precision(a, b);
    Interval r(prec);
    BigFloat t(prec);
    const mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
    const mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_div(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), r.lo_.get())) {
                mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
            }
            mpfr_div(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), r.hi_.get())) {
                mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
            }
            first = false;
        }
    }
    return r;
}

Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo_.get()) < 0) {
        throw DomainError("square root of an interval reaching below zero");
    }
    Interval r(a.precision());
    mpfr_sqrt(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
    return r;
}

Interval log(const Interval& a) {
    if (!a.positive()) {
        throw DomainError("logarithm of an interval reaching zero");
    }
    Interval r(a.precision());
    mpfr_log(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
    return r;
}

std::string to_string(const Interval& iv) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", iv.lower(), iv.upper());
    return buf;
}

}  // namespace sierpharm
