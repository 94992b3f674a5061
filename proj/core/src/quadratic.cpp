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

#include "sierpharm/quadratic.hpp"

#include <ostream>

#include "sierpharm/errors.hpp"

namespace sierpharm {

namespace {

bool is_square(const BigInt& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt isqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool rational_sqrt(const Rational& q, Rational& root) {
    if (!is_square(q.get_num()) || !is_square(q.get_den())) return false;
    root = make_rational(isqrt(q.get_num()), isqrt(q.get_den()));
    return true;
}

// Rewrites y over x's radicand when both live in the same field.
QuadraticValue aligned(const QuadraticValue& x, const QuadraticValue& y) {
    if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) return y;
    Rational r;
    if (!rational_sqrt(y.radicand() / x.radicand(), r)) {
        throw DomainError("quadratic values from different fields");
    }
    return {y.rational_part(), y.radical_coeff() * r, x.radicand()};
}

Rational common_radicand(const QuadraticValue& x, const QuadraticValue& y) {
    if (x.is_rational()) return y.radicand();
    return x.radicand();
}

}  // namespace

QuadraticValue::QuadraticValue(Rational rational) : a_(std::move(rational)) {}

QuadraticValue::QuadraticValue(Rational rational_part, Rational radical_coeff, Rational radicand)
    : a_(std::move(rational_part)), b_(std::move(radical_coeff)), d_(std::move(radicand)) {
    if (sgn(d_) < 0) {
        throw DomainError("negative radicand");
    }
    normalize();
}

QuadraticValue QuadraticValue::from_half_form(const Rational& t, const Rational& d) {
    return {t / 2, Rational(1, 2), d};
}

void QuadraticValue::normalize() {
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
        return;
    }
    // sqrt(p/q) = sqrt(p q) / q, then pull out small square factors.
    BigInt d = d_.get_num() * d_.get_den();
    b_ /= Rational(d_.get_den());
    for (unsigned long f = 2; f < 1000 && BigInt(f * f) <= d; ++f) {
        const unsigned long f2 = f * f;
        while (mpz_divisible_ui_p(d.get_mpz_t(), f2)) {
            mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), f2);
            b_ *= f;
        }
    }
    if (is_square(d)) {
        a_ += b_ * Rational(isqrt(d));
        b_ = 0;
        d_ = 0;
        return;
    }
    d_ = Rational(d);
}

int QuadraticValue::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * d_;
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

double QuadraticValue::to_double() const {
    return enclose(128).midpoint();
}

Interval QuadraticValue::enclose(mpfr_prec_t precision) const {
    Interval r = Interval::point(a_, precision);
    if (b_ != 0) {
        r = r + Interval::point(b_, precision) * sqrt(Interval::point(d_, precision));
    }
    return r;
}

QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y_in) {
    const QuadraticValue y = aligned(x, y_in);
    const Rational d = common_radicand(x, y);
    return {x.a_ + y.a_, x.b_ + y.b_, d};
}

QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y_in) {
    const QuadraticValue y = aligned(x, y_in);
    const Rational d = common_radicand(x, y);
    return {x.a_ - y.a_, x.b_ - y.b_, d};
}

QuadraticValue operator-(const QuadraticValue& x) {
    return {-x.a_, -x.b_, x.d_};
}

QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y_in) {
    const QuadraticValue y = aligned(x, y_in);
    const Rational d = common_radicand(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadraticValue operator/(const QuadraticValue& x, const QuadraticValue& y) {
    const Rational n = y.norm();
    if (n == 0) {
        throw DomainError("division by zero in quadratic field");
    }
    QuadraticValue inv(y.a_ / n, -y.b_ / n, y.d_);
    return x * inv;
}

std::string to_string(const QuadraticValue& q) {
    if (q.is_rational()) {
        return to_string(q.rational_part());
    }
    std::string s;
    if (q.rational_part() != 0) {
        s = to_string(q.rational_part()) + (sgn(q.radical_coeff()) > 0 ? " + " : " - ");
    } else if (sgn(q.radical_coeff()) < 0) {
        s = "-";
    }
    const Rational c = abs(q.radical_coeff());
    if (c != 1) {
        s += to_string(c) + "*";
    }
    return s + "sqrt(" + to_string(q.radicand()) + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadraticValue& q) {
    return os << to_string(q);
}

EigenData dominant_eigen(const ScaledIntMat2& m) {
    const Rational trace = m.trace();
    const Rational det = m.determinant();
    const Rational disc = trace * trace - 4 * det;
    if (sgn(disc) <= 0) {
        throw DegenerateError("restriction has no pair of distinct real eigenvalues (discriminant " +
                              to_string(disc) + ")");
    }
    EigenData out;
    out.lambda = QuadraticValue::from_half_form(trace, disc);
    out.mu = QuadraticValue(trace / 2, Rational(-1, 2), disc);

    const Rational a = m.at(0, 0);
    const Rational b = m.at(0, 1);
    const Rational c = m.at(1, 0);
    const Rational d = m.at(1, 1);
    if (c != 0) {
        out.eigvec = {out.lambda - QuadraticValue(d), QuadraticValue(c)};
    } else if (b != 0) {
        out.eigvec = {QuadraticValue(b), out.lambda - QuadraticValue(a)};
    } else if (a > d) {
        out.eigvec = {QuadraticValue(Rational(1)), QuadraticValue(Rational(0))};
    } else {
        out.eigvec = {QuadraticValue(Rational(0)), QuadraticValue(Rational(1))};
    }
    return out;
}

}  // namespace sierpharm
