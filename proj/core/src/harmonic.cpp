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

#include "sierpharm/harmonic.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <limits>

namespace sierpharm {

LinearForm parse_linear_form(std::string_view text) {
    if (text == "phi") return LinearForm::phi();
    if (text == "psi") return LinearForm::psi();
    if (text == "chi") return LinearForm::chi();
    if (text == "xi") return LinearForm::xi();
    const auto c1 = text.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
    if (c2 == std::string_view::npos || text.find(',', c2 + 1) != std::string_view::npos) {
        throw ParseError("unknown linear form '" + std::string(text) + "' (expected phi, psi, chi, xi or a,b,c)");
    }
    return {parse_rational(text.substr(0, c1)), parse_rational(text.substr(c1 + 1, c2 - c1 - 1)),
            parse_rational(text.substr(c2 + 1))};
}

std::string to_string(const LinearForm& form) {
    return to_string(form.a) + "," + to_string(form.b) + "," + to_string(form.c);
}

Vec3Q u_exact_dyadic(const BigInt& k, unsigned long n) {
    const BigInt top = pow2(n);
    if (sgn(k) < 0 || k > top) {
        throw RangeError("dyadic index " + k.get_str() + " outside [0, 2^" + std::to_string(n) + "]");
    }
    if (k == top) {
        return Vec3Q::e1();
    }
    // u(0.w) = M_w e_0; apply the generators right to left.
    static const ScaledIntMat3 gens[2] = {generator_matrix(Symbol::Zero), generator_matrix(Symbol::One)};
    Vec3Q v = Vec3Q::e0();
    for (unsigned long i = 0; i < n; ++i) {
        const int bit = mpz_tstbit(k.get_mpz_t(), i);
        v = gens[bit].apply(v);
    }
    return v;
}

Vec3Q u_exact_dyadic(const Rational& s) {
    if (sgn(s) < 0 || s > 1) {
        throw DomainError("point " + to_string(s) + " outside [0,1]");
    }
    const BigInt& den = s.get_den();
    if (mpz_popcount(den.get_mpz_t()) != 1) {
        throw DomainError(to_string(s) + " is not dyadic");
    }
    return u_exact_dyadic(s.get_num(), mpz_scan1(den.get_mpz_t(), 0));
}

namespace {

double round_up(const Rational& q) {
    mpfr_t t;
    mpfr_init2(t, 53);
    mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDU);
    double d = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return d;
}

}  // namespace

ApproxPoint u_approx(const Expansion& e, unsigned long n) {
    const Rational third(1, 3);
    return u_approx(e, n, Vec3Q{third, third, third});
}

ApproxPoint u_approx(const Expansion& e, unsigned long n, const Vec3Q& u0) {
    if (!u0.in_triangle()) {
        throw DomainError("initial value must lie in the triangle K");
    }
    const ScaledIntMat3 m = word_product(e.prefix(n));
    const Vec3Q v = m.apply(u0);

    // The image of K is the triangle spanned by the three columns.
    BigInt widest = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            for (int r = 0; r < 3; ++r) {
                BigInt d = abs(m.entries[r][i] - m.entries[r][j]);
                if (d > widest) widest = d;
            }
        }
    }
    ApproxPoint out;
    out.value = {v.x.get_d(), v.y.get_d(), v.z.get_d()};
    // get_d truncates; coordinates are in [0, 1] so one ulp of 1 covers it.
    out.error_bound = round_up(make_rational(widest, pow5(m.pow5))) + 2 * std::numeric_limits<double>::epsilon();
    return out;
}

Vec3Q f_exact_address(std::string_view word) {
    return word_product(word).apply(Vec3Q::e0());
}

Vec3Q symmetry_apply(const Vec3Q& v) {
    return {v.y, v.x, v.z};
}

Rational uacb_eval(const LinearForm& form, const BigInt& k, unsigned long n) {
    return form.apply(u_exact_dyadic(k, n));
}

ScalarApprox uacb_eval(const LinearForm& form, const Expansion& e, unsigned long n) {
    const ApproxPoint p = u_approx(e, n);
    const double a = form.a.get_d();
    const double b = form.b.get_d();
    const double c = form.c.get_d();
    ScalarApprox out;
    out.value = a * p.value[0] + b * p.value[1] + c * p.value[2];
    const double l1 = round_up(form.l1_norm());
    out.error_bound = l1 * p.error_bound * (1 + 4 * std::numeric_limits<double>::epsilon()) +
                      4 * std::numeric_limits<double>::epsilon() * l1;
    return out;
}

std::array<double, 2> GridPoint::cartesian() const {
    const double pd = p.get_d();
    const double qd = q.get_d();
    return {pd + 0.5 * qd, qd * std::sqrt(3.0) / 2.0};
}

unsigned default_grid_cap() {
    if (const char* env = std::getenv("HARMONIC_GRID_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) {
            return static_cast<unsigned>(v);
        }
    }
    return 10;
}

}  // namespace sierpharm
