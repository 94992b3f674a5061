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

#include "sierpharm/tangent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sierpharm/errors.hpp"

namespace sierpharm {

std::pair<Rational, Rational> cone_coefficients(const Vec3Q& v) {
    if (v.sum() != 0) {
        throw DomainError("vector " + to_string(v) + " is not in the plane x+y+z = 0");
    }
    // a v_0 + b v_1 = (-a - b/2, a/2 + b, ...).
    return {(-4 * v.x - 2 * v.y) / 3, (4 * v.y + 2 * v.x) / 3};
}

bool in_difference_cone(const Vec3Q& v) {
    if (v.sum() != 0) return false;
    auto [a, b] = cone_coefficients(v);
    return sgn(a) >= 0 && sgn(b) >= 0 && (sgn(a) > 0 || sgn(b) > 0);
}

Rational chart_of_plane_vector(const Vec3Q& v) {
    const auto c = plane_coordinates(v, PlaneBasis::V);
    if (c[1] == 0) {
        throw ConeError("direction " + to_string(v) + " is the chart's point at infinity");
    }
    return c[0] / c[1];
}

Rational chart_of(const Vec3Q& v) {
    if (!in_difference_cone(v)) {
        throw ConeError("vector " + to_string(v) + " is outside the difference cone");
    }
    return chart_of_plane_vector(v);
}

std::array<double, 3> chart_to_unit_vector(double chart) {
    // chart * v + w
    const double x = -0.5 * chart - 0.5;
    const double y = -0.5 * chart + 0.5;
    const double z = chart;
    const double norm = std::sqrt(x * x + y * y + z * z);
    return {x / norm, y / norm, z / norm};
}

Rational mobius(const ScaledIntMat2& m, const Rational& x) {
    const auto& e = m.entries;
    return (Rational(e[0][0]) * x + Rational(e[0][1])) / (Rational(e[1][0]) * x + Rational(e[1][1]));
}

QuadraticValue mobius(const ScaledIntMat2& m, const QuadraticValue& x) {
    const auto& e = m.entries;
    const QuadraticValue num = QuadraticValue(Rational(e[0][0])) * x + QuadraticValue(Rational(e[0][1]));
    const QuadraticValue den = QuadraticValue(Rational(e[1][0])) * x + QuadraticValue(Rational(e[1][1]));
    return num / den;
}

double mobius(const ScaledIntMat2& m, double x) {
    const auto& e = m.entries;
    return (e[0][0].get_d() * x + e[0][1].get_d()) / (e[1][0].get_d() * x + e[1][1].get_d());
}

namespace {

const ScaledIntMat2& chart_generator(char bit) {
    static const ScaledIntMat2 gens[2] = {restrict_to_plane(generator_matrix(Symbol::Zero), PlaneBasis::V),
                                          restrict_to_plane(generator_matrix(Symbol::One), PlaneBasis::V)};
    return gens[bit == '1'];
}

ScaledIntMat2 chart_word(std::string_view word) {
    require_bit_word(word);
    return restrict_to_plane(word_product(word), PlaneBasis::V);
}

}  // namespace

Rational tilde_apply(std::string_view word, const Rational& chart) {
    return mobius(chart_word(word), chart);
}

double tilde_apply(std::string_view word, double chart) {
    require_bit_word(word);
    double x = chart;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        x = mobius(chart_generator(*it), x);
    }
    return x;
}

std::pair<Rational, Rational> chart_enclosure(std::string_view word) {
    const ScaledIntMat2 m = chart_word(word);
    Rational lo = mobius(m, chart_min());
    Rational hi = mobius(m, chart_max());
    if (hi < lo) std::swap(lo, hi);
    return {lo, hi};
}

namespace {

Expansion side_expansion(const Rational& s, Side side) {
    if (side == Side::Right) {
        if (s == 1) throw SideError("no right-sided direction at s = 1");
        return expand(s, Variant::Upper);
    }
    if (s == 0) throw SideError("no left-sided direction at s = 0");
    return expand(s, Variant::Lower);
}

}  // namespace

ProjDir direction_at(const Expansion& e, Side side, double tol) {
    if (!(tol > 0)) {
        throw DomainError("direction tolerance must be positive");
    }
    const Expansion ex = side_expansion(expansion_value(e), side);
    std::size_t n = 0;
    if (tol < kChartDiameter) {
        n = static_cast<std::size_t>(std::ceil(std::log(tol / kChartDiameter) / std::log(kChartLipschitz)));
    }
    double x = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        x = mobius(chart_generator(ex.bit(i)), x);
    }
    ProjDir out;
    out.chart = x;
    // Each step is a contraction, so float rounding does not accumulate past
    // a few ulps of the chart's magnitude.
    out.error_bound = kChartDiameter * std::pow(kChartLipschitz, static_cast<double>(n)) +
                      16 * std::numeric_limits<double>::epsilon();
    out.exact = false;
    return out;
}

QuadDir direction_at_rational_exact(const Rational& s, Side side) {
    const Expansion ex = side_expansion(s, side);
    const ScaledIntMat2 period_map = chart_word(ex.period);
    const EigenData eig = dominant_eigen(period_map);
    QuadraticValue chart = eig.eigvec[0] / eig.eigvec[1];
    if (!ex.preperiod.empty()) {
        chart = mobius(chart_word(ex.preperiod), chart);
    }
    return {std::move(chart), ex.preperiod, ex.period};
}

QuadDir tangent_direction(const Rational& s) {
    return direction_at_rational_exact(s, s == 1 ? Side::Left : Side::Right);
}

std::string to_string(KernelVerdict verdict) {
    switch (verdict) {
        case KernelVerdict::InKernel:
            return "InKernel";
        case KernelVerdict::NotInKernel:
            return "NotInKernel";
        case KernelVerdict::Undetermined:
            return "Undetermined";
    }
    return "Undetermined";
}

KernelVerdict kernel_test(const LinearForm& form, const QuadDir& dir) {
    // form(x v + w) = x form(v) + form(w)
    const QuadraticValue value =
        dir.chart * QuadraticValue(form.apply(chart_v())) + QuadraticValue(form.apply(chart_w()));
    return value.sign() == 0 ? KernelVerdict::InKernel : KernelVerdict::NotInKernel;
}

KernelVerdict kernel_test(const LinearForm& form, const ProjDir& dir) {
    const Rational fv = form.apply(chart_v());
    const Rational fw = form.apply(chart_w());
    if (fv == 0 && fw == 0) return KernelVerdict::InKernel;
    if (dir.exact) {
        // Charts of exact directions are rational in this path only when they
        // came from a Rational; treat the float as exact.
        const Rational x(dir.chart);
        return x * fv + fw == 0 ? KernelVerdict::InKernel : KernelVerdict::NotInKernel;
    }
    const double a = fv.get_d();
    const double b = fw.get_d();
    const double lo = a * (dir.chart - dir.error_bound) + b;
    const double hi = a * (dir.chart + dir.error_bound) + b;
    const double slack = 8 * std::numeric_limits<double>::epsilon() * (std::abs(a) + std::abs(b));
    if ((lo > slack && hi > slack) || (lo < -slack && hi < -slack)) {
        return KernelVerdict::NotInKernel;
    }
    return KernelVerdict::Undetermined;
}

KernelVerdict kernel_test_refined(const LinearForm& form, const Expansion& e, Side side, unsigned max_bits) {
    const Rational fv = form.apply(chart_v());
    const Rational fw = form.apply(chart_w());
    if (fv == 0 && fw == 0) return KernelVerdict::InKernel;
    const Expansion ex = side_expansion(expansion_value(e), side);
    const Rational target = make_rational(1, pow2(max_bits));
    for (std::size_t n = 8;; n *= 2) {
        auto [lo, hi] = chart_enclosure(ex.prefix(n));
        const int s_lo = sgn(lo * fv + fw);
        const int s_hi = sgn(hi * fv + fw);
        if (s_lo == s_hi && s_lo != 0) {
            return KernelVerdict::NotInKernel;
        }
        if (hi - lo < target) {
            return KernelVerdict::Undetermined;
        }
    }
}

}  // namespace sierpharm
