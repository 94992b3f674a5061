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
#include <string>
#include <string_view>
#include <utility>

#include "sierpharm/expansion.hpp"
#include "sierpharm/harmonic.hpp"
#include "sierpharm/matrix.hpp"
#include "sierpharm/quadratic.hpp"
#include "sierpharm/rational.hpp"

namespace sierpharm {

// Directions in the vector plane are handled through the chart
//   pi(a v + b w) = a / b,   v = (-1/2, -1/2, 1),  w = (-1/2, 1/2, 0),
// which maps the projectivised difference cone onto [-1/3, 1/3]. In this
// chart both projective generator maps are 3/4-Lipschitz.

inline const Rational& chart_min() {
    static const Rational v(-1, 3);
    return v;
}
inline const Rational& chart_max() {
    static const Rational v(1, 3);
    return v;
}
inline constexpr double kChartLipschitz = 0.75;
inline constexpr double kChartDiameter = 2.0 / 3.0;

// Direction chart as a function of s: 1/3 at s = 0 (direction v_0), -1/3 at
// s = 1 (direction v_1), strictly decreasing in between on every sample grid
// tried. Frozen here; the tangent tests check it.
inline constexpr bool kDirectionChartDecreasing = true;

// Generators of the difference cone.
inline Vec3Q cone_v0() { return {-1, Rational(1, 2), Rational(1, 2)}; }
inline Vec3Q cone_v1() { return {Rational(-1, 2), 1, Rational(-1, 2)}; }
// Eigenvectors of the 1/5 eigenvalue.
inline Vec3Q eigen_w0() { return {0, Rational(1, 2), Rational(-1, 2)}; }
inline Vec3Q eigen_w1() { return {Rational(-1, 2), 0, Rational(1, 2)}; }
// Chart basis.
inline Vec3Q chart_v() { return {Rational(-1, 2), Rational(-1, 2), 1}; }
inline Vec3Q chart_w() { return {Rational(-1, 2), Rational(1, 2), 0}; }

// (a, b) with v = a v_0 + b v_1; v must lie in the vector plane.
std::pair<Rational, Rational> cone_coefficients(const Vec3Q& v);
// a, b >= 0 and (a, b) != (0, 0).
bool in_difference_cone(const Vec3Q& v);

// a/b for v = a v + b w. Throws ConeError unless v is in the difference cone.
Rational chart_of(const Vec3Q& v);
// Same decomposition without the cone check; b must be nonzero.
Rational chart_of_plane_vector(const Vec3Q& v);

// Unit Euclidean vector of the direction with the given chart, oriented into
// the cone (three coordinates summing to zero).
std::array<double, 3> chart_to_unit_vector(double chart);

// Projective action of a 2x2 restriction in basis V on the chart.
Rational mobius(const ScaledIntMat2& m, const Rational& x);
QuadraticValue mobius(const ScaledIntMat2& m, const QuadraticValue& x);
double mobius(const ScaledIntMat2& m, double x);

// M~_w applied to a chart value; w over {0, 1}.
Rational tilde_apply(std::string_view word, const Rational& chart);
double tilde_apply(std::string_view word, double chart);

// Exact chart interval M~_w([-1/3, 1/3]) as (low, high).
std::pair<Rational, Rational> chart_enclosure(std::string_view word);

enum class Side { Right, Left };

struct ProjDir {
    double chart = 0.0;
    double error_bound = 0.0;
    bool exact = false;
};

// Tangent direction at a rational point as an exact quadratic chart value.
struct QuadDir {
    QuadraticValue chart;
    std::string preperiod;
    std::string period;
};

// Right: lim pi(u(t) - u(s)), t -> s+, via the upper expansion.
// Left:  lim pi(u(s) - u(t)), t -> s-, via the lower expansion.
// The expansion's value picks the point; its variant tag is ignored. Throws
// SideError for Right at s = 1 and Left at s = 0.
ProjDir direction_at(const Expansion& e, Side side, double tol);

QuadDir direction_at_rational_exact(const Rational& s, Side side);

// Folded tangent direction: the right-sided one except at s = 1.
QuadDir tangent_direction(const Rational& s);

enum class KernelVerdict { InKernel, NotInKernel, Undetermined };

std::string to_string(KernelVerdict verdict);

KernelVerdict kernel_test(const LinearForm& form, const QuadDir& dir);
KernelVerdict kernel_test(const LinearForm& form, const ProjDir& dir);
// Certified test via exact chart enclosures M~_{prefix}([-1/3, 1/3]),
// lengthening the prefix until the enclosure is narrower than 2^-max_bits.
KernelVerdict kernel_test_refined(const LinearForm& form, const Expansion& e, Side side, unsigned max_bits = 256);

}  // namespace sierpharm
