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
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sierpharm/errors.hpp"
#include "sierpharm/expansion.hpp"
#include "sierpharm/matrix.hpp"
#include "sierpharm/rational.hpp"

namespace sierpharm {

// Values of a harmonic function at the three corners: f(0) = a, f(1) = b,
// f(omega) = c. V is Rational (scalar functions) or Vec3Q.
template <typename V>
struct BoundaryTriple {
    V a;
    V b;
    V c;
};

// Boundary (e_0, e_1, e_omega) of the universal function whose side
// restriction is u.
inline BoundaryTriple<Vec3Q> universal_boundary() {
    return {Vec3Q::e0(), Vec3Q::e1(), Vec3Q::e_omega()};
}

// Row (a b c) acting on R^3. u_{a,c,b} = form . u.
struct LinearForm {
    Rational a;
    Rational b;
    Rational c;

    Rational apply(const Vec3Q& v) const { return a * v.x + b * v.y + c * v.z; }
    Rational l1_norm() const { return abs(a) + abs(b) + abs(c); }

    static LinearForm phi() { return {0, 1, 0}; }
    static LinearForm psi() { return {0, 1, 1}; }
    static LinearForm chi() { return {0, 1, -1}; }
    static LinearForm xi() { return {0, 1, 2}; }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// Preset name (phi, psi, chi, xi) or "a,b,c" with rational entries.
LinearForm parse_linear_form(std::string_view text);
std::string to_string(const LinearForm& form);

// Approximate value with a certified max-norm error radius.
struct ApproxPoint {
    std::array<double, 3> value{};
    double error_bound = 0.0;
};

struct ScalarApprox {
    double value = 0.0;
    double error_bound = 0.0;
};

// u(k / 2^n) exactly. k = 2^n gives u(1) = e_1.
Vec3Q u_exact_dyadic(const BigInt& k, unsigned long n);
// Same, for a dyadic rational s in [0,1].
Vec3Q u_exact_dyadic(const Rational& s);

// M_{a_1..a_n}(u0) with error bound diam(M_{a_1..a_n}(K)) (max norm),
// rounded up and widened by the float conversion error. Default u0 is the
// centroid of K.
ApproxPoint u_approx(const Expansion& e, unsigned long n);
ApproxPoint u_approx(const Expansion& e, unsigned long n, const Vec3Q& u0);

// Value of the universal harmonic function at h_w(0), w over {0, 1, omega}.
Vec3Q f_exact_address(std::string_view word);

// Swap of the first two coordinates: u(1 - s) = P u(s).
Vec3Q symmetry_apply(const Vec3Q& v);

Rational uacb_eval(const LinearForm& form, const BigInt& k, unsigned long n);
ScalarApprox uacb_eval(const LinearForm& form, const Expansion& e, unsigned long n);

template <typename V>
struct Midpoints {
    V st;  // at (s+t)/2
    V su;  // at (s+u)/2
    V tu;  // at (t+u)/2
};

// Harmonic extension to the midpoints of a triangle (s, t, u) with the
// (2, 2, 1)/5 weights.
template <typename V>
Midpoints<V> subdivide(const V& fs, const V& ft, const V& fu) {
    const Rational two_fifths(2, 5);
    const Rational one_fifth(1, 5);
    auto mix = [&](const V& x, const V& y, const V& z) {
        V r = two_fifths * x;
        r = r + two_fifths * y;
        r = r + one_fifth * z;
        return r;
    };
    return {mix(fs, ft, fu), mix(fs, fu, ft), mix(ft, fu, fs)};
}

// Vertex of S_n as p + q*omega with dyadic p, q.
struct GridPoint {
    Rational p;
    Rational q;

    auto operator<=>(const GridPoint& other) const {
        if (p != other.p) return p < other.p ? std::strong_ordering::less : std::strong_ordering::greater;
        if (q != other.q) return q < other.q ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool operator==(const GridPoint& other) const { return p == other.p && q == other.q; }

    // Cartesian coordinates, omega = (1/2, sqrt(3)/2).
    std::array<double, 2> cartesian() const;
};

// Level cap for harmonic_grid: HARMONIC_GRID_CAP when set, else 10.
unsigned default_grid_cap();

// Exact harmonic function on the graph S_n. Vertices 0, 1, 2 are the corners
// 0, 1, omega.
template <typename V>
struct HarmonicGrid {
    unsigned level = 0;
    std::vector<GridPoint> vertices;
    std::vector<V> values;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> neighbors;
    std::map<GridPoint, std::size_t> index;

    bool is_corner(std::size_t i) const { return i < 3; }
    const V& at(const GridPoint& pt) const { return values.at(index.at(pt)); }
};

template <typename V>
HarmonicGrid<V> harmonic_grid(const BoundaryTriple<V>& boundary, unsigned level, unsigned cap = default_grid_cap()) {
    if (level > cap) {
        throw ResourceError("grid level " + std::to_string(level) + " exceeds cap " + std::to_string(cap));
    }
    HarmonicGrid<V> g;
    g.level = level;
    auto add_vertex = [&g](GridPoint pt, const V& value) {
        auto [it, inserted] = g.index.emplace(pt, g.vertices.size());
        if (inserted) {
            g.vertices.push_back(std::move(pt));
            g.values.push_back(value);
        }
        return it->second;
    };
    struct Tri {
        std::size_t s, t, u;
    };
    std::vector<Tri> tris{{add_vertex({0, 0}, boundary.a), add_vertex({1, 0}, boundary.b),
                           add_vertex({0, 1}, boundary.c)}};
    const Rational half(1, 2);
    auto mid = [&](std::size_t i, std::size_t j) {
        const GridPoint& x = g.vertices[i];
        const GridPoint& y = g.vertices[j];
        return GridPoint{half * (x.p + y.p), half * (x.q + y.q)};
    };
    for (unsigned n = 0; n < level; ++n) {
        std::vector<Tri> next;
        next.reserve(tris.size() * 3);
        for (const Tri& tr : tris) {
            Midpoints<V> m = subdivide(g.values[tr.s], g.values[tr.t], g.values[tr.u]);
            GridPoint pst = mid(tr.s, tr.t);
            GridPoint psu = mid(tr.s, tr.u);
            GridPoint ptu = mid(tr.t, tr.u);
            std::size_t st = add_vertex(std::move(pst), m.st);
            std::size_t su = add_vertex(std::move(psu), m.su);
            std::size_t tu = add_vertex(std::move(ptu), m.tu);
            next.push_back({tr.s, st, su});
            next.push_back({st, tr.t, tu});
            next.push_back({su, tu, tr.u});
        }
        tris = std::move(next);
    }
    g.neighbors.assign(g.vertices.size(), {});
    g.edges.reserve(tris.size() * 3);
    for (const Tri& tr : tris) {
        for (auto [i, j] : {std::pair{tr.s, tr.t}, std::pair{tr.s, tr.u}, std::pair{tr.t, tr.u}}) {
            g.edges.emplace_back(i, j);
            g.neighbors[i].push_back(j);
            g.neighbors[j].push_back(i);
        }
    }
    return g;
}

// Every non-corner vertex has exactly four neighbours and equals their mean.
template <typename V>
bool check_harmonic(const HarmonicGrid<V>& g) {
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.is_corner(i)) continue;
        const auto& nb = g.neighbors[i];
        if (nb.size() != 4) return false;
        V sum = g.values[nb[0]];
        for (std::size_t k = 1; k < nb.size(); ++k) {
            sum = sum + g.values[nb[k]];
        }
        V four_times = Rational(4) * g.values[i];
        if (!(sum == four_times)) return false;
    }
    return true;
}

}  // namespace sierpharm
