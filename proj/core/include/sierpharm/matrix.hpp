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
#include <string_view>
#include <vector>

#include "sierpharm/rational.hpp"

namespace sierpharm {

// Generators of the side map: h_0, h_1 and h_omega.
enum class Symbol { Zero, One, Omega };

// Accepts '0', '1', and 'w' or the UTF-8 letter "ω" for omega.
std::vector<Symbol> parse_symbol_word(std::string_view word);

// Rejects anything but ASCII '0'/'1'.
void require_bit_word(std::string_view word);

// Exact 3x3 matrix entries / 5^pow5.
struct ScaledIntMat3 {
    std::array<std::array<BigInt, 3>, 3> entries{};
    unsigned long pow5 = 0;

    static ScaledIntMat3 identity();

    Rational at(int row, int col) const;
    Rational trace() const;
    Vec3Q apply(const Vec3Q& v) const;
    // Every column of entries sums to 5^pow5.
    bool column_sums_hold() const;

    friend ScaledIntMat3 operator*(const ScaledIntMat3& a, const ScaledIntMat3& b);
    friend bool operator==(const ScaledIntMat3& a, const ScaledIntMat3& b) = default;
};

// Basis of the vector plane x+y+z = 0 used for 2x2 restrictions.
//   B = (e_0 - e_1, e_1 - e_omega): integer coordinates for every word.
//   V = (v, w), v = (-1/2, -1/2, 1), w = (-1/2, 1/2, 0): the tangent chart basis.
enum class PlaneBasis { B, V };

// Exact 2x2 matrix entries / (2^pow2 * 5^pow5), acting on coordinates in
// `basis`. pow2 is only ever nonzero in basis V, where the change of basis has
// determinant 1/2.
struct ScaledIntMat2 {
    std::array<std::array<BigInt, 2>, 2> entries{};
    unsigned long pow5 = 0;
    unsigned long pow2 = 0;
    PlaneBasis basis = PlaneBasis::B;

    static ScaledIntMat2 identity(PlaneBasis basis);

    BigInt scale() const;
    Rational at(int row, int col) const;
    Rational trace() const;
    Rational determinant() const;
    std::array<Rational, 2> apply(const std::array<Rational, 2>& coords) const;

    friend ScaledIntMat2 operator*(const ScaledIntMat2& a, const ScaledIntMat2& b);
    friend bool operator==(const ScaledIntMat2& a, const ScaledIntMat2& b) = default;
};

ScaledIntMat3 generator_matrix(Symbol symbol);

// M_{a_1} M_{a_2} ... M_{a_n}; the empty word gives the identity.
ScaledIntMat3 word_product(std::string_view word);
ScaledIntMat3 word_product(const std::vector<Symbol>& word);

// The permutation swapping e_0 and e_1 (u(1-s) = P u(s)).
ScaledIntMat3 symmetry_matrix();

ScaledIntMat2 restrict_to_plane(const ScaledIntMat3& m, PlaneBasis basis = PlaneBasis::B);

// trace(m) - 1, i.e. the trace of the restriction to the vector plane.
Rational plane_trace(const ScaledIntMat3& m);

// 5^n * plane trace for a word of length n, as an integer.
BigInt scaled_plane_trace(std::string_view bit_word);

// Plane coordinates <-> R^3 vectors for either basis.
std::array<Rational, 2> plane_coordinates(const Vec3Q& v, PlaneBasis basis);
Vec3Q plane_vector(const std::array<Rational, 2>& coords, PlaneBasis basis);

std::ostream& operator<<(std::ostream& os, const ScaledIntMat3& m);
std::ostream& operator<<(std::ostream& os, const ScaledIntMat2& m);

}  // namespace sierpharm
