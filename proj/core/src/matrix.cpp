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

#include "sierpharm/matrix.hpp"

#include <ostream>

#include "sierpharm/errors.hpp"

namespace sierpharm {

std::vector<Symbol> parse_symbol_word(std::string_view word) {
    std::vector<Symbol> out;
    out.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        char c = word[i];
        if (c == '0') {
            out.push_back(Symbol::Zero);
        } else if (c == '1') {
            out.push_back(Symbol::One);
        } else if (c == 'w' || c == 'W') {
            out.push_back(Symbol::Omega);
        } else if (static_cast<unsigned char>(c) == 0xCF && i + 1 < word.size() &&
                   static_cast<unsigned char>(word[i + 1]) == 0x89) {
            out.push_back(Symbol::Omega);
            ++i;
        } else {
            throw ParseError("invalid symbol in word '" + std::string(word) + "'");
        }
    }
    return out;
}

void require_bit_word(std::string_view word) {
    for (char c : word) {
        if (c != '0' && c != '1') {
            throw ParseError("not a bit word: '" + std::string(word) + "'");
        }
    }
}

ScaledIntMat3 ScaledIntMat3::identity() {
    ScaledIntMat3 m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m.entries[i][j] = i == j ? 1 : 0;
        }
    }
    return m;
}

Rational ScaledIntMat3::at(int row, int col) const {
    return make_rational(entries[row][col], pow5 == 0 ? BigInt(1) : sierpharm::pow5(pow5));
}

Rational ScaledIntMat3::trace() const {
    return make_rational(entries[0][0] + entries[1][1] + entries[2][2], sierpharm::pow5(pow5));
}

Vec3Q ScaledIntMat3::apply(const Vec3Q& v) const {
    const Rational scale(sierpharm::pow5(pow5));
    std::array<Rational, 3> in{v.x, v.y, v.z};
    std::array<Rational, 3> out;
    for (int i = 0; i < 3; ++i) {
        Rational acc = 0;
        for (int j = 0; j < 3; ++j) {
            acc += Rational(entries[i][j]) * in[j];
        }
        out[i] = acc / scale;
    }
    return {out[0], out[1], out[2]};
}

bool ScaledIntMat3::column_sums_hold() const {
    const BigInt target = sierpharm::pow5(pow5);
    for (int j = 0; j < 3; ++j) {
        if (entries[0][j] + entries[1][j] + entries[2][j] != target) {
            return false;
        }
    }
    return true;
}

ScaledIntMat3 operator*(const ScaledIntMat3& a, const ScaledIntMat3& b) {
    ScaledIntMat3 r;
    r.pow5 = a.pow5 + b.pow5;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            BigInt acc = 0;
            for (int k = 0; k < 3; ++k) {
                acc += a.entries[i][k] * b.entries[k][j];
            }
            r.entries[i][j] = std::move(acc);
        }
    }
    return r;
}

ScaledIntMat2 ScaledIntMat2::identity(PlaneBasis basis) {
    ScaledIntMat2 m;
    m.entries = {{{1, 0}, {0, 1}}};
    m.basis = basis;
    return m;
}

BigInt ScaledIntMat2::scale() const {
    return sierpharm::pow5(pow5) * sierpharm::pow2(pow2);
}

Rational ScaledIntMat2::at(int row, int col) const {
    return make_rational(entries[row][col], scale());
}

Rational ScaledIntMat2::trace() const {
    return make_rational(entries[0][0] + entries[1][1], scale());
}

Rational ScaledIntMat2::determinant() const {
    BigInt s = scale();
    return make_rational(entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0], s * s);
}

std::array<Rational, 2> ScaledIntMat2::apply(const std::array<Rational, 2>& c) const {
    const Rational s(scale());
    return {(Rational(entries[0][0]) * c[0] + Rational(entries[0][1]) * c[1]) / s,
            (Rational(entries[1][0]) * c[0] + Rational(entries[1][1]) * c[1]) / s};
}

namespace {

void reduce_pow2(ScaledIntMat2& m) {
    while (m.pow2 > 0) {
        for (const auto& row : m.entries) {
            for (const auto& e : row) {
                if (mpz_odd_p(e.get_mpz_t())) {
                    return;
                }
            }
        }
        for (auto& row : m.entries) {
            for (auto& e : row) {
                e /= 2;
            }
        }
        --m.pow2;
    }
}

}  // namespace

ScaledIntMat2 operator*(const ScaledIntMat2& a, const ScaledIntMat2& b) {
    if (a.basis != b.basis) {
        throw DomainError("cannot multiply restrictions expressed in different bases");
    }
    ScaledIntMat2 r;
    r.basis = a.basis;
    r.pow5 = a.pow5 + b.pow5;
    r.pow2 = a.pow2 + b.pow2;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r.entries[i][j] = a.entries[i][0] * b.entries[0][j] + a.entries[i][1] * b.entries[1][j];
        }
    }
    reduce_pow2(r);
    return r;
}

ScaledIntMat3 generator_matrix(Symbol symbol) {
    ScaledIntMat3 m;
    m.pow5 = 1;
    switch (symbol) {
        case Symbol::Zero:
            m.entries = {{{5, 2, 2}, {0, 2, 1}, {0, 1, 2}}};
            break;
        case Symbol::One:
            m.entries = {{{2, 0, 1}, {2, 5, 2}, {1, 0, 2}}};
            break;
        case Symbol::Omega:
            m.entries = {{{2, 1, 0}, {1, 2, 0}, {2, 2, 5}}};
            break;
    }
    return m;
}

ScaledIntMat3 word_product(const std::vector<Symbol>& word) {
    static const ScaledIntMat3 gens[3] = {generator_matrix(Symbol::Zero), generator_matrix(Symbol::One),
                                          generator_matrix(Symbol::Omega)};
    ScaledIntMat3 r = ScaledIntMat3::identity();
    for (Symbol s : word) {
        r = r * gens[static_cast<int>(s)];
    }
    return r;
}

ScaledIntMat3 word_product(std::string_view word) {
    return word_product(parse_symbol_word(word));
}

ScaledIntMat3 symmetry_matrix() {
    ScaledIntMat3 p;
    p.entries = {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
    return p;
}

ScaledIntMat2 restrict_to_plane(const ScaledIntMat3& m, PlaneBasis basis) {
    const auto& e = m.entries;
    ScaledIntMat2 r;
    r.basis = basis;
    r.pow5 = m.pow5;
    if (basis == PlaneBasis::B) {
        // Coordinates of (x, y, z) in B are (x, -z).
        // Images: M b1 = col0 - col1, M b2 = col1 - col2.
        r.entries[0][0] = e[0][0] - e[0][1];
        r.entries[1][0] = e[2][1] - e[2][0];
        r.entries[0][1] = e[0][1] - e[0][2];
        r.entries[1][1] = e[2][2] - e[2][1];
        return r;
    }
    // Coordinates of (x, y, z) in V are (z, -2x - z). 2v and 2w are integral:
    // 2Mv = -col0 - col1 + 2col2, 2Mw = col1 - col0.
    r.pow2 = 1;
    std::array<BigInt, 3> mv;
    std::array<BigInt, 3> mw;
    for (int i = 0; i < 3; ++i) {
        mv[i] = -e[i][0] - e[i][1] + 2 * e[i][2];
        mw[i] = e[i][1] - e[i][0];
    }
    r.entries[0][0] = mv[2];
    r.entries[1][0] = -2 * mv[0] - mv[2];
    r.entries[0][1] = mw[2];
    r.entries[1][1] = -2 * mw[0] - mw[2];
    reduce_pow2(r);
    return r;
}

Rational plane_trace(const ScaledIntMat3& m) {
    return m.trace() - 1;
}

BigInt scaled_plane_trace(std::string_view bit_word) {
    require_bit_word(bit_word);
    ScaledIntMat3 m = word_product(bit_word);
    return m.entries[0][0] + m.entries[1][1] + m.entries[2][2] - pow5(m.pow5);
}

std::array<Rational, 2> plane_coordinates(const Vec3Q& v, PlaneBasis basis) {
    if (basis == PlaneBasis::B) {
        return {v.x, -v.z};
    }
    return {v.z, -2 * v.x - v.z};
}

Vec3Q plane_vector(const std::array<Rational, 2>& c, PlaneBasis basis) {
    if (basis == PlaneBasis::B) {
        return {c[0], c[1] - c[0], -c[1]};
    }
    const Rational half(1, 2);
    return {-half * (c[0] + c[1]), half * (c[1] - c[0]), c[0]};
}

std::ostream& operator<<(std::ostream& os, const ScaledIntMat3& m) {
    os << "[";
    for (int i = 0; i < 3; ++i) {
        os << (i ? ", [" : "[") << m.entries[i][0] << ", " << m.entries[i][1] << ", " << m.entries[i][2] << "]";
    }
    return os << "] / 5^" << m.pow5;
}

std::ostream& operator<<(std::ostream& os, const ScaledIntMat2& m) {
    return os << "[[" << m.entries[0][0] << ", " << m.entries[0][1] << "], [" << m.entries[1][0] << ", "
              << m.entries[1][1] << "]] / (2^" << m.pow2 << " 5^" << m.pow5 << ")"
              << (m.basis == PlaneBasis::B ? " in B" : " in V");
}

}  // namespace sierpharm
