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

#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

QMat3 from_fifths(const int (&e)[3][3]) {
    QMat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = make_rational(e[i][j], 5);
    return m;
}

}  // namespace

QMat3 m0() {
    const int e[3][3] = {{5, 2, 2}, {0, 2, 1}, {0, 1, 2}};
    return from_fifths(e);
}

QMat3 m1() {
    const int e[3][3] = {{2, 0, 1}, {2, 5, 2}, {1, 0, 2}};
    return from_fifths(e);
}

QMat3 mul(const QMat3& a, const QMat3& b) {
    QMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational acc = 0;
            for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

QMat3 word(const std::string& w) {
    QMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = i == j ? 1 : 0;
    for (char c : w) r = mul(r, c == '0' ? m0() : m1());
    return r;
}

std::array<Rational, 3> apply(const QMat3& m, const std::array<Rational, 3>& v) {
    std::array<Rational, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return out;
}

std::array<std::array<Rational, 2>, 2> restrict(const QMat3& m, const std::array<Rational, 3>& b1,
                                                const std::array<Rational, 3>& b2) {
    // Pick two coordinates where (b1, b2) is invertible.
    int r0 = -1, r1 = -1;
    for (int i = 0; i < 3 && r0 < 0; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (b1[i] * b2[j] - b1[j] * b2[i] != 0) {
                r0 = i;
                r1 = j;
                break;
            }
    const Rational det = b1[r0] * b2[r1] - b1[r1] * b2[r0];
    std::array<std::array<Rational, 2>, 2> out;
    int col = 0;
    for (const auto* b : {&b1, &b2}) {
        const auto y = apply(m, *b);
        out[0][col] = (y[r0] * b2[r1] - y[r1] * b2[r0]) / det;
        out[1][col] = (b1[r0] * y[r1] - b1[r1] * y[r0]) / det;
        ++col;
    }
    return out;
}

std::string digits(Rational s, std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        s *= 2;
        if (s >= 1) {
            out.push_back('1');
            s -= 1;
        } else {
            out.push_back('0');
        }
    }
    return out;
}

std::set<std::string> necklaces(std::size_t length, bool dedupe_complement) {
    auto min_rotation = [](const std::string& w) {
        std::string best = w;
        for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, w.substr(i) + w.substr(0, i));
        return best;
    };
    std::set<std::string> out;
    for (unsigned long bits = 0; bits < (1ul << length); ++bits) {
        std::string w;
        for (std::size_t i = 0; i < length; ++i) w.push_back((bits >> (length - 1 - i)) & 1 ? '1' : '0');
        bool primitive = true;
        for (std::size_t i = 1; i < length && primitive; ++i)
            if (w.substr(i) + w.substr(0, i) == w) primitive = false;
        if (!primitive) continue;
        std::string canon = min_rotation(w);
        if (dedupe_complement) {
            std::string c = w;
            for (char& ch : c) ch = ch == '0' ? '1' : '0';
            canon = std::min(canon, min_rotation(c));
        }
        out.insert(canon);
    }
    return out;
}

DirichletSolution dirichlet(unsigned level, const Rational& at0, const Rational& at1, const Rational& at_omega) {
    using Pt = std::pair<Rational, Rational>;
    // Triangles as corner triples; h_z(x) = (x + z) / 2 in (1, omega) coordinates.
    std::vector<std::array<Pt, 3>> tris{{Pt{0, 0}, Pt{1, 0}, Pt{0, 1}}};
    const Pt centers[3] = {{0, 0}, {1, 0}, {0, 1}};
    for (unsigned n = 0; n < level; ++n) {
        std::vector<std::array<Pt, 3>> next;
        for (const auto& c : centers)
            for (const auto& t : tris) {
                std::array<Pt, 3> img;
                for (int k = 0; k < 3; ++k)
                    img[k] = {(t[k].first + c.first) / 2, (t[k].second + c.second) / 2};
                next.push_back(img);
            }
        tris = std::move(next);
    }
    std::map<Pt, std::set<Pt>> adj;
    for (const auto& t : tris)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a != b) adj[t[a]].insert(t[b]);

    std::map<Pt, Rational> fixed{{centers[0], at0}, {centers[1], at1}, {centers[2], at_omega}};
    std::vector<Pt> unknowns;
    std::map<Pt, std::size_t> idx;
    for (const auto& [p, nb] : adj)
        if (!fixed.count(p)) {
            idx[p] = unknowns.size();
            unknowns.push_back(p);
        }
    const std::size_t n = unknowns.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& nb = adj[unknowns[i]];
        a[i][i] = static_cast<long>(nb.size());
        for (const auto& q : nb) {
            if (auto f = fixed.find(q); f != fixed.end())
                a[i][n] += f->second;
            else
                a[i][idx[q]] -= 1;
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (a[piv][c] == 0) ++piv;
        std::swap(a[piv], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    DirichletSolution out;
    for (const auto& [p, v] : fixed) out.values[p] = v;
    for (std::size_t i = 0; i < n; ++i) out.values[unknowns[i]] = a[i][n] / a[i][i];
    return out;
}

}  // namespace oracle
