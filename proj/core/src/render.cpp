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

#include "sierpharm/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "sierpharm/errors.hpp"

namespace sierpharm {

namespace {

const double kSqrt3 = std::sqrt(3.0);

void validate(const RenderConfig& c) {
    if (c.width <= 0 || c.height <= 0) {
        throw DomainError("canvas size must be positive");
    }
}

std::string coord(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string header(const RenderConfig& c) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width << "\" height=\"" << c.height
       << "\" viewBox=\"0 0 " << c.width << " " << c.height << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return os.str();
}

}  // namespace

Projection::Projection(const RenderConfig& config) {
    validate(config);
    const double margin = 0.05 * std::min(config.width, config.height);
    scale_ = std::min(config.width - 2 * margin, (config.height - 2 * margin) / (kSqrt3 / 2));
    cx_ = config.width / 2.0;
    base_ = config.height / 2.0 + scale_ * kSqrt3 / 4;
}

std::array<double, 2> Projection::operator()(const Vec3Q& v) const {
    const double y = v.y.get_d();
    const double z = v.z.get_d();
    const double px = y + 0.5 * z;
    const double py = z * kSqrt3 / 2;
    return {cx_ + (px - 0.5) * scale_, base_ - py * scale_};
}

SvgDocument render_curve(const RenderConfig& config) {
    const unsigned cap = default_grid_cap();
    if (config.level > cap) {
        throw ResourceError("level " + std::to_string(config.level) + " exceeds grid cap " + std::to_string(cap));
    }
    const Projection project(config);
    std::ostringstream os;
    os << header(config) << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    SvgDocument doc;
    const BigInt top = pow2(config.level);
    for (BigInt k = 0; k <= top; ++k) {
        const auto p = project(u_exact_dyadic(k, config.level));
        os << (k == 0 ? "" : " ") << coord(p[0]) << "," << coord(p[1]);
        ++doc.count;
    }
    os << "\"/>\n</svg>\n";
    doc.text = os.str();
    return doc;
}

SvgDocument render_triangle(const RenderConfig& config, const BoundaryTriple<Vec3Q>& boundary, unsigned cap) {
    const Projection project(config);
    const auto g = harmonic_grid(boundary, config.level, cap);
    std::ostringstream os;
    os << header(config) << "<g stroke=\"black\" stroke-width=\"0.5\">\n";
    SvgDocument doc;
    for (const auto& [i, j] : g.edges) {
        const auto a = project(g.values[i]);
        const auto b = project(g.values[j]);
        os << "<line x1=\"" << coord(a[0]) << "\" y1=\"" << coord(a[1]) << "\" x2=\"" << coord(b[0]) << "\" y2=\""
           << coord(b[1]) << "\"/>\n";
        ++doc.count;
    }
    os << "</g>\n</svg>\n";
    doc.text = os.str();
    return doc;
}

BoundaryTriple<Vec3Q> parse_boundary(const std::string& text) {
    if (text.empty()) return universal_boundary();
    std::vector<Vec3Q> vs;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (std::count(part.begin(), part.end(), ',') != 2) {
            throw ParseError("boundary vector '" + part + "' is not x,y,z");
        }
        const LinearForm f = parse_linear_form(part);
        vs.push_back({f.a, f.b, f.c});
    }
    if (vs.size() != 3) {
        throw ParseError("boundary needs three vectors 'x,y,z;x,y,z;x,y,z'");
    }
    return {vs[0], vs[1], vs[2]};
}

}  // namespace sierpharm
