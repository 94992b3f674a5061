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
#include <string>

#include "sierpharm/harmonic.hpp"
#include "sierpharm/rational.hpp"

namespace sierpharm {

// Canvas for SVG output. The value triangle K is drawn with e_0, e_1, e_omega
// at (0,0), (1,0), (1/2, sqrt(3)/2), scaled and centred on the canvas.
struct RenderConfig {
    unsigned level = 8;
    int width = 800;
    int height = 720;
};

struct SvgDocument {
    std::string text;
    std::size_t count = 0;  // polyline points or line segments
};

class Projection {
public:
    explicit Projection(const RenderConfig& config);
    std::array<double, 2> operator()(const Vec3Q& v) const;
    double axis() const { return cx_; }

private:
    double scale_;
    double cx_;
    double base_;
};

// Polyline through u(k/2^n), k = 0..2^n.
SvgDocument render_curve(const RenderConfig& config);

// Segments between grid neighbours of the level-n harmonic image.
SvgDocument render_triangle(const RenderConfig& config, const BoundaryTriple<Vec3Q>& boundary,
                            unsigned cap = default_grid_cap());

// "x,y,z;x,y,z;x,y,z"; empty text gives (e_0, e_1, e_omega).
BoundaryTriple<Vec3Q> parse_boundary(const std::string& text);

}  // namespace sierpharm
