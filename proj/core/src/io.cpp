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

#include "sierpharm/io.hpp"

#include <cstdio>
#include <ostream>

namespace sierpharm {

std::string format_number(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

nlohmann::json rounded(double x, int digits) {
    return std::stod(format_number(x, digits));
}

nlohmann::json to_json(const AlphaEnclosure& a, int digits) {
    return {{"value", rounded(a.midpoint, digits)},
            {"lower", a.lower},
            {"upper", a.upper},
            {"width", a.width()},
            {"precision_bits", a.precision_bits}};
}

nlohmann::json to_json(const HolderReport& r, int digits) {
    return {{"s", to_string(r.s)},
            {"expansion", to_string(r.expansion)},
            {"period", r.expansion.period},
            {"n", r.period_length},
            {"scaled_trace", r.scaled_trace.get_str()},
            {"lambda", to_string(r.lambda)},
            {"lambda_approx", rounded(r.lambda.to_double(), digits)},
            {"alpha", to_json(r.alpha, digits)},
            {"derivative_class", to_string(r.derivative_class)}};
}

nlohmann::json to_json(const LyapunovSummary& s, int digits) {
    nlohmann::json est = nlohmann::json::array();
    for (double e : s.estimates) est.push_back(rounded(e, digits));
    return {{"nbits", s.nbits},
            {"trials", s.trials},
            {"seed", s.seed},
            {"mean", rounded(s.mean, digits)},
            {"median", rounded(s.median, digits)},
            {"fraction_above_one", rounded(s.fraction_above_one, digits)},
            {"low_confidence", s.low_confidence},
            {"estimates", est}};
}

nlohmann::json to_json(const MaxRunEntry& e, int digits) {
    return {{"period", e.period}, {"alpha", to_json(e.alpha, digits)}, {"alpha_above_one", e.above_one}};
}

std::string table_csv_header() {
    return "s,period,n,scaled_trace,alpha,alpha_enclosure_width,derivative_class";
}

std::string to_csv_row(const HolderReport& r, int digits) {
    char width[32];
    std::snprintf(width, sizeof width, "%.3g", r.alpha.width());
    return to_string(r.s) + "," + r.expansion.period + "," + std::to_string(r.period_length) + "," +
           r.scaled_trace.get_str() + "," + format_number(r.alpha.midpoint, digits) + "," + width + "," +
           to_string(r.derivative_class);
}

void write_table_csv(std::ostream& os, const std::vector<HolderReport>& rows, int digits) {
    os << table_csv_header() << "\n";
    for (const auto& r : rows) {
        os << to_csv_row(r, digits) << "\n";
    }
}

namespace {

void value_columns(std::ostream& os, const Rational& v) {
    os << "," << to_string(v);
}

void value_columns(std::ostream& os, const Vec3Q& v) {
    os << "," << to_string(v.x) << "," << to_string(v.y) << "," << to_string(v.z);
}

nlohmann::json value_json(const Rational& v) {
    return to_string(v);
}

nlohmann::json value_json(const Vec3Q& v) {
    return nlohmann::json::array({to_string(v.x), to_string(v.y), to_string(v.z)});
}

}  // namespace

template <typename V>
void write_grid_csv(std::ostream& os, const HarmonicGrid<V>& g) {
    if constexpr (std::is_same_v<V, Rational>) {
        os << "p,q,value\n";
    } else {
        os << "p,q,x,y,z\n";
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        os << to_string(g.vertices[i].p) << "," << to_string(g.vertices[i].q);
        value_columns(os, g.values[i]);
        os << "\n";
    }
}

template <typename V>
nlohmann::json grid_to_json(const HarmonicGrid<V>& g) {
    nlohmann::json verts = nlohmann::json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        verts.push_back({{"p", to_string(g.vertices[i].p)},
                         {"q", to_string(g.vertices[i].q)},
                         {"value", value_json(g.values[i])}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges) edges.push_back({a, b});
    return {{"level", g.level}, {"vertices", verts}, {"edges", edges}};
}

template void write_grid_csv<Rational>(std::ostream&, const HarmonicGrid<Rational>&);
template void write_grid_csv<Vec3Q>(std::ostream&, const HarmonicGrid<Vec3Q>&);
template nlohmann::json grid_to_json<Rational>(const HarmonicGrid<Rational>&);
template nlohmann::json grid_to_json<Vec3Q>(const HarmonicGrid<Vec3Q>&);

}  // namespace sierpharm
