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

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "sierpharm/harmonic.hpp"
#include "sierpharm/holder.hpp"
#include "sierpharm/tangent.hpp"

namespace sierpharm {

// Shortest decimal with `digits` significant digits ("%.*g").
std::string format_number(double x, int digits);
// Same rounding, returned as a JSON number.
nlohmann::json rounded(double x, int digits);

// Report serialisation. Integer and rational fields are exact strings or
// integers; floats carry `digits` significant digits.
nlohmann::json to_json(const HolderReport& r, int digits = 6);
nlohmann::json to_json(const AlphaEnclosure& a, int digits = 6);
nlohmann::json to_json(const LyapunovSummary& s, int digits = 6);
nlohmann::json to_json(const MaxRunEntry& e, int digits = 6);

// Columns: s, period, n, scaled_trace, alpha, alpha_enclosure_width,
// derivative_class.
std::string table_csv_header();
std::string to_csv_row(const HolderReport& r, int digits = 6);
void write_table_csv(std::ostream& os, const std::vector<HolderReport>& rows, int digits = 6);

// Grid export: one row per vertex, exact coordinates (p, q) in the basis
// (1, omega) plus the value components.
template <typename V>
void write_grid_csv(std::ostream& os, const HarmonicGrid<V>& g);
template <typename V>
nlohmann::json grid_to_json(const HarmonicGrid<V>& g);

}  // namespace sierpharm
