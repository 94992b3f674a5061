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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sierpharm/expansion.hpp"
#include "sierpharm/harmonic.hpp"
#include "sierpharm/interval.hpp"
#include "sierpharm/quadratic.hpp"
#include "sierpharm/rational.hpp"

namespace sierpharm {

// ln(3/5) / ln(1/2): the exponent at every dyadic point and the universal
// lower bound.
inline constexpr double kDyadicAlpha = 0.73696559416620617;

enum class DerivativeClass { Zero, Infinite, Exceptional, Undetermined };

std::string to_string(DerivativeClass c);

// Certified enclosure of ln(lambda) / (n ln(1/2)).
struct AlphaEnclosure {
    double lower = 0.0;
    double upper = 0.0;
    double midpoint = 0.0;
    unsigned long precision_bits = 0;

    double width() const { return upper - lower; }
    bool contains(double x) const { return lower <= x && x <= upper; }
};

// Starts at 64 bits and doubles the working precision until the width is at
// most max_width and, when separate_from_one is set, the enclosure excludes 1.
// Gives up at 4096 bits.
AlphaEnclosure alpha_enclosure(const QuadraticValue& lambda, std::size_t n, double max_width = 1e-12,
                               bool separate_from_one = true);

struct HolderReport {
    Rational s;
    Expansion expansion;
    std::size_t period_length = 0;
    BigInt scaled_trace;  // 5^n tr of the plane restriction of M_period
    QuadraticValue lambda;
    AlphaEnclosure alpha;
    DerivativeClass derivative_class = DerivativeClass::Undetermined;
};

// Exponent of u at a rational point, from the period of its expansion (the
// upper one, or the lower one at s = 1). The preperiod does not enter.
HolderReport alpha_rational(const Rational& s);

// Same analysis for a bare period word (the purely periodic point it spells).
HolderReport alpha_period(std::string_view period);

enum class NormKind { FrobeniusB, MaxEntryB };

struct EstimateTrace {
    NormKind norm = NormKind::FrobeniusB;
    std::vector<std::pair<std::size_t, double>> points;
};

// ln ||M_{a_1..a_n}|| / (n ln(1/2)) for every requested n (1 <= n <= |bits|),
// with the product kept exact in basis B and the 5^-n scale taken in log space.
EstimateTrace alpha_estimate(std::string_view bits, NormKind norm, std::vector<std::size_t> checkpoints);
// Single estimate at n = |bits|.
double alpha_estimate_at(std::string_view bits, NormKind norm = NormKind::FrobeniusB);

DerivativeClass classify_u(const Rational& s);
// Exceptional when the form kills the tangent direction at s; otherwise the
// class of u.
DerivativeClass classify_uacb(const LinearForm& form, const Rational& s);

struct HolderBound {
    double upper_inf = 0.0;
    double upper_sup = 0.0;
};

// kDyadicAlpha + transition density of the period (both limits agree for
// eventually periodic points).
HolderBound holder_bound(const Expansion& e);

// Transition density strictly below 1 - kDyadicAlpha, decided exactly.
bool corollary_infinite_test(const Expansion& e);

// lambda_p != 2^-n exactly, hence alpha != 1.
bool integrality_check(std::string_view period);

// Default cap on generate_table's maximal period length.
inline constexpr std::size_t kTableLengthCap = 20;

// One report per necklace class of length <= max_length, sorted by alpha
// descending, ties broken by s ascending. Classes are evaluated in parallel;
// the order is fixed by the sort.
std::vector<HolderReport> generate_table(std::size_t max_length, bool dedupe_complement,
                                         std::size_t cap = kTableLengthCap);

struct MaxRunEntry {
    std::string period;
    AlphaEnclosure alpha;
    bool above_one = false;
};

// Necklace classes (complement-deduplicated) with maximal cyclic run <= 2.
std::vector<MaxRunEntry> maxrun_experiment(std::size_t max_length);

struct LyapunovSummary {
    std::size_t nbits = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<double> estimates;
    double mean = 0.0;
    double median = 0.0;
    double fraction_above_one = 0.0;
    bool low_confidence = false;  // nbits below kLyapunovConfidentBits
};

inline constexpr std::size_t kLyapunovConfidentBits = 256;

// alpha_estimate over independent uniform bit strings drawn from a
// mt19937_64 stream seeded with `seed`.
LyapunovSummary lyapunov_random_estimate(std::size_t nbits, std::size_t trials, std::uint64_t seed);

// Rows of the published table of periods up to length 7.
struct ReferenceRow {
    const char* s;
    const char* period;
    std::size_t length;
    long scaled_trace;
    double alpha;
};

const std::vector<ReferenceRow>& reference_table();

// Empty when `reports` reproduces the reference rows in order: exact s,
// period, length, scaled trace; alpha within alpha_tolerance.
std::vector<std::string> compare_with_reference(const std::vector<HolderReport>& reports,
                                                double alpha_tolerance = 1e-3);

}  // namespace sierpharm
