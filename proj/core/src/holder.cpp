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

#include "sierpharm/holder.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <random>
#include <thread>

#include "sierpharm/errors.hpp"
#include "sierpharm/matrix.hpp"
#include "sierpharm/necklace.hpp"
#include "sierpharm/tangent.hpp"

namespace sierpharm {

std::string to_string(DerivativeClass c) {
    switch (c) {
        case DerivativeClass::Zero:
            return "Zero";
        case DerivativeClass::Infinite:
            return "Infinite";
        case DerivativeClass::Exceptional:
            return "Exceptional";
        case DerivativeClass::Undetermined:
            return "Undetermined";
    }
    return "Undetermined";
}

namespace {

constexpr mpfr_prec_t kStartPrecision = 64;
constexpr mpfr_prec_t kMaxPrecision = 4096;

Interval alpha_interval(const QuadraticValue& lambda, std::size_t n, mpfr_prec_t prec) {
    // alpha = -ln(lambda) / (n ln 2)
    const Interval ln_lambda = log(lambda.enclose(prec));
    const Interval denom = Interval::point(Rational(static_cast<long>(n)), prec) * Interval::log2_constant(prec);
    return (Interval::point(0, prec) - ln_lambda) / denom;
}

}  // namespace

AlphaEnclosure alpha_enclosure(const QuadraticValue& lambda, std::size_t n, double max_width,
                               bool separate_from_one) {
    if (n == 0) {
        throw DomainError("period length must be positive");
    }
    if (lambda.sign() <= 0) {
        throw DomainError("dominant eigenvalue must be positive");
    }
    AlphaEnclosure out;
    for (mpfr_prec_t prec = kStartPrecision;; prec *= 2) {
        const Interval iv = alpha_interval(lambda, n, prec);
        out.lower = iv.lower();
        out.upper = iv.upper();
        out.midpoint = iv.midpoint();
        out.precision_bits = static_cast<unsigned long>(prec);
        const bool narrow = out.width() <= max_width;
        const bool separated = !separate_from_one || iv.below(1) || iv.above(1);
        if ((narrow && separated) || prec >= kMaxPrecision) {
            return out;
        }
    }
}

namespace {

DerivativeClass class_from_alpha(const AlphaEnclosure& a) {
    if (a.lower > 1.0) return DerivativeClass::Zero;
    if (a.upper < 1.0) return DerivativeClass::Infinite;
    return DerivativeClass::Undetermined;
}

HolderReport analyse(Rational s, Expansion e) {
    HolderReport r;
    r.s = std::move(s);
    r.expansion = std::move(e);
    const std::string& p = r.expansion.period;
    r.period_length = p.size();
    const ScaledIntMat3 m = word_product(p);
    r.scaled_trace = m.entries[0][0] + m.entries[1][1] + m.entries[2][2] - pow5(m.pow5);
    const ScaledIntMat2 restricted = restrict_to_plane(m, PlaneBasis::B);
    if (restricted.determinant() != rational_pow(Rational(3, 25), p.size())) {
        throw Error("restriction determinant differs from (3/25)^n");
    }
    r.lambda = dominant_eigen(restricted).lambda;
    r.alpha = alpha_enclosure(r.lambda, p.size());
    r.derivative_class = class_from_alpha(r.alpha);
    return r;
}

}  // namespace

HolderReport alpha_rational(const Rational& s) {
    Expansion e = expand_default(s);
    return analyse(s, std::move(e));
}

HolderReport alpha_period(std::string_view period) {
    require_bit_word(period);
    if (period.empty() || !is_primitive(period)) {
        throw DomainError("period must be a nonempty primitive word");
    }
    Expansion e{"", std::string(period), period == "1" ? Variant::Lower : Variant::Upper};
    Rational s = expansion_value(e);
    return analyse(std::move(s), std::move(e));
}

namespace {

double log_norm(const std::array<std::array<BigInt, 2>, 2>& e, NormKind norm) {
    if (norm == NormKind::MaxEntryB) {
        BigInt best = 0;
        for (const auto& row : e) {
            for (const auto& x : row) {
                if (abs(x) > best) best = abs(x);
            }
        }
        long exp2 = 0;
        const double mant = mpz_get_d_2exp(&exp2, best.get_mpz_t());
        return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    }
    BigInt sq = 0;
    for (const auto& row : e) {
        for (const auto& x : row) {
            sq += x * x;
        }
    }
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, sq.get_mpz_t());
    return 0.5 * (std::log(mant) + static_cast<double>(exp2) * std::log(2.0));
}

}  // namespace

EstimateTrace alpha_estimate(std::string_view bits, NormKind norm, std::vector<std::size_t> checkpoints) {
    require_bit_word(bits);
    if (bits.empty()) {
        throw DomainError("alpha_estimate needs a nonempty bit word");
    }
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
    for (std::size_t n : checkpoints) {
        if (n == 0 || n > bits.size()) {
            throw RangeError("estimate checkpoint " + std::to_string(n) + " outside [1, " +
                             std::to_string(bits.size()) + "]");
        }
    }
    static const ScaledIntMat2 gens[2] = {restrict_to_plane(generator_matrix(Symbol::Zero)),
                                          restrict_to_plane(generator_matrix(Symbol::One))};
    EstimateTrace out;
    out.norm = norm;
    out.points.reserve(checkpoints.size());
    ScaledIntMat2 product = ScaledIntMat2::identity(PlaneBasis::B);
    const double ln5 = std::log(5.0);
    const double ln_half = std::log(0.5);
    std::size_t next = 0;
    for (std::size_t n = 1; n <= bits.size() && next < checkpoints.size(); ++n) {
        product = product * gens[bits[n - 1] == '1'];
        if (checkpoints[next] == n) {
            const double ln_norm = log_norm(product.entries, norm) - static_cast<double>(n) * ln5;
            out.points.emplace_back(n, ln_norm / (static_cast<double>(n) * ln_half));
            ++next;
        }
    }
    return out;
}

double alpha_estimate_at(std::string_view bits, NormKind norm) {
    return alpha_estimate(bits, norm, {bits.size()}).points.front().second;
}

DerivativeClass classify_u(const Rational& s) {
    return alpha_rational(s).derivative_class;
}

DerivativeClass classify_uacb(const LinearForm& form, const Rational& s) {
    switch (kernel_test(form, tangent_direction(s))) {
        case KernelVerdict::InKernel:
            return DerivativeClass::Exceptional;
        case KernelVerdict::Undetermined:
            return DerivativeClass::Undetermined;
        case KernelVerdict::NotInKernel:
            break;
    }
    return classify_u(s);
}

HolderBound holder_bound(const Expansion& e) {
    const double d = transition_density(e.period).get_d();
    return {kDyadicAlpha + d, kDyadicAlpha + d};
}

bool corollary_infinite_test(const Expansion& e) {
    // The threshold 1 - ln(5/3)/ln 2 is irrational, so a 256-bit enclosure
    // always separates it from a rational density.
    const mpfr_prec_t prec = 256;
    const Rational d = transition_density(e.period);
    const Interval ln2 = Interval::log2_constant(prec);
    const Interval threshold = Interval::point(1, prec) - log(Interval::point(Rational(5, 3), prec)) / ln2;
    return threshold.above(d);
}

bool integrality_check(std::string_view period) {
    require_bit_word(period);
    if (period.empty() || !is_primitive(period)) {
        throw DomainError("period must be a nonempty primitive word");
    }
    const ScaledIntMat2 restricted = restrict_to_plane(word_product(period), PlaneBasis::B);
    const QuadraticValue lambda = dominant_eigen(restricted).lambda;
    const QuadraticValue half_power(make_rational(1, pow2(period.size())));
    return (lambda - half_power).sign() != 0;
}

namespace {

bool report_before(const HolderReport& a, const HolderReport& b) {
    const bool tie = a.period_length == b.period_length && a.scaled_trace == b.scaled_trace;
    if (!tie && a.alpha.midpoint != b.alpha.midpoint) {
        return a.alpha.midpoint > b.alpha.midpoint;
    }
    return a.s < b.s;
}

template <typename T, typename F>
std::vector<T> parallel_map(const std::vector<std::string>& words, F f) {
    std::vector<T> out(words.size());
    const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < words.size(); i += workers) {
                out[i] = f(words[i]);
            }
        }));
    }
    for (auto& j : jobs) j.get();
    return out;
}

}  // namespace

std::vector<HolderReport> generate_table(std::size_t max_length, bool dedupe_complement, std::size_t cap) {
    if (max_length < 1) {
        throw DomainError("table needs a maximal period length of at least 1");
    }
    if (max_length > cap) {
        throw ResourceError("maximal period length " + std::to_string(max_length) + " exceeds cap " +
                            std::to_string(cap));
    }
    const auto words = enumerate_necklace_classes_upto(max_length, dedupe_complement);
    auto reports = parallel_map<HolderReport>(words, [](const std::string& w) { return alpha_period(w); });
    std::sort(reports.begin(), reports.end(), report_before);
    return reports;
}

std::vector<MaxRunEntry> maxrun_experiment(std::size_t max_length) {
    if (max_length < 1) {
        throw DomainError("experiment needs a maximal period length of at least 1");
    }
    std::vector<std::string> words;
    for (auto& w : enumerate_necklace_classes_upto(max_length, true)) {
        if (max_cyclic_run(w) <= 2) words.push_back(std::move(w));
    }
    return parallel_map<MaxRunEntry>(words, [](const std::string& w) {
        const HolderReport r = alpha_period(w);
        return MaxRunEntry{w, r.alpha, r.alpha.lower > 1.0};
    });
}

LyapunovSummary lyapunov_random_estimate(std::size_t nbits, std::size_t trials, std::uint64_t seed) {
    if (nbits < 1 || trials < 1) {
        throw DomainError("lyapunov experiment needs nbits >= 1 and trials >= 1");
    }
    LyapunovSummary out;
    out.nbits = nbits;
    out.trials = trials;
    out.seed = seed;
    out.low_confidence = nbits < kLyapunovConfidentBits;

    // Draw every word up front so results do not depend on scheduling.
    std::mt19937_64 rng(seed);
    std::vector<std::string> words(trials, std::string(nbits, '0'));
    for (auto& w : words) {
        std::uint64_t chunk = 0;
        for (std::size_t i = 0; i < nbits; ++i) {
            if (i % 64 == 0) chunk = rng();
            w[i] = (chunk >> (i % 64)) & 1u ? '1' : '0';
        }
    }
    out.estimates =
        parallel_map<double>(words, [](const std::string& w) { return alpha_estimate_at(w, NormKind::FrobeniusB); });

    out.mean = std::accumulate(out.estimates.begin(), out.estimates.end(), 0.0) /
               static_cast<double>(out.estimates.size());
    std::vector<double> sorted = out.estimates;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    out.median = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    out.fraction_above_one =
        static_cast<double>(std::count_if(sorted.begin(), sorted.end(), [](double a) { return a > 1.0; })) /
        static_cast<double>(sorted.size());
    return out;
}

const std::vector<ReferenceRow>& reference_table() {
    static const std::vector<ReferenceRow> rows = {
        {"1/3", "01", 2, 7, 1.119},           {"21/127", "0010101", 7, 388, 1.096},
        {"11/63", "001011", 6, 175, 1.086},   {"5/31", "00101", 5, 76, 1.085},
        {"1/5", "0011", 4, 34, 1.078},        {"19/127", "0010011", 7, 436, 1.072},
        {"11/127", "0001011", 7, 472, 1.055}, {"13/127", "0001101", 7, 472, 1.055},
        {"1/7", "001", 3, 16, 1.050},         {"3/31", "00011", 5, 88, 1.040},
        {"5/63", "000101", 6, 211, 1.039},    {"1/9", "000111", 6, 223, 1.025},
        {"9/127", "0001001", 7, 580, 1.012},  {"5/127", "0000101", 7, 616, 0.999},
        {"1/21", "000011", 6, 250, 0.997},    {"7/127", "0000111", 7, 628, 0.995},
        {"1/15", "0001", 4, 43, 0.982},       {"3/127", "0000011", 7, 736, 0.962},
        {"1/31", "00001", 5, 124, 0.936},     {"1/63", "000001", 6, 367, 0.903},
        {"1/127", "0000001", 7, 1096, 0.880}, {"0", "0", 1, 4, 0.737},
    };
    return rows;
}

std::vector<std::string> compare_with_reference(const std::vector<HolderReport>& reports, double alpha_tolerance) {
    std::vector<std::string> problems;
    const auto& ref = reference_table();
    if (reports.size() != ref.size()) {
        problems.push_back("expected " + std::to_string(ref.size()) + " rows, got " + std::to_string(reports.size()));
    }
    const std::size_t n = std::min(reports.size(), ref.size());
    for (std::size_t i = 0; i < n; ++i) {
        const HolderReport& r = reports[i];
        const ReferenceRow& e = ref[i];
        const std::string where = "row " + std::to_string(i + 1) + " (" + e.period + "): ";
        if (r.s != parse_rational(e.s)) problems.push_back(where + "s = " + to_string(r.s) + ", expected " + e.s);
        if (r.expansion.period != e.period) problems.push_back(where + "period " + r.expansion.period);
        if (r.period_length != e.length) problems.push_back(where + "length " + std::to_string(r.period_length));
        if (r.scaled_trace != e.scaled_trace)
            problems.push_back(where + "scaled trace " + r.scaled_trace.get_str() + ", expected " +
                               std::to_string(e.scaled_trace));
        if (std::abs(r.alpha.midpoint - e.alpha) > alpha_tolerance)
            problems.push_back(where + "alpha " + std::to_string(r.alpha.midpoint) + ", expected " +
                               std::to_string(e.alpha));
    }
    return problems;
}

}  // namespace sierpharm
