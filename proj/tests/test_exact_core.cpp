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

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sierpharm/errors.hpp"
#include "sierpharm/expansion.hpp"
#include "sierpharm/matrix.hpp"
#include "sierpharm/necklace.hpp"
#include "sierpharm/quadratic.hpp"
#include "sierpharm/rational.hpp"

namespace {

using namespace sierpharm;

std::string random_word(std::mt19937_64& rng, std::size_t len) {
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(rng() & 1 ? '1' : '0');
    return w;
}

Rational entry_of(const ScaledIntMat3& m, int i, int j) { return m.at(i, j); }

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
    EXPECT_EQ(parse_rational("6/8"), make_rational(3, 4));
    EXPECT_EQ(parse_rational("-2"), Rational(-2));
    EXPECT_EQ(parse_rational("0.125"), make_rational(1, 8));
    EXPECT_EQ(parse_rational(" 1/3 "), make_rational(1, 3));
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, Powers) {
    EXPECT_EQ(pow5(3), BigInt(125));
    EXPECT_EQ(pow2(10), BigInt(1024));
    EXPECT_EQ(rational_pow(make_rational(3, 25), 2), make_rational(9, 625));
    EXPECT_EQ(to_string(make_rational(-4, 6)), "-2/3");
    EXPECT_EQ(to_string(Rational(5)), "5");
}

TEST(Generators, MatchPublishedEntries) {
    const ScaledIntMat3 m0 = generator_matrix(Symbol::Zero);
    const ScaledIntMat3 m1 = generator_matrix(Symbol::One);
    const ScaledIntMat3 mw = generator_matrix(Symbol::Omega);
    const long e0[3][3] = {{5, 2, 2}, {0, 2, 1}, {0, 1, 2}};
    const long e1[3][3] = {{2, 0, 1}, {2, 5, 2}, {1, 0, 2}};
    const long ew[3][3] = {{2, 1, 0}, {1, 2, 0}, {2, 2, 5}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            EXPECT_EQ(m0.entries[i][j], e0[i][j]);
            EXPECT_EQ(m1.entries[i][j], e1[i][j]);
            EXPECT_EQ(mw.entries[i][j], ew[i][j]);
        }
    EXPECT_EQ(m0.pow5, 1u);
    EXPECT_EQ(mw.pow5, 1u);
}

TEST(Generators, SharedMidpoint) {
    const Vec3Q mid{make_rational(2, 5), make_rational(2, 5), make_rational(1, 5)};
    EXPECT_EQ(word_product("0").apply(Vec3Q::e1()), mid);
    EXPECT_EQ(word_product("1").apply(Vec3Q::e0()), mid);
}

TEST(WordProduct, EmptyIsIdentity) {
    const ScaledIntMat3 id = word_product("");
    EXPECT_EQ(id, ScaledIntMat3::identity());
    EXPECT_EQ(id.pow5, 0u);
}

TEST(WordProduct, ZeroOneAppliedToE0) {
    const ScaledIntMat3 m = word_product("01");
    EXPECT_EQ(m.pow5, 2u);
    EXPECT_EQ(m.apply(Vec3Q::e0()), (Vec3Q{make_rational(16, 25), make_rational(5, 25), make_rational(4, 25)}));
}

TEST(WordProduct, AcceptsOmegaSpellings) {
    EXPECT_EQ(word_product("w"), generator_matrix(Symbol::Omega));
    EXPECT_EQ(word_product("\xcf\x89"), generator_matrix(Symbol::Omega));
    EXPECT_THROW(word_product("012"), ParseError);
    EXPECT_THROW(require_bit_word("0w"), ParseError);
}

TEST(WordProduct, PowersOfM0HaveKnownTrace) {
    for (unsigned n = 0; n <= 12; ++n) {
        const ScaledIntMat3 m = word_product(std::string(n, '0'));
        EXPECT_EQ(m.trace(), 1 + rational_pow(make_rational(3, 5), n) + rational_pow(make_rational(1, 5), n)) << n;
    }
}

TEST(WordProduct, AgreesWithRationalOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::string w = random_word(rng, rng() % 20);
        const ScaledIntMat3 m = word_product(w);
        const oracle::QMat3 q = oracle::word(w);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) ASSERT_EQ(entry_of(m, i, j), q[i][j]) << w;
    }
}

TEST(WordProduct, ColumnSumsHoldForLongWords) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string w = random_word(rng, 1 + rng() % 64);
        const ScaledIntMat3 m = word_product(w);
        ASSERT_TRUE(m.column_sums_hold()) << w;
        for (int j = 0; j < 3; ++j) {
            BigInt sum = m.entries[0][j] + m.entries[1][j] + m.entries[2][j];
            ASSERT_EQ(sum, pow5(w.size()));
        }
    }
}

TEST(Restriction, KnownMatricesInBasisB) {
    const ScaledIntMat2 r0 = restrict_to_plane(word_product("0"));
    const ScaledIntMat2 r1 = restrict_to_plane(word_product("1"));
    const ScaledIntMat2 r01 = restrict_to_plane(word_product("01"));
    EXPECT_EQ(r0.at(0, 0), make_rational(3, 5));
    EXPECT_EQ(r0.at(0, 1), Rational(0));
    EXPECT_EQ(r0.at(1, 0), make_rational(1, 5));
    EXPECT_EQ(r0.at(1, 1), make_rational(1, 5));
    EXPECT_EQ(r1.at(0, 0), make_rational(2, 5));
    EXPECT_EQ(r1.at(0, 1), make_rational(-1, 5));
    EXPECT_EQ(r1.at(1, 0), make_rational(-1, 5));
    EXPECT_EQ(r1.at(1, 1), make_rational(2, 5));
    EXPECT_EQ(r01.pow5, 2u);
    EXPECT_EQ(r01.entries[0][0], 6);
    EXPECT_EQ(r01.entries[0][1], -3);
    EXPECT_EQ(r01.entries[1][0], 1);
    EXPECT_EQ(r01.entries[1][1], 1);
    EXPECT_EQ(r01.trace(), make_rational(7, 25));
}

TEST(Restriction, AgreesWithLinearSolveOracle) {
    const std::array<Rational, 3> b1{1, -1, 0}, b2{0, 1, -1};
    const std::array<Rational, 3> v{make_rational(-1, 2), make_rational(-1, 2), 1}, w{make_rational(-1, 2), make_rational(1, 2), 0};
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string word = random_word(rng, rng() % 14);
        const ScaledIntMat3 m = word_product(word);
        const auto qb = oracle::restrict(oracle::word(word), b1, b2);
        const auto qv = oracle::restrict(oracle::word(word), v, w);
        const ScaledIntMat2 rb = restrict_to_plane(m, PlaneBasis::B);
        const ScaledIntMat2 rv = restrict_to_plane(m, PlaneBasis::V);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                ASSERT_EQ(rb.at(i, j), qb[i][j]) << word;
                ASSERT_EQ(rv.at(i, j), qv[i][j]) << word;
            }
    }
}

TEST(Restriction, ProductIsMultiplicative) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const std::string a = random_word(rng, rng() % 10), b = random_word(rng, rng() % 10);
        for (PlaneBasis basis : {PlaneBasis::B, PlaneBasis::V}) {
            const ScaledIntMat2 lhs = restrict_to_plane(word_product(a + b), basis);
            const ScaledIntMat2 rhs =
                restrict_to_plane(word_product(a), basis) * restrict_to_plane(word_product(b), basis);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) ASSERT_EQ(lhs.at(i, j), rhs.at(i, j));
        }
    }
}

TEST(Restriction, PlaneCoordinatesRoundTrip) {
    const Vec3Q x{make_rational(3, 7), make_rational(-1, 2), make_rational(1, 14)};
    for (PlaneBasis basis : {PlaneBasis::B, PlaneBasis::V}) {
        EXPECT_EQ(plane_vector(plane_coordinates(x, basis), basis), x);
    }
}

TEST(PlaneTrace, KnownValues) {
    EXPECT_EQ(plane_trace(word_product("0")), make_rational(4, 5));
    EXPECT_EQ(scaled_plane_trace("0"), 4);
    EXPECT_EQ(plane_trace(word_product("0011")), make_rational(34, 625));
    EXPECT_EQ(scaled_plane_trace("0011"), 34);
    EXPECT_EQ(plane_trace(ScaledIntMat3::identity()), Rational(2));
    EXPECT_EQ(scaled_plane_trace("01"), 7);
    EXPECT_EQ(scaled_plane_trace("0010101"), 388);
}

TEST(PlaneTrace, MatchesRestrictionTraceAndRotations) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string w = random_word(rng, 1 + rng() % 16);
        const ScaledIntMat3 m = word_product(w);
        ASSERT_EQ(plane_trace(m), restrict_to_plane(m).trace());
        for (std::size_t r = 1; r < w.size(); ++r) {
            const std::string rot = w.substr(r) + w.substr(0, r);
            ASSERT_EQ(plane_trace(word_product(rot)), plane_trace(m)) << w << " " << rot;
        }
    }
}

TEST(PlaneTrace, DeterminantIsPowerOfThreeOverTwentyFive) {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string w = random_word(rng, rng() % 33);
        for (PlaneBasis basis : {PlaneBasis::B, PlaneBasis::V}) {
            ASSERT_EQ(restrict_to_plane(word_product(w), basis).determinant(), rational_pow(make_rational(3, 25), w.size()))
                << w;
        }
    }
}

TEST(Quadratic, ArithmeticAndSign) {
    const QuadraticValue r13(0, 1, 13);
    EXPECT_EQ(r13 * r13, QuadraticValue(13));
    EXPECT_GT(r13, QuadraticValue(make_rational(36, 10)));
    EXPECT_LT(r13, QuadraticValue(make_rational(361, 100)));
    EXPECT_EQ((QuadraticValue(1, 1, 2) * QuadraticValue(1, -1, 2)), QuadraticValue(-1));
    EXPECT_EQ(QuadraticValue(0, 1, 9), QuadraticValue(3));
    EXPECT_TRUE(QuadraticValue(0, 2, 4).is_rational());
    EXPECT_EQ((QuadraticValue(1) / QuadraticValue(1, 1, 2)), QuadraticValue(-1, 1, 2));
    EXPECT_THROW(QuadraticValue(0, 1, 2) + QuadraticValue(0, 1, 3), DomainError);
    const QuadraticValue h = QuadraticValue::from_half_form(7, 13);
    EXPECT_EQ(h.half_form_t(), Rational(7));
    EXPECT_EQ(h.half_form_d(), Rational(13));
    const Interval iv = r13.enclose(128);
    EXPECT_LE(iv.lower(), 3.6055512754639894);
    EXPECT_GE(iv.upper(), 3.6055512754639891);
    EXPECT_LT(iv.width(), 1e-30);
}

TEST(Quadratic, DominantEigenKnownCases) {
    const EigenData e01 = dominant_eigen(restrict_to_plane(word_product("01")));
    EXPECT_EQ(e01.lambda, QuadraticValue(make_rational(7, 50), make_rational(1, 50), 13));
    const EigenData e0 = dominant_eigen(restrict_to_plane(word_product("0")));
    EXPECT_EQ(e0.lambda, QuadraticValue(make_rational(3, 5)));
    EXPECT_EQ(e0.mu, QuadraticValue(make_rational(1, 5)));
    ScaledIntMat2 scalar = ScaledIntMat2::identity(PlaneBasis::B);
    scalar.entries[0][0] = 3;
    scalar.entries[1][1] = 3;
    scalar.pow5 = 1;
    EXPECT_THROW(dominant_eigen(scalar), DegenerateError);
}

TEST(Quadratic, EigenSumAndProductMatchTraceAndDeterminant) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string w = random_word(rng, 1 + rng() % 20);
        for (PlaneBasis basis : {PlaneBasis::B, PlaneBasis::V}) {
            const ScaledIntMat2 m = restrict_to_plane(word_product(w), basis);
            const EigenData e = dominant_eigen(m);
            ASSERT_EQ(e.lambda + e.mu, QuadraticValue(m.trace())) << w;
            ASSERT_EQ(e.lambda * e.mu, QuadraticValue(m.determinant())) << w;
            ASSERT_GT(e.lambda, e.mu);
            // (m - lambda) eigvec == 0
            const QuadraticValue a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
            ASSERT_EQ(a * e.eigvec[0] + b * e.eigvec[1], e.lambda * e.eigvec[0]);
            ASSERT_EQ(c * e.eigvec[0] + d * e.eigvec[1], e.lambda * e.eigvec[1]);
        }
    }
}

TEST(Expansion, KnownExpansions) {
    Expansion e = expand(make_rational(1, 3), Variant::Upper);
    EXPECT_EQ(e.preperiod, "");
    EXPECT_EQ(e.period, "01");
    e = expand(make_rational(1, 2), Variant::Upper);
    EXPECT_EQ(e.preperiod, "1");
    EXPECT_EQ(e.period, "0");
    e = expand(make_rational(1, 2), Variant::Lower);
    EXPECT_EQ(e.preperiod, "0");
    EXPECT_EQ(e.period, "1");
    e = expand(make_rational(5, 31), Variant::Upper);
    EXPECT_EQ(e.preperiod, "");
    EXPECT_EQ(e.period, "00101");
    e = expand(Rational(0), Variant::Upper);
    EXPECT_EQ(e.period, "0");
    e = expand(Rational(1), Variant::Lower);
    EXPECT_EQ(e.period, "1");
    EXPECT_EQ(e.preperiod, "");
    EXPECT_EQ(expand_default(Rational(1)).variant, Variant::Lower);
    EXPECT_EQ(expand(make_rational(5, 12), Variant::Upper).preperiod, "01");
    EXPECT_EQ(expand(make_rational(5, 12), Variant::Upper).period, "10");
}

TEST(Expansion, OutOfRangeAndMissingVariants) {
    EXPECT_THROW(expand(make_rational(-1, 3), Variant::Upper), DomainError);
    EXPECT_THROW(expand(make_rational(4, 3), Variant::Upper), DomainError);
    EXPECT_THROW(expand(Rational(1), Variant::Upper), DomainError);
    EXPECT_THROW(expand(Rational(0), Variant::Lower), DomainError);
}

TEST(Expansion, ValueOfKnownExpansions) {
    EXPECT_EQ(expansion_value({"", "01", Variant::Upper}), make_rational(1, 3));
    EXPECT_EQ(expansion_value({"1", "0", Variant::Upper}), make_rational(1, 2));
    EXPECT_EQ(expansion_value({"", "0000001", Variant::Upper}), make_rational(1, 127));
}

TEST(Expansion, RoundTripOnRandomRationals) {
    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 1000; ++trial) {
        const unsigned long q = 1 + rng() % 1000000;
        const unsigned long p = rng() % (q + 1);
        const Rational s = make_rational(p, q);
        for (Variant v : {Variant::Upper, Variant::Lower}) {
            if ((v == Variant::Upper && s == 1) || (v == Variant::Lower && s == 0)) continue;
            const Expansion e = expand(s, v);
            ASSERT_NO_THROW(e.validate());
            ASSERT_EQ(expansion_value(e), s) << p << "/" << q;
            ASSERT_EQ(e.variant, v);
        }
    }
}

TEST(Expansion, DigitsAgreeWithDoublingOracle) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned long q = 1 + rng() % 5000;
        const unsigned long p = rng() % q;
        const Rational s = make_rational(p, q);
        ASSERT_EQ(expand(s, Variant::Upper).prefix(80), oracle::digits(s, 80)) << p << "/" << q;
    }
}

TEST(Expansion, NormalizeAndSyntax) {
    const Expansion n = normalize_expansion("0101", "0101");
    EXPECT_EQ(n.preperiod, "");
    EXPECT_EQ(n.period, "01");
    EXPECT_EQ(to_string(expand(make_rational(5, 12), Variant::Upper)), "0.01(10)");
    EXPECT_EQ(parse_expansion("0.(01)").period, "01");
    EXPECT_EQ(parse_point("0.1(0)"), make_rational(1, 2));
    EXPECT_EQ(parse_point("0.0(01)"), make_rational(1, 6));
    EXPECT_EQ(parse_point("3/9"), make_rational(1, 3));
    EXPECT_THROW(parse_expansion("0.(012)"), ParseError);
    EXPECT_THROW(parse_expansion("0.()"), Error);
}

TEST(Expansion, TransitionDensityAndRuns) {
    EXPECT_EQ(transition_density("01"), Rational(1));
    EXPECT_EQ(transition_density("0"), Rational(0));
    EXPECT_EQ(transition_density("0000001"), make_rational(2, 7));
    EXPECT_EQ(transition_density("00000001"), make_rational(1, 4));
    EXPECT_EQ(max_cyclic_run("0011"), 2u);
    EXPECT_EQ(max_cyclic_run("0110"), 2u);
    EXPECT_EQ(max_cyclic_run("01"), 1u);
    EXPECT_EQ(max_cyclic_run("0"), std::numeric_limits<std::size_t>::max());
}

TEST(Necklace, Basics) {
    EXPECT_EQ(canonical_rotation("1100"), "0011");
    EXPECT_TRUE(is_primitive("0011"));
    EXPECT_FALSE(is_primitive("0101"));
    EXPECT_EQ(complement("0010"), "1101");
}

TEST(Necklace, KnownCounts) {
    EXPECT_EQ(enumerate_necklace_classes(5, true), (std::vector<std::string>{"00001", "00011", "00101"}));
    EXPECT_EQ(enumerate_necklace_classes(7, true).size(), 9u);
    EXPECT_EQ(enumerate_necklace_classes(7, false).size(), 18u);
    EXPECT_EQ(enumerate_necklace_classes(1, true), (std::vector<std::string>{"0"}));
    EXPECT_EQ(enumerate_necklace_classes(1, false), (std::vector<std::string>{"0", "1"}));
    EXPECT_EQ(enumerate_necklace_classes_upto(7, true).size(), 22u);
    const auto seven = enumerate_necklace_classes(7, true);
    EXPECT_NE(std::find(seven.begin(), seven.end(), "0001011"), seven.end());
    EXPECT_NE(std::find(seven.begin(), seven.end(), "0001101"), seven.end());
}

TEST(Necklace, MatchesBruteForceUpToTwelve) {
    for (std::size_t len = 1; len <= 12; ++len) {
        for (bool dedupe : {false, true}) {
            const auto got = enumerate_necklace_classes(len, dedupe);
            const std::set<std::string> want = oracle::necklaces(len, dedupe);
            ASSERT_EQ(std::set<std::string>(got.begin(), got.end()), want) << len << " " << dedupe;
            ASSERT_EQ(got.size(), want.size());
        }
    }
}

}  // namespace
