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

#include "sierpharm/expansion.hpp"

#include <limits>

#include "sierpharm/errors.hpp"
#include "sierpharm/matrix.hpp"
#include "sierpharm/necklace.hpp"

namespace sierpharm {

char Expansion::bit(std::size_t i) const {
    if (i < preperiod.size()) {
        return preperiod[i];
    }
    return period[(i - preperiod.size()) % period.size()];
}

std::string Expansion::prefix(std::size_t n) const {
    std::string out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(bit(i));
    }
    return out;
}

void Expansion::validate() const {
    require_bit_word(preperiod);
    require_bit_word(period);
    if (period.empty()) {
        throw DomainError("expansion with empty period");
    }
    if (!is_primitive(period)) {
        throw DomainError("expansion period '" + period + "' is not primitive");
    }
    if (!preperiod.empty() && preperiod.back() == period.back()) {
        throw DomainError("expansion preperiod '" + preperiod + "' is not minimal");
    }
    if (variant == Variant::Upper && period == "1") {
        throw DomainError("upper expansion cannot end in repeating 1");
    }
    if (variant == Variant::Lower && period == "0") {
        throw DomainError("lower expansion cannot end in repeating 0");
    }
}

namespace {

// Root of a word: the shortest u with word = u^k.
std::string primitive_root(const std::string& word) {
    const std::size_t n = word.size();
    for (std::size_t len = 1; len < n; ++len) {
        if (n % len != 0) continue;
        bool ok = true;
        for (std::size_t i = len; i < n && ok; ++i) {
            ok = word[i] == word[i - len];
        }
        if (ok) return word.substr(0, len);
    }
    return word;
}

Expansion to_lower(Expansion upper) {
    // 0.x1(0) == 0.x0(1) for a minimal preperiod ending in 1.
    if (upper.preperiod.empty()) {
        throw DomainError("0 has no lower binary expansion");
    }
    upper.preperiod.back() = '0';
    upper.period = "1";
    upper.variant = Variant::Lower;
    return upper;
}

}  // namespace

Expansion normalize_expansion(std::string preperiod, std::string period) {
    require_bit_word(preperiod);
    require_bit_word(period);
    if (period.empty()) {
        throw DomainError("expansion with empty period");
    }
    period = primitive_root(period);
    while (!preperiod.empty() && preperiod.back() == period.back()) {
        // 0.x a (b ... a) == 0.x (a b ...)
        period = std::string(1, period.back()) + period.substr(0, period.size() - 1);
        preperiod.pop_back();
    }
    Expansion e{std::move(preperiod), std::move(period), Variant::Upper};
    if (e.period == "1") {
        e.variant = Variant::Lower;
    }
    return e;
}

Expansion expand(const Rational& s, Variant variant) {
    if (sgn(s) < 0 || s > 1) {
        throw DomainError("point " + to_string(s) + " outside [0,1]");
    }
    if (s == 1) {
        if (variant == Variant::Upper) {
            throw DomainError("1 has no upper binary expansion");
        }
        return {"", "1", Variant::Lower};
    }
    const BigInt& q = s.get_den();
    BigInt r = s.get_num();
    const unsigned long k = sgn(r) == 0 ? 0 : mpz_scan1(q.get_mpz_t(), 0);

    auto next_bit = [&](std::string& out) {
        r *= 2;
        if (r >= q) {
            out.push_back('1');
            r -= q;
        } else {
            out.push_back('0');
        }
    };

    Expansion e;
    for (unsigned long i = 0; i < k; ++i) {
        next_bit(e.preperiod);
    }
    // Past the 2-adic part the remainder sequence is purely periodic.
    const BigInt start = r;
    do {
        next_bit(e.period);
    } while (r != start);
    e.variant = Variant::Upper;

    if (variant == Variant::Lower && e.period == "0") {
        return to_lower(std::move(e));
    }
    e.variant = variant;
    return e;
}

Expansion expand_default(const Rational& s) {
    return expand(s, s == 1 ? Variant::Lower : Variant::Upper);
}

Rational expansion_value(const Expansion& e) {
    require_bit_word(e.preperiod);
    require_bit_word(e.period);
    if (e.period.empty()) {
        throw DomainError("expansion with empty period");
    }
    const BigInt pre = e.preperiod.empty() ? BigInt(0) : BigInt(e.preperiod, 2);
    const BigInt per(e.period, 2);
    const BigInt cycle = pow2(e.period.size()) - 1;
    return (Rational(pre) + make_rational(per, cycle)) / Rational(pow2(e.preperiod.size()));
}

std::string to_string(const Expansion& e) {
    return "0." + e.preperiod + "(" + e.period + ")";
}

Expansion parse_expansion(std::string_view text) {
    const auto open = text.find('(');
    const auto close = text.find(')');
    if (text.substr(0, 2) != "0." || open == std::string_view::npos || close != text.size() - 1 || close < open) {
        throw ParseError("expected 0.<preperiod>(<period>), got '" + std::string(text) + "'");
    }
    std::string pre(text.substr(2, open - 2));
    std::string per(text.substr(open + 1, close - open - 1));
    if (per.empty()) {
        throw ParseError("empty period in '" + std::string(text) + "'");
    }
    try {
        return normalize_expansion(std::move(pre), std::move(per));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& err) {
        throw ParseError(err.what());
    }
}

Rational parse_point(std::string_view text) {
    if (text.find('(') != std::string_view::npos) {
        return expansion_value(parse_expansion(text));
    }
    return parse_rational(text);
}

Rational transition_density(std::string_view period) {
    require_bit_word(period);
    if (period.empty()) {
        throw DomainError("transition density of an empty word");
    }
    long changes = 0;
    for (std::size_t i = 0; i < period.size(); ++i) {
        changes += period[i] != period[(i + 1) % period.size()];
    }
    return make_rational(changes, static_cast<long>(period.size()));
}

std::size_t max_cyclic_run(std::string_view period) {
    const std::size_t n = period.size();
    if (n == 0) return 0;
    if (period.find_first_not_of(period[0]) == std::string_view::npos) {
        // A constant period repeats forever.
        return std::numeric_limits<std::size_t>::max();
    }
    std::size_t best = 0;
    for (std::size_t start = 0; start < n; ++start) {
        std::size_t run = 1;
        while (run < n && period[(start + run) % n] == period[start]) ++run;
        if (run > best) best = run;
    }
    return best;
}

}  // namespace sierpharm
