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
#include <string>
#include <string_view>

#include "sierpharm/rational.hpp"

namespace sierpharm {

// Which binary expansion of a dyadic rational: Upper never ends in 1111...,
// Lower never ends in 0000...; both coincide for non-dyadic s.
enum class Variant { Upper, Lower };

// Eventually periodic binary expansion 0.<preperiod>(<period>).
//
// Invariants (checked by validate()): bits only; period nonempty and
// primitive; preperiod minimal (its last bit differs from the period's last
// bit); period "1" only for Lower, period "0" only for Upper (and for 0 itself
// under either tag is forbidden for Lower).
struct Expansion {
    std::string preperiod;
    std::string period;
    Variant variant = Variant::Upper;

    // i-th digit after the radix point, 0-based.
    char bit(std::size_t i) const;
    // First n digits.
    std::string prefix(std::size_t n) const;
    bool is_dyadic() const { return period == "0" || period == "1"; }

    void validate() const;

    friend bool operator==(const Expansion&, const Expansion&) = default;
};

// Throws DomainError outside [0,1], and for the two nonexistent expansions
// (Upper of 1, Lower of 0).
Expansion expand(const Rational& s, Variant variant);

// Upper expansion, except at s = 1 where only the Lower one exists.
Expansion expand_default(const Rational& s);

Rational expansion_value(const Expansion& e);

// Rotates/merges the preperiod into the period until it is minimal and
// reduces the period to its primitive root. Variant is recomputed from the
// resulting period when it is "0" or "1".
Expansion normalize_expansion(std::string preperiod, std::string period);

// "0.<preperiod>(<period>)".
std::string to_string(const Expansion& e);
Expansion parse_expansion(std::string_view text);

// Point grammar used by the CLI: "p/q", exact decimals, or binary expansion
// syntax "0.<pre>(<period>)" (recognised by the parenthesis).
Rational parse_point(std::string_view text);

// Fraction of cyclic positions i with a_i != a_{i+1}.
Rational transition_density(std::string_view period);

// Longest run of equal bits when the word is read cyclically; SIZE_MAX for a
// constant word.
std::size_t max_cyclic_run(std::string_view period);

}  // namespace sierpharm
