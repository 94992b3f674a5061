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

#include "sierpharm/necklace.hpp"

#include "sierpharm/errors.hpp"
#include "sierpharm/matrix.hpp"

namespace sierpharm {

std::string canonical_rotation(std::string_view word) {
    std::string best(word);
    std::string doubled = std::string(word) + std::string(word);
    for (std::size_t i = 1; i < word.size(); ++i) {
        std::string_view rot(doubled.data() + i, word.size());
        if (rot < best) best.assign(rot);
    }
    return best;
}

bool is_primitive(std::string_view word) {
    const std::size_t n = word.size();
    if (n == 0) return false;
    // w is a proper power iff it occurs inside ww at a position strictly between 0 and n.
    std::string doubled = std::string(word) + std::string(word);
    return doubled.find(word, 1) == n;
}

std::string complement(std::string_view word) {
    std::string out(word);
    for (char& c : out) {
        c = c == '0' ? '1' : '0';
    }
    return out;
}

std::vector<std::string> enumerate_necklace_classes(std::size_t length, bool dedupe_complement) {
    if (length == 0) {
        throw DomainError("necklace length must be at least 1");
    }
    // Fredricksen-Kessler-Maiorana: successive prenecklaces in lexicographic
    // order; a prenecklace a_1..a_p repeated is Lyndon of length n iff p == n.
    std::vector<std::string> out;
    std::string a(length, '0');
    std::size_t p = 1;
    for (;;) {
        if (p == length) {
            out.push_back(a);
        }
        // Next prenecklace: increment the last non-'1' position.
        std::size_t i = length;
        while (i > 0 && a[i - 1] == '1') --i;
        if (i == 0) break;
        a[i - 1] = '1';
        for (std::size_t j = i; j < length; ++j) {
            a[j] = a[j - i];
        }
        p = i;
    }
    if (!dedupe_complement) {
        return out;
    }
    std::vector<std::string> kept;
    for (const auto& w : out) {
        const std::string partner = canonical_rotation(complement(w));
        // Same length, purely periodic: value order is lexicographic order.
        if (w <= partner) {
            kept.push_back(w);
        }
    }
    return kept;
}

std::vector<std::string> enumerate_necklace_classes_upto(std::size_t max_length, bool dedupe_complement) {
    std::vector<std::string> all;
    for (std::size_t len = 1; len <= max_length; ++len) {
        auto part = enumerate_necklace_classes(len, dedupe_complement);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace sierpharm
