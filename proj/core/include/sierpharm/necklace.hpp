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
#include <vector>

namespace sierpharm {

// Lexicographically smallest rotation.
std::string canonical_rotation(std::string_view word);

// Not a power u^k (k >= 2) of a shorter word.
bool is_primitive(std::string_view word);

std::string complement(std::string_view word);

// Lyndon words (primitive necklaces, each as its smallest rotation) of
// length exactly `length`, in lexicographic order. With dedupe_complement a
// class and the class of its bitwise complement are reported once, keeping the
// representative of smaller value; self-complementary classes are kept.
std::vector<std::string> enumerate_necklace_classes(std::size_t length, bool dedupe_complement);

// All classes of lengths 1..max_length, shortest first.
std::vector<std::string> enumerate_necklace_classes_upto(std::size_t max_length, bool dedupe_complement);

}  // namespace sierpharm
