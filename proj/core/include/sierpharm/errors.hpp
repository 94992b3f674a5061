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

#include <stdexcept>
#include <string>

namespace sierpharm {

// Base of every error thrown by the library. The CLI maps subclasses onto
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (s outside [0,1], ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed textual input.
class ParseError : public Error {
public:
    using Error::Error;
};

// Integer argument out of range (e.g. k > 2^n).
class RangeError : public Error {
public:
    using Error::Error;
};

// Request exceeds a configured resource cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

// 2x2 matrix without two distinct real eigenvalues.
class DegenerateError : public Error {
public:
    using Error::Error;
};

// Vector outside the difference cone.
class ConeError : public Error {
public:
    using Error::Error;
};

// One-sided request that makes no sense at an endpoint of [0,1].
class SideError : public Error {
public:
    using Error::Error;
};

}  // namespace sierpharm
