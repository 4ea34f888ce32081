// Copyright 2026 The tempoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEMPOLY_RATIONAL_H
#define TEMPOLY_RATIONAL_H

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tempoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formats as "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational &value);

/// Parses "num", "num/den" or "-num/den". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

double to_double(const Rational &value);

/// Checked narrowing; throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt &value);

}  // namespace tempoly

#endif
