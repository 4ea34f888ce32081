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

#include "tempoly/rational.h"

#include <limits>
#include <stdexcept>

namespace tempoly {

std::string to_string(const Rational &value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    for (size_t k = start; k < text.size(); k++) {
        if (text[k] < '0' || text[k] > '9') {
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        }
    }
    BigInt result(std::string(text.substr(start)));
    return text[0] == '-' ? BigInt(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

double to_double(const Rational &value) {
    return value.convert_to<double>();
}

std::int64_t to_int64(const BigInt &value) {
    if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("integer " + value.str() + " does not fit in 64 bits");
    }
    return value.convert_to<std::int64_t>();
}

}  // namespace tempoly
