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

#include "tempoly/scenario.h"

#include <limits>
#include <sstream>

namespace tempoly {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exponent) {
    std::uint64_t result = 1;
    for (int k = 0; k < exponent; k++) {
        if (result > std::numeric_limits<std::uint64_t>::max() / base) {
            throw std::overflow_error("scenario size overflows 64 bits");
        }
        result *= base;
    }
    return result;
}

}  // namespace

Scenario::Scenario(int n, int m, int delta) : n_(n), m_(m), delta_(delta) {
    if (n < 1 || m < 1 || delta < 2) {
        std::ostringstream msg;
        msg << "invalid scenario (n=" << n << ", m=" << m << ", delta=" << delta
            << "): need n >= 1, m >= 1, delta >= 2";
        throw std::invalid_argument(msg.str());
    }
}

std::uint64_t Scenario::unchecked_coordinate_count() const {
    return checked_pow(static_cast<std::uint64_t>(combo_count()), n_);
}

std::uint64_t Scenario::setting_count() const {
    return checked_pow(static_cast<std::uint64_t>(m_ + 1), n_);
}

std::string Scenario::str() const {
    std::ostringstream out;
    out << "(n=" << n_ << ", m=" << m_ << ", delta=" << delta_ << ")";
    return out.str();
}

std::uint64_t coordinate_count(const Scenario &scenario, std::uint64_t limit) {
    std::uint64_t count;
    try {
        count = scenario.unchecked_coordinate_count();
    } catch (const std::overflow_error &) {
        throw SizeLimitError("scenario " + scenario.str() + " has more than 2^64 coordinates");
    }
    if (count > limit) {
        std::ostringstream msg;
        msg << "scenario " << scenario.str() << " has " << count << " coordinates, above the limit of " << limit;
        throw SizeLimitError(msg.str());
    }
    return count;
}

bool SettingVector::all_zero() const {
    for (int v : values) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

void validate(const Scenario &scenario, const SettingVector &s) {
    if (s.size() != static_cast<size_t>(scenario.n())) {
        throw std::invalid_argument(
            "setting vector " + format_vector(s.values) + " has wrong length for " + scenario.str());
    }
    for (int v : s.values) {
        if (v < 0 || v > scenario.m()) {
            throw std::invalid_argument(
                "setting vector " + format_vector(s.values) + " out of range for " + scenario.str());
        }
    }
}

void validate(const Scenario &scenario, const SettingVector &s, const OutcomeVector &q) {
    validate(scenario, s);
    if (q.size() != s.size()) {
        throw std::invalid_argument("outcome vector " + format_vector(q.values) + " has wrong length");
    }
    for (size_t k = 0; k < s.size(); k++) {
        bool ok = s[k] == 0 ? q[k] == 0 : (q[k] >= 1 && q[k] <= scenario.delta());
        if (!ok) {
            throw std::invalid_argument(
                "outcomes " + format_vector(q.values) + " incompatible with settings " + format_vector(s.values));
        }
    }
}

int combo_code(const Scenario &scenario, int setting, int outcome) {
    return setting == 0 ? 0 : (setting - 1) * scenario.delta() + outcome;
}

std::uint64_t flat_index(const Scenario &scenario, const SettingVector &s, const OutcomeVector &q) {
    validate(scenario, s, q);
    std::uint64_t index = 0;
    const auto base = static_cast<std::uint64_t>(scenario.combo_count());
    for (size_t k = 0; k < s.size(); k++) {
        index = index * base + static_cast<std::uint64_t>(combo_code(scenario, s[k], q[k]));
    }
    return index;
}

std::uint64_t flat_index(const Scenario &scenario, const Coordinate &coordinate) {
    return flat_index(scenario, coordinate.settings, coordinate.outcomes);
}

Coordinate unflatten(const Scenario &scenario, std::uint64_t index) {
    if (index >= scenario.unchecked_coordinate_count()) {
        throw std::out_of_range("flat index " + std::to_string(index) + " out of range for " + scenario.str());
    }
    const auto base = static_cast<std::uint64_t>(scenario.combo_count());
    Coordinate c;
    c.settings.values.assign(scenario.n(), 0);
    c.outcomes.values.assign(scenario.n(), 0);
    for (int k = scenario.n() - 1; k >= 0; k--) {
        int code = static_cast<int>(index % base);
        index /= base;
        if (code != 0) {
            c.settings[k] = (code - 1) / scenario.delta() + 1;
            c.outcomes[k] = (code - 1) % scenario.delta() + 1;
        }
    }
    return c;
}

std::vector<SettingVector> enumerate_settings(const Scenario &scenario) {
    std::vector<SettingVector> result;
    result.reserve(scenario.setting_count());
    SettingVector s{std::vector<int>(scenario.n(), 0)};
    while (true) {
        result.push_back(s);
        int k = scenario.n() - 1;
        while (k >= 0 && s[k] == scenario.m()) {
            s[k] = 0;
            k--;
        }
        if (k < 0) {
            break;
        }
        s[k]++;
    }
    return result;
}

std::vector<OutcomeVector> outcomes_for(const Scenario &scenario, const SettingVector &s) {
    validate(scenario, s);
    OutcomeVector q{std::vector<int>(s.size(), 0)};
    for (size_t k = 0; k < s.size(); k++) {
        q[k] = s[k] == 0 ? 0 : 1;
    }
    std::vector<OutcomeVector> result;
    while (true) {
        result.push_back(q);
        int k = static_cast<int>(s.size()) - 1;
        while (k >= 0 && (s[k] == 0 || q[k] == scenario.delta())) {
            if (s[k] != 0) {
                q[k] = 1;
            }
            k--;
        }
        if (k < 0) {
            break;
        }
        q[k]++;
    }
    return result;
}

int last_performed(const SettingVector &s) {
    for (int k = static_cast<int>(s.size()) - 1; k >= 0; k--) {
        if (s[k] != 0) {
            return k;
        }
    }
    return -1;
}

std::string format_vector(const std::vector<int> &values, bool trim_trailing_zeros) {
    size_t end = values.size();
    if (trim_trailing_zeros) {
        while (end > 0 && values[end - 1] == 0) {
            end--;
        }
    }
    std::string out = "(";
    for (size_t k = 0; k < end; k++) {
        if (k) {
            out += ",";
        }
        out += std::to_string(values[k]);
    }
    out += ")";
    return out;
}

RealProbVector to_real(const ExactProbVector &p) {
    RealProbVector result{p.scenario, {}};
    result.values.reserve(p.values.size());
    for (const auto &v : p.values) {
        result.values.push_back(to_double(v));
    }
    return result;
}

ExactProbVector uniform_point(const Scenario &scenario) {
    ExactProbVector p{scenario, std::vector<Rational>(coordinate_count(scenario))};
    for (const auto &s : enumerate_settings(scenario)) {
        auto outcomes = outcomes_for(scenario, s);
        Rational weight(1, static_cast<long long>(outcomes.size()));
        for (const auto &q : outcomes) {
            p.values[flat_index(scenario, s, q)] = weight;
        }
    }
    return p;
}

}  // namespace tempoly
