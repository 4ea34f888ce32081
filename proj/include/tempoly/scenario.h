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

#ifndef TEMPOLY_SCENARIO_H
#define TEMPOLY_SCENARIO_H

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tempoly/rational.h"

namespace tempoly {

/// Default cap on the number of probability coordinates a scenario may have.
inline constexpr std::uint64_t kDefaultCoordinateLimit = 1'000'000;

/// Raised when a scenario (or an enumeration derived from it) exceeds a size guard.
struct SizeLimitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A measurement scenario: n parties (or measurement times), m settings per
/// measurement and delta outcomes per performed measurement. Setting 0 and
/// outcome 0 denote "no measurement".
class Scenario {
   public:
    /// Throws std::invalid_argument unless n >= 1, m >= 1, delta >= 2.
    Scenario(int n, int m, int delta);

    int n() const { return n_; }
    int m() const { return m_; }
    int delta() const { return delta_; }

    /// Number of (setting, outcome) combinations per time: m*delta + 1.
    int combo_count() const { return m_ * delta_ + 1; }

    /// (m*delta + 1)^n without any size guard. Throws std::overflow_error past 2^64.
    std::uint64_t unchecked_coordinate_count() const;

    /// (m + 1)^n.
    std::uint64_t setting_count() const;

    std::string str() const;

    auto operator<=>(const Scenario &) const = default;

   private:
    int n_;
    int m_;
    int delta_;
};

/// (m*delta + 1)^n. Throws SizeLimitError when the count exceeds `limit`.
std::uint64_t coordinate_count(const Scenario &scenario, std::uint64_t limit = kDefaultCoordinateLimit);

/// Per-time settings s_1..s_n, each in {0..m}.
struct SettingVector {
    std::vector<int> values;

    size_t size() const { return values.size(); }
    int operator[](size_t k) const { return values[k]; }
    int &operator[](size_t k) { return values[k]; }
    bool all_zero() const;
    auto operator<=>(const SettingVector &) const = default;
};

/// Per-time outcomes q_1..q_n; q_i is 0 exactly when s_i is 0, otherwise in {1..delta}.
struct OutcomeVector {
    std::vector<int> values;

    size_t size() const { return values.size(); }
    int operator[](size_t k) const { return values[k]; }
    int &operator[](size_t k) { return values[k]; }
    auto operator<=>(const OutcomeVector &) const = default;
};

/// A (settings, outcomes) pair identifying one probability coordinate.
struct Coordinate {
    SettingVector settings;
    OutcomeVector outcomes;
    auto operator<=>(const Coordinate &) const = default;
};

/// Throws std::invalid_argument if `s` has the wrong length or out-of-range entries.
void validate(const Scenario &scenario, const SettingVector &s);

/// Throws std::invalid_argument unless (s, q) pair up per the skip convention.
void validate(const Scenario &scenario, const SettingVector &s, const OutcomeVector &q);

/// Per-time combination code: 0 for a skipped measurement, else (s-1)*delta + q.
int combo_code(const Scenario &scenario, int setting, int outcome);

/// Big-endian positional index: time 1 varies slowest.
std::uint64_t flat_index(const Scenario &scenario, const SettingVector &s, const OutcomeVector &q);
std::uint64_t flat_index(const Scenario &scenario, const Coordinate &coordinate);

/// Inverse of flat_index. Throws std::out_of_range for indices past the coordinate count.
Coordinate unflatten(const Scenario &scenario, std::uint64_t index);

/// All (m+1)^n setting vectors in lexicographic order.
std::vector<SettingVector> enumerate_settings(const Scenario &scenario);

/// Outcome vectors compatible with `s`, in lexicographic order.
std::vector<OutcomeVector> outcomes_for(const Scenario &scenario, const SettingVector &s);

/// Index of the last performed measurement in `s`, or -1 when nothing is measured.
int last_performed(const SettingVector &s);

/// Formats a setting or outcome vector as "(1,0,2)".
std::string format_vector(const std::vector<int> &values, bool trim_trailing_zeros = false);

/// A full assignment of probabilities to every coordinate, in flat-index order.
template <typename T>
struct ProbVector {
    Scenario scenario;
    std::vector<T> values;

    const T &at(const Coordinate &c) const { return values[flat_index(scenario, c)]; }
    const T &at(const SettingVector &s, const OutcomeVector &q) const { return values[flat_index(scenario, s, q)]; }
};

using ExactProbVector = ProbVector<Rational>;
using RealProbVector = ProbVector<double>;

RealProbVector to_real(const ExactProbVector &p);

/// Uniform distribution: each setting vector's outcomes share probability equally.
ExactProbVector uniform_point(const Scenario &scenario);

}  // namespace tempoly

#endif
