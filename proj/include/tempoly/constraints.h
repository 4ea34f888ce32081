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

#ifndef TEMPOLY_CONSTRAINTS_H
#define TEMPOLY_CONSTRAINTS_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "tempoly/rational.h"
#include "tempoly/scenario.h"

namespace tempoly {

enum class ConstraintKind { Normalization, NoSignaling, ArrowOfTime, NoSignalingInTime };

std::string_view to_string(ConstraintKind kind);

struct Term {
    std::uint64_t index;
    Rational coeff;
};

/// One affine equality: sum(coeff * p[index]) == rhs.
struct ConstraintRow {
    std::vector<Term> terms;
    Rational rhs;
    std::string label;
};

/// An exact affine equality system over a scenario's probability coordinates.
///
/// Marginalization rows are written as "marginal minus sum" with rhs 0;
/// normalization rows have rhs 1.
struct ConstraintSystem {
    Scenario scenario;
    ConstraintKind kind;
    std::vector<ConstraintRow> rows;

    size_t size() const { return rows.size(); }
};

/// One row per setting vector: the outcome probabilities sum to 1.
ConstraintSystem build_normalization(const Scenario &scenario);

/// No-signaling: for every party i with s_i != 0 and every context, the
/// distribution with measurement i skipped equals the sum over q_i.
ConstraintSystem build_ns(const Scenario &scenario);

/// Arrow of time: for times i >= 2 that are the last performed measurement
/// and have at least one earlier performed measurement, summing out q_i
/// recovers the shorter history.
ConstraintSystem build_aot(const Scenario &scenario);

/// No-signaling in time: for i < n with s_i != 0 and some later performed
/// measurement, summing out q_i equals the distribution with i skipped.
ConstraintSystem build_nsit(const Scenario &scenario);

/// ((m*delta+1)^n - n*m*delta - 1) / delta.
BigInt count_aot_closed_form(const Scenario &scenario);

/// (m+1)^n - n*m - 1: normalizations made redundant by the arrow-of-time rows.
BigInt count_redundant_normalizations(const Scenario &scenario);

/// sum(coeff * values[index]) - rhs.
template <typename T>
T row_residual(const ConstraintRow &row, std::span<const T> values) {
    T acc = T(0);
    for (const auto &t : row.terms) {
        if constexpr (std::is_same_v<T, double>) {
            acc += to_double(t.coeff) * values[t.index];
        } else {
            acc += t.coeff * values[t.index];
        }
    }
    if constexpr (std::is_same_v<T, double>) {
        return acc - to_double(row.rhs);
    } else {
        return acc - row.rhs;
    }
}

/// Largest |residual| over the rows of `system`.
double max_abs_residual(const ConstraintSystem &system, std::span<const double> values);

/// Index of the first row not satisfied exactly, or -1 if every row holds.
long first_violated_row(const ConstraintSystem &system, std::span<const Rational> values);

}  // namespace tempoly

#endif
