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

#include "tempoly/constraints.h"

#include <cmath>
#include <functional>

namespace tempoly {

std::string_view to_string(ConstraintKind kind) {
    switch (kind) {
        case ConstraintKind::Normalization:
            return "Normalization";
        case ConstraintKind::NoSignaling:
            return "NS";
        case ConstraintKind::ArrowOfTime:
            return "AoT";
        case ConstraintKind::NoSignalingInTime:
            return "NSIT";
    }
    return "?";
}

namespace {

// Decides whether marginalizing measurement `i` out of setting vector `s`
// yields a row of the family being built. s[i] != 0 is already guaranteed.
using MarginalPredicate = std::function<bool(const SettingVector &s, int i)>;

std::string marginal_label(ConstraintKind kind, int i, const SettingVector &s, const OutcomeVector &context) {
    std::string q = "(";
    for (size_t k = 0; k < context.size(); k++) {
        if (k) {
            q += ",";
        }
        q += static_cast<int>(k) == i ? std::string("*") : std::to_string(context[k]);
    }
    q += ")";
    return std::string(to_string(kind)) + " i=" + std::to_string(i + 1) + " s=" + format_vector(s.values) +
           " q=" + q;
}

// Single-measurement marginalizations: for every s, every i with s_i != 0
// accepted by `keep`, and every outcome context on the other positions,
//   p(q with q_i=0 | s with s_i=0) - sum_{q_i} p(q | s) = 0.
ConstraintSystem build_marginalizations(const Scenario &scenario, ConstraintKind kind, const MarginalPredicate &keep) {
    coordinate_count(scenario);
    ConstraintSystem system{scenario, kind, {}};
    for (const auto &s : enumerate_settings(scenario)) {
        for (int i = 0; i < scenario.n(); i++) {
            if (s[i] == 0 || !keep(s, i)) {
                continue;
            }
            SettingVector reduced = s;
            reduced[i] = 0;
            for (const auto &context : outcomes_for(scenario, reduced)) {
                ConstraintRow row;
                row.rhs = 0;
                row.terms.push_back({flat_index(scenario, reduced, context), Rational(1)});
                OutcomeVector full = context;
                for (int qi = 1; qi <= scenario.delta(); qi++) {
                    full[i] = qi;
                    row.terms.push_back({flat_index(scenario, s, full), Rational(-1)});
                }
                row.label = marginal_label(kind, i, s, context);
                system.rows.push_back(std::move(row));
            }
        }
    }
    return system;
}

bool any_performed(const SettingVector &s, int begin, int end) {
    for (int k = begin; k < end; k++) {
        if (s[k] != 0) {
            return true;
        }
    }
    return false;
}

}  // namespace

ConstraintSystem build_normalization(const Scenario &scenario) {
    coordinate_count(scenario);
    ConstraintSystem system{scenario, ConstraintKind::Normalization, {}};
    for (const auto &s : enumerate_settings(scenario)) {
        ConstraintRow row;
        row.rhs = 1;
        for (const auto &q : outcomes_for(scenario, s)) {
            row.terms.push_back({flat_index(scenario, s, q), Rational(1)});
        }
        row.label = "Normalization s=" + format_vector(s.values);
        system.rows.push_back(std::move(row));
    }
    return system;
}

ConstraintSystem build_ns(const Scenario &scenario) {
    if (scenario.n() == 1) {
        coordinate_count(scenario);
        return {scenario, ConstraintKind::NoSignaling, {}};
    }
    return build_marginalizations(scenario, ConstraintKind::NoSignaling, [](const SettingVector &, int) {
        return true;
    });
}

ConstraintSystem build_aot(const Scenario &scenario) {
    const int n = scenario.n();
    return build_marginalizations(scenario, ConstraintKind::ArrowOfTime, [n](const SettingVector &s, int i) {
        return i >= 1 && !any_performed(s, i + 1, n) && any_performed(s, 0, i);
    });
}

ConstraintSystem build_nsit(const Scenario &scenario) {
    const int n = scenario.n();
    return build_marginalizations(scenario, ConstraintKind::NoSignalingInTime, [n](const SettingVector &s, int i) {
        return i < n - 1 && any_performed(s, i + 1, n);
    });
}

BigInt count_aot_closed_form(const Scenario &scenario) {
    BigInt total = boost::multiprecision::pow(BigInt(scenario.combo_count()), scenario.n());
    total -= BigInt(scenario.n()) * scenario.m() * scenario.delta() + 1;
    return total / scenario.delta();
}

BigInt count_redundant_normalizations(const Scenario &scenario) {
    BigInt total = boost::multiprecision::pow(BigInt(scenario.m() + 1), scenario.n());
    return total - BigInt(scenario.n()) * scenario.m() - 1;
}

double max_abs_residual(const ConstraintSystem &system, std::span<const double> values) {
    double worst = 0;
    for (const auto &row : system.rows) {
        worst = std::max(worst, std::abs(row_residual<double>(row, values)));
    }
    return worst;
}

long first_violated_row(const ConstraintSystem &system, std::span<const Rational> values) {
    for (size_t k = 0; k < system.rows.size(); k++) {
        if (row_residual<Rational>(system.rows[k], values) != 0) {
            return static_cast<long>(k);
        }
    }
    return -1;
}

}  // namespace tempoly
