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

#include "tempoly/inequalities.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>

namespace tempoly {

namespace {

int sign_of(int outcome) {
    return outcome == 1 ? 1 : -1;
}

// Adds weight * C(s) to `coeffs`, where C(s) = sum_q prod(sign(q_i) over measured i) p(q|s).
void add_correlator(const Scenario &scenario, const SettingVector &s, int weight, std::map<std::uint64_t, Rational> &coeffs) {
    for (const auto &q : outcomes_for(scenario, s)) {
        int sign = weight;
        for (size_t i = 0; i < s.size(); i++) {
            if (s[i] != 0) {
                sign *= sign_of(q[i]);
            }
        }
        coeffs[flat_index(scenario, s, q)] += sign;
    }
}

std::vector<Term> to_terms(const std::map<std::uint64_t, Rational> &coeffs) {
    std::vector<Term> terms;
    for (const auto &[index, coeff] : coeffs) {
        if (coeff != 0) {
            terms.push_back({index, coeff});
        }
    }
    return terms;
}

}  // namespace

LinearWitness chsh_witness(const Scenario &scenario) {
    if (scenario != Scenario(2, 2, 2)) {
        throw std::invalid_argument("CHSH witness needs scenario (n=2, m=2, delta=2), got " + scenario.str());
    }
    std::map<std::uint64_t, Rational> coeffs;
    add_correlator(scenario, SettingVector{{1, 1}}, 1, coeffs);
    add_correlator(scenario, SettingVector{{1, 2}}, 1, coeffs);
    add_correlator(scenario, SettingVector{{2, 1}}, 1, coeffs);
    add_correlator(scenario, SettingVector{{2, 2}}, -1, coeffs);
    return {"CHSH", scenario, to_terms(coeffs), Rational(2)};
}

LinearWitness lgi3_witness(const Scenario &scenario, LgiOrdering ordering) {
    if (scenario != Scenario(3, 1, 2)) {
        throw std::invalid_argument("three-time LGI needs scenario (n=3, m=1, delta=2), got " + scenario.str());
    }
    const SettingVector c12{{1, 1, 0}};
    const SettingVector c23{{0, 1, 1}};
    const SettingVector c13{{1, 0, 1}};
    std::map<std::uint64_t, Rational> coeffs;
    add_correlator(scenario, c12, ordering == LgiOrdering::Subtract12 ? -1 : 1, coeffs);
    add_correlator(scenario, c23, ordering == LgiOrdering::Subtract23 ? -1 : 1, coeffs);
    add_correlator(scenario, c13, ordering == LgiOrdering::Subtract13 ? -1 : 1, coeffs);
    const char *name = ordering == LgiOrdering::Subtract13   ? "LGI C12+C23-C13"
                       : ordering == LgiOrdering::Subtract23 ? "LGI C12-C23+C13"
                                                             : "LGI -C12+C23+C13";
    return {name, scenario, to_terms(coeffs), Rational(1)};
}

Rational evaluate(const LinearWitness &witness, std::span<const Rational> values) {
    Rational acc = 0;
    for (const auto &t : witness.terms) {
        acc += t.coeff * values[t.index];
    }
    return acc;
}

double evaluate(const LinearWitness &witness, std::span<const double> values) {
    double acc = 0;
    for (const auto &t : witness.terms) {
        acc += to_double(t.coeff) * values[t.index];
    }
    return acc;
}

std::vector<double> nsit_residuals(const RealProbVector &p) {
    std::vector<double> result;
    for (const auto &row : build_nsit(p.scenario).rows) {
        result.push_back(std::abs(row_residual<double>(row, p.values)));
    }
    return result;
}

std::vector<Rational> nsit_residuals(const ExactProbVector &p) {
    std::vector<Rational> result;
    for (const auto &row : build_nsit(p.scenario).rows) {
        result.push_back(abs(row_residual<Rational>(row, p.values)));
    }
    return result;
}

std::string_view to_string(InitialState state) {
    return state == InitialState::Eigenstate ? "eigenstate" : "mixed";
}

std::vector<WitnessReport> scan_lgi_vs_nsit(const ScanConfig &config) {
    if (config.steps == 0) {
        throw std::invalid_argument("scan needs at least one grid point");
    }
    const Scenario scenario(3, 1, 2);
    const LinearWitness lgis[3] = {
        lgi3_witness(scenario, LgiOrdering::Subtract13),
        lgi3_witness(scenario, LgiOrdering::Subtract23),
        lgi3_witness(scenario, LgiOrdering::Subtract12),
    };
    const ConstraintSystem nsit = build_nsit(scenario);
    std::vector<bool> pairwise_row;
    for (const auto &row : nsit.rows) {
        // The full-side coordinate (second term) carries the setting vector of the row.
        const Coordinate c = unflatten(scenario, row.terms[1].index);
        int performed = 0;
        for (int v : c.settings.values) {
            performed += v != 0;
        }
        pairwise_row.push_back(performed == 2);
    }

    std::vector<WitnessReport> rows;
    for (InitialState state : config.states) {
        for (size_t k = 0; k < config.steps; k++) {
            const double omega_tau =
                config.steps == 1 ? config.start
                                  : config.start + (config.stop - config.start) * static_cast<double>(k) /
                                                       static_cast<double>(config.steps - 1);
            const QubitModel model = state == InitialState::Eigenstate ? QubitModel::eigenstate(omega_tau)
                                                                       : QubitModel::maximally_mixed(omega_tau);
            const RealProbVector p = simulate_qubit(model, scenario);
            WitnessReport report;
            report.omega_tau = omega_tau;
            report.state = state;
            report.lgi_ok = true;
            for (int w = 0; w < 3; w++) {
                report.lgi_values[w] = evaluate(lgis[w], p.values);
                report.lgi_ok = report.lgi_ok && report.lgi_values[w] <= to_double(lgis[w].bound) + kRoundTripTolerance;
            }
            for (size_t r = 0; r < nsit.rows.size(); r++) {
                const double residual = std::abs(row_residual<double>(nsit.rows[r], p.values));
                report.nsit_residuals.push_back(residual);
                report.max_nsit_residual = std::max(report.max_nsit_residual, residual);
                if (pairwise_row[r]) {
                    report.max_pairwise_nsit_residual = std::max(report.max_pairwise_nsit_residual, residual);
                }
            }
            report.separates = report.lgi_ok && report.max_nsit_residual > config.nsit_threshold;
            rows.push_back(std::move(report));
        }
    }
    return rows;
}

ScanSummary summarize(const std::vector<WitnessReport> &rows, double nsit_threshold) {
    ScanSummary summary;
    summary.rows = rows.size();
    summary.max_lgi = -std::numeric_limits<double>::infinity();
    for (const auto &row : rows) {
        summary.separating_rows += row.separates;
        if (row.lgi_values[0] > summary.max_lgi) {
            summary.max_lgi = row.lgi_values[0];
            summary.omega_tau_at_max_lgi = row.omega_tau;
        }
        if (row.max_pairwise_nsit_residual <= nsit_threshold && row.max_nsit_residual > nsit_threshold) {
            summary.pairwise_blind_rows++;
        }
    }
    summary.separating_fraction =
        rows.empty() ? 0.0 : static_cast<double>(summary.separating_rows) / static_cast<double>(rows.size());
    return summary;
}

void write_scan_csv(std::ostream &out, const std::vector<WitnessReport> &rows) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << "omega_tau,state,K12_23_13,lgi_ok,max_nsit_residual\n";
    out << std::setprecision(12);
    for (const auto &row : rows) {
        out << row.omega_tau << ',' << to_string(row.state) << ',' << row.lgi_values[0] << ','
            << (row.lgi_ok ? 1 : 0) << ',' << row.max_nsit_residual << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

TightnessReport tightness_probe(const LinearWitness &witness, std::span<const ExactProbVector> vertices) {
    TightnessReport report;
    bool first = true;
    for (size_t v = 0; v < vertices.size(); v++) {
        if (vertices[v].scenario != witness.scenario) {
            throw std::invalid_argument("witness and vertices belong to different scenarios");
        }
        const Rational value = evaluate(witness, vertices[v].values);
        if (first || value > report.max_value) {
            report.max_value = value;
            first = false;
        }
        if (value > witness.bound) {
            report.any_violation = true;
        }
        if (value == witness.bound) {
            std::vector<size_t> zeros;
            for (size_t k = 0; k < vertices[v].values.size(); k++) {
                if (vertices[v].values[k] == 0) {
                    zeros.push_back(k);
                }
            }
            report.all_on_positivity_boundary = report.all_on_positivity_boundary && !zeros.empty();
            report.saturating.push_back(v);
            report.zero_coordinates.push_back(std::move(zeros));
        }
    }
    return report;
}

}  // namespace tempoly
