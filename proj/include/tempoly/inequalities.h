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

#ifndef TEMPOLY_INEQUALITIES_H
#define TEMPOLY_INEQUALITIES_H

#include <array>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tempoly/constraints.h"
#include "tempoly/quantum.h"
#include "tempoly/scenario.h"

namespace tempoly {

/// Half-space witness sum(coeff * p[index]) <= bound.
///
/// Correlators map outcome 1 to +1 and outcome 2 to -1.
struct LinearWitness {
    std::string name;
    Scenario scenario;
    std::vector<Term> terms;
    Rational bound;
};

/// C(1,1) + C(1,2) + C(2,1) - C(2,2) <= 2. Scenario must be (2,2,2).
LinearWitness chsh_witness(const Scenario &scenario);

/// Which two-time correlator enters with a minus sign.
enum class LgiOrdering { Subtract13, Subtract23, Subtract12 };

/// C12 + C23 - C13 <= 1 (or a reordering), each correlator from data where
/// only the two times involved are measured. Scenario must be (3,1,2).
LinearWitness lgi3_witness(const Scenario &scenario, LgiOrdering ordering = LgiOrdering::Subtract13);

Rational evaluate(const LinearWitness &witness, std::span<const Rational> values);
double evaluate(const LinearWitness &witness, std::span<const double> values);

/// |lhs - rhs| for every no-signaling-in-time row, in build_nsit order.
std::vector<double> nsit_residuals(const RealProbVector &p);
std::vector<Rational> nsit_residuals(const ExactProbVector &p);

enum class InitialState { Eigenstate, MaximallyMixed };

std::string_view to_string(InitialState state);

struct ScanConfig {
    double start = 0.0;
    double stop = std::numbers::pi;
    size_t steps = 181;
    std::vector<InitialState> states{InitialState::Eigenstate, InitialState::MaximallyMixed};
    /// NSIT residual above which a point counts as violating.
    double nsit_threshold = 1e-6;
};

struct WitnessReport {
    double omega_tau = 0;
    InitialState state = InitialState::Eigenstate;
    /// Values of the three LGI orderings (Subtract13, Subtract23, Subtract12).
    std::array<double, 3> lgi_values{};
    bool lgi_ok = false;
    std::vector<double> nsit_residuals;
    double max_nsit_residual = 0;
    /// Largest residual among NSIT rows comparing two-measurement data.
    double max_pairwise_nsit_residual = 0;
    /// All LGIs hold yet NSIT is violated.
    bool separates = false;
};

/// Three-time precessing-qubit scan over omega*tau in [start, stop].
std::vector<WitnessReport> scan_lgi_vs_nsit(const ScanConfig &config);

struct ScanSummary {
    size_t rows = 0;
    size_t separating_rows = 0;
    /// Fraction of grid points (per scanned state) where LGIs pass but NSIT fails.
    double separating_fraction = 0;
    double max_lgi = 0;
    double omega_tau_at_max_lgi = 0;
    /// Rows where every pairwise NSIT residual is below the threshold but some three-time row is not.
    size_t pairwise_blind_rows = 0;
};

ScanSummary summarize(const std::vector<WitnessReport> &rows, double nsit_threshold = 1e-6);

/// Header: omega_tau,state,K12_23_13,lgi_ok,max_nsit_residual. Floats with 12 significant digits.
void write_scan_csv(std::ostream &out, const std::vector<WitnessReport> &rows);

struct TightnessReport {
    std::vector<size_t> saturating;
    /// For each saturating vertex, its zero coordinates.
    std::vector<std::vector<size_t>> zero_coordinates;
    bool all_on_positivity_boundary = true;
    Rational max_value;
    bool any_violation = false;
};

TightnessReport tightness_probe(const LinearWitness &witness, std::span<const ExactProbVector> vertices);

}  // namespace tempoly

#endif
