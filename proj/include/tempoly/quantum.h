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

#ifndef TEMPOLY_QUANTUM_H
#define TEMPOLY_QUANTUM_H

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "tempoly/constraints.h"
#include "tempoly/scenario.h"

namespace tempoly {

using Complex = std::complex<double>;
using SparseOperator = Eigen::SparseMatrix<Complex>;

/// Tolerances separating arithmetic noise from genuine violations.
inline constexpr double kConstructionTolerance = 1e-12;
inline constexpr double kRoundTripTolerance = 1e-9;
inline constexpr double kPhysicsTolerance = 1e-10;

/// Raised when a distribution violates an arrow-of-time row; carries the row label.
struct AotViolationError : std::invalid_argument {
    AotViolationError(const std::string &what, std::string row_label)
        : std::invalid_argument(what), label(std::move(row_label)) {}
    std::string label;
};

/// Conditional probabilities of each measurement given its history.
///
/// values[c] is the probability of coordinate c's last performed measurement
/// outcome, given the settings and outcomes of c with that measurement
/// skipped. The all-skip coordinate holds 1.
struct ConditionalTable {
    Scenario scenario;
    std::vector<double> values;
};

/// Throws AotViolationError when p breaks an arrow-of-time row by more than
/// `tolerance`, std::invalid_argument on normalization or sign violations.
/// Zero-probability histories get the uniform conditional 1/delta.
ConditionalTable conditionals_from_joint(const RealProbVector &p, double tolerance = kPhysicsTolerance);

/// Exact variant; any nonzero arrow-of-time residual is rejected.
ConditionalTable conditionals_from_joint(const ExactProbVector &p);

/// Kraus operators K[time][setting][outcome] over the basis |q; s> indexed by flat_index.
class KrausSet {
   public:
    KrausSet(Scenario scenario, std::vector<std::vector<std::vector<SparseOperator>>> ops)
        : scenario_(scenario), ops_(std::move(ops)) {}

    const Scenario &scenario() const { return scenario_; }
    size_t dimension() const { return scenario_.unchecked_coordinate_count(); }

    /// time in [0, n); setting in [0, m]; outcome 0 for setting 0, else in [1, delta].
    const SparseOperator &op(int time, int setting, int outcome) const;

   private:
    Scenario scenario_;
    std::vector<std::vector<std::vector<SparseOperator>>> ops_;
};

/// Builds the sequential POVM that walks |q_1..q_{i-1}; s_1..s_{i-1}> to
/// |q_1..q_i; s_1..s_i> with amplitude sqrt(r). Skips act as the identity.
KrausSet build_kraus(const ConditionalTable &table);

/// Largest |(sum_q K^dagger K - 1)_{jk}| over every (time, setting).
double completeness_residual(const KrausSet &kraus);

/// Probabilities of each outcome vector in outcomes_for(scenario, s) order,
/// starting from the all-skip basis state. Throws std::logic_error if they
/// fail to sum to 1 within `tolerance`.
std::vector<double> simulate_sequential(const KrausSet &kraus, const SettingVector &s,
                                        double tolerance = kPhysicsTolerance);

/// simulate_sequential for every setting vector, assembled into a full vector.
RealProbVector simulate_all(const KrausSet &kraus);

double max_abs_difference(const RealProbVector &a, const RealProbVector &b);

struct RoundTripResult {
    double max_error = 0;
    double completeness = 0;
};

/// conditionals -> Kraus -> simulation, compared against the target.
RoundTripResult kraus_round_trip(const ExactProbVector &target);

/// Point of the arrow-of-time polytope: every conditional is drawn from the
/// lattice simplex {k / 2^20}, so the joint is exact and seed-reproducible.
ExactProbVector random_aot_point(const Scenario &scenario, std::uint64_t seed);

/// A qubit measured projectively (Lueders rule) at times tau, 2*tau, ..., n*tau
/// after preparation at time 0, precessing by exp(-i*rotation_angle*sigma_x/2)
/// between consecutive times. Setting k measures cos(a_k) sigma_z + sin(a_k) sigma_x;
/// outcome 1 is the +1 eigenvalue.
struct QubitModel {
    Eigen::Matrix2cd initial_state;
    double rotation_angle = 0;
    std::vector<double> measurement_angles{0.0};

    static QubitModel eigenstate(double rotation_angle);
    static QubitModel maximally_mixed(double rotation_angle);
};

/// Throws std::invalid_argument unless delta == 2 and m == measurement_angles.size().
RealProbVector simulate_qubit(const QubitModel &model, const Scenario &scenario);

struct ComplianceReport {
    double max_aot_residual = 0;
    double max_normalization_residual = 0;
    std::vector<double> nsit_residuals;
    double max_nsit_residual = 0;
};

/// Simulates the model over every setting vector. Throws std::logic_error if
/// an arrow-of-time or normalization residual exceeds kPhysicsTolerance.
ComplianceReport qm_compliance_check(const QubitModel &model, const Scenario &scenario);

/// Two qubits in the singlet state, party k measuring along angle a in the
/// x-z plane for setting s (angles[k][s-1]). Scenario must be (2, m, 2).
RealProbVector simulate_singlet(const Scenario &scenario, const std::vector<double> &angles_a,
                                const std::vector<double> &angles_b);

/// The (n=2, m=1, delta=2) point with p(1,1|1,1) = 1 and p(0,1|0,1) = 0, all
/// remaining coordinates fixed by normalization and the arrow of time.
ExactProbVector projective_counterexample_target();

struct ProjectiveSearchBudget {
    std::uint64_t evaluations = 100'000;
    int max_dimension = 4;
    std::uint64_t seed = 7;
};

struct CounterexampleReport {
    bool target_satisfies_aot = false;
    double povm_round_trip_error = 0;
    double povm_completeness = 0;
    /// Smallest max-abs distance to the target found over projective models.
    double best_projective_distance = 0;
    int best_dimension = 0;
    std::uint64_t evaluations = 0;
    std::string note;
};

/// Checks the target against the arrow of time, reproduces it with the POVM
/// construction, and runs a budgeted search over projective models. The
/// search result is numerical evidence, not a proof.
CounterexampleReport projective_counterexample_check(const ProjectiveSearchBudget &budget = {});

}  // namespace tempoly

#endif
