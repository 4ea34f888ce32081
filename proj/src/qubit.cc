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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "tempoly/quantum.h"

namespace tempoly {

namespace {

using Matrix2 = Eigen::Matrix2cd;
using MatrixX = Eigen::MatrixXcd;

const Complex kI(0.0, 1.0);

Matrix2 rotation_about_x(double angle) {
    Matrix2 u;
    u << std::cos(angle / 2), -kI * std::sin(angle / 2), -kI * std::sin(angle / 2), std::cos(angle / 2);
    return u;
}

// Projector onto the +1 (outcome 1) or -1 (outcome 2) eigenspace of cos(a) Z + sin(a) X.
Matrix2 spin_projector(double angle, int outcome) {
    Matrix2 observable;
    observable << std::cos(angle), std::sin(angle), std::sin(angle), -std::cos(angle);
    const double sign = outcome == 1 ? 1.0 : -1.0;
    return 0.5 * (Matrix2::Identity() + sign * observable);
}

void require_dichotomic(const Scenario &scenario, size_t settings, const char *what) {
    if (scenario.delta() != 2 || static_cast<size_t>(scenario.m()) != settings) {
        throw std::invalid_argument(std::string(what) + " needs delta = 2 and one angle per setting, got " +
                                    scenario.str());
    }
}

}  // namespace

QubitModel QubitModel::eigenstate(double rotation_angle) {
    QubitModel model;
    model.initial_state = Matrix2::Zero();
    model.initial_state(0, 0) = 1.0;
    model.rotation_angle = rotation_angle;
    return model;
}

QubitModel QubitModel::maximally_mixed(double rotation_angle) {
    QubitModel model;
    model.initial_state = 0.5 * Matrix2::Identity();
    model.rotation_angle = rotation_angle;
    return model;
}

RealProbVector simulate_qubit(const QubitModel &model, const Scenario &scenario) {
    require_dichotomic(scenario, model.measurement_angles.size(), "qubit model");
    const Matrix2 u = rotation_about_x(model.rotation_angle);
    const Matrix2 u_dag = u.adjoint();
    RealProbVector p{scenario, std::vector<double>(coordinate_count(scenario), 0.0)};
    for (const auto &s : enumerate_settings(scenario)) {
        for (const auto &q : outcomes_for(scenario, s)) {
            Matrix2 rho = model.initial_state;
            for (int i = 0; i < scenario.n(); i++) {
                rho = u * rho * u_dag;
                if (s[i] != 0) {
                    const Matrix2 proj = spin_projector(model.measurement_angles[s[i] - 1], q[i]);
                    rho = proj * rho * proj;
                }
            }
            p.values[flat_index(scenario, s, q)] = rho.trace().real();
        }
    }
    return p;
}

ComplianceReport qm_compliance_check(const QubitModel &model, const Scenario &scenario) {
    const RealProbVector p = simulate_qubit(model, scenario);
    ComplianceReport report;
    report.max_aot_residual = max_abs_residual(build_aot(scenario), p.values);
    report.max_normalization_residual = max_abs_residual(build_normalization(scenario), p.values);
    if (report.max_aot_residual > kPhysicsTolerance || report.max_normalization_residual > kPhysicsTolerance) {
        std::ostringstream msg;
        msg << "qubit simulation breaks the arrow of time or normalization (AoT residual " << report.max_aot_residual
            << ", normalization residual " << report.max_normalization_residual << ")";
        throw std::logic_error(msg.str());
    }
    for (const auto &row : build_nsit(scenario).rows) {
        report.nsit_residuals.push_back(std::abs(row_residual<double>(row, p.values)));
        report.max_nsit_residual = std::max(report.max_nsit_residual, report.nsit_residuals.back());
    }
    return report;
}

RealProbVector simulate_singlet(const Scenario &scenario, const std::vector<double> &angles_a,
                                const std::vector<double> &angles_b) {
    if (scenario.n() != 2 || angles_a.size() != angles_b.size()) {
        throw std::invalid_argument("singlet model needs n = 2 and equally many angles per party");
    }
    require_dichotomic(scenario, angles_a.size(), "singlet model");
    Eigen::Vector4cd psi(0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0);

    auto local = [](const std::vector<double> &angles, int setting, int outcome) -> Matrix2 {
        return setting == 0 ? Matrix2(Matrix2::Identity()) : spin_projector(angles[setting - 1], outcome);
    };
    RealProbVector p{scenario, std::vector<double>(coordinate_count(scenario), 0.0)};
    for (const auto &s : enumerate_settings(scenario)) {
        for (const auto &q : outcomes_for(scenario, s)) {
            const Matrix2 a = local(angles_a, s[0], q[0]);
            const Matrix2 b = local(angles_b, s[1], q[1]);
            Eigen::Matrix4cd joint;
            for (int r = 0; r < 2; r++) {
                for (int c = 0; c < 2; c++) {
                    joint.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
                }
            }
            p.values[flat_index(scenario, s, q)] = psi.dot(joint * psi).real();
        }
    }
    return p;
}

ExactProbVector projective_counterexample_target() {
    const Scenario scenario(2, 1, 2);
    ExactProbVector p{scenario, std::vector<Rational>(coordinate_count(scenario))};
    auto set = [&](std::vector<int> s, std::vector<int> q) {
        p.values[flat_index(scenario, SettingVector{std::move(s)}, OutcomeVector{std::move(q)})] = 1;
    };
    set({0, 0}, {0, 0});
    set({1, 0}, {1, 0});  // p(1|1) = 1 by the arrow of time
    set({0, 1}, {0, 2});  // p(0,1|0,1) = 0
    set({1, 1}, {1, 1});  // p(1,1|1,1) = 1
    return p;
}

namespace {

// Two sequential two-outcome projective measurements in dimension d: time 1
// projects onto the first k1 basis vectors, time 2 onto the first k2 columns
// of a unitary V (which absorbs the free evolution).
struct ProjectiveModel {
    int dim = 2;
    int rank1 = 1;
    int rank2 = 1;
    std::vector<double> params;  // state factor A then generator of V, both d x d complex

    static size_t param_count(int d) { return 4 * static_cast<size_t>(d) * d; }
};

MatrixX complex_block(const std::vector<double> &params, size_t offset, int d) {
    MatrixX m(d, d);
    for (int r = 0; r < d; r++) {
        for (int c = 0; c < d; c++) {
            const size_t k = offset + 2 * (static_cast<size_t>(r) * d + c);
            m(r, c) = Complex(params[k], params[k + 1]);
        }
    }
    return m;
}

// Distribution over the nine (2,1,2) coordinates in flat-index order.
std::array<double, 9> projective_distribution(const ProjectiveModel &model) {
    const int d = model.dim;
    const MatrixX a = complex_block(model.params, 0, d);
    MatrixX rho = a * a.adjoint();
    rho /= rho.trace().real();
    const MatrixX v = Eigen::HouseholderQR<MatrixX>(complex_block(model.params, 2 * d * d, d)).householderQ();

    MatrixX p1 = MatrixX::Zero(d, d);
    for (int k = 0; k < model.rank1; k++) {
        p1(k, k) = 1.0;
    }
    const MatrixX p2 = MatrixX::Identity(d, d) - p1;
    MatrixX diag = MatrixX::Zero(d, d);
    for (int k = 0; k < model.rank2; k++) {
        diag(k, k) = 1.0;
    }
    const MatrixX q1 = v * diag * v.adjoint();
    const MatrixX q2 = MatrixX::Identity(d, d) - q1;
    const MatrixX first[2] = {p1, p2};
    const MatrixX second[2] = {q1, q2};

    // Codes per time: 0 skip, 1 outcome 1, 2 outcome 2; index = 3*c1 + c2.
    std::array<double, 9> p{};
    p[0] = 1.0;
    for (int c1 = 1; c1 <= 2; c1++) {
        p[3 * c1] = (first[c1 - 1] * rho).trace().real();
    }
    for (int c2 = 1; c2 <= 2; c2++) {
        p[c2] = (second[c2 - 1] * rho).trace().real();
    }
    for (int c1 = 1; c1 <= 2; c1++) {
        const MatrixX post = first[c1 - 1] * rho * first[c1 - 1];
        for (int c2 = 1; c2 <= 2; c2++) {
            p[3 * c1 + c2] = (second[c2 - 1] * post).trace().real();
        }
    }
    return p;
}

double distance_to(const std::array<double, 9> &target, const ProjectiveModel &model) {
    const auto p = projective_distribution(model);
    double worst = 0;
    for (size_t k = 0; k < p.size(); k++) {
        worst = std::max(worst, std::abs(p[k] - target[k]));
    }
    return worst;
}

// Portable normal deviates from raw engine bits.
double normal_deviate(std::mt19937_64 &rng) {
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * kScale;
    const double u2 = static_cast<double>(rng() >> 11) * kScale;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

CounterexampleReport projective_counterexample_check(const ProjectiveSearchBudget &budget) {
    CounterexampleReport report;
    const ExactProbVector target = projective_counterexample_target();
    report.target_satisfies_aot = first_violated_row(build_aot(target.scenario), target.values) < 0 &&
                                  first_violated_row(build_normalization(target.scenario), target.values) < 0;
    const RoundTripResult povm = kraus_round_trip(target);
    report.povm_round_trip_error = povm.max_error;
    report.povm_completeness = povm.completeness;

    std::array<double, 9> goal{};
    for (size_t k = 0; k < goal.size(); k++) {
        goal[k] = to_double(target.values[k]);
    }

    // Every (dimension, rank1, rank2) family gets an equal share of the budget,
    // split between random restarts and shrinking-step local refinement.
    std::vector<ProjectiveModel> families;
    for (int d = 2; d <= budget.max_dimension; d++) {
        for (int r1 = 1; r1 < d; r1++) {
            for (int r2 = 1; r2 < d; r2++) {
                families.push_back({d, r1, r2, {}});
            }
        }
    }
    if (families.empty()) {
        throw std::invalid_argument("projective search needs max_dimension >= 2");
    }
    std::mt19937_64 rng(budget.seed);
    const std::uint64_t per_family = std::max<std::uint64_t>(1, budget.evaluations / families.size());
    constexpr std::uint64_t kRefineSteps = 400;
    report.best_projective_distance = std::numeric_limits<double>::infinity();

    for (auto family : families) {
        const size_t count = ProjectiveModel::param_count(family.dim);
        std::uint64_t used = 0;
        while (used < per_family && report.evaluations < budget.evaluations) {
            family.params.resize(count);
            for (auto &x : family.params) {
                x = normal_deviate(rng);
            }
            double current = distance_to(goal, family);
            used++;
            report.evaluations++;
            double step = 0.5;
            for (std::uint64_t k = 0; k < kRefineSteps && used < per_family && report.evaluations < budget.evaluations;
                 k++) {
                ProjectiveModel trial = family;
                for (auto &x : trial.params) {
                    x += step * normal_deviate(rng);
                }
                const double d = distance_to(goal, trial);
                used++;
                report.evaluations++;
                if (d < current) {
                    current = d;
                    family = std::move(trial);
                } else {
                    step = std::max(step * 0.97, 1e-4);
                }
            }
            if (current < report.best_projective_distance) {
                report.best_projective_distance = current;
                report.best_dimension = family.dim;
            }
        }
    }
    report.note =
        "budgeted random-restart search over projective models with dimension <= " +
        std::to_string(budget.max_dimension) + "; numerical evidence, not a proof";
    return report;
}

}  // namespace tempoly
