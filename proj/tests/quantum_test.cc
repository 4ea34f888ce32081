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

#include <cmath>

#include <gtest/gtest.h>

#include "tempoly/constraints.h"
#include "tempoly/inequalities.h"
#include "tempoly/quantum.h"

namespace tempoly {
namespace {

Eigen::VectorXcd initial_state(const KrausSet &kraus) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(kraus.dimension()));
    psi(0) = 1;
    return psi;
}

ExactProbVector point_mass_212() {
    const Scenario s(2, 1, 2);
    ExactProbVector p{s, std::vector<Rational>(coordinate_count(s))};
    p.values[flat_index(s, SettingVector{{0, 0}}, OutcomeVector{{0, 0}})] = 1;
    p.values[flat_index(s, SettingVector{{1, 0}}, OutcomeVector{{1, 0}})] = 1;
    p.values[flat_index(s, SettingVector{{0, 1}}, OutcomeVector{{0, 1}})] = 1;
    p.values[flat_index(s, SettingVector{{1, 1}}, OutcomeVector{{1, 1}})] = 1;
    return p;
}

TEST(Conditionals, UniformPointGivesHalf) {
    const auto table = conditionals_from_joint(uniform_point(Scenario(2, 1, 2)));
    for (size_t k = 1; k < table.values.size(); k++) {
        EXPECT_DOUBLE_EQ(table.values[k], 0.5) << k;
    }
    const auto real_table = conditionals_from_joint(to_real(uniform_point(Scenario(2, 1, 2))));
    EXPECT_EQ(real_table.values, table.values);
}

TEST(Conditionals, PointMassAndZeroHistories) {
    const Scenario s(2, 1, 2);
    const auto table = conditionals_from_joint(point_mass_212());
    EXPECT_DOUBLE_EQ(table.values[flat_index(s, SettingVector{{1, 0}}, OutcomeVector{{1, 0}})], 1.0);
    EXPECT_DOUBLE_EQ(table.values[flat_index(s, SettingVector{{1, 1}}, OutcomeVector{{1, 1}})], 1.0);
    // History q1 = 2 has zero probability.
    EXPECT_DOUBLE_EQ(table.values[flat_index(s, SettingVector{{1, 1}}, OutcomeVector{{2, 1}})], 0.5);
    EXPECT_DOUBLE_EQ(table.values[flat_index(s, SettingVector{{1, 1}}, OutcomeVector{{2, 2}})], 0.5);
}

TEST(Conditionals, RejectsAotViolationWithLabel) {
    const Scenario s(2, 1, 2);
    auto p = uniform_point(s);
    p.values[flat_index(s, SettingVector{{1, 0}}, OutcomeVector{{1, 0}})] = Rational(3, 4);
    p.values[flat_index(s, SettingVector{{1, 0}}, OutcomeVector{{2, 0}})] = Rational(1, 4);
    try {
        conditionals_from_joint(p);
        FAIL() << "expected AotViolationError";
    } catch (const AotViolationError &e) {
        EXPECT_NE(e.label.find("AoT"), std::string::npos);
    }
    EXPECT_THROW(conditionals_from_joint(to_real(p)), AotViolationError);
}

TEST(Kraus, SingleTimePointMass) {
    const Scenario s(1, 1, 2);
    ExactProbVector p{s, {1, 1, 0}};
    const auto kraus = build_kraus(conditionals_from_joint(p));
    const auto psi = initial_state(kraus);
    EXPECT_NEAR((kraus.op(0, 1, 1) * psi).norm(), 1.0, 1e-15);
    EXPECT_NEAR((kraus.op(0, 1, 2) * psi).norm(), 0.0, 1e-15);
}

TEST(Kraus, CompletenessAndSkipIdentity) {
    for (const Scenario s : {Scenario(2, 1, 2), Scenario(2, 2, 3), Scenario(3, 2, 2)}) {
        const auto kraus = build_kraus(conditionals_from_joint(random_aot_point(s, 42)));
        EXPECT_LT(completeness_residual(kraus), kConstructionTolerance) << s.str();
        for (int i = 0; i < s.n(); i++) {
            const SparseOperator &skip = kraus.op(i, 0, 0);
            SparseOperator id(skip.rows(), skip.cols());
            id.setIdentity();
            EXPECT_EQ(SparseOperator(skip.adjoint() * skip - id).norm(), 0.0);
        }
    }
}

TEST(Kraus, OperatorIndexChecks) {
    const auto kraus = build_kraus(conditionals_from_joint(uniform_point(Scenario(2, 1, 2))));
    EXPECT_THROW(kraus.op(2, 1, 1), std::out_of_range);
    EXPECT_THROW(kraus.op(0, 1, 3), std::out_of_range);
}

TEST(Simulation, UniformConditionalsGiveUniformJoint) {
    const Scenario s(2, 2, 2);
    const auto p = uniform_point(s);
    const auto kraus = build_kraus(conditionals_from_joint(p));
    EXPECT_LT(max_abs_difference(simulate_all(kraus), to_real(p)), 1e-12);
}

TEST(Simulation, PointMassRoundTrip) {
    const auto p = point_mass_212();
    const auto kraus = build_kraus(conditionals_from_joint(p));
    const auto dist = simulate_sequential(kraus, SettingVector{{1, 1}});
    ASSERT_EQ(dist.size(), 4u);
    EXPECT_NEAR(dist[0], 1.0, 1e-10);
    EXPECT_LT(kraus_round_trip(p).max_error, 1e-10);
}

TEST(Simulation, RandomAotRoundTrips) {
    std::uint64_t seed = 100;
    for (int n : {2, 3}) {
        for (int m : {1, 2}) {
            const Scenario s(n, m, 2);
            const int trials = n == 3 && m == 2 ? 10 : 100;
            for (int t = 0; t < trials; t++) {
                const auto result = kraus_round_trip(random_aot_point(s, seed++));
                ASSERT_LT(result.max_error, kRoundTripTolerance) << s.str();
                ASSERT_LT(result.completeness, kConstructionTolerance) << s.str();
            }
        }
    }
}

TEST(RandomAot, SatisfiesConstraintsExactly) {
    for (const Scenario s : {Scenario(2, 1, 2), Scenario(3, 2, 3)}) {
        const auto p = random_aot_point(s, 7);
        EXPECT_EQ(first_violated_row(build_normalization(s), p.values), -1);
        EXPECT_EQ(first_violated_row(build_aot(s), p.values), -1);
        for (const auto &v : p.values) {
            EXPECT_GE(v, 0);
        }
    }
}

TEST(RandomAot, ReproducibleAndSeedDependent) {
    const Scenario s(2, 2, 2);
    EXPECT_EQ(random_aot_point(s, 3).values, random_aot_point(s, 3).values);
    EXPECT_NE(random_aot_point(s, 3).values, random_aot_point(s, 4).values);
}

TEST(RandomAot, GenericPointsViolateNsit) {
    const Scenario s(2, 1, 2);
    const auto nsit = build_nsit(s);
    int violating = 0;
    for (std::uint64_t seed = 0; seed < 100; seed++) {
        violating += first_violated_row(nsit, random_aot_point(s, seed).values) >= 0;
    }
    EXPECT_EQ(violating, 100);
}

}  // namespace
}  // namespace tempoly
