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
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "oracles.h"
#include "tempoly/constraints.h"
#include "tempoly/linalg.h"

namespace tempoly {
namespace {

bool is_aot_position(const std::vector<int> &s, int i) {
    return !oracle::any_nonzero(s, i + 1, static_cast<int>(s.size())) && oracle::any_nonzero(s, 0, i);
}

bool is_nsit_position(const std::vector<int> &s, int i) {
    return oracle::any_nonzero(s, i + 1, static_cast<int>(s.size()));
}

TEST(Constraints, NormalizationRowCounts) {
    EXPECT_EQ(build_normalization(Scenario(2, 2, 2)).rows.size(), 9u);
    EXPECT_EQ(build_normalization(Scenario(1, 1, 2)).rows.size(), 2u);
    EXPECT_EQ(build_normalization(Scenario(3, 2, 2)).rows.size(), 27u);
    for (const auto &row : build_normalization(Scenario(2, 1, 3)).rows) {
        EXPECT_EQ(row.rhs, 1);
        for (const auto &t : row.terms) {
            EXPECT_EQ(t.coeff, 1);
        }
    }
}

TEST(Constraints, NsRowCountMatchesBruteForce) {
    // Every (position, context) pair with a performed measurement at that position.
    const auto all = [](const std::vector<int> &, int) { return true; };
    for (const Scenario s : {Scenario(2, 1, 2), Scenario(2, 2, 2), Scenario(3, 2, 2), Scenario(2, 2, 3)}) {
        EXPECT_EQ(build_ns(s).rows.size(), oracle::count_marginal_rows(s.n(), s.m(), s.delta(), all)) << s.str();
    }
    EXPECT_EQ(build_ns(Scenario(2, 2, 2)).rows.size(), 20u);
}

TEST(Constraints, NsEmptyForSingleTime) {
    EXPECT_TRUE(build_ns(Scenario(1, 2, 3)).rows.empty());
    EXPECT_TRUE(build_nsit(Scenario(1, 2, 3)).rows.empty());
}

TEST(Constraints, NsRowInstance) {
    // p(q2|(0,1)) - sum_q1 p(q1,q2|(1,1)) = 0 for each q2.
    const Scenario s(2, 1, 2);
    const auto ns = build_ns(s);
    for (int q2 : {1, 2}) {
        std::map<std::uint64_t, Rational> expected{
            {flat_index(s, SettingVector{{0, 1}}, OutcomeVector{{0, q2}}), 1},
            {flat_index(s, SettingVector{{1, 1}}, OutcomeVector{{1, q2}}), -1},
            {flat_index(s, SettingVector{{1, 1}}, OutcomeVector{{2, q2}}), -1}};
        const bool found = std::any_of(ns.rows.begin(), ns.rows.end(), [&](const ConstraintRow &row) {
            std::map<std::uint64_t, Rational> got;
            for (const auto &t : row.terms) {
                got[t.index] += t.coeff;
            }
            return got == expected && row.rhs == 0;
        });
        EXPECT_TRUE(found) << "q2=" << q2;
    }
}

TEST(Constraints, AotRowCounts) {
    EXPECT_EQ(build_aot(Scenario(2, 1, 2)).rows.size(), 2u);
    EXPECT_EQ(build_aot(Scenario(3, 2, 2)).rows.size(), 56u);
    EXPECT_EQ(build_aot(Scenario(2, 2, 2)).rows.size(), 8u);
    EXPECT_EQ(count_aot_closed_form(Scenario(2, 1, 2)), 2);
    EXPECT_EQ(count_aot_closed_form(Scenario(3, 2, 2)), 56);
    EXPECT_EQ(count_aot_closed_form(Scenario(2, 2, 2)), 8);
}

TEST(Constraints, AotAndNsitMatchBruteForceOnGrid) {
    for (int n : {1, 2, 3}) {
        for (int m : {1, 2}) {
            for (int delta : {2, 3}) {
                const Scenario s(n, m, delta);
                EXPECT_EQ(build_aot(s).rows.size(), oracle::count_marginal_rows(n, m, delta, is_aot_position));
                EXPECT_EQ(BigInt(build_aot(s).rows.size()), count_aot_closed_form(s));
                EXPECT_EQ(build_nsit(s).rows.size(), oracle::count_marginal_rows(n, m, delta, is_nsit_position));
            }
        }
    }
}

TEST(Constraints, NsitSettingArrowsMatchTreeDiagram) {
    // Marginalization arrows between setting vectors for (3,2,2): 12 for each
    // nonzero final setting plus 4 with the final time skipped.
    const Scenario s(3, 2, 2);
    std::set<std::pair<std::vector<int>, int>> arrows;
    for (const auto &row : build_nsit(s).rows) {
        // The marginal term has coefficient +1; a full term (-1) shows which position was summed.
        std::vector<int> marginal, full;
        for (const auto &t : row.terms) {
            (t.coeff > 0 ? marginal : full) = unflatten(s, t.index).settings.values;
        }
        for (int i = 0; i < s.n(); i++) {
            if (marginal[i] != full[i]) {
                arrows.insert({full, i});
            }
        }
    }
    EXPECT_EQ(arrows.size(), 28u);
}

TEST(Constraints, RedundantNormalizationCounts) {
    EXPECT_EQ(count_redundant_normalizations(Scenario(2, 1, 2)), 1);
    EXPECT_EQ(count_redundant_normalizations(Scenario(3, 2, 2)), 20);
    EXPECT_EQ(count_redundant_normalizations(Scenario(1, 1, 2)), 0);
}

TEST(Constraints, RowsHaveMarginalizationShape) {
    const Scenario s(3, 2, 3);
    for (const auto &system : std::vector{build_aot(s), build_nsit(s)}) {
        for (const auto &row : system.rows) {
            int plus = 0, minus = 0;
            for (const auto &t : row.terms) {
                plus += t.coeff == 1;
                minus += t.coeff == -1;
            }
            EXPECT_EQ(plus, 1);
            EXPECT_EQ(minus, s.delta());
            EXPECT_EQ(row.rhs, 0);
            EXPECT_FALSE(row.label.empty());
        }
    }
}

TEST(Constraints, NsRowIsAotNsitOrNormalizationDifference) {
    for (const Scenario s : {Scenario(2, 1, 2), Scenario(2, 2, 2), Scenario(3, 2, 2)}) {
        const auto ns = build_ns(s);
        const auto aot = build_aot(s);
        const auto nsit = build_nsit(s);
        const auto norm = build_normalization(s);
        auto key = [](const ConstraintRow &row) {
            std::map<std::uint64_t, Rational> m;
            for (const auto &t : row.terms) {
                m[t.index] += t.coeff;
            }
            return m;
        };
        std::set<std::map<std::uint64_t, Rational>> known;
        for (const auto &row : aot.rows) {
            known.insert(key(row));
        }
        for (const auto &row : nsit.rows) {
            known.insert(key(row));
        }
        RationalMatrix norm_mat = to_matrix(std::span(&norm, 1), true);
        const size_t norm_rank = rank(norm_mat);
        for (const auto &row : ns.rows) {
            if (known.count(key(row))) {
                continue;
            }
            RationalMatrix with_row = norm_mat;
            std::vector<std::pair<size_t, Rational>> entries;
            for (const auto &t : row.terms) {
                entries.emplace_back(t.index, t.coeff);
            }
            entries.emplace_back(norm_mat.cols() - 1, row.rhs);
            with_row.add_row(entries);
            EXPECT_EQ(rank(with_row), norm_rank) << row.label;
        }
    }
}

TEST(Constraints, ResidualsOnUniformPoint) {
    const Scenario s(3, 2, 2);
    const auto p = uniform_point(s);
    for (const auto &system : {build_normalization(s), build_ns(s), build_aot(s), build_nsit(s)}) {
        EXPECT_EQ(first_violated_row(system, p.values), -1) << to_string(system.kind);
        EXPECT_LT(max_abs_residual(system, to_real(p).values), 1e-15);
    }
}

TEST(Constraints, FirstViolatedRowDetectsChange) {
    const Scenario s(2, 1, 2);
    auto p = uniform_point(s);
    p.values[flat_index(s, SettingVector{{0, 1}}, OutcomeVector{{0, 1}})] = Rational(3, 4);
    EXPECT_GE(first_violated_row(build_ns(s), p.values), 0);
    EXPECT_EQ(first_violated_row(build_aot(s), p.values), -1);
}

}  // namespace
}  // namespace tempoly
