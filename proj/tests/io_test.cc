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

#include <sstream>

#include <gtest/gtest.h>

#include "tempoly/constraints.h"
#include "tempoly/geometry.h"
#include "tempoly/inequalities.h"
#include "tempoly/io.h"
#include "tempoly/quantum.h"

namespace tempoly {
namespace {

using nlohmann::json;

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(to_string(parse_rational("3/6")), "1/2");
    EXPECT_EQ(to_string(parse_rational("-4")), "-4");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
    EXPECT_DOUBLE_EQ(to_double(Rational(1, 4)), 0.25);
}

TEST(Io, ScenarioRoundTrip) {
    const Scenario s(3, 2, 3);
    EXPECT_EQ(scenario_from_json(to_json(s)), s);
    EXPECT_THROW(scenario_from_json(json{{"n", 0}, {"m", 1}, {"delta", 2}}), std::invalid_argument);
}

TEST(Io, ExactProbVectorRoundTrip) {
    const auto p = random_aot_point(Scenario(2, 2, 2), 5);
    const auto back = exact_prob_vector_from_json(json::parse(to_json(p).dump()));
    EXPECT_EQ(back.values, p.values);
    EXPECT_EQ(back.scenario, p.scenario);
}

TEST(Io, RealProbVectorRoundTrip) {
    const auto p = to_real(random_aot_point(Scenario(2, 1, 2), 6));
    EXPECT_EQ(real_prob_vector_from_json(json::parse(to_json(p).dump())).values, p.values);
    json bad = to_json(p);
    bad["values"].erase(0);
    EXPECT_THROW(real_prob_vector_from_json(bad), std::invalid_argument);
}

TEST(Io, ConstraintSystemRoundTrip) {
    const auto system = build_aot(Scenario(3, 2, 2));
    const auto back = constraint_system_from_json(json::parse(to_json(system).dump()));
    ASSERT_EQ(back.rows.size(), system.rows.size());
    EXPECT_EQ(back.kind, ConstraintKind::ArrowOfTime);
    for (size_t r = 0; r < system.rows.size(); r++) {
        EXPECT_EQ(back.rows[r].label, system.rows[r].label);
        EXPECT_EQ(back.rows[r].rhs, system.rows[r].rhs);
        ASSERT_EQ(back.rows[r].terms.size(), system.rows[r].terms.size());
        for (size_t t = 0; t < system.rows[r].terms.size(); t++) {
            EXPECT_EQ(back.rows[r].terms[t].index, system.rows[r].terms[t].index);
            EXPECT_EQ(back.rows[r].terms[t].coeff, system.rows[r].terms[t].coeff);
        }
    }
}

TEST(Io, RejectsBadSchemaAndIndices) {
    json j = to_json(build_aot(Scenario(2, 1, 2)));
    j["schema"] = 99;
    EXPECT_THROW(constraint_system_from_json(j), std::invalid_argument);
    json k = to_json(build_aot(Scenario(2, 1, 2)));
    k["rows"][0]["terms"][0][0] = 9;
    EXPECT_THROW(constraint_system_from_json(k), std::invalid_argument);
    k["rows"][0]["terms"][0] = json::array({0, 1, 0});
    EXPECT_THROW(constraint_system_from_json(k), std::invalid_argument);
}

TEST(Io, WitnessRoundTrip) {
    for (const auto &witness : {chsh_witness(Scenario(2, 2, 2)), lgi3_witness(Scenario(3, 1, 2))}) {
        const auto back = witness_from_json(json::parse(to_json(witness).dump()));
        EXPECT_EQ(back.name, witness.name);
        EXPECT_EQ(back.bound, witness.bound);
        EXPECT_EQ(back.scenario, witness.scenario);
        ASSERT_EQ(back.terms.size(), witness.terms.size());
        for (size_t t = 0; t < witness.terms.size(); t++) {
            EXPECT_EQ(back.terms[t].index, witness.terms[t].index);
            EXPECT_EQ(back.terms[t].coeff, witness.terms[t].coeff);
        }
    }
    json j = to_json(chsh_witness(Scenario(2, 2, 2)));
    j["bound"] = "5/2";
    EXPECT_EQ(witness_from_json(j).bound, Rational(5, 2));
    j["bound"] = 3;
    EXPECT_EQ(witness_from_json(j).bound, 3);
}

TEST(Io, ConditionalTableRoundTrip) {
    const auto table = conditionals_from_joint(random_aot_point(Scenario(2, 2, 2), 8));
    const auto back = conditional_table_from_json(json::parse(to_json(table).dump()));
    EXPECT_EQ(back.values, table.values);
    const auto rebuilt = build_kraus(back);
    EXPECT_LT(completeness_residual(rebuilt), kConstructionTolerance);
}

TEST(Io, DimensionReportJson) {
    const json j = to_json(dimension_report(Scenario(2, 2, 2)));
    EXPECT_EQ(j.at("dim_P").at("computed"), 16);
    EXPECT_EQ(j.at("dim_NS").at("closed_form"), 8);
    EXPECT_EQ(j.at("dim_AoT").at("computed"), 12);
    EXPECT_TRUE(j.at("all_match").get<bool>());
}

TEST(Io, VerticesCsv) {
    const auto vertices = enumerate_vertices(Scenario(2, 1, 2), RealismModel::Macro);
    std::ostringstream out;
    write_vertices_csv(out, vertices);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header.rfind("p0,p1,", 0), 0u);
    int lines = 0;
    for (std::string line; std::getline(in, line);) {
        lines++;
    }
    EXPECT_EQ(lines, 4);
}

TEST(Io, FormatDoubleIsStable) {
    EXPECT_EQ(format_double(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_double(1.5), "1.5");
}

}  // namespace
}  // namespace tempoly
