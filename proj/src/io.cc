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

#include "tempoly/io.h"

#include <sstream>

namespace tempoly {

using nlohmann::json;

namespace {

json term_json(std::uint64_t index, const Rational &coeff) {
    return json::array({index, to_int64(boost::multiprecision::numerator(coeff)),
                        to_int64(boost::multiprecision::denominator(coeff))});
}

Rational pair_to_rational(const json &num, const json &den) {
    const auto d = den.get<std::int64_t>();
    if (d == 0) {
        throw std::invalid_argument("zero denominator in JSON term");
    }
    return Rational(BigInt(num.get<std::int64_t>()), BigInt(d));
}

Term term_from_json(const json &j, std::uint64_t coordinates) {
    if (!j.is_array() || j.size() != 3) {
        throw std::invalid_argument("term must be [flat_index, num, den], got " + j.dump());
    }
    const auto index = j[0].get<std::uint64_t>();
    if (index >= coordinates) {
        throw std::invalid_argument("term references flat index " + std::to_string(index) + " out of range");
    }
    return {index, pair_to_rational(j[1], j[2])};
}

void check_schema(const json &j) {
    if (j.contains("schema") && j.at("schema").get<int>() != kSchemaVersion) {
        throw std::invalid_argument("unsupported schema version " + j.at("schema").dump());
    }
}

ConstraintKind kind_from_string(const std::string &text) {
    for (auto kind : {ConstraintKind::Normalization, ConstraintKind::NoSignaling, ConstraintKind::ArrowOfTime,
                      ConstraintKind::NoSignalingInTime}) {
        if (to_string(kind) == text) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown constraint kind '" + text + "'");
}

json dimension_entry(const DimensionEntry &entry) {
    return {{"computed", entry.computed}, {"closed_form", to_int64(entry.closed_form)}, {"match", entry.matches()}};
}

}  // namespace

std::string format_double(double value) {
    std::ostringstream out;
    out.precision(12);
    out << value;
    return out.str();
}

json to_json(const Scenario &scenario) {
    return {{"n", scenario.n()}, {"m", scenario.m()}, {"delta", scenario.delta()}};
}

Scenario scenario_from_json(const json &j) {
    return Scenario(j.at("n").get<int>(), j.at("m").get<int>(), j.at("delta").get<int>());
}

json to_json(const ExactProbVector &p) {
    json values = json::array();
    for (const auto &v : p.values) {
        values.push_back(to_string(v));
    }
    return {{"schema", kSchemaVersion}, {"scenario", to_json(p.scenario)}, {"exact", true}, {"values", values}};
}

json to_json(const RealProbVector &p) {
    return {{"schema", kSchemaVersion}, {"scenario", to_json(p.scenario)}, {"exact", false}, {"values", p.values}};
}

ExactProbVector exact_prob_vector_from_json(const json &j) {
    check_schema(j);
    const Scenario scenario = scenario_from_json(j.at("scenario"));
    ExactProbVector p{scenario, {}};
    for (const auto &v : j.at("values")) {
        p.values.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<std::int64_t>()));
    }
    if (p.values.size() != coordinate_count(scenario)) {
        throw std::invalid_argument("probability vector length does not match its scenario");
    }
    return p;
}

RealProbVector real_prob_vector_from_json(const json &j) {
    check_schema(j);
    const Scenario scenario = scenario_from_json(j.at("scenario"));
    RealProbVector p{scenario, {}};
    for (const auto &v : j.at("values")) {
        p.values.push_back(v.is_string() ? to_double(parse_rational(v.get<std::string>())) : v.get<double>());
    }
    if (p.values.size() != coordinate_count(scenario)) {
        throw std::invalid_argument("probability vector length does not match its scenario");
    }
    return p;
}

json to_json(const ConstraintSystem &system) {
    json rows = json::array();
    for (const auto &row : system.rows) {
        json terms = json::array();
        for (const auto &t : row.terms) {
            terms.push_back(term_json(t.index, t.coeff));
        }
        rows.push_back({{"rhs", to_string(row.rhs)}, {"terms", terms}, {"label", row.label}});
    }
    return {{"schema", kSchemaVersion},
            {"scenario", to_json(system.scenario)},
            {"kind", std::string(to_string(system.kind))},
            {"rows", rows}};
}

ConstraintSystem constraint_system_from_json(const json &j) {
    check_schema(j);
    const Scenario scenario = scenario_from_json(j.at("scenario"));
    const auto coords = coordinate_count(scenario);
    ConstraintSystem system{scenario, kind_from_string(j.at("kind").get<std::string>()), {}};
    for (const auto &r : j.at("rows")) {
        ConstraintRow row;
        const auto &rhs = r.at("rhs");
        row.rhs = rhs.is_string() ? parse_rational(rhs.get<std::string>()) : Rational(rhs.get<std::int64_t>());
        for (const auto &t : r.at("terms")) {
            row.terms.push_back(term_from_json(t, coords));
        }
        row.label = r.value("label", "");
        system.rows.push_back(std::move(row));
    }
    return system;
}

json to_json(const DimensionReport &report) {
    return {{"schema", kSchemaVersion},
            {"scenario", to_json(report.scenario)},
            {"dim_P", dimension_entry(report.p)},
            {"dim_NS", dimension_entry(report.ns)},
            {"dim_AoT", dimension_entry(report.aot)},
            {"dim_MR", dimension_entry(report.mr)},
            {"all_match", report.all_match()}};
}

json to_json(const ConditionalTable &table) {
    json values = json::array();
    for (double v : table.values) {
        values.push_back(v);
    }
    return {{"schema", kSchemaVersion}, {"scenario", to_json(table.scenario)}, {"conditionals", values}};
}

ConditionalTable conditional_table_from_json(const json &j) {
    check_schema(j);
    ConditionalTable table{scenario_from_json(j.at("scenario")), j.at("conditionals").get<std::vector<double>>()};
    if (table.values.size() != coordinate_count(table.scenario)) {
        throw std::invalid_argument("conditional table length does not match its scenario");
    }
    return table;
}

json to_json(const LinearWitness &witness) {
    json terms = json::array();
    for (const auto &t : witness.terms) {
        terms.push_back(term_json(t.index, t.coeff));
    }
    return {{"schema", kSchemaVersion},
            {"name", witness.name},
            {"scenario", to_json(witness.scenario)},
            {"terms", terms},
            {"bound", json::array({to_int64(boost::multiprecision::numerator(witness.bound)),
                                   to_int64(boost::multiprecision::denominator(witness.bound))})}};
}

LinearWitness witness_from_json(const json &j) {
    check_schema(j);
    const Scenario scenario = scenario_from_json(j.at("scenario"));
    const auto coords = coordinate_count(scenario);
    LinearWitness witness{j.at("name").get<std::string>(), scenario, {}, Rational(0)};
    for (const auto &t : j.at("terms")) {
        witness.terms.push_back(term_from_json(t, coords));
    }
    const auto &bound = j.at("bound");
    if (bound.is_array()) {
        if (bound.size() != 2) {
            throw std::invalid_argument("bound must be [num, den]");
        }
        witness.bound = pair_to_rational(bound[0], bound[1]);
    } else if (bound.is_string()) {
        witness.bound = parse_rational(bound.get<std::string>());
    } else {
        witness.bound = Rational(bound.get<std::int64_t>());
    }
    return witness;
}

void write_vertices_csv(std::ostream &out, std::span<const ExactProbVector> vertices) {
    if (vertices.empty()) {
        return;
    }
    const size_t coords = vertices.front().values.size();
    for (size_t k = 0; k < coords; k++) {
        out << (k ? "," : "") << 'p' << k;
    }
    out << '\n';
    for (const auto &v : vertices) {
        for (size_t k = 0; k < coords; k++) {
            out << (k ? "," : "") << to_string(v.values[k]);
        }
        out << '\n';
    }
}

}  // namespace tempoly
