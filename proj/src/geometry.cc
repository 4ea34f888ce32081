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

#include "tempoly/geometry.h"

#include <algorithm>
#include <limits>
#include <set>

#include "tempoly/linalg.h"

namespace tempoly {

using boost::multiprecision::pow;

BigInt closed_form_dim_p(const Scenario &scenario) {
    return pow(BigInt(scenario.combo_count()), scenario.n()) - pow(BigInt(scenario.m() + 1), scenario.n());
}

BigInt closed_form_dim_ns(const Scenario &scenario) {
    return pow(BigInt(scenario.m() * (scenario.delta() - 1) + 1), scenario.n()) - 1;
}

BigInt closed_form_dim_aot(const Scenario &scenario) {
    return (pow(BigInt(scenario.combo_count()), scenario.n()) - 1) * (scenario.delta() - 1) / scenario.delta();
}

BigInt closed_form_dim_mr(const Scenario &scenario) {
    return closed_form_dim_ns(scenario);
}

bool DimensionReport::ordering_holds() const {
    const bool weak = p.computed >= aot.computed && aot.computed >= mr.computed && ns.computed == mr.computed;
    if (scenario.n() == 1) {
        return weak;
    }
    return weak && p.computed > aot.computed && aot.computed > mr.computed;
}

DimensionReport dimension_report(const Scenario &scenario, std::uint64_t limit) {
    coordinate_count(scenario, limit);
    const ConstraintSystem norm = build_normalization(scenario);
    const ConstraintSystem ns = build_ns(scenario);
    const ConstraintSystem aot = build_aot(scenario);
    const ConstraintSystem nsit = build_nsit(scenario);

    DimensionReport report{scenario, {}, {}, {}, {}};
    const ConstraintSystem p_systems[] = {norm};
    const ConstraintSystem ns_systems[] = {norm, ns};
    const ConstraintSystem aot_systems[] = {norm, aot};
    const ConstraintSystem mr_systems[] = {norm, aot, nsit};
    report.p = {affine_solution_dim(p_systems, scenario), closed_form_dim_p(scenario)};
    report.ns = {affine_solution_dim(ns_systems, scenario), closed_form_dim_ns(scenario)};
    report.aot = {affine_solution_dim(aot_systems, scenario), closed_form_dim_aot(scenario)};
    report.mr = {affine_solution_dim(mr_systems, scenario), closed_form_dim_mr(scenario)};
    return report;
}

std::vector<DeterministicStrategy> enumerate_strategies(const Scenario &scenario, std::uint64_t limit) {
    const int slots = scenario.n() * scenario.m();
    std::uint64_t count = 1;
    for (int k = 0; k < slots; k++) {
        if (count > limit / static_cast<std::uint64_t>(scenario.delta())) {
            throw SizeLimitError(
                "scenario " + scenario.str() + " has more than " + std::to_string(limit) + " deterministic strategies");
        }
        count *= static_cast<std::uint64_t>(scenario.delta());
    }

    std::vector<DeterministicStrategy> result;
    result.reserve(count);
    std::vector<int> digits(slots, 1);
    for (std::uint64_t index = 0; index < count; index++) {
        result.push_back({scenario, digits});
        for (int k = slots - 1; k >= 0; k--) {
            if (digits[k] < scenario.delta()) {
                digits[k]++;
                break;
            }
            digits[k] = 1;
        }
    }
    return result;
}

namespace {

ExactProbVector point_from_coordinates(const DeterministicStrategy &strategy, const std::vector<Coordinate> &coords) {
    ExactProbVector p{strategy.scenario, std::vector<Rational>(coords.size())};
    for (size_t idx = 0; idx < coords.size(); idx++) {
        const Coordinate &c = coords[idx];
        bool hit = true;
        for (int i = 0; i < strategy.scenario.n() && hit; i++) {
            int s = c.settings[i];
            hit = s == 0 || c.outcomes[i] == strategy.outcome(i, s);
        }
        if (hit) {
            p.values[idx] = 1;
        }
    }
    return p;
}

std::vector<Coordinate> all_coordinates(const Scenario &scenario) {
    const std::uint64_t count = coordinate_count(scenario);
    std::vector<Coordinate> coords;
    coords.reserve(count);
    for (std::uint64_t idx = 0; idx < count; idx++) {
        coords.push_back(unflatten(scenario, idx));
    }
    return coords;
}

}  // namespace

ExactProbVector strategy_point(const DeterministicStrategy &strategy) {
    return point_from_coordinates(strategy, all_coordinates(strategy.scenario));
}

std::vector<ExactProbVector> enumerate_vertices(const Scenario &scenario, RealismModel, std::uint64_t limit) {
    const auto strategies = enumerate_strategies(scenario, limit);
    const auto coords = all_coordinates(scenario);
    std::vector<ExactProbVector> result;
    std::set<std::vector<bool>> seen;
    for (const auto &strategy : strategies) {
        ExactProbVector p = point_from_coordinates(strategy, coords);
        std::vector<bool> key(p.values.size());
        for (size_t k = 0; k < key.size(); k++) {
            key[k] = p.values[k] != 0;
        }
        if (seen.insert(std::move(key)).second) {
            result.push_back(std::move(p));
        }
    }
    return result;
}

size_t affine_dim_of_hull(std::span<const ExactProbVector> vertices) {
    if (vertices.empty()) {
        throw std::invalid_argument("affine hull of an empty vertex list");
    }
    const auto &origin = vertices.front().values;
    RationalMatrix mat(origin.size());
    for (size_t v = 1; v < vertices.size(); v++) {
        const auto &values = vertices[v].values;
        if (values.size() != origin.size()) {
            throw std::invalid_argument("vertices have different coordinate counts");
        }
        std::vector<std::pair<size_t, Rational>> entries;
        for (size_t k = 0; k < values.size(); k++) {
            if (values[k] != origin[k]) {
                entries.emplace_back(k, values[k] - origin[k]);
            }
        }
        mat.add_row(std::move(entries));
    }
    return rank(mat);
}

SatisfactionResult vertices_satisfy(const ConstraintSystem &system, std::span<const ExactProbVector> vertices) {
    for (size_t v = 0; v < vertices.size(); v++) {
        if (vertices[v].scenario != system.scenario) {
            throw std::invalid_argument("vertex and constraint system belong to different scenarios");
        }
        long row = first_violated_row(system, vertices[v].values);
        if (row >= 0) {
            return {false, v, static_cast<size_t>(row), system.rows[row].label};
        }
    }
    return {};
}

std::vector<CoordinateRange> coordinate_coverage(std::span<const ExactProbVector> vertices) {
    if (vertices.empty()) {
        return {};
    }
    std::vector<CoordinateRange> ranges;
    for (const auto &value : vertices.front().values) {
        ranges.push_back({value, value});
    }
    for (const auto &vertex : vertices.subspan(1)) {
        for (size_t k = 0; k < ranges.size(); k++) {
            ranges[k].min = std::min(ranges[k].min, vertex.values[k]);
            ranges[k].max = std::max(ranges[k].max, vertex.values[k]);
        }
    }
    return ranges;
}

}  // namespace tempoly
