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

#ifndef TEMPOLY_GEOMETRY_H
#define TEMPOLY_GEOMETRY_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tempoly/constraints.h"
#include "tempoly/scenario.h"

namespace tempoly {

/// Default cap on delta^(n*m), the number of deterministic strategies.
inline constexpr std::uint64_t kDefaultStrategyLimit = 100'000;

/// (m*delta+1)^n - (m+1)^n.
BigInt closed_form_dim_p(const Scenario &scenario);
/// [m(delta-1)+1]^n - 1. Shared by the no-signaling and macrorealist polytopes.
BigInt closed_form_dim_ns(const Scenario &scenario);
/// [(m*delta+1)^n - 1](delta-1)/delta.
BigInt closed_form_dim_aot(const Scenario &scenario);
BigInt closed_form_dim_mr(const Scenario &scenario);

struct DimensionEntry {
    size_t computed = 0;
    BigInt closed_form = 0;
    bool matches() const { return BigInt(computed) == closed_form; }
};

struct DimensionReport {
    Scenario scenario;
    DimensionEntry p;
    DimensionEntry ns;
    DimensionEntry aot;
    DimensionEntry mr;

    bool all_match() const { return p.matches() && ns.matches() && aot.matches() && mr.matches(); }

    /// dim P > dim AoT > dim MR == dim NS; the strict inequalities collapse to equalities when n = 1.
    bool ordering_holds() const;
};

/// Affine dimensions of P, NS, AoT and MR, each compared with its closed form.
DimensionReport dimension_report(const Scenario &scenario, std::uint64_t limit = kDefaultCoordinateLimit);

enum class RealismModel { Local, Macro };

/// A fixed outcome for every (time, setting) pair.
struct DeterministicStrategy {
    Scenario scenario;
    /// outcomes[i * m + (s - 1)] in {1..delta}.
    std::vector<int> outcomes;

    int outcome(int time, int setting) const { return outcomes[time * scenario.m() + (setting - 1)]; }
};

/// All delta^(n*m) strategies, ordered by their base-delta index. Throws SizeLimitError past `limit`.
std::vector<DeterministicStrategy> enumerate_strategies(const Scenario &scenario,
                                                        std::uint64_t limit = kDefaultStrategyLimit);

/// p(q|s) = 1 where every performed measurement shows the strategy's outcome, else 0.
ExactProbVector strategy_point(const DeterministicStrategy &strategy);

/// Deduplicated vertex points of the LR or MR polytope. The two models share
/// the same deterministic points; the model only tags the intent.
std::vector<ExactProbVector> enumerate_vertices(const Scenario &scenario, RealismModel model,
                                                std::uint64_t limit = kDefaultStrategyLimit);

/// Rank of the (vertex - first vertex) rows. Throws std::invalid_argument on an empty list.
size_t affine_dim_of_hull(std::span<const ExactProbVector> vertices);

struct SatisfactionResult {
    bool satisfied = true;
    /// First offending vertex and row when not satisfied.
    size_t vertex = 0;
    size_t row = 0;
    std::string label;
};

SatisfactionResult vertices_satisfy(const ConstraintSystem &system, std::span<const ExactProbVector> vertices);

struct CoordinateRange {
    Rational min;
    Rational max;
};

/// Per-coordinate minimum and maximum over the vertex list.
std::vector<CoordinateRange> coordinate_coverage(std::span<const ExactProbVector> vertices);

}  // namespace tempoly

#endif
