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

// JSON and CSV encodings of the toolkit's data types. Every top-level
// document carries "schema": 1. Rationals are written as "num/den" strings
// inside probability vectors and as [num, den] integer pairs inside sparse
// term lists.

#ifndef TEMPOLY_IO_H
#define TEMPOLY_IO_H

#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "tempoly/constraints.h"
#include "tempoly/geometry.h"
#include "tempoly/inequalities.h"
#include "tempoly/quantum.h"
#include "tempoly/scenario.h"

namespace tempoly {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Scenario &scenario);
Scenario scenario_from_json(const nlohmann::json &j);

nlohmann::json to_json(const ExactProbVector &p);
nlohmann::json to_json(const RealProbVector &p);
ExactProbVector exact_prob_vector_from_json(const nlohmann::json &j);
RealProbVector real_prob_vector_from_json(const nlohmann::json &j);

nlohmann::json to_json(const ConstraintSystem &system);
ConstraintSystem constraint_system_from_json(const nlohmann::json &j);

nlohmann::json to_json(const DimensionReport &report);

nlohmann::json to_json(const ConditionalTable &table);
ConditionalTable conditional_table_from_json(const nlohmann::json &j);

/// {name, scenario, terms: [[flat_index, num, den]...], bound: [num, den]}.
nlohmann::json to_json(const LinearWitness &witness);
LinearWitness witness_from_json(const nlohmann::json &j);

/// One row per vertex, one column per flat index (header p0,p1,...).
void write_vertices_csv(std::ostream &out, std::span<const ExactProbVector> vertices);

/// Fixed 12-significant-digit formatting used by all float output.
std::string format_double(double value);

}  // namespace tempoly

#endif
