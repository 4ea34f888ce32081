# Copyright 2026 The tempoly Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Probability polytopes of local-realism and macrorealism tests."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    Scenario,
    count_aot_closed_form,
    count_redundant_normalizations,
    equivalent_to_ns,
    hull_dimension,
    projective_counterexample,
    rank,
    scan,
    simulate_qubit,
    simulate_singlet,
)

__all__ = [
    "Scenario",
    "conditionals",
    "constraint_system",
    "count_aot_closed_form",
    "count_redundant_normalizations",
    "dimension_report",
    "equivalent_to_ns",
    "evaluate_witness",
    "first_violated_row",
    "hull_dimension",
    "kraus_round_trip",
    "projective_counterexample",
    "random_aot_point",
    "rank",
    "scan",
    "simulate_qubit",
    "simulate_singlet",
    "vertices",
    "witness",
]


def _to_strings(values):
    return [str(Fraction(v)) for v in values]


def dimension_report(scenario, limit=1_000_000):
    return json.loads(_core.dimension_report_json(scenario, limit))


def constraint_system(scenario, kind):
    """Rows of `kind` ("norm", "ns", "aot" or "nsit") as a dict."""
    return json.loads(_core.constraint_system_json(scenario, kind))


def vertices(scenario, model="mr"):
    return [[Fraction(x) for x in v] for v in _core.vertices(scenario, model)]


def random_aot_point(scenario, seed):
    return [Fraction(x) for x in _core.random_aot_point(scenario, seed)]


def kraus_round_trip(scenario, values):
    """Returns (max_error, completeness_residual) for an exact AoT point."""
    return _core.kraus_round_trip(scenario, _to_strings(values))


def conditionals(scenario, values):
    return json.loads(_core.conditionals_json(scenario, _to_strings(values)))["conditionals"]


def first_violated_row(scenario, kind, values):
    return _core.first_violated_row(scenario, kind, _to_strings(values))


def witness(name):
    return json.loads(_core.witness_json(name))


def evaluate_witness(w, values):
    return _core.evaluate_witness(json.dumps(w), list(values))
