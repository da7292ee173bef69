# Copyright 2026 The minseq Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""This module provides constants for minseq."""

# Variables used by enumeration, in order. Beyond these, `X<n>` names are generated.
VARIABLE_NAMES = ("P", "Q", "R", "S", "T", "U", "V")

MAX_TRUTH_TABLE_VARIABLES = 24
MAX_ENUMERATION_CONNECTIVES = 6
MAX_ENUMERATION_FORMULAS = 4
# Ceiling on the number of formulas a single enumeration may produce.
MAX_ENUMERATED_FORMULAS = 2_000_000

DEFAULT_CENSUS_VARIABLES = 2
DEFAULT_CENSUS_CONNECTIVES = 4
DEFAULT_CENSUS_SPOT_CHECKS = 8

DEFAULT_DEGREE_VARIABLES = 2
DEFAULT_DEGREE_CONNECTIVES = 4
DEFAULT_DEGREE_FORMULAS = 3

# Search caps: max_width = goal width + DEFAULT_WIDTH_SLACK.
DEFAULT_WIDTH_SLACK = 4
DEFAULT_MAX_DEPTH = 32
DEFAULT_MEMO_LIMIT = 250_000

# System members in family bit order. "plus" stands for both plus1 and plus2.
MEMBER_ORDER = ("tensor", "with", "wedge", "plus", "par", "w", "c")
STANDARD_MEMBERS = ("tensor", "with", "plus", "par", "w", "c")

# Preset name -> (axiom variant, members).
PRESETS = {
    "gs1p": ("plain", ("with", "plus", "w", "c")),
    "gs3p": ("context", ("with", "par")),
    "mp": ("plain", ("wedge", "plus", "par")),
    "mp-": ("plain", ("tensor", "with", "plus", "par")),
    "pp": ("plain", ("tensor", "plus", "c")),
    "np": ("plain", ("with", "par", "w")),
}

# Presets preferred as equivalence class representatives, in order.
REPRESENTATIVE_PRESETS = ("gs1p", "pp", "np", "mp")

# Witnesses of incompleteness, keyed by the capability a system lacks.
WITNESS_MP_MINUS = "((P&Q)|(~Q&P))|~P"
WITNESS_NO_CONJUNCTION = "P|(~P&~P)"
WITNESS_NO_DISJUNCTION = "P|~P"
WITNESS_NO_PLUS_WITHOUT_W = "(P|~P)|Q"
WITNESS_NO_TENSOR_WITHOUT_W = "P|(Q|(~P&~Q))"
WITNESS_NO_PAR_WITHOUT_C = "P|~P"
WITNESS_NO_WITH_WITHOUT_C = "P|(~P&~P)"
