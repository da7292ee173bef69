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

"""Workbench for propositional sequent calculi.

The package is split by concern:

- `core`: formulas, sequents, parsing and printing.
- `semantics`: truth tables, validity, minimality and enumeration.
- `calculus`: rules, systems, derivations and the checker.
- `prover`: the completeness procedure and backward proof search.
- `metatheory`: derived rules, containment, elaboration, census and degrees.
"""

__version__ = "0.1.0"
