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

"""Shared hypothesis strategies and a forward generator of legal derivations."""

import random
from typing import List, Optional, Sequence

from hypothesis import strategies as st

from minseq.calculus import Axiom, Derivation, RuleId, System
from minseq.core import Connective, Formula, Literal, Node, Sequent, negate

NAMES = ("P", "Q", "R")


def literals(names: Sequence[str] = NAMES) -> st.SearchStrategy:
    """Literals over `names`."""
    return st.builds(Literal, st.sampled_from(names), st.booleans())


def formulas(names: Sequence[str] = NAMES, max_leaves: int = 8) -> st.SearchStrategy:
    """Formula trees of bounded size."""
    return st.recursive(
        literals(names),
        lambda children: st.builds(Node, st.sampled_from(Connective), children, children),
        max_leaves=max_leaves,
    )


def sequents(
    names: Sequence[str] = NAMES, max_leaves: int = 6, max_size: int = 4
) -> st.SearchStrategy:
    """Non-empty sequents of bounded formulas."""
    return st.lists(formulas(names, max_leaves), min_size=1, max_size=max_size).map(
        lambda fs: Sequent(tuple(fs))
    )


def random_formula(rng: random.Random, names: Sequence[str] = NAMES, depth: int = 2) -> Formula:
    """Draw a random formula of at most `depth` connective levels."""
    if depth == 0 or rng.random() < 0.4:
        return Literal(rng.choice(names), rng.random() < 0.5)
    conn = rng.choice((Connective.AND, Connective.OR))
    return Node(conn, random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1))


def _shuffled(rng: random.Random, occurrences: List[Formula]) -> Sequent:
    occurrences = list(occurrences)
    rng.shuffle(occurrences)
    return Sequent(tuple(occurrences))


def _axiom(rng: random.Random, system: System) -> Derivation:
    var = rng.choice(NAMES)
    occurrences = [Literal(var), Literal(var, False)]
    if system.axiom is Axiom.WITH_CONTEXT:
        occurrences += [random_formula(rng) for _ in range(rng.randint(0, 2))]
    return Derivation(RuleId.AX, _shuffled(rng, occurrences))


def _step(rng: random.Random, system: System, rule: RuleId, depth: int) -> Optional[Derivation]:
    first = forward_derivation(rng, system, depth - 1)
    occurrences = list(first.conclusion.occurrences)
    i = rng.randrange(len(occurrences))
    a = occurrences[i]

    if rule is RuleId.W:
        return Derivation(rule, _shuffled(rng, occurrences + [random_formula(rng)]), (first,))
    if rule is RuleId.C:
        duplicated = [f for f in occurrences if occurrences.count(f) > 1]
        if not duplicated:
            return None
        occurrences.remove(rng.choice(duplicated))
        return Derivation(rule, _shuffled(rng, occurrences), (first,))
    if rule in (RuleId.PLUS1, RuleId.PLUS2):
        other = random_formula(rng)
        pair = (a, other) if rule is RuleId.PLUS1 else (other, a)
        occurrences[i] = Node(Connective.OR, *pair)
        return Derivation(rule, _shuffled(rng, occurrences), (first,))
    if rule is RuleId.PAR:
        if len(occurrences) < 2:
            return None
        j = rng.choice([k for k in range(len(occurrences)) if k != i])
        b = occurrences[j]
        rest = [f for k, f in enumerate(occurrences) if k not in (i, j)]
        return Derivation(rule, _shuffled(rng, rest + [Node(Connective.OR, a, b)]), (first,))
    if rule is RuleId.WEDGE and len(occurrences) >= 3 and rng.random() < 0.4:
        # Both premises are `first`, one principal on a and one on b. A nonempty
        # part of the remaining context is shared, the rest is carried by each side.
        j = rng.choice([k for k in range(len(occurrences)) if k != i])
        b = occurrences[j]
        common = [f for k, f in enumerate(occurrences) if k not in (i, j)]
        rng.shuffle(common)
        cut = rng.randint(1, len(common))
        shared, separate = common[:cut], common[cut:]
        conclusion = [Node(Connective.AND, a, b)] + shared + separate + [b] + separate + [a]
        return Derivation(rule, _shuffled(rng, conclusion), (first, first))
    if rule is RuleId.WITH or (rule is RuleId.WEDGE and rng.random() < 0.5):
        occurrences[i] = Node(Connective.AND, a, a)
        return Derivation(rule, _shuffled(rng, occurrences), (first, first))

    second = forward_derivation(rng, system, depth - 1)
    others = list(second.conclusion.occurrences)
    j = rng.randrange(len(others))
    b = others.pop(j)
    rest = occurrences[:i] + occurrences[i + 1 :] + others
    return Derivation(rule, _shuffled(rng, rest + [Node(Connective.AND, a, b)]), (first, second))


def forward_derivation(rng: random.Random, system: System, depth: int = 3) -> Derivation:
    """Build a random derivation that is legal in `system` by construction."""
    rules = sorted(system.rules, key=lambda r: r.value)
    if depth <= 0 or not rules or rng.random() < 0.2:
        return _axiom(rng, system)
    for _ in range(4):
        d = _step(rng, system, rng.choice(rules), depth)
        if d is not None:
            return d
    return _axiom(rng, system)


@st.composite
def derivations(draw, system: System, depth: int = 3) -> Derivation:
    """Legal derivations in `system`."""
    return forward_derivation(draw(st.randoms(use_true_random=False)), system, depth)


def valid_sequents(names: Sequence[str] = NAMES, max_leaves: int = 6) -> st.SearchStrategy:
    """Valid sequents: a random sequent followed by the negation of its first formula."""
    return sequents(names, max_leaves, max_size=3).map(
        lambda s: Sequent(s.occurrences + (negate(s[0]),))
    )
