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

"""The constructive completeness procedure and bounded backward proof search.

`prove_minimal` turns any minimal sequent into a derivation in the minimal calculus
by induction on connectives; every sequent in the result is itself minimal.
`search` decides derivability in an arbitrary system by exhaustive backward search,
which is a decision procedure for contraction-free systems and a capped search
otherwise.
"""

__all__ = [
    "Derivable",
    "Exhausted",
    "Policy",
    "SearchBounds",
    "SearchOutcome",
    "Underivable",
    "prove_formula",
    "prove_minimal",
    "prove_sequent",
    "search",
    "split_context",
]

import itertools
import logging
import random
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from minseq.calculus import Axiom, Derivation, RuleId, System, match_step
from minseq.constants import DEFAULT_MAX_DEPTH, DEFAULT_MEMO_LIMIT, DEFAULT_WIDTH_SLACK
from minseq.core import Connective, Context, Formula, Node, Sequent
from minseq.exceptions import NotMinimalError, NotValidError
from minseq.semantics import is_minimal, is_valid, minimal_indices

_logger = logging.getLogger(__name__)


class Policy(Enum):
    """Principal occurrence selection for `prove_minimal`."""

    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"
    RANDOM = "random"


class _Chooser:
    def __init__(self, policy: Policy, seed: Optional[int]) -> None:
        if policy is Policy.RANDOM and seed is None:
            raise ValueError("the random policy requires a seed")
        self.policy = policy
        self.rng = random.Random(seed) if policy is Policy.RANDOM else None

    def principal(self, candidates: Sequence[int]) -> int:
        if self.rng is not None:
            return self.rng.choice(candidates)
        return candidates[-1] if self.policy is Policy.RIGHTMOST else candidates[0]

    def plus(self, first: bool, second: bool) -> Optional[RuleId]:
        if first and second and self.rng is not None:
            return self.rng.choice((RuleId.PLUS1, RuleId.PLUS2))
        if first:
            return RuleId.PLUS1
        if second:
            return RuleId.PLUS2
        return None


def _split_positions(
    occurrences: Context, i: int
) -> Tuple[FrozenSet[int], FrozenSet[int], FrozenSet[int]]:
    """Split the context around the conjunction at `i` into shared, left and right."""
    a = occurrences[i]
    assert isinstance(a, Node) and a.conn is Connective.AND
    positions = [j for j in range(len(occurrences)) if j != i]
    context = tuple(occurrences[j] for j in positions)
    n = len(context)
    first = {positions[k] for k in minimal_indices(context + (a.left,)) if k < n}
    second = {positions[k] for k in minimal_indices(context + (a.right,)) if k < n}
    shared = first & second
    return frozenset(shared), frozenset(first - shared), frozenset(second - shared)


def split_context(delta: Context, a1: Formula, a2: Formula) -> Tuple[Context, Context, Context]:
    """Split the context of a minimal conjunction sequent between its premises.

    Each premise keeps a minimal subsequent of the context plus its conjunct; the
    occurrences both keep are shared and the rest go to one side only.

    Raises:
        NotMinimalError: Raised if `delta` plus `a1 & a2` is not minimal.
    """
    delta = tuple(delta)
    occurrences = delta + (Node(Connective.AND, a1, a2),)
    if not is_minimal(occurrences):
        raise NotMinimalError(f"sequent is not minimal: {Sequent(occurrences)}")
    shared, left, right = _split_positions(occurrences, len(delta))
    return (
        tuple(delta[j] for j in sorted(shared)),
        tuple(delta[j] for j in sorted(left)),
        tuple(delta[j] for j in sorted(right)),
    )


def _replace(occurrences: Context, i: int, by: Sequence[Formula], keep=None) -> Context:
    """Replace occurrence `i` in place, optionally keeping only positions in `keep`."""
    result: List[Formula] = []
    for j, f in enumerate(occurrences):
        if j == i:
            result.extend(by)
        elif keep is None or j in keep:
            result.append(f)
    return tuple(result)


def _prove(occurrences: Context, chooser: _Chooser) -> Derivation:
    conclusion = Sequent(occurrences)
    compound = [j for j, f in enumerate(occurrences) if isinstance(f, Node)]
    if not compound:
        return Derivation(RuleId.AX, conclusion)

    i = chooser.principal(compound)
    a = occurrences[i]
    assert isinstance(a, Node)
    if a.conn is Connective.AND:
        shared, left, right = _split_positions(occurrences, i)
        first = _replace(occurrences, i, (a.left,), shared | left)
        second = _replace(occurrences, i, (a.right,), shared | right)
        return Derivation(
            RuleId.WEDGE, conclusion, (_prove(first, chooser), _prove(second, chooser))
        )

    first = _replace(occurrences, i, (a.left,))
    second = _replace(occurrences, i, (a.right,))
    rule = chooser.plus(is_valid(first), is_valid(second))
    if rule is RuleId.PLUS1:
        return Derivation(rule, conclusion, (_prove(first, chooser),))
    if rule is RuleId.PLUS2:
        return Derivation(rule, conclusion, (_prove(second, chooser),))
    both = _replace(occurrences, i, (a.left, a.right))
    return Derivation(RuleId.PAR, conclusion, (_prove(both, chooser),))


def prove_minimal(
    s: Sequent, policy: Policy = Policy.LEFTMOST, seed: Optional[int] = None
) -> Derivation:
    """Derive a minimal sequent in the minimal calculus.

    The conclusion of the result is `s` itself, occurrence for occurrence.

    Raises:
        NotMinimalError: Raised if `s` is not minimal.
        ValueError: Raised if the random policy is requested without a seed.
    """
    chooser = _Chooser(policy, seed)
    if not is_minimal(s):
        raise NotMinimalError(f"sequent is not minimal: {s}")
    return _prove(s.occurrences, chooser)


def prove_formula(
    f: Formula, policy: Policy = Policy.LEFTMOST, seed: Optional[int] = None
) -> Derivation:
    """Derive a valid formula in the minimal calculus.

    Raises:
        NotValidError: Raised if `f` is not valid.
    """
    if not is_valid((f,)):
        raise NotValidError(f"formula is not valid: {f}")
    return prove_minimal(Sequent((f,)), policy, seed)


def prove_sequent(
    s: Sequent,
    weaken: bool = False,
    policy: Policy = Policy.LEFTMOST,
    seed: Optional[int] = None,
) -> Derivation:
    """Derive the minimized form of a valid sequent in the minimal calculus.

    With `weaken`, the deleted occurrences are added back by weakening steps so the
    result concludes `s` itself, using the minimal calculus plus W.

    Raises:
        NotValidError: Raised if `s` is not valid.
    """
    kept = list(minimal_indices(s.occurrences))
    d = prove_minimal(Sequent(tuple(s.occurrences[j] for j in kept)), policy, seed)
    if not weaken:
        return d
    for j in range(len(s)):
        if j in kept:
            continue
        kept = sorted(kept + [j])
        conclusion = Sequent(tuple(s.occurrences[k] for k in kept))
        d = Derivation(RuleId.W, conclusion, (d,))
    return d


@dataclass(frozen=True)
class SearchBounds:
    """Caps on backward search.

    Attributes:
        max_width: Widest sequent contraction may produce. None means the goal width
            plus `width_slack`.
        max_depth: Deepest node explored, counting the goal as depth 1.
        memo_limit: Number of sequents cached before caching stops.
        width_slack: Occurrences contraction may add beyond the goal width.
    """

    max_width: Optional[int] = None
    max_depth: int = DEFAULT_MAX_DEPTH
    memo_limit: int = DEFAULT_MEMO_LIMIT
    width_slack: int = DEFAULT_WIDTH_SLACK

    def __post_init__(self) -> None:
        if self.max_depth < 1:
            raise ValueError(f"max_depth must be at least 1, got {self.max_depth}")
        if self.max_width is not None and self.max_width < 1:
            raise ValueError(f"max_width must be positive, got {self.max_width}")

    def width_for(self, s: Sequent) -> int:
        """Resolve the width cap for a goal; it never drops below the goal width."""
        if self.max_width is None:
            return len(s) + self.width_slack
        return max(self.max_width, len(s))


@dataclass(frozen=True)
class Derivable:
    """A derivation was found."""

    derivation: Derivation

    @property
    def summary(self) -> str:
        """Human readable outcome."""
        return "derivable"


@dataclass(frozen=True)
class Underivable:
    """Search finished without a proof and without hitting a cap."""

    definitive: bool

    @property
    def summary(self) -> str:
        """Human readable outcome."""
        return "underivable (definitive)" if self.definitive else "no proof within caps"


@dataclass(frozen=True)
class Exhausted:
    """A cap pruned at least one branch and no proof was found."""

    @property
    def summary(self) -> str:
        """Human readable outcome."""
        return "no proof within caps"


SearchOutcome = Union[Derivable, Underivable, Exhausted]


def _compositions(n: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Yield every way of writing `n` as an ordered sum of `parts` naturals."""
    if parts == 1:
        yield (n,)
        return
    for k in range(n, -1, -1):
        for tail in _compositions(n - k, parts - 1):
            yield (k,) + tail


def _splits(occurrences: Context, i: int, parts: int) -> Iterator[Tuple[FrozenSet[int], ...]]:
    """Yield position partitions of the context around `i`, one per multiset split."""
    groups: Dict[str, List[int]] = {}
    for j, f in enumerate(occurrences):
        if j != i:
            groups.setdefault(f.key, []).append(j)
    positions = list(groups.values())
    for choice in itertools.product(*(_compositions(len(p), parts) for p in positions)):
        buckets: List[set] = [set() for _ in range(parts)]
        for group, counts in zip(positions, choice):
            start = 0
            for bucket, count in zip(buckets, counts):
                bucket.update(group[start : start + count])
                start += count
        yield tuple(frozenset(b) for b in buckets)


class _Search:
    """One backward search; owns its memo table."""

    _LOGICAL = (
        RuleId.PAR,
        RuleId.WITH,
        RuleId.PLUS1,
        RuleId.PLUS2,
        RuleId.WEDGE,
        RuleId.TENSOR,
    )

    def __init__(self, sys: System, width: int, bounds: SearchBounds) -> None:
        self.sys = sys
        self.width = width
        self.bounds = bounds
        self.proved: Dict[Tuple[str, ...], Derivation] = {}
        # Largest remaining depth at which a sequent is known to fail.
        self.failed: Dict[Tuple[str, ...], int] = {}
        self.pruned = False
        self.saturated = False
        self.expanded = 0
        introduced = set()
        if sys.rules & {RuleId.TENSOR, RuleId.WITH, RuleId.WEDGE}:
            introduced.add(Connective.AND)
        if sys.rules & {RuleId.PLUS1, RuleId.PLUS2, RuleId.PAR}:
            introduced.add(Connective.OR)
        self.introduced = frozenset(introduced)
        self.can_discard = RuleId.W in sys.rules or sys.axiom is Axiom.WITH_CONTEXT

    @property
    def cached(self) -> int:
        return len(self.proved) + len(self.failed)

    def _full(self) -> bool:
        if self.cached < self.bounds.memo_limit:
            return False
        if not self.saturated:
            self.saturated = True
            _logger.debug("search memo reached %d sequents; caching stops", self.cached)
        return True

    def _succeed(self, key: Tuple[str, ...], d: Derivation) -> Derivation:
        if not self._full():
            self.proved[key] = d
            self.failed.pop(key, None)
        return d

    def _fail(self, key: Tuple[str, ...], remaining: int) -> None:
        if not self._full() or key in self.failed:
            self.failed[key] = max(remaining, self.failed.get(key, remaining))

    def _passive(self, f: Formula) -> bool:
        return isinstance(f, Node) and f.conn not in self.introduced

    def _hopeless(self, occurrences: Context) -> bool:
        # A formula whose main connective no rule introduces is never principal,
        # so it must be discarded along the way.
        kept = tuple(f for f in occurrences if not self._passive(f))
        if self.can_discard:
            return not is_valid(kept)
        return len(kept) < len(occurrences) or not is_valid(occurrences)

    def prove(self, occurrences: Context, depth: int) -> Optional[Derivation]:
        key = tuple(sorted(f.key for f in occurrences))
        if key in self.proved:
            return self.proved[key]
        remaining = self.bounds.max_depth - depth
        if remaining < 0:
            self.pruned = True
            return None
        if self.failed.get(key, -1) >= remaining:
            return None
        if self._hopeless(occurrences):
            self._fail(key, self.bounds.max_depth)
            return None

        conclusion = Sequent(occurrences)
        if match_step(RuleId.AX, conclusion, (), axiom=self.sys.axiom) is not None:
            return self._succeed(key, Derivation(RuleId.AX, conclusion))

        self.expanded += 1
        d = self._expand(occurrences, conclusion, depth)
        if d is None:
            self._fail(key, remaining)
            return None
        return self._succeed(key, d)

    def _candidates(self, occurrences: Context) -> Iterator[Tuple[RuleId, Tuple[Context, ...]]]:
        """Yield backward rule applications as (rule, premise sequents)."""
        rules = self.sys.rules
        seen = set()
        principals = []
        for i, f in enumerate(occurrences):
            if f.key not in seen:
                seen.add(f.key)
                principals.append(i)

        for rule in self._LOGICAL:
            if rule not in rules:
                continue
            for i in principals:
                a = occurrences[i]
                if not isinstance(a, Node):
                    continue
                if a.conn is Connective.OR:
                    if rule is RuleId.PAR:
                        yield rule, (_replace(occurrences, i, (a.left, a.right)),)
                    elif rule is RuleId.PLUS1:
                        yield rule, (_replace(occurrences, i, (a.left,)),)
                    elif rule is RuleId.PLUS2:
                        yield rule, (_replace(occurrences, i, (a.right,)),)
                    continue
                if rule is RuleId.WITH:
                    yield rule, (
                        _replace(occurrences, i, (a.left,)),
                        _replace(occurrences, i, (a.right,)),
                    )
                elif rule is RuleId.TENSOR:
                    for left, right in _splits(occurrences, i, 2):
                        yield rule, (
                            _replace(occurrences, i, (a.left,), left),
                            _replace(occurrences, i, (a.right,), right),
                        )
                elif rule is RuleId.WEDGE:
                    for shared, left, right in _splits(occurrences, i, 3):
                        yield rule, (
                            _replace(occurrences, i, (a.left,), shared | left),
                            _replace(occurrences, i, (a.right,), shared | right),
                        )

        if RuleId.W in rules and len(occurrences) > 1:
            for i in principals:
                yield RuleId.W, (occurrences[:i] + occurrences[i + 1 :],)
        if RuleId.C in rules:
            if len(occurrences) + 1 > self.width:
                self.pruned = True
                return
            for i in principals:
                yield RuleId.C, (occurrences + (occurrences[i],),)

    def _expand(
        self, occurrences: Context, conclusion: Sequent, depth: int
    ) -> Optional[Derivation]:
        for rule, premises in self._candidates(occurrences):
            if any(self._hopeless(p) for p in premises):
                continue
            proofs = []
            for p in premises:
                d = self.prove(p, depth + 1)
                if d is None:
                    break
                proofs.append(d)
            else:
                return Derivation(rule, conclusion, tuple(proofs))
        return None


def search(sys: System, s: Sequent, b: Optional[SearchBounds] = None) -> SearchOutcome:
    """Search backward for a derivation of `s` in `sys`.

    Without contraction every backward step lowers the pair (connectives,
    occurrences), so the search is exhaustive and a failure is definitive. With
    contraction the width and depth caps apply and a failure is only reported as
    such within them.
    """
    b = b or SearchBounds()
    run = _Search(sys, b.width_for(s), b)
    d = run.prove(s.occurrences, 1)
    _logger.debug(
        "searched %s in %s: %d expansions, %d cached", s, sys, run.expanded, run.cached
    )
    if d is not None:
        return Derivable(replace(d, conclusion=s))
    if run.pruned:
        return Exhausted()
    return Underivable(definitive=RuleId.C not in sys.rules)
