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

"""Valuation semantics, validity, minimality and bounded enumeration.

Validity is decided by exhaustive truth tables. A table is an integer whose bit `k`
holds the value of a formula under assignment `k`, where variable `i` (in sorted
order) is true in assignment `k` iff bit `i` of `k` is set. A sequent is valid iff
the bitwise or of its occurrence tables has every bit set.
"""

__all__ = [
    "Assignment",
    "EnumerationBounds",
    "count_formulas",
    "enumerate_formulas",
    "enumerate_sequents",
    "enumerate_valid_sequents",
    "evaluate",
    "falsifying_assignment",
    "is_minimal",
    "is_valid",
    "minimal_indices",
    "minimize",
    "variable_names",
]

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from minseq.constants import (
    MAX_ENUMERATED_FORMULAS,
    MAX_ENUMERATION_CONNECTIVES,
    MAX_ENUMERATION_FORMULAS,
    MAX_TRUTH_TABLE_VARIABLES,
    VARIABLE_NAMES,
)
from minseq.core import Connective, Formula, Literal, Node, Sequent, variables
from minseq.exceptions import (
    BoundTooLargeError,
    MissingVariableError,
    NotValidError,
    VariableLimitExceededError,
)

_logger = logging.getLogger(__name__)

Assignment = Mapping[str, Union[int, bool]]


def evaluate(f: Formula, a: Assignment) -> int:
    """Evaluate a formula under a 0/1 assignment.

    Raises:
        MissingVariableError: Raised if `a` does not assign a variable of `f`.
    """
    if isinstance(f, Literal):
        try:
            value = 1 if a[f.var] else 0
        except KeyError:
            raise MissingVariableError(f"assignment does not cover variable {f.var}")
        return value if f.positive else 1 - value
    assert isinstance(f, Node)
    if f.conn is Connective.AND:
        return evaluate(f.left, a) & evaluate(f.right, a)
    return evaluate(f.left, a) | evaluate(f.right, a)


@lru_cache(maxsize=64)
def _columns(names: Tuple[str, ...]) -> Tuple[Dict[str, int], int]:
    """Return the variable columns and the all-ones mask over `names`."""
    rows = 1 << len(names)
    full = (1 << rows) - 1
    columns = {}
    for i, name in enumerate(names):
        period = 1 << (i + 1)
        column = ((1 << (1 << i)) - 1) << (1 << i)
        while period < rows:
            column |= column << period
            period <<= 1
        columns[name] = column
    return columns, full


@lru_cache(maxsize=1 << 16)
def _table(f: Formula, names: Tuple[str, ...]) -> int:
    columns, full = _columns(names)
    if isinstance(f, Literal):
        column = columns[f.var]
        return column if f.positive else full & ~column
    assert isinstance(f, Node)
    if f.conn is Connective.AND:
        return _table(f.left, names) & _table(f.right, names)
    return _table(f.left, names) | _table(f.right, names)


def _tables(occurrences: Tuple[Formula, ...]) -> Tuple[List[int], int]:
    names = variables(occurrences)
    if len(names) > MAX_TRUTH_TABLE_VARIABLES:
        raise VariableLimitExceededError(
            f"{len(names)} variables exceed the truth-table limit of {MAX_TRUTH_TABLE_VARIABLES}"
        )
    _, full = _columns(names)
    return [_table(f, names) for f in occurrences], full


def is_valid(s: Union[Sequent, Iterable[Formula]]) -> bool:
    """Return whether some occurrence of `s` is true under every assignment.

    An empty context is never valid.

    Raises:
        VariableLimitExceededError: Raised if `s` has too many variables.
    """
    occurrences = tuple(s)
    if not occurrences:
        return False
    tables, full = _tables(occurrences)
    union = 0
    for table in tables:
        union |= table
    return union == full


def falsifying_assignment(s: Union[Sequent, Iterable[Formula]]) -> Optional[Dict[str, int]]:
    """Return an assignment making every occurrence false, or None if `s` is valid."""
    occurrences = tuple(s)
    names = variables(occurrences)
    tables, full = _tables(occurrences)
    union = 0
    for table in tables:
        union |= table
    if union == full:
        return None
    row = ((full & ~union) & -(full & ~union)).bit_length() - 1
    return {name: (row >> i) & 1 for i, name in enumerate(names)}


def is_minimal(s: Union[Sequent, Iterable[Formula]]) -> bool:
    """Return whether `s` is valid while no proper subsequent is.

    Validity is monotone under adding occurrences, so checking every single deletion
    is enough.
    """
    occurrences = tuple(s)
    if not occurrences:
        return False
    tables, full = _tables(occurrences)
    union = 0
    for table in tables:
        union |= table
    return union == full and _irredundant(tables, full)


def _irredundant(tables: List[int], full: int) -> bool:
    """Return whether no single table can be dropped from a covering union."""
    if len(tables) == 1:
        return True
    for i in range(len(tables)):
        rest = 0
        for j, table in enumerate(tables):
            if j != i:
                rest |= table
        if rest == full:
            return False
    return True


def minimal_indices(occurrences: Iterable[Formula]) -> Tuple[int, ...]:
    """Return the positions kept by greedy left-to-right minimization.

    Raises:
        NotValidError: Raised if the occurrences do not form a valid sequent.
    """
    occurrences = tuple(occurrences)
    if not occurrences:
        raise NotValidError("the empty context is not valid")
    tables, full = _tables(occurrences)
    kept = list(range(len(occurrences)))
    union = 0
    for table in tables:
        union |= table
    if union != full:
        raise NotValidError(f"sequent is not valid: {Sequent(occurrences)}")

    # A deletion that fails now fails later too, so one pass reaches the fixpoint.
    i = 0
    while i < len(kept):
        if len(kept) > 1:
            rest = 0
            for j in kept:
                if j != kept[i]:
                    rest |= tables[j]
            if rest == full:
                del kept[i]
                continue
        i += 1
    return tuple(kept)


def minimize(s: Sequent) -> Sequent:
    """Return the minimal subsequent found by deleting occurrences leftmost first.

    Raises:
        NotValidError: Raised if `s` is not valid.
    """
    kept = minimal_indices(s.occurrences)
    if len(kept) < len(s):
        _logger.debug("minimized %s to %d of %d occurrences", s, len(kept), len(s))
    return Sequent(tuple(s.occurrences[i] for i in kept))


def variable_names(count: int) -> Tuple[str, ...]:
    """Return the first `count` variable names of the enumeration alphabet."""
    names = VARIABLE_NAMES[:count]
    extra = tuple(f"X{i}" for i in range(count - len(names)))
    return names + extra


def _catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def count_formulas(var_count: int, max_connectives: int) -> int:
    """Return how many formulas `enumerate_formulas` yields without renaming filters."""
    return sum(
        _catalan(n) * 2**n * (2 * var_count) ** (n + 1) for n in range(max_connectives + 1)
    )


@dataclass(frozen=True)
class EnumerationBounds:
    """Bounds on enumerated formulas and sequents.

    Attributes:
        var_count: Number of variables literals are drawn from.
        max_connectives: Connective budget of a formula, or of a whole sequent.
        max_formulas_per_sequent: Widest sequent `enumerate_sequents` yields.
        canonical_only: Skip values whose variables do not first occur in alphabet
            order, keeping one representative per renaming class.
    """

    var_count: int
    max_connectives: int
    max_formulas_per_sequent: int = 1
    canonical_only: bool = False

    def __post_init__(self) -> None:
        if self.var_count < 1:
            raise ValueError(f"var_count must be positive, got {self.var_count}")
        if self.max_connectives < 0:
            raise ValueError(f"max_connectives must not be negative, got {self.max_connectives}")
        if self.max_formulas_per_sequent < 1:
            raise ValueError(
                f"max_formulas_per_sequent must be positive, got {self.max_formulas_per_sequent}"
            )
        if self.var_count > MAX_TRUTH_TABLE_VARIABLES:
            raise BoundTooLargeError(
                f"var_count {self.var_count} exceeds the limit of {MAX_TRUTH_TABLE_VARIABLES}"
            )
        if self.max_connectives > MAX_ENUMERATION_CONNECTIVES:
            raise BoundTooLargeError(
                f"max_connectives {self.max_connectives} exceeds the limit of "
                f"{MAX_ENUMERATION_CONNECTIVES}"
            )
        if self.max_formulas_per_sequent > MAX_ENUMERATION_FORMULAS:
            raise BoundTooLargeError(
                f"max_formulas_per_sequent {self.max_formulas_per_sequent} exceeds the limit "
                f"of {MAX_ENUMERATION_FORMULAS}"
            )
        total = count_formulas(self.var_count, self.max_connectives)
        if total > MAX_ENUMERATED_FORMULAS:
            raise BoundTooLargeError(
                f"bounds yield {total} formulas, more than the limit of {MAX_ENUMERATED_FORMULAS}"
            )


def _is_first_occurrence_ordered(occurrences: Iterable[Formula], names: Tuple[str, ...]) -> bool:
    seen: List[str] = []
    for f in occurrences:
        stack = [f]
        while stack:
            g = stack.pop()
            if isinstance(g, Literal):
                if g.var not in seen:
                    if g.var != names[len(seen)]:
                        return False
                    seen.append(g.var)
            else:
                assert isinstance(g, Node)
                stack.extend((g.right, g.left))
    return True


def _formulas_by_size(bounds: EnumerationBounds, largest: int) -> List[List[Formula]]:
    names = variable_names(bounds.var_count)
    by_size: List[List[Formula]] = [
        [Literal(name, positive) for name in names for positive in (True, False)]
    ]
    for n in range(1, largest + 1):
        level = []
        for k in range(n):
            for conn in (Connective.AND, Connective.OR):
                for left in by_size[k]:
                    for right in by_size[n - 1 - k]:
                        level.append(Node(conn, left, right))
        by_size.append(level)
    return by_size


def enumerate_formulas(b: EnumerationBounds) -> Iterator[Formula]:
    """Yield every formula within the bounds, without duplicates.

    Formulas come by connective count, then by the size of the left subtree, then
    `&` before `|`, then in the order of their left and right subformulas.
    """
    names = variable_names(b.var_count)
    by_size = _formulas_by_size(b, b.max_connectives)
    for level in by_size:
        for f in level:
            if b.canonical_only and not _is_first_occurrence_ordered((f,), names):
                continue
            yield f


def _multisets(
    sizes: List[int], offsets: List[int], start: int, width: int, budget: int
) -> Iterator[Tuple[int, ...]]:
    """Yield non-decreasing index tuples of `width` formulas using exactly `budget`."""
    if width == 1:
        if budget >= len(offsets) - 1:
            return
        for i in range(max(start, offsets[budget]), offsets[budget + 1]):
            yield (i,)
        return
    stop = offsets[min(budget, len(offsets) - 2) + 1]
    for i in range(start, stop):
        rest = budget - sizes[i]
        if rest < sizes[i] * (width - 1):
            break
        for tail in _multisets(sizes, offsets, i, width - 1, rest):
            yield (i,) + tail


def _catalogue(b: EnumerationBounds) -> Tuple[List[Formula], List[int], List[int]]:
    """Return the formulas within `b`, their sizes and the offset of each size."""
    by_size = _formulas_by_size(b, b.max_connectives)
    formulas = [f for level in by_size for f in level]
    offsets = [0]
    for level in by_size:
        offsets.append(offsets[-1] + len(level))
    return formulas, [f.connectives for f in formulas], offsets


def _sequent_indices(
    b: EnumerationBounds, sizes: List[int], offsets: List[int]
) -> Iterator[Tuple[int, ...]]:
    for total in range(b.max_connectives + 1):
        for width in range(1, b.max_formulas_per_sequent + 1):
            repeated = []
            for indices in _multisets(sizes, offsets, 0, width, total):
                if len(set(indices)) < width:
                    repeated.append(indices)
                    continue
                yield indices
            yield from repeated


def enumerate_sequents(b: EnumerationBounds) -> Iterator[Sequent]:
    """Yield every multiset of formulas within the bounds, one list per multiset.

    Sequents come by total connective count, then by width, then those with
    pairwise distinct formulas before those with repeats, then in the order of their
    members in `enumerate_formulas`.
    """
    names = variable_names(b.var_count)
    formulas, sizes, offsets = _catalogue(b)
    for indices in _sequent_indices(b, sizes, offsets):
        s = tuple(formulas[i] for i in indices)
        if b.canonical_only and not _is_first_occurrence_ordered(s, names):
            continue
        yield Sequent(s)


def enumerate_valid_sequents(b: EnumerationBounds) -> Iterator[Tuple[Sequent, bool]]:
    """Yield the valid sequents of `enumerate_sequents`, each with whether it is minimal.

    Every formula gets one truth table up front, so invalid multisets are discarded
    without building a sequent. The order is that of `enumerate_sequents`.
    """
    names = variable_names(b.var_count)
    formulas, sizes, offsets = _catalogue(b)
    columns, full = _columns(names)
    by_key: Dict[str, int] = {}
    for f in formulas:
        if isinstance(f, Literal):
            table = columns[f.var] if f.positive else full & ~columns[f.var]
        elif f.conn is Connective.AND:
            table = by_key[f.left.key] & by_key[f.right.key]
        else:
            table = by_key[f.left.key] | by_key[f.right.key]
        by_key[f.key] = table
    tables = [by_key[f.key] for f in formulas]
    _logger.debug("tabulated %d formulas over %s", len(tables), ", ".join(names))

    for indices in _sequent_indices(b, sizes, offsets):
        union = 0
        for i in indices:
            union |= tables[i]
        if union != full:
            continue
        s = tuple(formulas[i] for i in indices)
        if b.canonical_only and not _is_first_occurrence_ordered(s, names):
            continue
        yield Sequent(s), _irredundant([tables[i] for i in indices], full)
