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

"""Formulas, sequents, negation, parsing and printing.

Formulas are binary trees of `&` (and) and `|` (or) over literals. Negation is an
operation, not a connective: `negate` pushes it to the leaves by de Morgan duality,
and the parser applies it eagerly, so a stored formula never holds a negated
compound subformula.

Tree shape matters. `(P | Q) | R` and `P | Q | R` are different formulas and may differ
in derivability, so parenthesize to control the shape:

```python3
from minseq.core import parse_formula, parse_sequent, render

f = parse_formula("~(P & Q)")
assert render(f) == "~P | ~Q"
s = parse_sequent("P & Q, ~Q & P, ~P")
assert len(s) == 3
```
"""

__all__ = [
    "FORMULA_GRAMMAR",
    "Connective",
    "Context",
    "Formula",
    "FormulaTransformer",
    "Literal",
    "Measure",
    "Node",
    "Sequent",
    "canonical",
    "measure",
    "negate",
    "parse",
    "parse_formula",
    "parse_sequent",
    "render",
    "variables",
]

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Tuple, Union

from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput

from minseq.exceptions import EmptySequentError, ParseError

_logger = logging.getLogger(__name__)

FORMULA_GRAMMAR = r"""
    ?formula: term
            | term "|" formula      -> disj
    ?term: factor
         | factor "&" term          -> conj
    ?factor: ATOM                   -> atom
           | "~" factor             -> neg
           | "(" formula ")"
    sequent: formula ("," formula)*

    ATOM: /[A-Z][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""


class Connective(Enum):
    """Binary connectives of the formula language."""

    AND = "&"
    OR = "|"

    @property
    def dual(self) -> "Connective":
        """Return the de Morgan dual of this connective."""
        return Connective.OR if self is Connective.AND else Connective.AND


class Formula:
    """Base class of formula trees.

    Equality, hashing and ordering go through `key`, a fully parenthesized encoding
    computed once at construction.
    """

    __slots__ = ()

    key: str
    connectives: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Formula):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, eq=False)
class Literal(Formula):
    """A propositional variable or its complement."""

    var: str
    positive: bool = True
    key: str = field(init=False, repr=False)
    connectives: int = field(init=False, repr=False, default=0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "key", self.var if self.positive else f"~{self.var}")


@dataclass(frozen=True, eq=False)
class Node(Formula):
    """A conjunction or disjunction of two subformulas."""

    conn: Connective
    left: Formula
    right: Formula
    key: str = field(init=False, repr=False)
    connectives: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "key", f"({self.left.key}{self.conn.value}{self.right.key})")
        object.__setattr__(
            self, "connectives", 1 + self.left.connectives + self.right.connectives
        )


# A possibly-empty list of formula occurrences.
Context = Tuple[Formula, ...]


@dataclass(frozen=True)
class Sequent:
    """A non-empty list of formula occurrences, read disjunctively.

    Occurrences are identified by position: two structurally equal formulas at
    different positions are distinct occurrences. Equality is positional; use
    `canonical` to compare sequents as multisets.
    """

    occurrences: Context

    def __post_init__(self) -> None:
        object.__setattr__(self, "occurrences", tuple(self.occurrences))
        if not self.occurrences:
            raise EmptySequentError("a sequent needs at least one formula occurrence")

    @classmethod
    def of(cls, *formulas: Formula) -> "Sequent":
        """Build a sequent from formula arguments."""
        return cls(formulas)

    def __len__(self) -> int:
        return len(self.occurrences)

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.occurrences)

    def __getitem__(self, index: int) -> Formula:
        return self.occurrences[index]

    def __str__(self) -> str:
        return render(self)

    def without(self, index: int) -> Context:
        """Return the context left after deleting the occurrence at `index`."""
        return self.occurrences[:index] + self.occurrences[index + 1 :]

    def canonical(self) -> Context:
        """Return the occurrences sorted by the structural order."""
        return canonical(self.occurrences)


@dataclass(frozen=True)
class Measure:
    """Size of a sequent: connective nodes and formula occurrences."""

    connectives: int
    formulas: int


def canonical(occurrences: Iterable[Formula]) -> Context:
    """Sort occurrences by the total structural order.

    Two occurrence lists hold the same multiset of formulas iff their canonical
    forms are equal.
    """
    return tuple(sorted(occurrences, key=lambda f: f.key))


def negate(f: Formula) -> Formula:
    """Negate a formula, pushing the negation to the literals."""
    if isinstance(f, Literal):
        return Literal(f.var, not f.positive)
    assert isinstance(f, Node)
    return Node(f.conn.dual, negate(f.left), negate(f.right))


def measure(s: Union[Sequent, Iterable[Formula]]) -> Measure:
    """Count the connectives and occurrences of a sequent."""
    occurrences = tuple(s)
    return Measure(sum(f.connectives for f in occurrences), len(occurrences))


def variables(x: Union[Formula, Sequent, Iterable[Formula]]) -> Tuple[str, ...]:
    """Return the sorted names of the variables occurring in `x`."""
    names = set()
    stack = [x] if isinstance(x, Formula) else list(x)
    while stack:
        f = stack.pop()
        if isinstance(f, Literal):
            names.add(f.var)
        else:
            assert isinstance(f, Node)
            stack.extend((f.left, f.right))
    return tuple(sorted(names))


def render(x: Union[Formula, Sequent]) -> str:
    """Render a formula or sequent in the canonical text syntax.

    `&` binds tighter than `|` and both associate to the right; parentheses appear
    exactly where the tree departs from that default.
    """
    if isinstance(x, Sequent):
        return ", ".join(_render_formula(f) for f in x.occurrences)
    return _render_formula(x)


def _render_formula(f: Formula) -> str:
    if isinstance(f, Literal):
        return f.key
    assert isinstance(f, Node)
    left = _render_formula(f.left)
    right = _render_formula(f.right)
    if isinstance(f.left, Node) and (f.left.conn is f.conn or f.conn is Connective.AND):
        left = f"({left})"
    if (
        f.conn is Connective.AND
        and isinstance(f.right, Node)
        and f.right.conn is Connective.OR
    ):
        right = f"({right})"
    return f"{left} {f.conn.value} {right}"


class FormulaTransformer(Transformer):
    """Build formula values from a parse tree."""

    def atom(self, children) -> Formula:
        """Turn a variable token into a positive literal."""
        (token,) = children
        return Literal(str(token))

    def neg(self, children) -> Formula:
        """Push a negation into its operand."""
        return negate(children[0])

    def conj(self, children) -> Formula:
        """Build a conjunction."""
        return Node(Connective.AND, children[0], children[1])

    def disj(self, children) -> Formula:
        """Build a disjunction."""
        return Node(Connective.OR, children[0], children[1])

    def sequent(self, children) -> Sequent:
        """Build a sequent from its formulas."""
        return Sequent(tuple(children))


_PARSER = Lark(FORMULA_GRAMMAR, start=["formula", "sequent"], parser="lalr")


def _error_position(error: UnexpectedInput, text: str) -> int:
    position = getattr(error, "pos_in_stream", None)
    if position is None or position < 0:
        return len(text)
    return position


def _parse(text: str, start: str):
    try:
        tree = _PARSER.parse(text, start=start)
    except UnexpectedInput as e:
        position = _error_position(e, text)
        raise ParseError(f"malformed {start} at position {position}: {text!r}", position) from e
    return FormulaTransformer().transform(tree)


def parse_formula(text: str) -> Formula:
    """Parse a single formula.

    Raises:
        ParseError: Raised if `text` does not conform to the formula grammar.
    """
    return _parse(text, "formula")


def parse_sequent(text: str) -> Sequent:
    """Parse a comma-separated list of formulas.

    Raises:
        ParseError: Raised if `text` does not conform to the sequent grammar.
    """
    return _parse(text, "sequent")


def parse(text: str) -> Sequent:
    """Parse a sequent; a lone formula yields a singleton sequent."""
    return parse_sequent(text)
