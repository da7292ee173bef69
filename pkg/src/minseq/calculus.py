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

"""Rules, systems, derivations and the derivation checker.

A system is an axiom variant plus a set of rules. Rule steps are matched against
their schema by multiset arithmetic on occurrences, so the checker never needs to be
told how a conclusion's context splits between premises:

```python3
from minseq.calculus import MP, check_derivation, parse_derivation

d = parse_derivation("(par [P | ~P] (ax [P, ~P]))")
assert check_derivation(MP, d).ok
```

Derivations are written one node per parenthesized group: the rule name, an optional
`@k` pinning the principal occurrence, the conclusion in brackets, then the premises.
"""

__all__ = [
    "DERIVATION_GRAMMAR",
    "GS1P",
    "GS3P",
    "MP",
    "MP_MINUS",
    "NP",
    "PP",
    "Axiom",
    "CheckReport",
    "Derivation",
    "RuleId",
    "StepMatch",
    "System",
    "Violation",
    "check_derivation",
    "check_step",
    "extended_systems",
    "match_step",
    "parse_derivation",
    "render_derivation",
    "standard_systems",
]

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from lark import Lark, Token
from lark.exceptions import UnexpectedInput, VisitError

from minseq.constants import MEMBER_ORDER, PRESETS, STANDARD_MEMBERS
from minseq.core import (
    FORMULA_GRAMMAR,
    Connective,
    Context,
    Formula,
    FormulaTransformer,
    Literal,
    Node,
    Sequent,
    render,
)
from minseq.exceptions import (
    ArityMismatchError,
    CheckError,
    MinseqError,
    ParseError,
    RuleMismatchError,
    RuleNotInSystemError,
    UnknownRuleError,
    UnknownSystemError,
)

_logger = logging.getLogger(__name__)


class RuleId(Enum):
    """Inference rules, named as in the derivation format."""

    AX = "ax"
    TENSOR = "tensor"
    WITH = "with"
    WEDGE = "wedge"
    PLUS1 = "plus1"
    PLUS2 = "plus2"
    PAR = "par"
    W = "w"
    C = "c"

    @property
    def arity(self) -> int:
        """Number of premises of the rule."""
        if self is RuleId.AX:
            return 0
        if self in (RuleId.TENSOR, RuleId.WITH, RuleId.WEDGE):
            return 2
        return 1

    @property
    def member(self) -> str:
        """System member the rule belongs to; both plus rules share one."""
        if self in (RuleId.PLUS1, RuleId.PLUS2):
            return "plus"
        return self.value


_MEMBER_RULES = {
    "tensor": (RuleId.TENSOR,),
    "with": (RuleId.WITH,),
    "wedge": (RuleId.WEDGE,),
    "plus": (RuleId.PLUS1, RuleId.PLUS2),
    "par": (RuleId.PAR,),
    "w": (RuleId.W,),
    "c": (RuleId.C,),
}


# Marks a non-preset system that uses the context axiom.
_CONTEXT_SUFFIX = "+context-axiom"


class Axiom(Enum):
    """Axiom variants: `P, ~P` exactly, or any sequent holding such a pair."""

    PLAIN = "plain"
    WITH_CONTEXT = "context"


@dataclass(frozen=True)
class System:
    """An axiom variant together with a set of rules."""

    axiom: Axiom
    rules: FrozenSet[RuleId]

    @classmethod
    def of(cls, *members: str, axiom: Axiom = Axiom.PLAIN) -> "System":
        """Build a system from member names such as `"plus"` or `"w"`.

        Raises:
            UnknownSystemError: Raised if a member name is not known.
        """
        rules = set()
        for member in members:
            if member not in _MEMBER_RULES:
                raise UnknownSystemError(f"unknown system member {member!r}")
            rules.update(_MEMBER_RULES[member])
        return cls(axiom, frozenset(rules))

    @classmethod
    def preset(cls, name: str) -> "System":
        """Return a named preset system.

        Raises:
            UnknownSystemError: Raised if `name` is not a preset.
        """
        try:
            axiom, members = PRESETS[name.lower()]
        except KeyError:
            raise UnknownSystemError(f"unknown preset system {name!r}")
        return cls.of(*members, axiom=Axiom(axiom))

    @classmethod
    def parse(cls, text: str) -> "System":
        """Parse a preset name or a comma-separated list of members.

        The empty list `""` (or `"()"`) names the system with no rules but the axiom.
        A trailing `+context-axiom`, as `label` writes it, selects the context axiom.

        Raises:
            UnknownSystemError: Raised if a name in `text` is not known.
        """
        stripped = text.strip()
        context = stripped.lower().endswith(_CONTEXT_SUFFIX)
        if context:
            stripped = stripped[: -len(_CONTEXT_SUFFIX)]
        stripped = stripped.strip().strip("()").strip()
        if stripped.lower() in PRESETS:
            system = cls.preset(stripped)
        else:
            members = [m.strip().lower() for m in stripped.split(",") if m.strip()]
            system = cls.of(*members)
        return cls(Axiom.WITH_CONTEXT, system.rules) if context else system

    @property
    def members(self) -> Tuple[str, ...]:
        """Member names in family bit order."""
        present = {rule.member for rule in self.rules}
        return tuple(m for m in MEMBER_ORDER if m in present)

    @property
    def label(self) -> str:
        """Render the system as its member list."""
        text = f"({','.join(self.members)})"
        if self.axiom is Axiom.WITH_CONTEXT:
            text += _CONTEXT_SUFFIX
        return text

    @property
    def preset_name(self) -> Optional[str]:
        """Return the preset this system equals, if any."""
        for name in PRESETS:
            if System.preset(name) == self:
                return name
        return None

    @property
    def name(self) -> str:
        """Preset name when there is one, otherwise the label."""
        return self.preset_name or self.label

    @property
    def is_standard(self) -> bool:
        """Plain axiom and no blended conjunction."""
        return self.axiom is Axiom.PLAIN and RuleId.WEDGE not in self.rules

    @property
    def is_extended(self) -> bool:
        """Plain axiom and any rule set."""
        return self.axiom is Axiom.PLAIN

    def has(self, rule: RuleId) -> bool:
        """Return whether steps of `rule` are allowed in this system."""
        return rule is RuleId.AX or rule in self.rules

    def __str__(self) -> str:
        return self.name


GS1P = System.preset("gs1p")
GS3P = System.preset("gs3p")
MP = System.preset("mp")
MP_MINUS = System.preset("mp-")
PP = System.preset("pp")
NP = System.preset("np")


def _family(order: Sequence[str]) -> Iterator[System]:
    for mask in range(1 << len(order)):
        yield System.of(*(m for i, m in enumerate(order) if mask >> i & 1))


def standard_systems() -> Iterator[System]:
    """Yield the 64 standard systems in bit order."""
    return _family(STANDARD_MEMBERS)


def extended_systems() -> Iterator[System]:
    """Yield the 128 extended systems in bit order."""
    return _family(MEMBER_ORDER)


@dataclass(frozen=True)
class Derivation:
    """A derivation tree node: a rule, its conclusion and its premise subtrees.

    `principal` optionally pins the position of the principal occurrence in the
    conclusion. Arity is not enforced here; the checker reports mismatches.
    """

    rule: RuleId
    conclusion: Sequent
    premises: Tuple["Derivation", ...] = ()
    principal: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "premises", tuple(self.premises))

    def nodes(self) -> Iterator[Tuple[Tuple[int, ...], "Derivation"]]:
        """Yield `(path, node)` pairs in pre-order; a path lists premise indices."""
        stack: List[Tuple[Tuple[int, ...], Derivation]] = [((), self)]
        while stack:
            path, node = stack.pop()
            yield path, node
            for i in reversed(range(len(node.premises))):
                stack.append((path + (i,), node.premises[i]))

    @property
    def size(self) -> int:
        """Number of nodes."""
        return sum(1 for _ in self.nodes())

    @property
    def height(self) -> int:
        """Length of the longest branch, counting nodes."""
        return 1 + max((p.height for p in self.premises), default=0)

    def rules_used(self) -> FrozenSet[RuleId]:
        """Return the set of rules appearing anywhere in the tree."""
        return frozenset(node.rule for _, node in self.nodes())

    def __str__(self) -> str:
        return render_derivation(self)


@dataclass(frozen=True)
class StepMatch:
    """How a rule step instantiates its schema.

    Attributes:
        principal: Position of the principal occurrence in the conclusion. For W it
            is the weakened occurrence, for C the contracted one and for the axiom
            the positive literal of the complementary pair.
        shared: Context occurrences carried by every premise.
        left: Context occurrences carried only by the first premise.
        right: Context occurrences carried only by the second premise.
    """

    principal: int
    shared: Context = ()
    left: Context = ()
    right: Context = ()


@dataclass(frozen=True)
class Violation:
    """A failing derivation node."""

    path: Tuple[int, ...]
    kind: str
    message: str


@dataclass(frozen=True)
class CheckReport:
    """Outcome of checking a whole derivation."""

    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        """True iff no node failed."""
        return not self.violations


def _allocate(rest: Context, *parts: Counter) -> Tuple[Context, ...]:
    """Split `rest` into ordered subsequences with the given multiplicities."""
    remaining = [Counter(part) for part in parts]
    buckets: List[List[Formula]] = [[] for _ in parts]
    for f in rest:
        for counter, bucket in zip(remaining, buckets):
            if counter[f] > 0:
                counter[f] -= 1
                bucket.append(f)
                break
    return tuple(tuple(bucket) for bucket in buckets)


def _included(small: Counter, large: Counter) -> bool:
    return all(large[f] >= n for f, n in small.items())


def _match_axiom(occurrences: Context, axiom: Axiom) -> Optional[StepMatch]:
    if axiom is Axiom.PLAIN and len(occurrences) != 2:
        return None
    negatives = {f.var for f in occurrences if isinstance(f, Literal) and not f.positive}
    for i, f in enumerate(occurrences):
        if isinstance(f, Literal) and f.positive and f.var in negatives:
            j = next(
                k
                for k, g in enumerate(occurrences)
                if isinstance(g, Literal) and not g.positive and g.var == f.var
            )
            rest = tuple(g for k, g in enumerate(occurrences) if k not in (i, j))
            return StepMatch(i, shared=rest)
    return None


def _match_at(
    rule: RuleId, occurrences: Context, i: int, premises: Sequence[Counter]
) -> Optional[StepMatch]:
    a = occurrences[i]
    rest = occurrences[:i] + occurrences[i + 1 :]
    context = Counter(rest)

    if rule is RuleId.W:
        return StepMatch(i, shared=rest) if premises[0] == context else None
    if rule is RuleId.C:
        return StepMatch(i, shared=rest) if premises[0] == context + Counter([a, a]) else None
    if not isinstance(a, Node):
        return None

    if a.conn is Connective.OR:
        if rule is RuleId.PLUS1:
            expected = context + Counter([a.left])
        elif rule is RuleId.PLUS2:
            expected = context + Counter([a.right])
        elif rule is RuleId.PAR:
            expected = context + Counter([a.left, a.right])
        else:
            return None
        return StepMatch(i, shared=rest) if premises[0] == expected else None

    if rule.arity != 2:
        return None
    first, second = premises
    if first[a.left] < 1 or second[a.right] < 1:
        return None
    first_context = first - Counter([a.left])
    second_context = second - Counter([a.right])

    if rule is RuleId.WITH:
        if first_context == context and second_context == context:
            return StepMatch(i, shared=rest)
        return None
    if rule is RuleId.TENSOR:
        if not _included(first_context, context):
            return None
        right = context - first_context
        if second_context != right:
            return None
        left, right_part = _allocate(rest, first_context, right)
        return StepMatch(i, left=left, right=right_part)
    if rule is RuleId.WEDGE:
        shared = Counter()
        for f in set(first_context) | set(second_context) | set(context):
            n = first_context[f] + second_context[f] - context[f]
            if n < 0 or n > min(first_context[f], second_context[f]):
                return None
            if n:
                shared[f] = n
        shared_part, left, right = _allocate(
            rest, shared, first_context - shared, second_context - shared
        )
        return StepMatch(i, shared=shared_part, left=left, right=right)
    return None


def match_step(
    rule: RuleId,
    conclusion: Sequent,
    premises: Sequence[Sequent],
    principal: Optional[int] = None,
    axiom: Axiom = Axiom.PLAIN,
) -> Optional[StepMatch]:
    """Find an instance of the rule schema relating `premises` to `conclusion`.

    Every principal occurrence is tried unless `principal` pins one. Contexts are
    inferred from occurrence multiplicities, so every split of the conclusion's
    context between the premises is covered.

    Returns:
        The first matching instance, or None if there is none.

    Raises:
        ArityMismatchError: Raised if the number of premises is wrong for `rule`.
    """
    if len(premises) != rule.arity:
        raise ArityMismatchError(
            f"rule {rule.value} takes {rule.arity} premises, got {len(premises)}"
        )
    occurrences = conclusion.occurrences
    if rule is RuleId.AX:
        match = _match_axiom(occurrences, axiom)
        if match is None or principal is None or principal == match.principal:
            return match
        return None

    counters = [Counter(p.occurrences) for p in premises]
    candidates = range(len(occurrences)) if principal is None else [principal]
    for i in candidates:
        if not 0 <= i < len(occurrences):
            continue
        match = _match_at(rule, occurrences, i, counters)
        if match is not None:
            return match
    return None


def check_step(
    sys: System,
    rule: RuleId,
    conclusion: Sequent,
    premises: Sequence[Sequent],
    principal: Optional[int] = None,
) -> StepMatch:
    """Check one rule step in a system.

    Raises:
        RuleNotInSystemError: Raised if `sys` lacks `rule`.
        ArityMismatchError: Raised if the number of premises is wrong for `rule`.
        RuleMismatchError: Raised if no instance of the schema matches the step.
    """
    if not sys.has(rule):
        raise RuleNotInSystemError(f"rule {rule.value} is not in system {sys}")
    match = match_step(rule, conclusion, premises, principal, sys.axiom)
    if match is None:
        premise_text = "; ".join(render(p) for p in premises) or "no premises"
        raise RuleMismatchError(
            f"{rule.value} does not derive [{render(conclusion)}] from [{premise_text}]"
        )
    return match


def check_derivation(sys: System, d: Derivation) -> CheckReport:
    """Check every node of a derivation, collecting all violations."""
    violations = []
    for path, node in d.nodes():
        try:
            check_step(
                sys,
                node.rule,
                node.conclusion,
                [p.conclusion for p in node.premises],
                node.principal,
            )
        except CheckError as e:
            kind = type(e).__name__
            if kind.endswith("Error"):
                kind = kind[: -len("Error")]
            violations.append(Violation(path, kind, e.message))
    if violations:
        _logger.debug("derivation fails in %s at %d nodes", sys, len(violations))
    return CheckReport(tuple(violations))


DERIVATION_GRAMMAR = (
    FORMULA_GRAMMAR
    + r"""
    node: "(" RULE ("@" INDEX)? "[" sequent "]" node* ")"

    RULE: /[a-z][a-z0-9_]*/
    INDEX: /[0-9]+/
"""
)


class _DerivationTransformer(FormulaTransformer):
    def node(self, children) -> Derivation:
        name = children[0]
        try:
            rule = RuleId(str(name))
        except ValueError:
            raise UnknownRuleError(f"unknown rule {str(name)!r}", name.start_pos)
        principal = None
        rest = children[1:]
        if isinstance(rest[0], Token):
            principal = int(rest[0])
            rest = rest[1:]
        return Derivation(rule, rest[0], tuple(rest[1:]), principal)


_PARSER = Lark(DERIVATION_GRAMMAR, start="node", parser="lalr")


def parse_derivation(text: str) -> Derivation:
    """Parse a derivation without checking its rules.

    Raises:
        ParseError: Raised if `text` does not conform to the derivation grammar.
        UnknownRuleError: Raised if a node names a rule that does not exist.
    """
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as e:
        position = getattr(e, "pos_in_stream", None)
        if position is None or position < 0:
            position = len(text)
        raise ParseError(f"malformed derivation at position {position}", position) from e
    try:
        return _DerivationTransformer().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, MinseqError):
            raise e.orig_exc from None
        raise


def render_derivation(d: Derivation, indent: Optional[int] = None) -> str:
    """Render a derivation in the canonical text format.

    With `indent`, each premise starts on its own line, indented by `indent` spaces
    per level; otherwise the whole tree is one line.
    """
    return "".join(_render_node(d, indent, 0))


def _render_node(d: Derivation, indent: Optional[int], depth: int) -> Iterable[str]:
    pin = "" if d.principal is None else f"@{d.principal}"
    yield f"({d.rule.value}{pin} [{render(d.conclusion)}]"
    for premise in d.premises:
        if indent is None:
            yield " "
        else:
            yield "\n" + " " * (indent * (depth + 1))
        yield from _render_node(premise, indent, depth + 1)
    yield ")"
