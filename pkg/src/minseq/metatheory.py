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

"""Derived rules, containment between systems, elaboration, census and degrees.

A rule is derived in a system when the schema table can build it from the system's
rules. Every schema carries an expansion, so a derivation using derived rules can be
rewritten step by step into one that uses only the system's own rules:

```python3
from minseq.calculus import PP, check_derivation
from minseq.core import parse_formula
from minseq.metatheory import elaborate
from minseq.prover import prove_formula

d = elaborate(prove_formula(parse_formula("P | ~P & ~P")), PP)
assert check_derivation(PP, d).ok
```
"""

__all__ = [
    "SCHEMAS",
    "CensusReport",
    "Classification",
    "DegreeReport",
    "EquivalenceClass",
    "Evidence",
    "Schema",
    "census",
    "classify_system",
    "closure",
    "contains",
    "degree_report",
    "elaborate",
    "equivalent",
    "format_census",
    "format_degrees",
    "witness_for",
]

import csv
import io
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from minseq.calculus import (
    MP,
    Axiom,
    Derivation,
    RuleId,
    StepMatch,
    System,
    check_derivation,
    extended_systems,
    match_step,
    standard_systems,
)
from minseq.constants import (
    DEFAULT_CENSUS_SPOT_CHECKS,
    REPRESENTATIVE_PRESETS,
    WITNESS_MP_MINUS,
    WITNESS_NO_CONJUNCTION,
    WITNESS_NO_DISJUNCTION,
    WITNESS_NO_PAR_WITHOUT_C,
    WITNESS_NO_PLUS_WITHOUT_W,
    WITNESS_NO_TENSOR_WITHOUT_W,
    WITNESS_NO_WITH_WITHOUT_C,
)
from minseq.core import Literal, Sequent, measure, parse_sequent, render, variables
from minseq.exceptions import NotContainedError, RuleMismatchError
from minseq.prover import (
    Derivable,
    SearchBounds,
    SearchOutcome,
    prove_minimal,
    prove_sequent,
    search,
)
from minseq.semantics import (
    EnumerationBounds,
    enumerate_formulas,
    enumerate_valid_sequents,
    is_minimal,
    is_valid,
    variable_names,
)

_logger = logging.getLogger(__name__)

Step = Callable[..., Derivation]


def _node(
    rule: RuleId,
    conclusion: Sequent,
    premises: Tuple[Derivation, ...] = (),
    principal: Optional[int] = None,
) -> Derivation:
    return Derivation(rule, conclusion, tuple(premises), principal)


def _replace(conclusion: Sequent, i: int, by: Sequence) -> Sequent:
    occurrences = conclusion.occurrences
    return Sequent(occurrences[:i] + tuple(by) + occurrences[i + 1 :])


def _weaken_to(d: Derivation, target: Sequent, step: Step) -> Derivation:
    """Add the occurrences `target` has beyond `d`'s conclusion by weakening."""
    missing = list((Counter(target.occurrences) - Counter(d.conclusion.occurrences)).elements())
    current = d.conclusion.occurrences
    for n, f in enumerate(missing):
        current = current + (f,)
        conclusion = target if n == len(missing) - 1 else Sequent(current)
        d = step(RuleId.W, conclusion, (d,))
    return d


def _contract_to(d: Derivation, target: Sequent, step: Step) -> Derivation:
    """Remove the duplicates `d`'s conclusion has beyond `target` by contraction."""
    extra = list((Counter(d.conclusion.occurrences) - Counter(target.occurrences)).elements())
    current = list(d.conclusion.occurrences)
    for n, f in enumerate(extra):
        j = len(current) - 1 - current[::-1].index(f)
        del current[j]
        conclusion = target if n == len(extra) - 1 else Sequent(tuple(current))
        d = step(RuleId.C, conclusion, (d,))
    return d


def _via_with(conclusion, premises, match, step) -> Derivation:
    a = conclusion[match.principal]
    first = _replace(conclusion, match.principal, (a.left,))
    second = _replace(conclusion, match.principal, (a.right,))
    return step(
        RuleId.WITH,
        conclusion,
        (_weaken_to(premises[0], first, step), _weaken_to(premises[1], second, step)),
    )


def _via_tensor(conclusion, premises, match, step) -> Derivation:
    widened = Sequent(conclusion.occurrences + match.shared)
    return _contract_to(step(RuleId.TENSOR, widened, tuple(premises)), conclusion, step)


def _via_par(conclusion, premises, match, step) -> Derivation:
    a = conclusion[match.principal]
    both = _replace(conclusion, match.principal, (a.left, a.right))
    return step(RuleId.PAR, conclusion, (_weaken_to(premises[0], both, step),))


def _via_plus(conclusion, premises, match, step) -> Derivation:
    a = conclusion[match.principal]
    d = premises[0]
    current = list(d.conclusion.occurrences)
    current[current.index(a.right)] = a
    d = step(RuleId.PLUS2, Sequent(tuple(current)), (d,))
    current[current.index(a.left)] = a
    d = step(RuleId.PLUS1, Sequent(tuple(current)), (d,))
    return _contract_to(d, conclusion, step)


def _via_wedge(conclusion, premises, match, step) -> Derivation:
    return step(RuleId.WEDGE, conclusion, tuple(premises))


@dataclass(frozen=True)
class Schema:
    """A rule derivation: how to rebuild steps of `derived` from `requires`."""

    name: str
    derived: FrozenSet[RuleId]
    requires: FrozenSet[RuleId]
    expansion: Callable = field(compare=False, repr=False)

    def expand(
        self,
        conclusion: Sequent,
        premises: Sequence[Derivation],
        match: StepMatch,
        step: Step = _node,
    ) -> Derivation:
        """Rewrite one derived-rule step; `step` builds each new node."""
        return self.expansion(conclusion, tuple(premises), match, step)


def _schema(name: str, derived, requires, expansion: Callable) -> Schema:
    return Schema(name, frozenset(derived), frozenset(requires), expansion)


SCHEMAS = (
    _schema("tensor<-with,w", [RuleId.TENSOR], [RuleId.WITH, RuleId.W], _via_with),
    _schema("with<-tensor,c", [RuleId.WITH], [RuleId.TENSOR, RuleId.C], _via_tensor),
    _schema("plus<-par,w", [RuleId.PLUS1, RuleId.PLUS2], [RuleId.PAR, RuleId.W], _via_par),
    _schema("par<-plus,c", [RuleId.PAR], [RuleId.PLUS1, RuleId.PLUS2, RuleId.C], _via_plus),
    _schema("wedge<-tensor,c", [RuleId.WEDGE], [RuleId.TENSOR, RuleId.C], _via_tensor),
    _schema("wedge<-with,w", [RuleId.WEDGE], [RuleId.WITH, RuleId.W], _via_with),
    _schema("tensor<-wedge", [RuleId.TENSOR], [RuleId.WEDGE], _via_wedge),
    _schema("with<-wedge", [RuleId.WITH], [RuleId.WEDGE], _via_wedge),
)


def _ranks(rules: FrozenSet[RuleId]) -> Dict[RuleId, int]:
    """Map each rule of the closure to the round of the fixpoint that added it."""
    ranks = {rule: 0 for rule in rules}
    level = 0
    while True:
        level += 1
        added = {}
        for schema in SCHEMAS:
            if schema.requires <= set(ranks):
                for rule in schema.derived.difference(ranks):
                    added[rule] = level
        if not added:
            return ranks
        ranks.update(added)


def closure(sys: System) -> FrozenSet[RuleId]:
    """Return the rules derivable in `sys` through the schema table."""
    return frozenset(_ranks(sys.rules))


def contains(s: System, t: System) -> bool:
    """Return whether every rule and the axiom of `t` are derivable in `s`."""
    derived = closure(s)
    if not t.rules <= derived:
        return False
    return t.axiom is Axiom.PLAIN or s.axiom is Axiom.WITH_CONTEXT or RuleId.W in derived


def equivalent(s: System, t: System) -> bool:
    """Return whether `s` and `t` contain each other."""
    return contains(s, t) and contains(t, s)


def _schema_for(rule: RuleId, ranks: Dict[RuleId, int]) -> Schema:
    for schema in SCHEMAS:
        if rule in schema.derived and schema.requires <= set(ranks):
            if max(ranks[r] for r in schema.requires) < ranks[rule]:
                return schema
    raise NotContainedError(f"no schema derives {rule.value}")


def elaborate(d: Derivation, target: System) -> Derivation:
    """Rewrite a derivation so that it only uses the rules of `target`.

    The root conclusion is unchanged. Axioms with extra context become a plain axiom
    followed by weakenings when `target` only has the plain axiom.

    Raises:
        NotContainedError: Raised if a step uses a rule `target` cannot derive.
        RuleMismatchError: Raised if a step to be rewritten is not a rule instance.
    """
    ranks = _ranks(target.rules)

    def step(
        rule: RuleId,
        conclusion: Sequent,
        premises: Tuple[Derivation, ...] = (),
        principal: Optional[int] = None,
    ) -> Derivation:
        if rule is RuleId.AX:
            if match_step(rule, conclusion, (), axiom=target.axiom) is not None:
                return Derivation(rule, conclusion, (), principal)
            match = match_step(rule, conclusion, (), axiom=Axiom.WITH_CONTEXT)
            if match is None:
                raise RuleMismatchError(f"not an axiom: [{render(conclusion)}]")
            if RuleId.W not in target.rules:
                raise NotContainedError(f"{target} cannot weaken the axiom [{render(conclusion)}]")
            p = conclusion[match.principal]
            pair = Sequent((p, Literal(p.var, False)))
            return _weaken_to(Derivation(RuleId.AX, pair), conclusion, step)
        if rule in target.rules:
            return Derivation(rule, conclusion, premises, principal)
        if rule not in ranks:
            raise NotContainedError(f"{target} cannot derive rule {rule.value}")
        match = match_step(rule, conclusion, [p.conclusion for p in premises], principal)
        if match is None:
            raise RuleMismatchError(f"{rule.value} step does not match [{render(conclusion)}]")
        schema = _schema_for(rule, ranks)
        _logger.debug("expanding %s step with %s", rule.value, schema.name)
        return schema.expand(conclusion, premises, match, step)

    def rebuild(node: Derivation) -> Derivation:
        premises = tuple(rebuild(p) for p in node.premises)
        return step(node.rule, node.conclusion, premises, node.principal)

    return rebuild(d)


class Empirical(Enum):
    """Empirical verdict of a census row."""

    COMPLETE_AT_BOUND = "complete-at-bound"
    WITNESS_FOUND = "witness-found"


@dataclass(frozen=True)
class Classification:
    """Census row for one system."""

    system: System
    predicted_complete: bool
    complete_at_bound: bool
    witness: Optional[Sequent] = None
    outcome: Optional[SearchOutcome] = None
    checked: int = 0

    @property
    def empirical(self) -> Empirical:
        """Empirical verdict."""
        if self.complete_at_bound:
            return Empirical.COMPLETE_AT_BOUND
        return Empirical.WITNESS_FOUND

    @property
    def consistent(self) -> bool:
        """Prediction and experiment agree."""
        return self.predicted_complete == self.complete_at_bound


def _mp_plus_w() -> System:
    return System(Axiom.PLAIN, MP.rules | {RuleId.W})


@lru_cache(maxsize=1 << 17)
def _mp_proof(s: Sequent) -> Derivation:
    if is_minimal(s):
        return prove_minimal(s)
    return prove_sequent(s, weaken=True)


@lru_cache(maxsize=8)
def _valid_formulas(bounds: EnumerationBounds) -> Tuple[Sequent, ...]:
    return tuple(
        Sequent((f,)) for f in enumerate_formulas(bounds) if is_valid((f,))
    )


def _fits(s: Sequent, bounds: EnumerationBounds) -> bool:
    names = set(variable_names(bounds.var_count))
    return (
        set(variables(s)) <= names
        and measure(s).connectives <= bounds.max_connectives
        and len(s) <= bounds.max_formulas_per_sequent
    )


def witness_for(sys: System) -> str:
    """Return the table witness of incompleteness for a system lacking Mp's rules."""
    derived = closure(sys)
    structural = sys.rules & {RuleId.W, RuleId.C}
    if not derived & {RuleId.TENSOR, RuleId.WITH, RuleId.WEDGE}:
        return WITNESS_NO_CONJUNCTION
    if not derived & {RuleId.PLUS1, RuleId.PAR}:
        return WITNESS_NO_DISJUNCTION
    if RuleId.W not in structural and RuleId.PLUS1 not in derived:
        return WITNESS_NO_PLUS_WITHOUT_W
    if RuleId.W not in structural and RuleId.TENSOR not in derived:
        return WITNESS_NO_TENSOR_WITHOUT_W
    if RuleId.C not in structural and RuleId.PAR not in derived:
        return WITNESS_NO_PAR_WITHOUT_C
    if RuleId.C not in structural and RuleId.WITH not in derived:
        return WITNESS_NO_WITH_WITHOUT_C
    return WITNESS_MP_MINUS


def _sweep(
    sys: System, candidates: Sequence[Sequent], search_bounds: SearchBounds
) -> Tuple[int, Optional[Sequent], Optional[SearchOutcome]]:
    checked = 0
    for s in candidates:
        checked += 1
        outcome = search(sys, s, search_bounds)
        if not isinstance(outcome, Derivable):
            return checked, s, outcome
    return checked, None, None


def _spot_sample(candidates: Sequence[Sequent], count: int) -> List[Sequent]:
    if not candidates or count <= 0:
        return []
    count = min(count, len(candidates))
    return [candidates[j * len(candidates) // count] for j in range(count)]


def classify_system(
    sys: System,
    bounds: EnumerationBounds,
    search_bounds: Optional[SearchBounds] = None,
    spot_checks: int = DEFAULT_CENSUS_SPOT_CHECKS,
) -> Classification:
    """Predict completeness from the closure and test the prediction at bound.

    Systems predicted complete get an elaborated, re-checked derivation of every
    valid enumerated formula, plus a few direct searches. Other systems get the
    witness their missing rules call for, confirmed by search; when the witness does
    not fit the bounds or turns out derivable, the valid formulas are searched in
    order instead.
    """
    search_bounds = search_bounds or SearchBounds()
    predicted = contains(sys, MP)
    valid = _valid_formulas(
        EnumerationBounds(bounds.var_count, bounds.max_connectives, 1, bounds.canonical_only)
    )

    if predicted:
        for s in valid:
            d = elaborate(_mp_proof(s), sys)
            if not check_derivation(sys, d).ok:
                _logger.warning("elaborated derivation of %s fails in %s", s, sys)
                outcome = search(sys, s, search_bounds)
                if not isinstance(outcome, Derivable):
                    return Classification(sys, predicted, False, s, outcome, len(valid))
        for s in _spot_sample(valid, spot_checks):
            outcome = search(sys, s, search_bounds)
            if not isinstance(outcome, Derivable):
                _logger.warning("spot check of %s in %s: %s", s, sys, outcome.summary)
        _logger.info("%s: complete at bound over %d formulas", sys, len(valid))
        return Classification(sys, predicted, True, checked=len(valid))

    witness = parse_sequent(witness_for(sys))
    if _fits(witness, bounds):
        outcome = search(sys, witness, search_bounds)
        if not isinstance(outcome, Derivable):
            _logger.info("%s: witness %s, %s", sys, witness, outcome.summary)
            return Classification(sys, predicted, False, witness, outcome, 1)
        _logger.warning("table witness %s is derivable in %s; sweeping", witness, sys)

    checked, found, outcome = _sweep(sys, valid, search_bounds)
    if found is None:
        _logger.info("%s: no witness within bounds", sys)
        return Classification(sys, predicted, True, checked=checked)
    _logger.info("%s: witness %s, %s", sys, found, outcome.summary)
    return Classification(sys, predicted, False, found, outcome, checked)


@dataclass(frozen=True)
class EquivalenceClass:
    """Mutually containing complete systems and their representative."""

    representative: System
    members: Tuple[System, ...]


@dataclass(frozen=True)
class CensusReport:
    """Census over a family of systems."""

    family: str
    bounds: EnumerationBounds
    rows: Tuple[Classification, ...]
    classes: Tuple[EquivalenceClass, ...]
    diagram: Tuple[Tuple[System, System], ...]

    @property
    def consistent(self) -> bool:
        """Every row's prediction matched the experiment."""
        return all(row.consistent for row in self.rows)


def _representative(members: Sequence[System]) -> System:
    for name in REPRESENTATIVE_PRESETS:
        preset = System.preset(name)
        if preset in members:
            return preset
    return min(members, key=lambda s: (len(s.members), s.label))


def _classes(systems: Sequence[System]) -> Tuple[EquivalenceClass, ...]:
    groups: List[List[System]] = []
    for sys in systems:
        for group in groups:
            if equivalent(group[0], sys):
                group.append(sys)
                break
        else:
            groups.append([sys])
    return tuple(EquivalenceClass(_representative(g), tuple(g)) for g in groups)


def _hasse(classes: Sequence[EquivalenceClass]) -> Tuple[Tuple[System, System], ...]:
    reps = [c.representative for c in classes]
    above = {
        (s, t) for s in reps for t in reps if s != t and contains(s, t) and not contains(t, s)
    }
    edges = []
    for s, t in above:
        if not any((s, u) in above and (u, t) in above for u in reps):
            edges.append((s, t))
    return tuple(sorted(edges, key=lambda e: (e[0].label, e[1].label)))


def _classify_task(args) -> Classification:
    return classify_system(*args)


def census(
    family: str,
    bounds: EnumerationBounds,
    search_bounds: Optional[SearchBounds] = None,
    spot_checks: int = DEFAULT_CENSUS_SPOT_CHECKS,
    jobs: int = 1,
) -> CensusReport:
    """Classify every system of the standard (64) or extended (128) family.

    Raises:
        ValueError: Raised if `family` is neither `standard` nor `extended`.
    """
    if family == "standard":
        systems = list(standard_systems())
    elif family == "extended":
        systems = list(extended_systems())
    else:
        raise ValueError(f"unknown family {family!r}")
    _logger.info("census of %d %s systems at %s", len(systems), family, bounds)

    tasks = [(sys, bounds, search_bounds, spot_checks) for sys in systems]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = tuple(pool.map(_classify_task, tasks))
    else:
        rows = tuple(_classify_task(task) for task in tasks)

    complete = [row.system for row in rows if row.complete_at_bound]
    classes = _classes(complete)
    return CensusReport(family, bounds, rows, classes, _hasse(classes))


def _class_of(sys: System, classes: Sequence[EquivalenceClass]) -> Optional[System]:
    for c in classes:
        if sys in c.members:
            return c.representative
    return None


_CENSUS_COLUMNS = ("system", "predicted", "empirical", "class", "witness", "outcome")


def _census_rows(report: CensusReport) -> List[Tuple[str, ...]]:
    rows = []
    for row in report.rows:
        representative = _class_of(row.system, report.classes)
        rows.append(
            (
                row.system.name,
                "complete" if row.predicted_complete else "incomplete",
                row.empirical.value,
                representative.name if representative else "-",
                render(row.witness) if row.witness else "-",
                row.outcome.summary if row.outcome else "-",
            )
        )
    return rows


def format_census(report: CensusReport, fmt: str = "text") -> str:
    """Render a census as an aligned text table with summary, or as CSV."""
    rows = _census_rows(report)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(_CENSUS_COLUMNS)
        writer.writerows(rows)
        return buffer.getvalue()

    table = rows + [_CENSUS_COLUMNS]
    widths = [max(len(r[k]) for r in table) for k in range(len(_CENSUS_COLUMNS))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(_CENSUS_COLUMNS, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    complete = sum(1 for row in report.rows if row.complete_at_bound)
    lines.append("")
    lines.append(
        f"{report.family}: {complete} of {len(report.rows)} systems complete at bound, "
        f"{len(report.classes)} classes"
    )
    for c in report.classes:
        lines.append(f"  {c.representative.name}: {', '.join(m.name for m in c.members)}")
    if report.diagram:
        lines.append("containment:")
        for upper, lower in report.diagram:
            lines.append(f"  {upper.name} >= {lower.name}")
    mismatches = [row.system.name for row in report.rows if not row.consistent]
    if mismatches:
        lines.append(f"prediction mismatches: {', '.join(mismatches)}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Evidence:
    """Result of one completeness sweep."""

    passed: bool
    checked: int
    witness: Optional[Sequent] = None
    outcome: Optional[SearchOutcome] = None

    @property
    def summary(self) -> str:
        """Human readable result."""
        if self.passed:
            return f"pass ({self.checked} checked)"
        return f"fail: {render(self.witness)} ({self.outcome.summary})"


@dataclass(frozen=True)
class DegreeReport:
    """Formula, minimal and sequent completeness of a system at bound."""

    system: System
    formula_complete: Evidence
    minimal_complete: Evidence
    sequent_complete: Evidence

    @property
    def implications_hold(self) -> bool:
        """Sequent completeness implies minimal completeness implies formula completeness."""
        if self.sequent_complete.passed and not self.minimal_complete.passed:
            return False
        return not (self.minimal_complete.passed and not self.formula_complete.passed)


def _derive(sys: System, s: Sequent, search_bounds: SearchBounds) -> SearchOutcome:
    """Obtain a checked derivation of a valid sequent, by elaboration when possible."""
    via = MP if is_minimal(s) else _mp_plus_w()
    if contains(sys, via):
        d = elaborate(_mp_proof(s), sys)
        if check_derivation(sys, d).ok:
            return Derivable(d)
        _logger.warning("elaborated derivation of %s fails in %s", s, sys)
    return search(sys, s, search_bounds)


def _degree(
    sys: System, candidates, search_bounds: SearchBounds
) -> Evidence:
    checked = 0
    for s in candidates:
        checked += 1
        outcome = _derive(sys, s, search_bounds)
        if not isinstance(outcome, Derivable):
            return Evidence(False, checked, s, outcome)
    return Evidence(True, checked)


@dataclass
class _Sweep:
    """Running tally of a sweep that stops at its first failure."""

    checked: int = 0
    witness: Optional[Sequent] = None
    outcome: Optional[SearchOutcome] = None

    @property
    def open(self) -> bool:
        return self.witness is None

    def record(self, s: Sequent, outcome: Optional[SearchOutcome] = None) -> None:
        """Count `s`; an outcome other than `Derivable` closes the sweep."""
        self.checked += 1
        if outcome is not None and not isinstance(outcome, Derivable):
            self.witness, self.outcome = s, outcome

    @property
    def evidence(self) -> Evidence:
        return Evidence(self.open, self.checked, self.witness, self.outcome)


def degree_report(
    sys: System, bounds: EnumerationBounds, search_bounds: Optional[SearchBounds] = None
) -> DegreeReport:
    """Sweep valid formulas, minimal sequents and valid sequents at bound.

    Each sweep stops at its first failure, which becomes the witness. Sequents are
    swept one per renaming class. When the system contains the minimal calculus with
    weakening, a non-minimal sequent counts as derived once the minimal sweep has
    derived everything before it, its minimal cores included.
    """
    search_bounds = search_bounds or SearchBounds()
    formula_bounds = EnumerationBounds(
        bounds.var_count, bounds.max_connectives, 1, bounds.canonical_only
    )
    _logger.info("degree sweeps of %s at %s", sys, bounds)
    formula = _degree(sys, _valid_formulas(formula_bounds), search_bounds)

    weakens = contains(sys, _mp_plus_w())
    minimal, sequent = _Sweep(), _Sweep()
    for s, is_min in enumerate_valid_sequents(replace(bounds, canonical_only=True)):
        if not (minimal.open or sequent.open):
            break
        if is_min:
            outcome = _derive(sys, s, search_bounds)
            if minimal.open:
                minimal.record(s, outcome)
            if sequent.open:
                sequent.record(s, outcome)
        elif sequent.open:
            if weakens and minimal.open:
                sequent.record(s)
            else:
                sequent.record(s, _derive(sys, s, search_bounds))
    _logger.info(
        "swept %d minimal and %d valid sequents of %s", minimal.checked, sequent.checked, sys
    )

    report = DegreeReport(sys, formula, minimal.evidence, sequent.evidence)
    if not report.implications_hold:
        _logger.warning("degree implications fail for %s", sys)
    return report


def format_degrees(report: DegreeReport) -> str:
    """Render a degree report, one line per degree."""
    return (
        f"system: {report.system.name}\n"
        f"formula-complete: {report.formula_complete.summary}\n"
        f"minimal-complete: {report.minimal_complete.summary}\n"
        f"sequent-complete: {report.sequent_complete.summary}\n"
    )

