#!/usr/bin/env python3
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

"""Unit tests for validity, minimality and enumeration."""

import itertools
from unittest import TestCase

from hypothesis import given
from strategies import sequents, valid_sequents

from minseq.core import Literal, Sequent, parse_formula, parse_sequent, render
from minseq.exceptions import (
    BoundTooLargeError,
    MissingVariableError,
    NotValidError,
    VariableLimitExceededError,
)
from minseq.semantics import (
    EnumerationBounds,
    count_formulas,
    enumerate_formulas,
    enumerate_sequents,
    enumerate_valid_sequents,
    evaluate,
    falsifying_assignment,
    is_minimal,
    is_valid,
    minimize,
    variable_names,
)

WITNESS = "((P&Q)|(~Q&P))|~P"


class TestValidity(TestCase):
    """Unit test evaluation and validity."""

    def test_evaluate(self) -> None:
        """Test evaluation under an assignment."""
        self.assertEqual(evaluate(parse_formula("P"), {"P": 1}), 1)
        self.assertEqual(evaluate(parse_formula("P & Q"), {"P": 1, "Q": 0}), 0)
        self.assertEqual(evaluate(parse_formula("~P | Q"), {"P": True, "Q": False}), 0)

    def test_witness_is_a_tautology(self) -> None:
        """Test the witness formula under all four assignments."""
        f = parse_formula(WITNESS)
        for p, q in itertools.product((0, 1), repeat=2):
            self.assertEqual(evaluate(f, {"P": p, "Q": q}), 1)
        self.assertTrue(is_valid((f,)))

    def test_missing_variable(self) -> None:
        """Test evaluation failure behavior."""
        with self.assertRaises(MissingVariableError):
            evaluate(parse_formula("P & Q"), {"P": 1})

    def test_is_valid(self) -> None:
        """Test validity of sample sequents."""
        self.assertTrue(is_valid(parse_sequent("P, ~P")))
        self.assertFalse(is_valid(parse_sequent("P, Q")))
        self.assertTrue(is_valid(parse_sequent("P&Q, ~Q&P, ~P")))
        self.assertFalse(is_valid(()))

    def test_falsifying_assignment(self) -> None:
        """Test that counterexamples falsify every occurrence."""
        self.assertEqual(falsifying_assignment(parse_sequent("P, Q")), {"P": 0, "Q": 0})
        self.assertEqual(falsifying_assignment(parse_sequent("~P, Q")), {"P": 1, "Q": 0})
        self.assertIsNone(falsifying_assignment(parse_sequent("P | ~P")))

    def test_variable_limit(self) -> None:
        """Test that truth tables refuse too many variables."""
        s = Sequent(tuple(Literal(f"X{i}") for i in range(25)))
        with self.assertRaises(VariableLimitExceededError):
            is_valid(s)

    @given(sequents())
    def test_agrees_with_brute_force(self, s) -> None:
        """Test truth tables against direct evaluation."""
        names = sorted({lit for f in s for lit in _names(f)})
        expected = all(
            any(evaluate(f, dict(zip(names, values))) for f in s)
            for values in itertools.product((0, 1), repeat=len(names))
        )
        self.assertEqual(is_valid(s), expected)
        counterexample = falsifying_assignment(s)
        self.assertEqual(counterexample is None, expected)
        if counterexample is not None:
            self.assertFalse(any(evaluate(f, counterexample) for f in s))


def _names(f):
    return {f.var} if isinstance(f, Literal) else _names(f.left) | _names(f.right)


class TestMinimality(TestCase):
    """Unit test minimal sequents and minimization."""

    def test_is_minimal(self) -> None:
        """Test minimality of sample sequents."""
        self.assertTrue(is_minimal(parse_sequent("P, ~P")))
        self.assertFalse(is_minimal(parse_sequent("P, ~P, Q")))
        self.assertTrue(is_minimal(parse_sequent("P&Q, ~Q&P, ~P")))
        self.assertFalse(is_minimal(parse_sequent("P, Q")))

    def test_minimize(self) -> None:
        """Test greedy minimization."""
        self.assertEqual(render(minimize(parse_sequent("P, ~P, Q"))), "P, ~P")
        self.assertEqual(render(minimize(parse_sequent("P, P|~P, ~P"))), "P | ~P")
        s = parse_sequent("P&Q, ~Q&P, ~P")
        self.assertEqual(minimize(s), s)

    def test_minimize_invalid(self) -> None:
        """Test minimization failure behavior."""
        with self.assertRaises(NotValidError):
            minimize(parse_sequent("P, Q"))

    @given(valid_sequents())
    def test_minimize_yields_minimal_subsequent(self, s) -> None:
        """Test that minimization of a valid sequent gives a minimal subsequent."""
        m = minimize(s)
        self.assertTrue(is_minimal(m))
        remaining = list(s.occurrences)
        for f in m:
            remaining.remove(f)

    @given(sequents())
    def test_minimal_is_valid(self, s) -> None:
        """Test that minimal sequents are valid."""
        if is_minimal(s):
            self.assertTrue(is_valid(s))


class TestEnumeration(TestCase):
    """Unit test bounded enumeration of formulas and sequents."""

    def test_literals(self) -> None:
        """Test the connective-free level."""
        formulas = [render(f) for f in enumerate_formulas(EnumerationBounds(1, 0))]
        self.assertEqual(formulas, ["P", "~P"])

    def test_one_connective(self) -> None:
        """Test the one-connective level over one variable."""
        formulas = list(enumerate_formulas(EnumerationBounds(1, 1)))
        self.assertEqual(len([f for f in formulas if f.connectives == 1]), 8)
        self.assertEqual(len(set(formulas)), len(formulas))

    def test_count_matches_closed_form(self) -> None:
        """Test enumeration size against the Catalan count."""
        self.assertEqual(count_formulas(2, 0), 4)
        self.assertEqual(count_formulas(2, 1), 36)
        self.assertEqual(count_formulas(2, 3), 4 + 32 + 512 + 10240)
        formulas = list(enumerate_formulas(EnumerationBounds(2, 3)))
        self.assertEqual(len(formulas), count_formulas(2, 3))
        self.assertEqual(len(set(formulas)), len(formulas))

    def test_order(self) -> None:
        """Test that formulas come smallest first with & before |."""
        formulas = [render(f) for f in enumerate_formulas(EnumerationBounds(2, 1))]
        self.assertEqual(formulas[:5], ["P", "~P", "Q", "~Q", "P & P"])
        self.assertEqual(formulas[4 + 16], "P | P")

    def test_canonical_only(self) -> None:
        """Test that renaming classes keep their first representative."""
        formulas = [render(f) for f in enumerate_formulas(EnumerationBounds(2, 0, 1, True))]
        self.assertEqual(formulas, ["P", "~P"])
        formulas = list(enumerate_formulas(EnumerationBounds(2, 1, 1, True)))
        self.assertNotIn(parse_formula("Q & P"), formulas)
        self.assertIn(parse_formula("P & Q"), formulas)

    def test_sequents(self) -> None:
        """Test sequent order: width, then distinct before repeated."""
        sequents = [render(s) for s in enumerate_sequents(EnumerationBounds(1, 0, 2))]
        self.assertEqual(sequents, ["P", "~P", "P, ~P", "P, P", "~P, ~P"])

    def test_sequents_are_multisets(self) -> None:
        """Test that no multiset is listed twice and budgets hold."""
        bounds = EnumerationBounds(2, 2, 3)
        sequents = list(enumerate_sequents(bounds))
        self.assertEqual(len({s.canonical() for s in sequents}), len(sequents))
        for s in sequents:
            self.assertLessEqual(sum(f.connectives for f in s), 2)
            self.assertLessEqual(len(s), 3)

    def test_first_valid_triple(self) -> None:
        """Test that the first valid non-minimal sequent is P, ~P, Q."""
        bounds = EnumerationBounds(2, 4, 3)
        first = next(s for s in enumerate_sequents(bounds) if is_valid(s) and not is_minimal(s))
        self.assertEqual(render(first), "P, ~P, Q")

    def test_valid_sequents(self) -> None:
        """Test that the valid sweep matches filtering every sequent, in order."""
        for canonical_only in (False, True):
            bounds = EnumerationBounds(2, 2, 3, canonical_only)
            expected = [(s, is_minimal(s)) for s in enumerate_sequents(bounds) if is_valid(s)]
            self.assertEqual(list(enumerate_valid_sequents(bounds)), expected)
        first = next(s for s, minimal in enumerate_valid_sequents(bounds) if not minimal)
        self.assertEqual(render(first), "P, ~P, Q")

    def test_bounds(self) -> None:
        """Test bound validation."""
        with self.assertRaises(ValueError):
            EnumerationBounds(0, 1)
        with self.assertRaises(ValueError):
            EnumerationBounds(1, -1)
        with self.assertRaises(ValueError):
            EnumerationBounds(1, 1, 0)
        with self.assertRaises(BoundTooLargeError):
            EnumerationBounds(2, 7)
        with self.assertRaises(BoundTooLargeError):
            EnumerationBounds(2, 1, 5)
        with self.assertRaises(BoundTooLargeError):
            EnumerationBounds(6, 6)

    def test_variable_names(self) -> None:
        """Test the enumeration alphabet."""
        self.assertEqual(variable_names(2), ("P", "Q"))
        self.assertEqual(len(set(variable_names(12))), 12)
