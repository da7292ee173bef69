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

"""Unit tests for the command line."""

import io
from unittest.mock import patch

from pyfakefs.fake_filesystem_unittest import TestCase

from minseq.calculus import MP, NP, PP, check_derivation, parse_derivation
from minseq.cli import EXIT_EXHAUSTED, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, main

WITNESS = "((P&Q)|(~Q&P))|~P"
WITNESS_TEXT = "(P & Q | ~Q & P) | ~P"


class TestCli(TestCase):
    """Unit test minseq sub-commands and exit codes."""

    def setUp(self) -> None:
        """Set up unit test."""
        self.setUpPyfakefs()

    def run_cli(self, *argv: str, stdin: str = ""):
        """Run the command line, returning exit code, stdout and stderr."""
        out, err = io.StringIO(), io.StringIO()
        with patch("sys.stdout", out), patch("sys.stderr", err), patch(
            "sys.stdin", io.StringIO(stdin)
        ):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_parse(self) -> None:
        """Test canonical printing."""
        self.assertEqual(self.run_cli("parse", "~(P&Q)")[:2], (EXIT_OK, "~P | ~Q\n"))

    def test_parse_fail(self) -> None:
        """Test that malformed input is a usage error."""
        code, out, err = self.run_cli("parse", "P &")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("minseq: malformed sequent"))

    def test_valid(self) -> None:
        """Test validity answers."""
        self.assertEqual(self.run_cli("valid", "P, ~P")[:2], (EXIT_OK, "valid\n"))
        self.assertEqual(
            self.run_cli("valid", "P, Q")[:2], (EXIT_NEGATIVE, "not valid: P=0, Q=0\n")
        )

    def test_stdin(self) -> None:
        """Test that - reads the argument from standard input."""
        self.assertEqual(self.run_cli("valid", "-", stdin="P | ~P\n")[:2], (EXIT_OK, "valid\n"))

    def test_minimal(self) -> None:
        """Test minimality answers."""
        self.assertEqual(self.run_cli("minimal", "P&Q, ~Q&P, ~P")[:2], (EXIT_OK, "minimal\n"))
        self.assertEqual(self.run_cli("minimal", "P, ~P, Q")[:2], (EXIT_NEGATIVE, "not minimal\n"))
        self.assertEqual(self.run_cli("minimal", "P, Q")[:2], (EXIT_NEGATIVE, "not valid\n"))

    def test_minimize(self) -> None:
        """Test greedy minimization."""
        self.assertEqual(self.run_cli("minimize", "P, P|~P, ~P")[:2], (EXIT_OK, "P | ~P\n"))
        self.assertEqual(self.run_cli("minimize", "P")[:2], (EXIT_NEGATIVE, "not valid\n"))

    def test_prove(self) -> None:
        """Test derivations in the minimal calculus."""
        code, out, _ = self.run_cli("prove", "P | ~P")
        self.assertEqual((code, out), (EXIT_OK, "(par [P | ~P] (ax [P, ~P]))\n"))
        self.assertEqual(self.run_cli("prove", "P & ~P")[:2], (EXIT_NEGATIVE, "not valid\n"))

    def test_prove_roundtrips_through_check(self) -> None:
        """Test that printed derivations check in their system."""
        for system, target in (("mp", MP), ("pp", PP), ("np", NP)):
            with self.subTest(system=system):
                code, out, _ = self.run_cli("prove", "--system", system, "--indent", "2", WITNESS)
                self.assertEqual(code, EXIT_OK)
                self.assertTrue(check_derivation(target, parse_derivation(out)).ok)
                code, checked, _ = self.run_cli("check", "--system", system, "-", stdin=out)
                self.assertEqual((code, checked), (EXIT_OK, f"ok: {WITNESS_TEXT}\n"))

    def test_prove_falls_back_to_search(self) -> None:
        """Test proving in a system that does not contain the minimal calculus."""
        code, out, _ = self.run_cli("prove", "--system", "mp-", WITNESS)
        self.assertEqual((code, out), (EXIT_NEGATIVE, "underivable (definitive)\n"))

    def test_prove_weaken(self) -> None:
        """Test that weakening brings back deleted occurrences."""
        code, out, _ = self.run_cli("prove", "--system", "np", "--weaken", "P, ~P, Q")
        self.assertEqual(code, EXIT_OK)
        d = parse_derivation(out)
        self.assertEqual(str(d.conclusion), "P, ~P, Q")
        self.assertTrue(check_derivation(NP, d).ok)
        code, out, _ = self.run_cli("prove", "P, ~P, Q")
        self.assertEqual(str(parse_derivation(out).conclusion), "P, ~P")

    def test_prove_usage(self) -> None:
        """Test prove usage errors."""
        for argv in (
            ("prove", "--policy", "random", "P | ~P"),
            ("prove", "--weaken", "P, ~P, Q"),
        ):
            with self.subTest(argv=argv):
                with self.assertRaises(SystemExit) as ctx:
                    self.run_cli(*argv)
                self.assertEqual(ctx.exception.code, EXIT_USAGE)
        code, out, _ = self.run_cli("prove", "--policy", "random", "--seed", "5", "P | ~P")
        self.assertEqual(code, EXIT_OK)

    def test_check(self) -> None:
        """Test checking derivation files."""
        self.fs.create_file("/good.txt", contents="(par [P | ~P]\n  (ax [P, ~P]))\n")
        self.fs.create_file("/bad.txt", contents="(w [P | ~Q, Q] (par [P | ~Q] (ax [P, ~Q])))")
        self.assertEqual(
            self.run_cli("check", "--system", "mp", "/good.txt")[:2], (EXIT_OK, "ok: P | ~P\n")
        )
        code, out, _ = self.run_cli("check", "--system", "mp", "/bad.txt")
        self.assertEqual(code, EXIT_NEGATIVE)
        lines = out.splitlines()
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[0].startswith("root: RuleNotInSystem: "))
        self.assertTrue(lines[1].startswith("0.0: RuleMismatch: "))

    def test_check_input_errors(self) -> None:
        """Test check failure behavior."""
        code, _, err = self.run_cli("check", "--system", "mp", "/missing.txt")
        self.assertEqual(code, EXIT_USAGE)
        self.assertTrue(err.startswith("minseq: cannot read /missing.txt"))
        self.fs.create_file("/foo.txt", contents="(foo [P])")
        code, _, err = self.run_cli("check", "--system", "mp", "/foo.txt")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("minseq: unknown rule 'foo'", err)
        code, _, err = self.run_cli("check", "--system", "lk", "/foo.txt")
        self.assertEqual(code, EXIT_USAGE)

    def test_search(self) -> None:
        """Test search answers and exit codes."""
        code, out, _ = self.run_cli("search", "--system", "mp-", WITNESS)
        self.assertEqual((code, out), (EXIT_NEGATIVE, "underivable (definitive)\n"))
        code, out, _ = self.run_cli("search", "--system", "pp", "P, ~P, Q")
        self.assertEqual((code, out), (EXIT_EXHAUSTED, "no proof within caps\n"))
        code, out, _ = self.run_cli("search", "--system", "np", "P, ~P, Q")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(check_derivation(NP, parse_derivation(out)).ok)

    def test_contains(self) -> None:
        """Test containment answers."""
        self.assertEqual(
            self.run_cli("contains", "gs1p", "mp")[:2], (EXIT_OK, "gs1p contains mp\n")
        )
        self.assertEqual(
            self.run_cli("contains", "mp-", "mp")[:2],
            (EXIT_NEGATIVE, "mp- does not contain mp\n"),
        )

    def test_elaborate(self) -> None:
        """Test rewriting a derivation file into another system."""
        self.fs.create_file(
            "/mp.txt", contents="(wedge [P & Q, ~P, ~Q] (ax [P, ~P]) (ax [Q, ~Q]))"
        )
        code, out, _ = self.run_cli("elaborate", "--from", "/mp.txt", "--to", "pp")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(check_derivation(PP, parse_derivation(out)).ok)
        code, out, _ = self.run_cli("elaborate", "--from", "/mp.txt", "--to", "(with,par)")
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertTrue(out.startswith("cannot elaborate: "))

    def test_census(self) -> None:
        """Test the census table and its exit code."""
        code, out, _ = self.run_cli(
            "census", "--vars", "1", "--max-connectives", "0", "--spot-checks", "0"
        )
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertIn("standard: 64 of 64 systems complete at bound", out)
        code, out, _ = self.run_cli(
            "census",
            "--family",
            "extended",
            "--vars",
            "1",
            "--max-connectives",
            "0",
            "--format",
            "csv",
        )
        self.assertEqual(len(out.splitlines()), 129)

    def test_config(self) -> None:
        """Test that the settings file supplies census defaults."""
        self.fs.create_file("/minseq.yaml", contents="census:\n  vars: 1\n  max_connectives: 0\n")
        code, out, _ = self.run_cli("--config", "/minseq.yaml", "census", "--format", "csv")
        self.assertEqual(len(out.splitlines()), 65)
        self.fs.create_file("/bad.yaml", contents="census:\n  vars: -1\n")
        code, _, err = self.run_cli("--config", "/bad.yaml", "census")
        self.assertEqual(code, EXIT_USAGE)
        self.assertTrue(err.startswith("minseq: invalid settings in /bad.yaml"))

    def test_degrees(self) -> None:
        """Test the degree report."""
        code, out, _ = self.run_cli(
            "degrees", "--system", "np", "--vars", "2", "--max-connectives", "1"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(
            [line.split(":")[0] for line in out.splitlines()],
            ["system", "formula-complete", "minimal-complete", "sequent-complete"],
        )
        self.assertIn("sequent-complete: pass", out)
