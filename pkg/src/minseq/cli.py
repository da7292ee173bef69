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

"""Command line front end.

Exit codes: 0 for an affirmative answer, 1 for a negative one, 2 for usage or input
errors and 3 when a search cap left the answer open. Any sequent, formula or
derivation argument may be `-` to read it from standard input.
"""

import argparse
import logging
import sys
from typing import List, Optional

from minseq.calculus import (
    MP,
    Axiom,
    RuleId,
    System,
    check_derivation,
    parse_derivation,
    render_derivation,
)
from minseq.config import Settings
from minseq.core import parse_sequent, render
from minseq.exceptions import InputError, MinseqError, NotContainedError
from minseq.metatheory import (
    census,
    contains,
    degree_report,
    elaborate,
    format_census,
    format_degrees,
)
from minseq.prover import (
    Derivable,
    Exhausted,
    Policy,
    prove_minimal,
    prove_sequent,
    search,
)
from minseq.semantics import (
    EnumerationBounds,
    falsifying_assignment,
    is_minimal,
    is_valid,
    minimize,
)

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3


def _read(value: str) -> str:
    """Return the argument text, reading standard input for `-`."""
    if value == "-":
        return sys.stdin.read()
    return value


def _read_file(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _print_derivation(d, indent: Optional[int]) -> None:
    print(render_derivation(d, indent))


def parse_cli(sequent: str, **kwargs) -> int:
    """Print the canonical rendering of a sequent."""
    print(render(parse_sequent(_read(sequent))))
    return EXIT_OK


def valid_cli(sequent: str, **kwargs) -> int:
    """Decide validity, printing a falsifying assignment when there is one."""
    s = parse_sequent(_read(sequent))
    assignment = falsifying_assignment(s)
    if assignment is None:
        print("valid")
        return EXIT_OK
    values = ", ".join(f"{name}={value}" for name, value in assignment.items())
    print(f"not valid: {values}")
    return EXIT_NEGATIVE


def minimal_cli(sequent: str, **kwargs) -> int:
    """Decide minimality."""
    s = parse_sequent(_read(sequent))
    if is_minimal(s):
        print("minimal")
        return EXIT_OK
    print("not minimal" if is_valid(s) else "not valid")
    return EXIT_NEGATIVE


def minimize_cli(sequent: str, **kwargs) -> int:
    """Print the greedy minimal subsequent."""
    s = parse_sequent(_read(sequent))
    if not is_valid(s):
        print("not valid")
        return EXIT_NEGATIVE
    print(render(minimize(s)))
    return EXIT_OK


def _report_search(outcome, indent: Optional[int]) -> int:
    if isinstance(outcome, Derivable):
        _print_derivation(outcome.derivation, indent)
        return EXIT_OK
    print(outcome.summary)
    return EXIT_EXHAUSTED if isinstance(outcome, Exhausted) else EXIT_NEGATIVE


def prove_cli(
    sequent: str,
    system: str,
    policy: Optional[str],
    seed: Optional[int],
    weaken: bool,
    indent: Optional[int],
    settings: Settings,
    parser: argparse.ArgumentParser,
    **kwargs,
) -> int:
    """Derive a valid sequent, in the minimal calculus or by elaboration or search."""
    chosen = Policy(policy) if policy else settings.prover.policy
    if seed is None:
        seed = settings.prover.seed
    if chosen is Policy.RANDOM and seed is None:
        parser.error("--policy random requires --seed")

    s = parse_sequent(_read(sequent))
    target = System.parse(system)
    if not is_valid(s):
        print("not valid")
        return EXIT_NEGATIVE

    mp_w = System(Axiom.PLAIN, MP.rules | {RuleId.W})
    if weaken and not contains(target, mp_w):
        parser.error(f"--weaken needs a system with weakening, {target} has none")

    if contains(target, MP):
        if is_minimal(s):
            d = prove_minimal(s, chosen, seed)
        elif weaken:
            d = prove_sequent(s, weaken=True, policy=chosen, seed=seed)
        else:
            d = prove_sequent(s, policy=chosen, seed=seed)
            _logger.info("sequent is not minimal; derived %s instead", render(d.conclusion))
        if target != MP:
            d = elaborate(d, target)
        _print_derivation(d, indent)
        return EXIT_OK

    _logger.info("%s does not contain mp; searching", target)
    return _report_search(search(target, s, settings.search.bounds()), indent)


def check_cli(file: str, system: str, **kwargs) -> int:
    """Check a derivation file, listing every failing node."""
    d = parse_derivation(_read_file(file))
    target = System.parse(system)
    report = check_derivation(target, d)
    if report.ok:
        print(f"ok: {render(d.conclusion)}")
        return EXIT_OK
    for violation in report.violations:
        path = ".".join(str(i) for i in violation.path) or "root"
        print(f"{path}: {violation.kind}: {violation.message}")
    return EXIT_NEGATIVE


def search_cli(
    sequent: str,
    system: str,
    max_width: Optional[int],
    max_depth: Optional[int],
    indent: Optional[int],
    settings: Settings,
    **kwargs,
) -> int:
    """Search for a derivation in any system."""
    s = parse_sequent(_read(sequent))
    target = System.parse(system)
    bounds = settings.search.bounds(max_width=max_width, max_depth=max_depth)
    return _report_search(search(target, s, bounds), indent)


def contains_cli(upper: str, lower: str, **kwargs) -> int:
    """Decide containment between two systems."""
    s, t = System.parse(upper), System.parse(lower)
    if contains(s, t):
        print(f"{s} contains {t}")
        return EXIT_OK
    print(f"{s} does not contain {t}")
    return EXIT_NEGATIVE


def elaborate_cli(source: str, to: str, indent: Optional[int], **kwargs) -> int:
    """Rewrite a derivation into another system."""
    d = parse_derivation(_read_file(source))
    target = System.parse(to)
    try:
        result = elaborate(d, target)
    except NotContainedError as e:
        print(f"cannot elaborate: {e.message}")
        return EXIT_NEGATIVE
    _print_derivation(result, indent)
    return EXIT_OK


def census_cli(
    family: str,
    vars: Optional[int],
    max_connectives: Optional[int],
    jobs: Optional[int],
    spot_checks: Optional[int],
    output_format: str,
    settings: Settings,
    **kwargs,
) -> int:
    """Classify a family of systems."""
    section = settings.census
    bounds = EnumerationBounds(
        vars or section.vars,
        max_connectives if max_connectives is not None else section.max_connectives,
    )
    report = census(
        family,
        bounds,
        settings.search.bounds(),
        spot_checks if spot_checks is not None else section.spot_checks,
        jobs or section.jobs,
    )
    sys.stdout.write(format_census(report, output_format))
    return EXIT_OK if report.consistent else EXIT_NEGATIVE


def degrees_cli(
    system: str,
    vars: Optional[int],
    max_connectives: Optional[int],
    max_formulas: Optional[int],
    settings: Settings,
    **kwargs,
) -> int:
    """Report formula, minimal and sequent completeness of a system."""
    section = settings.degrees
    bounds = EnumerationBounds(
        vars or section.vars,
        max_connectives if max_connectives is not None else section.max_connectives,
        max_formulas or section.max_formulas,
    )
    report = degree_report(System.parse(system), bounds, settings.search.bounds())
    sys.stdout.write(format_degrees(report))
    return EXIT_OK


def _add_sequent_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("sequent", type=str, help="Sequent or formula, or - for stdin.")


def _add_indent_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--indent", type=_natural, default=None, help="Print one premise per line."
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser."""
    main_parser = argparse.ArgumentParser(
        prog="minseq", description="Workbench for propositional sequent calculi."
    )
    main_parser.add_argument(
        "-v", "--verbose", action="store_true", help="Enable verbose logging."
    )
    main_parser.add_argument("--config", type=str, default=None, help="YAML settings file.")
    subparsers = main_parser.add_subparsers(required=True, dest="command", help="sub-command help")

    parse_parser = subparsers.add_parser("parse", help="Print the canonical form of a sequent.")
    _add_sequent_argument(parse_parser)
    parse_parser.set_defaults(func=parse_cli)

    valid_parser = subparsers.add_parser("valid", help="Decide validity.")
    _add_sequent_argument(valid_parser)
    valid_parser.set_defaults(func=valid_cli)

    minimal_parser = subparsers.add_parser("minimal", help="Decide minimality.")
    _add_sequent_argument(minimal_parser)
    minimal_parser.set_defaults(func=minimal_cli)

    minimize_parser = subparsers.add_parser("minimize", help="Print a minimal subsequent.")
    _add_sequent_argument(minimize_parser)
    minimize_parser.set_defaults(func=minimize_cli)

    prove_parser = subparsers.add_parser("prove", help="Derive a valid sequent.")
    _add_sequent_argument(prove_parser)
    prove_parser.add_argument("--system", type=str, default="mp", help="Target system.")
    prove_parser.add_argument(
        "--policy",
        choices=[p.value for p in Policy],
        default=None,
        help="Principal occurrence selection.",
    )
    prove_parser.add_argument("--seed", type=int, default=None, help="Seed of the random policy.")
    prove_parser.add_argument(
        "--weaken",
        action="store_true",
        default=False,
        help="Weaken back deleted occurrences to derive the sequent itself.",
    )
    _add_indent_argument(prove_parser)
    prove_parser.set_defaults(func=prove_cli, parser=prove_parser)

    check_parser = subparsers.add_parser("check", help="Check a derivation file.")
    check_parser.add_argument("--system", type=str, required=True, help="System to check in.")
    check_parser.add_argument("file", type=str, help="Derivation file, or - for stdin.")
    check_parser.set_defaults(func=check_cli)

    search_parser = subparsers.add_parser("search", help="Search for a derivation.")
    search_parser.add_argument("--system", type=str, required=True, help="System to search in.")
    search_parser.add_argument("--max-width", type=_positive, default=None, help="Width cap.")
    search_parser.add_argument("--max-depth", type=_positive, default=None, help="Depth cap.")
    _add_indent_argument(search_parser)
    _add_sequent_argument(search_parser)
    search_parser.set_defaults(func=search_cli)

    contains_parser = subparsers.add_parser("contains", help="Decide system containment.")
    contains_parser.add_argument("upper", type=str, help="Containing system.")
    contains_parser.add_argument("lower", type=str, help="Contained system.")
    contains_parser.set_defaults(func=contains_cli)

    elaborate_parser = subparsers.add_parser(
        "elaborate", help="Rewrite a derivation into another system."
    )
    elaborate_parser.add_argument(
        "--from", dest="source", type=str, required=True, help="Derivation file, or -."
    )
    elaborate_parser.add_argument("--to", type=str, required=True, help="Target system.")
    _add_indent_argument(elaborate_parser)
    elaborate_parser.set_defaults(func=elaborate_cli)

    census_parser = subparsers.add_parser("census", help="Classify a family of systems.")
    census_parser.add_argument(
        "--family", choices=["standard", "extended"], default="standard", help="System family."
    )
    census_parser.add_argument("--vars", type=_positive, default=None, help="Variables.")
    census_parser.add_argument(
        "--max-connectives", type=_natural, default=None, help="Connectives per formula."
    )
    census_parser.add_argument("--jobs", type=_positive, default=None, help="Worker processes.")
    census_parser.add_argument(
        "--spot-checks", type=_natural, default=None, help="Direct searches per system."
    )
    census_parser.add_argument(
        "--format",
        dest="output_format",
        choices=["text", "csv"],
        default="text",
        help="Output format.",
    )
    census_parser.set_defaults(func=census_cli)

    degrees_parser = subparsers.add_parser("degrees", help="Report degrees of completeness.")
    degrees_parser.add_argument("--system", type=str, required=True, help="System to sweep.")
    degrees_parser.add_argument("--vars", type=_positive, default=None, help="Variables.")
    degrees_parser.add_argument(
        "--max-connectives", type=_natural, default=None, help="Connectives per sequent."
    )
    degrees_parser.add_argument(
        "--max-formulas", type=_positive, default=None, help="Occurrences per sequent."
    )
    degrees_parser.set_defaults(func=degrees_cli)

    return main_parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line tool and return its exit code."""
    main_parser = build_parser()
    args = main_parser.parse_args(argv)
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    logging.basicConfig(level=level)
    logging.getLogger("minseq").setLevel(level)

    context = vars(args)
    try:
        config = context.pop("config")
        context["settings"] = Settings.load(config) if config else Settings()
        return args.func(**context)
    except MinseqError as e:
        print(f"minseq: {e.message}", file=sys.stderr)
        return EXIT_USAGE
