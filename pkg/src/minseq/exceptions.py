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

"""Custom exceptions for minseq."""

from typing import Optional


class MinseqError(Exception):
    """Base class of all errors raised by minseq."""

    @property
    def message(self) -> str:
        """Return message passed as argument to exception."""
        return self.args[0]


class ParseError(MinseqError):
    """Raised when formula, sequent or derivation text is malformed."""

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        super().__init__(message)
        self.position = position


class UnknownRuleError(ParseError):
    """Raised when a derivation names a rule that does not exist."""


class UnknownSystemError(MinseqError):
    """Raised when a system description names an unknown preset or rule."""


class EmptySequentError(MinseqError):
    """Raised when a sequent is built without any formula occurrence."""


class MissingVariableError(MinseqError):
    """Raised when an assignment does not cover every variable of a formula."""


class VariableLimitExceededError(MinseqError):
    """Raised when a truth table would exceed the variable guard."""


class BoundTooLargeError(MinseqError):
    """Raised when enumeration bounds exceed the configured ceilings."""


class NotValidError(MinseqError):
    """Raised when an operation requires a valid sequent."""


class NotMinimalError(MinseqError):
    """Raised when an operation requires a minimal sequent."""


class CheckError(MinseqError):
    """Base class of derivation step violations."""


class RuleNotInSystemError(CheckError):
    """Raised when a step uses a rule the system does not have."""


class RuleMismatchError(CheckError):
    """Raised when no instance of the rule schema matches a step."""


class ArityMismatchError(CheckError):
    """Raised when a step has the wrong number of premises for its rule."""


class NotContainedError(MinseqError):
    """Raised when a derivation cannot be elaborated into a target system."""


class ConfigError(MinseqError):
    """Raised when a settings file cannot be loaded."""


class InputError(MinseqError):
    """Raised when an input file cannot be read."""
