#!/usr/bin/env python3
"""
Influence - Error Types

Exception hierarchy shared by every package. Operations raise the most
specific subclass; the CLI maps parse and parameter errors to exit code 2.

Author: Influence Contributors
License: MIT
"""

from typing import Optional


class InfluenceError(Exception):
    """Base class for all errors raised by the influence packages."""


class InvalidVertexError(InfluenceError):
    """A vertex id is unknown or no longer alive in the position."""


class ContractViolationError(InfluenceError):
    """An operation was called outside its precondition."""


class AuditError(ContractViolationError):
    """An audited invariant (parity, nonzugzwang, memo stability) failed."""


class IllegalMoveError(InfluenceError):
    """A move does not respect the rules (wrong colour, empty position)."""


class NoMoveError(IllegalMoveError):
    """The player to move has no vertex of their colour."""


class FamilyParameterError(InfluenceError):
    """Invalid parameters for an instance family generator."""


class UnknownSuiteError(InfluenceError):
    """The requested verification suite is not registered."""


class GraphParseError(InfluenceError):
    """
    Malformed graph document.

    Attributes:
        line (int): 1-based line number of the offending line
        column (Optional[int]): 1-based column of the offending token
    """

    def __init__(self, message: str, line: int, column: Optional[int] = None) -> None:
        self.line = line
        self.column = column
        if column is None:
            text = f"{message} at line {line}"
        else:
            text = f"{message} at line {line}, column {column}"
        super().__init__(text)
