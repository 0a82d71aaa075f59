"""Error types shared across the package.

DomainError marks a mathematical precondition violation (division by zero,
central input where a non-central one is required, ...).  ParseError and
UsageError mark bad input text; ParseError always carries the offset of the
offending character or token.
"""

from __future__ import annotations


class DomainError(ValueError):
    """A value violates an operation's mathematical precondition."""


class ParseError(ValueError):
    """Lexical, syntactic, or literal-level error at a known input offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.message = message
        self.position = position


class UsageError(ValueError):
    """Well-formed input used incorrectly: unknown formula, bad arity, mixed types."""
