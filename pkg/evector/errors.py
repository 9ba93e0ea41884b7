#!/usr/bin/env python3

class EVectorError(Exception):
    """Base class for every error raised by the evector package."""


class InputError(EVectorError, ValueError):
    """Malformed input: out-of-range vertex, length mismatch, bad parameters."""


class ParseError(InputError):
    """Instance text could not be parsed."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class UsageError(InputError):
    """Command-line usage error."""


class PreconditionError(EVectorError):
    """Well-formed input for which an operation's precondition does not hold."""


class RefusalError(PreconditionError):
    """Instance exceeds a configured size cap."""


class PropertyViolation(EVectorError, AssertionError):
    """A mathematically guaranteed property failed to hold."""
