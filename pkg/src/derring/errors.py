"""Exceptions shared across the package."""


class SpecError(ValueError):
    """A group or ring specification is malformed or names an invalid object."""


class SizeLimitError(ValueError):
    """A requested object exceeds the configured size limit."""


class NotADerivationError(ValueError):
    """A coefficient matrix violates the Leibniz identity where a derivation was required."""


class NotLoopTrivialError(ValueError):
    """A character takes a nonzero value on a loop where a loop-trivial one was required."""
