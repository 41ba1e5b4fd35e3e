"""Shared exception types and the default resource guard."""

# Default ceiling for any enumeration (lattice points, cycles, forests).
# Overridable per call and, at the CLI, via --cap / FREIMAN_CAP.
DEFAULT_CAP = 1_000_000


class FreimanError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(FreimanError):
    """Malformed input text.  Carries a position when one is known."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "")
            message = f"{message} ({where})"
        super().__init__(message)


class PreconditionError(FreimanError):
    """The input is well-formed but outside an operation's domain,
    e.g. an ideal that is not quasi-equigenerated."""


class ResourceCapError(FreimanError):
    """An enumeration exceeded its configured cap.  Reported, never truncated."""

    def __init__(self, what, cap):
        self.what = what
        self.cap = cap
        super().__init__(f"resource cap exceeded: {what} (cap {cap})")


def effective_cap(cap):
    return DEFAULT_CAP if cap is None else cap
