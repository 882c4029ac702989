"""Exception types shared across the package."""


class ElindepError(Exception):
    """Base class for all domain errors raised by this package."""


class InputError(ElindepError):
    """Malformed user input: spec files, schema violations, bad arguments."""


class PrecisionExceededError(ElindepError):
    """A certified decision procedure hit the working-precision cap."""


class UnsupportedOperationError(ElindepError):
    """A construction the toolkit deliberately does not attempt."""


class InternalCheckError(ElindepError):
    """A redundant internal cross-check failed; indicates a bug, not bad input."""


class InsufficientTruncationError(ElindepError):
    """A series prefix was too short to determine the requested coefficients."""
