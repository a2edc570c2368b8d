"""Exception hierarchy for splintbranch.

Every error raised on purpose by the library derives from SplintbranchError.
The CLI maps these onto process exit codes (see cli.py).
"""


class SplintbranchError(Exception):
    """Base class for all library errors."""


class ConfigurationError(SplintbranchError):
    """Invalid user-supplied configuration: unknown series, bad rank, malformed labels."""


class InvalidSubsystemError(ConfigurationError):
    """A requested subsystem is not a valid regular subsystem of the parent."""


class NotASplintError(ConfigurationError):
    """The requested (parent, subalgebra) pair has no splint in the catalog."""


class DomainError(SplintbranchError):
    """Mathematically invalid input: non-dominant weight, zero root, weight on a wall."""


class UnsupportedSplintError(SplintbranchError):
    """The splint exists but does not support multiplicity transfer
    (starred row, or the chamber condition fails)."""


class InternalInvariantError(SplintbranchError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class PropertyViolationError(InternalInvariantError):
    """A structural property that the theory guarantees did not hold on real data."""
