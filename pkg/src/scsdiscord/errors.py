"""Exception types raised across the package.

Every error derives from :class:`SCSError` (itself a ``ValueError``) so callers
can catch the whole family at once; the CLI reports ``type(err).__name__`` as
the machine-readable reason code.
"""


class SCSError(ValueError):
    """Base class for all domain errors."""


class InvalidParams(SCSError):
    """Mean photon numbers negative, NaN or infinite."""


class DegenerateState(SCSError):
    """The odd bipartite superposition is undefined (both modes in vacuum)."""


class DegenerateMode(SCSError):
    """An odd cat state is required for a mode with zero mean photon number."""


class MixingOutOfRange(SCSError):
    """Mixing parameter outside the closed interval [0, 1]."""


class NotHermitian(SCSError):
    """Matrix fails the Hermiticity check."""


class ZeroProbabilityOutcome(SCSError):
    """Projective measurement outcome with (numerically) zero probability."""


class ConvergenceError(SCSError):
    """Minimizer exhausted its evaluation budget."""
