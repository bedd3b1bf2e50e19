"""Exception types shared across the package.

Mathematical failures (empty/unbounded input, singular systems) are kept
separate from resource limits so callers can tell "the answer is no" apart
from "we gave up".
"""


class AlcoveError(Exception):
    """Base class for all package-specific errors."""


class SingularMatrixError(AlcoveError):
    """A linear system has no unique solution."""


class NoFiniteOrderError(AlcoveError):
    """No power of the matrix equals the identity within the given cap."""


class EmptyPolytopeError(AlcoveError):
    """The constraint system has no feasible point."""


class UnboundedPolytopeError(AlcoveError):
    """The constraint system does not bound the feasible region."""


class WindowError(AlcoveError):
    """Symmetric polytope parameters fall outside the valid (lambda, mu) window."""


class ResourceLimitError(AlcoveError):
    """A configured cap (vertex count, face count, node budget) was exceeded.

    Distinct from the mathematical errors above: the computation was cut
    short, nothing was refuted.
    """


class VerificationError(AlcoveError):
    """An internal cross-check that must hold for a correct realization failed."""
