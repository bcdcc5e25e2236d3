"""Exception hierarchy.

Every failure mode raised by this package derives from :class:`OrthokitError`,
so callers (the CLI in particular) can distinguish domain errors from bugs.
"""


class OrthokitError(Exception):
    """Base class for all orthokit domain errors."""


class LengthMismatch(OrthokitError):
    """Parallel arrays (eigenvalues/weights/phases) differ in length."""


class NonMonotoneEigenvalues(OrthokitError):
    """Eigenvalue list is not strictly increasing."""


class NotNormalizable(OrthokitError):
    """Weights are negative or do not sum to one within tolerance."""


class InvalidCount(OrthokitError):
    """A component count below two was requested for a comb."""


class NonpositiveSpacing(OrthokitError):
    """Comb spacing must be a positive real."""


class EmptyGrid(OrthokitError):
    """A parameter grid with no points was supplied."""


class ZeroDispersion(OrthokitError):
    """Generator dispersion vanishes; no finite speed bound exists."""


class DegenerateSpectrum(OrthokitError):
    """Two-mode parameters produce a fully degenerate spectrum."""


class InvalidParams(OrthokitError):
    """Two-mode parameters outside the supported domain."""


class ConvergenceFailure(OrthokitError):
    """The tridiagonal eigensolver did not converge."""


class CombConstraintViolation(OrthokitError):
    """Requested comb sub-spectrum does not fit inside the ladder."""


class InvalidStride(OrthokitError):
    """Comb stride outside 1..N."""


class DegenerateLevels(OrthokitError):
    """Single-mode levels coincide; tunneling ratio undefined."""


class TunnelingPresent(OrthokitError):
    """Operation requires the tunneling coupling to vanish."""


class NoBifurcationFound(OrthokitError):
    """Peak-splitting threshold not bracketed within the scanned range."""


class UnsupportedN(OrthokitError):
    """Boson number outside the supported range."""
