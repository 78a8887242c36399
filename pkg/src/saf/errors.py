"""Exception types shared across the library."""


class SafError(Exception):
    """Base class for every library-specific error."""


class InvalidData(SafError, ValueError):
    """A constructor or loader invariant was violated."""


class PoleAtAtom(SafError):
    """Evaluation point collides with an atom of the measure."""


class DegenerateValue(SafError):
    """Cayley transform requested at the excluded value f = -i."""


class NonConvergent(SafError):
    """An extrapolation or refinement schedule failed to settle."""


class NotHermitian(InvalidData):
    """Matrix expected to be Hermitian is not, beyond tolerance."""


class DependentFunctionals(InvalidData):
    """Boundary functionals are (numerically) linearly dependent."""


class DimensionMismatch(SafError, ValueError):
    """Vector length incompatible with the owning system."""


class ShootingBlowup(SafError):
    """Initial-value integration exceeded the magnitude guard."""


class CharacteristicZero(SafError):
    """Boundary-value problem is singular: the characteristic function
    vanishes at the requested spectral parameter."""


class NearEigenvalue(SafError):
    """Pencil solve requested too close to a generalized eigenvalue."""


class AtomInWindow(SafError, ValueError):
    """Root-scan window contains an atom position."""


class AtomCollision(SafError):
    """Eigenvalue too close to an atom position for the block
    correspondence formulas to be evaluated."""


class ConfigError(SafError, ValueError):
    """Verification-suite configuration is malformed."""
