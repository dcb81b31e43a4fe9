"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract, so new error conditions
should subclass one of the classes below rather than raising bare
exceptions.
"""


class VrgError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(VrgError):
    """Malformed polynomial expression. Carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotDivisibleError(VrgError):
    """Exact division was requested but the remainder is nonzero."""


class NotHomogeneousError(VrgError):
    """A generator is not weighted-homogeneous for the declared weights."""


class NotFiniteError(VrgError):
    """The generators do not define a finite extension (V(f) != {0})."""


class SpecFileError(VrgError):
    """An extension spec file is structurally invalid."""


class DegreeCapExceededError(VrgError):
    """An intermediate Groebner polynomial exceeded the configured degree cap."""


class ContractionError(VrgError):
    """The contraction of a prime failed to collapse to a single generator."""


class TheoremViolationError(VrgError):
    """An internal cross-check failed.

    Either the Jacobian-exponent identity m_Q = e_Q - 1 broke (which points
    at a factor that is not absolutely irreducible, or a bug), or the two
    well-ramified characterizations disagreed.
    """


class FiberProbeError(VrgError):
    """The numeric fiber probe was asked something it cannot do."""
