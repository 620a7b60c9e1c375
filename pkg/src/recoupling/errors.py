"""Exception hierarchy shared by all submodules.

DomainError subclasses signal mathematically invalid inputs (wrong regime,
non-realizable geometry, out-of-range labels); they map to a dedicated CLI
exit code, distinct from I/O and parse failures.
"""


class RecouplingError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RecouplingError):
    """Input is syntactically fine but mathematically out of domain."""


class FaceViolationError(DomainError):
    """A face triple of the requested tetrahedron violates the triangle inequality."""


class RegimeError(DomainError):
    """Operation requires a different metric regime (Euclidean vs Minkowskian)."""


class NotRealizableError(DomainError):
    """Spherical tetrahedron with the given edge lengths does not exist in S^3."""


class PathRealizabilityError(NotRealizableError):
    """Integration path left the realizable (positive-definite Gram) region."""


class LabelRangeError(DomainError):
    """Label outside the allowed range 0..r-2 for the given root of unity."""


class OracleBoundError(DomainError):
    """Label exceeds the configured bound of the brute-force oracle."""


class IntegralityError(DomainError):
    """Scaled fractions are required to be integers and are not."""


class AllZeroWindowError(DomainError):
    """Every 6j value in the requested window is exactly zero; nothing to fit."""


class TriangulationError(RecouplingError):
    """Triangulation fails validation (non-closed, bad Euler characteristic, ...)."""


class TriangulationParseError(TriangulationError):
    """Triangulation file does not conform to the documented text format."""
