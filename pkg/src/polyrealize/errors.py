"""Exception hierarchy for the realization pipeline.

Two families matter to callers: InvalidMapError means the input was bad
(CLI exit 1), ContractViolation means an internal invariant that is
mathematically guaranteed failed, i.e. a bug (CLI exit 2).
"""


class RealizationError(Exception):
    """Base class for all errors raised by this package."""


class InvalidMapError(RealizationError):
    """The input planar map is malformed or out of the supported class."""


class NotClosedSurface(InvalidMapError):
    """A directed edge is missing or duplicated across the face cycles."""


class EulerViolation(InvalidMapError):
    """Vertex/edge/face counts do not satisfy n - E + F = 2."""


class NotSimple(InvalidMapError):
    """The graph has a loop or parallel edge."""


class NotThreeConnected(InvalidMapError):
    """Removing some vertex pair disconnects the graph."""


class FaceTooLarge(InvalidMapError):
    """A requested outer face has more than five vertices."""


class TooLargeForBruteForce(RealizationError):
    """Instance exceeds the size guard of an enumeration oracle."""


class ContractViolation(RealizationError):
    """An invariant that must hold for valid inputs was violated."""


class SingularMatrix(ContractViolation):
    """Exact elimination found no pivot for a matrix assumed nonsingular."""


class SingularReducedLaplacian(ContractViolation):
    """det of the interior Laplacian block is zero."""


class NoValidRelabeling(ContractViolation):
    """No dihedral relabeling of the pentagon satisfied the stress order."""


class ConvexityViolation(ContractViolation):
    """A face polygon that must be strictly convex is not."""


class NonIntegralFactor(ContractViolation):
    """A scaling factor that must be an integer is not."""


class NonIntegralCoordinate(ContractViolation):
    """A scaled coordinate that must be an integer is not."""


class PathInconsistency(ContractViolation):
    """Two propagation paths assigned different planes to a face."""


class InconsistentHeight(ContractViolation):
    """Incident faces disagree about a vertex height."""
