"""Exact realization of 3-connected planar maps as convex integer 3-polytopes."""

from .boundary_placement import CaseType
from .errors import ContractViolation, InvalidMapError, RealizationError
from .lifting import LiftedPolytope
from .pipeline import Realization, realize
from .planar_map import PlanarMap, load, validate
from .verification import Certificate, check_realization

__all__ = [
    "CaseType",
    "Certificate",
    "ContractViolation",
    "InvalidMapError",
    "LiftedPolytope",
    "PlanarMap",
    "Realization",
    "RealizationError",
    "check_realization",
    "load",
    "realize",
    "validate",
]
