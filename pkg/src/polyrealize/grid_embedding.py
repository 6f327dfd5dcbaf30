"""Scaling the rational plane embedding to integer coordinates.

Separate factors for x and y clear the denominators of the boundary
placement and of the barycentric solve (whose denominators divide det of
the interior block).  The realized coordinate spans are checked against
the per-type closed-form bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .boundary_placement import CaseType
from .equilibrium import PlaneEmbedding, SubstitutionStress
from .errors import NonIntegralCoordinate, NonIntegralFactor


@dataclass(frozen=True)
class ScalingFactors:
    case: CaseType
    s_x: int
    s_y: int
    s_x_boundary: int
    s_y_boundary: int
    det_reduced: int


@dataclass(frozen=True)
class GridEmbedding:
    """Integer plane coordinates in boundary-first indexing.

    coords are translated so min x = min y = 0; raw_coords keep the
    pre-translation values (boundary template frame).
    """

    coords: tuple[tuple[int, int], ...]
    raw_coords: tuple[tuple[int, int], ...]
    k: int
    delta_x: int
    delta_y: int
    bound_dx: Fraction
    bound_dy: Fraction


def _as_int(value: Fraction, error: type, what: str) -> int:
    if value.denominator != 1:
        raise error(f"{what} = {value} is not an integer")
    return value.numerator


def scale_factors(case: CaseType, sub: SubstitutionStress) -> ScalingFactors:
    """Per-type integer scaling factors for the x and y coordinates."""
    det = sub.det_reduced
    g = sub.get
    one = Fraction(1)
    if case is CaseType.TYPE3:
        sxb = one
        syb = one
    elif case is CaseType.TYPE4:
        sxb = one
        syb = (2 * g(0, 2) - g(1, 3)) * det
    elif case is CaseType.TYPE5A:
        w13, w14, w24, w25, w35 = g(0, 2), g(0, 3), g(1, 3), g(1, 4), g(2, 4)
        sxb = (w35 * w14 + w14 * w25 + w25 * w24 + w13 * w35 - w35 * w25) * det * det
        syb = (w35 + w25) * det
    else:
        w13, w24, w25, w35 = g(0, 2), g(1, 3), g(1, 4), g(2, 4)
        sxb = one
        syb = (w24 * w35 + w25 * w13 + 2 * w25 * w35) * det * det
    s_x_boundary = _as_int(sxb, NonIntegralFactor, "boundary x scale")
    s_y_boundary = _as_int(syb, NonIntegralFactor, "boundary y scale")
    s_x = s_x_boundary * det
    s_y = s_y_boundary * det
    assert s_x > 0 and s_y > 0
    return ScalingFactors(
        case=case,
        s_x=s_x,
        s_y=s_y,
        s_x_boundary=s_x_boundary,
        s_y_boundary=s_y_boundary,
        det_reduced=det,
    )


def span_bounds(case: CaseType, sub: SubstitutionStress) -> tuple[Fraction, Fraction]:
    """Closed-form upper bounds for the x and y spans of the scaled grid."""
    det = Fraction(sub.det_reduced)
    g = sub.get
    if case is CaseType.TYPE3:
        return det, det
    if case is CaseType.TYPE4:
        return 2 * det, (2 * g(0, 2) - g(1, 3)) * det ** 2
    w13, w14, w24, w25, w35 = g(0, 2), g(0, 3), g(1, 3), g(1, 4), g(2, 4)
    if case is CaseType.TYPE5A:
        # exact span x2 - x5: w14 (w35 + w25) + w25 w13 + w24 w35 - (w13 - w24)^2
        dx = (w14 * (w35 + w25) + w25 * w13 + w24 * w35 - (w13 - w24) ** 2) * det ** 3
        dy = (w35 + w25) * det ** 2
        return dx, dy
    dx = 2 * det
    dy = 4 * (w24 * w35 + w25 * w13 + 2 * w25 * w35) * det ** 3
    return dx, dy


def apply_scaling(
    emb: PlaneEmbedding, factors: ScalingFactors, sub: SubstitutionStress
) -> GridEmbedding:
    """Multiply x by S_x and y by S_y; every result must be an integer."""
    raw: list[tuple[int, int]] = []
    for (x, y) in emb.coords:
        raw.append(
            (
                _as_int(x * factors.s_x, NonIntegralCoordinate, "scaled x"),
                _as_int(y * factors.s_y, NonIntegralCoordinate, "scaled y"),
            )
        )
    min_x = min(p[0] for p in raw)
    min_y = min(p[1] for p in raw)
    coords = tuple((p[0] - min_x, p[1] - min_y) for p in raw)
    delta_x = max(p[0] for p in coords)
    delta_y = max(p[1] for p in coords)
    bound_dx, bound_dy = span_bounds(factors.case, sub)
    assert delta_x <= bound_dx, "x span exceeds its closed-form bound"
    assert delta_y <= bound_dy, "y span exceeds its closed-form bound"
    return GridEmbedding(
        coords=coords,
        raw_coords=tuple(raw),
        k=emb.k,
        delta_x=delta_x,
        delta_y=delta_y,
        bound_dx=bound_dx,
        bound_dy=bound_dy,
    )


def coordinate_gcds(grid: GridEmbedding) -> tuple[int, int]:
    """gcd of the x and of the y coordinate differences from their minima."""
    min_x = min(p[0] for p in grid.raw_coords)
    min_y = min(p[1] for p in grid.raw_coords)
    gx = math.gcd(*(p[0] - min_x for p in grid.raw_coords))
    gy = math.gcd(*(p[1] - min_y for p in grid.raw_coords))
    return max(gx, 1), max(gy, 1)


def gcd_reduce(grid: GridEmbedding, sub: SubstitutionStress) -> tuple[GridEmbedding, int, int]:
    """Divide out the coordinate gcds, keeping the raw coordinate frame.

    Returns the reduced embedding and the two gcds.  Heights must be
    recomputed from the reduced plane embedding by the caller; spans are
    re-derived, and the original bounds still apply (the reduction only
    shrinks the grid).
    """
    gx, gy = coordinate_gcds(grid)
    raw = tuple((p[0] // gx, p[1] // gy) for p in grid.raw_coords)
    min_x = min(p[0] for p in raw)
    min_y = min(p[1] for p in raw)
    coords = tuple((p[0] - min_x, p[1] - min_y) for p in raw)
    reduced = GridEmbedding(
        coords=coords,
        raw_coords=raw,
        k=grid.k,
        delta_x=max(p[0] for p in coords),
        delta_y=max(p[1] for p in coords),
        bound_dx=grid.bound_dx,
        bound_dy=grid.bound_dy,
    )
    return reduced, gx, gy
