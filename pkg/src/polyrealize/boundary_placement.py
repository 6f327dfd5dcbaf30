"""Case classification, outer-face placement, and boundary stresses.

The outer k-gon is placed by closed forms in the substitution stresses
so that the residual boundary forces can be cancelled by stresses on the
outer cycle alone.  Four cases: a triangle (Type3), a quadrilateral
(Type4), and two pentagon regimes (Type5A / Type5B) separated by a
quadratic inequality in the diagonal stresses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .equilibrium import Point, SubstitutionStress
from .errors import ConvexityViolation, NoValidRelabeling


class CaseType(enum.Enum):
    TYPE3 = "3"
    TYPE4 = "4"
    TYPE5A = "5A"
    TYPE5B = "5B"


@dataclass(frozen=True)
class Classification:
    case: CaseType
    # new boundary position a corresponds to old position perm[a]
    perm: tuple[int, ...]
    # True when the chosen pentagon relabeling reverses the cyclic order;
    # the map orientation must then be flipped to keep faces counterclockwise.
    reversed_cycle: bool


@dataclass(frozen=True)
class BoundaryPlacement:
    case: CaseType
    coords: tuple[Point, ...]


@dataclass(frozen=True)
class BoundaryStressSolution:
    """Stresses on the outer cycle edges (0,1), (1,2), ..., (k-1,0)."""

    values: tuple[Fraction, ...]


def _pentagon_split_inequality(sub: SubstitutionStress) -> bool:
    """Strict inequality selecting the Type5A placement (0-based indices)."""
    w13, w14, w24, w25, w35 = (
        sub.get(0, 2),
        sub.get(0, 3),
        sub.get(1, 3),
        sub.get(1, 4),
        sub.get(2, 4),
    )
    return w35 * w14 + w14 * w25 + w25 * w24 + w13 * w35 > w35 * w25


def classify(sub: SubstitutionStress, k: int) -> Classification:
    """Determine the case type and the boundary relabeling.

    k = 4: rotate so the (1,3) diagonal stress is at least the (2,4) one.
    k = 5: search the ten dihedral relabelings, identity and rotations
    first, for one with w(3,5) >= w(2,4) and w(2,5) >= w(1,3); at least
    one exists.  Ties in the pentagon split go to Type5B.
    """
    assert k == sub.k
    if k == 3:
        return Classification(CaseType.TYPE3, (0, 1, 2), False)
    if k == 4:
        for r in range(4):
            perm = tuple((r + a) % 4 for a in range(4))
            if sub.get(perm[0], perm[2]) >= sub.get(perm[1], perm[3]):
                return Classification(CaseType.TYPE4, perm, False)
        raise NoValidRelabeling("no rotation orders the quadrilateral diagonals")
    assert k == 5
    candidates = [
        (tuple((r + a) % 5 for a in range(5)), False) for r in range(5)
    ] + [
        (tuple((r - a) % 5 for a in range(5)), True) for r in range(5)
    ]
    for perm, rev in candidates:
        trial = sub.permuted(perm)
        if trial.get(2, 4) >= trial.get(1, 3) and trial.get(1, 4) >= trial.get(0, 2):
            case = CaseType.TYPE5A if _pentagon_split_inequality(trial) else CaseType.TYPE5B
            return Classification(case, perm, rev)
    raise NoValidRelabeling("no dihedral relabeling orders the pentagon diagonals")


def _assert_strictly_convex_ccw(coords: Sequence[Point]) -> None:
    k = len(coords)
    for a in range(k):
        p, q, r = coords[a], coords[(a + 1) % k], coords[(a + 2) % k]
        cross = (q[0] - p[0]) * (r[1] - q[1]) - (q[1] - p[1]) * (r[0] - q[0])
        if cross <= 0:
            raise ConvexityViolation(f"outer polygon not strictly convex at corner {a}")


def place_boundary(case: CaseType, sub: SubstitutionStress) -> BoundaryPlacement:
    """Closed-form outer-face coordinates for the (relabeled) stresses."""
    f = Fraction
    if case is CaseType.TYPE3:
        coords = [(f(0), f(0)), (f(1), f(0)), (f(0), f(1))]
    elif case is CaseType.TYPE4:
        w13, w24 = sub.get(0, 2), sub.get(1, 3)
        y3 = w24 / (2 * w13 - w24)
        assert 0 < y3 <= 1
        coords = [(f(0), f(0)), (f(1), f(0)), (f(2), y3), (f(0), f(1))]
    elif case is CaseType.TYPE5A:
        w13, w14, w24, w25, w35 = (
            sub.get(0, 2),
            sub.get(0, 3),
            sub.get(1, 3),
            sub.get(1, 4),
            sub.get(2, 4),
        )
        den = w35 * w14 + w14 * w25 + w25 * w24 + w13 * w35 - w35 * w25
        assert den > 0
        x5 = (w13 - w25 - w24) * (w35 + w13 - w24) / den
        y5 = (w35 + w13 - w24) / (w35 + w25)
        assert x5 < 0 and 0 < y5 < 1
        coords = [(f(0), f(0)), (f(1), f(0)), (f(1), f(1)), (f(0), f(1)), (x5, y5)]
    else:
        w13, w14, w24, w25, w35 = (
            sub.get(0, 2),
            sub.get(0, 3),
            sub.get(1, 3),
            sub.get(1, 4),
            sub.get(2, 4),
        )
        den = w24 * w35 + w25 * w13 + 2 * w25 * w35
        y2 = -2 * (
            w24 * w13 + w24 * w35 + w25 * w13 + 2 * w25 * w35
            - w13 * w13 - 2 * w13 * w35 - w35 * w14
        ) / den
        y3 = 2 * (
            w24 * w13 + w24 * w35 + w25 * w13 + 2 * w25 * w35
            - w24 * w24 - 2 * w24 * w25 - w14 * w25
        ) / den
        assert -2 < y2 < y3 < 2
        coords = [(f(0), f(-1)), (f(1), y2), (f(1), y3), (f(0), f(1)), (f(-1), f(0))]
    _assert_strictly_convex_ccw(coords)
    return BoundaryPlacement(case=case, coords=tuple(coords))


def boundary_stresses(case: CaseType, sub: SubstitutionStress) -> BoundaryStressSolution:
    """Closed-form stresses on the outer cycle cancelling the residual forces.

    All values come out negative; combined with the interior stresses the
    whole embedding is in equilibrium (checked downstream).
    """
    g = sub.get
    if case is CaseType.TYPE3:
        values = (-g(0, 1), -g(1, 2), -g(2, 0))
    elif case is CaseType.TYPE4:
        w12, w23, w34, w14 = g(0, 1), g(1, 2), g(2, 3), g(0, 3)
        w13, w24 = g(0, 2), g(1, 3)
        values = (
            -2 * w13 - w12,
            w24 - 2 * w13 - w23,
            -w24 / 2 - w34,
            w24 * w13 / (w24 - 2 * w13) - w14,
        )
    elif case is CaseType.TYPE5A:
        w12, w23, w34, w45, w15 = g(0, 1), g(1, 2), g(2, 3), g(3, 4), g(0, 4)
        w13, w14, w24, w25, w35 = g(0, 2), g(0, 3), g(1, 3), g(1, 4), g(2, 4)
        den = w35 * w25 - w14 * w25 - w25 * w24 - w13 * w35 - w35 * w14
        values = (
            (
                w13 * (w25 * w25 + w24 * w35 + 2 * w24 * w25 - w13 * w25)
                + w14 * (w25 * w25 + w25 * w35 + w24 * w25 + w35 * w24)
            ) / den - w12,
            (w13 * w25 + w25 * w35 + w24 * w35) / (-w25 - w35) - w23,
            (
                w14 * (w35 * w35 + w35 * w13 + w25 * w35 + w13 * w25)
                + w24 * (w35 * w35 + w13 * w25 + 2 * w13 * w35 - w35 * w24)
            ) / den - w34,
            (w24 * w25 + w25 * w14 + w14 * w35 + w24 * w35) / (w13 - w24 - w25) - w45,
            (w13 * w25 + w35 * w13 + w14 * w25 + w14 * w35) / (w24 - w35 - w13) - w15,
        )
    else:
        w12, w23, w34, w45, w15 = g(0, 1), g(1, 2), g(2, 3), g(3, 4), g(0, 4)
        w13, w14, w24, w25, w35 = g(0, 2), g(0, 3), g(1, 3), g(1, 4), g(2, 4)
        den = (
            2 * w35 * (w24 + w25 - w13 - w14 / 2)
            + 2 * w25 * (w13 + w35 - w24 - w14 / 2)
            - (w13 - w24) ** 2
        )
        values = (
            -w24 - 2 * w25 - w12,
            (
                -w25 * (w13 * w13 + 2 * w13 * w35 + 2 * w24 * w35)
                - w35 * (w24 * w24 + w25 * w14)
            ) / den - w23,
            -w13 - 2 * w35 - w34,
            w24 - 2 * w35 - w13 - w45,
            w13 - 2 * w25 - w24 - w15,
        )
    assert all(v < 0 for v in values), "boundary stresses must all be negative"
    return BoundaryStressSolution(values=values)
