"""Barycentric interior embedding and the Schur-complement boundary stresses.

The interior coordinates solve the weighted-barycenter equations for a
fixed convex outer polygon.  The substitution stresses summarize the
pull of the interior on the boundary: they are the off-diagonal entries
of L_BI * inv(L_II) * L_IB - L_BB, depend only on the combinatorics, and
turn the residual boundary forces into a pure k-gon problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_linalg import (
    LaplacianBlocks,
    Matrix,
    StressAssignment,
    mat_mul,
    solve_exact,
)
from .planar_map import OuterFaceSelection, PlanarMap

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class SubstitutionStress:
    """Symmetric k x k boundary-pair weights plus det of the interior block.

    omega[i][j] (i != j) is the weight between boundary positions i and
    j; the diagonal is unused and kept at zero.
    """

    k: int
    omega: tuple[tuple[Fraction, ...], ...]
    det_reduced: int

    def get(self, i: int, j: int) -> Fraction:
        assert i != j
        return self.omega[i][j]

    def permuted(self, perm: Sequence[int]) -> "SubstitutionStress":
        """Stress seen through a relabeling: new position a = old perm[a]."""
        k = self.k
        om = tuple(
            tuple(
                Fraction(0) if a == b else self.omega[perm[a]][perm[b]]
                for b in range(k)
            )
            for a in range(k)
        )
        return SubstitutionStress(k=k, omega=om, det_reduced=self.det_reduced)


@dataclass(frozen=True)
class PlaneEmbedding:
    """Exact rational plane coordinates in boundary-first indexing."""

    coords: tuple[Point, ...]
    sel: OuterFaceSelection

    @property
    def k(self) -> int:
        return self.sel.k

    def coord_of_vertex(self, v: int) -> Point:
        """Coordinate of an original vertex id."""
        return self.coords[self.sel.new_index[v]]


def substitution_stresses(blocks: LaplacianBlocks, *, unit_interior: bool = True) -> SubstitutionStress:
    """Boundary-pair weights from the Schur complement of the interior block.

    Computed via exact solves (one per boundary column), never explicit
    inversion.  Symmetry, zero row sums of the complement, and (for the
    unit interior stress) positivity, the upper bound n - k, and
    integrality after multiplication by det are asserted.
    """
    k = blocks.k
    x = solve_exact(blocks.ii, blocks.ib)  # inv(L_II) * L_IB
    m = mat_mul(blocks.bi, x)  # L_BI * inv(L_II) * L_IB
    bb = blocks.bb
    omega = [[m[i][j] - bb[i][j] for j in range(k)] for i in range(k)]
    for i in range(k):
        row_sum = sum(omega[i], Fraction(0))
        # omega is -L~ plus its diagonal; off-diagonals of each row must
        # cancel the (unused) diagonal entry exactly.
        assert row_sum == 0, "Schur complement row sum is not zero"
    out = []
    for i in range(k):
        row = []
        for j in range(k):
            if i == j:
                row.append(Fraction(0))
                continue
            w = omega[i][j]
            assert w == omega[j][i], "substitution stresses are not symmetric"
            if unit_interior:
                assert 0 < w < blocks.n - k, f"stress {w} outside (0, n-k)"
                assert (w * blocks.det_reduced).denominator == 1, (
                    "stress times det is not an integer"
                )
            row.append(w)
        out.append(tuple(row))
    return SubstitutionStress(k=k, omega=tuple(out), det_reduced=blocks.det_reduced)


def schur_complement_matrix(sub: SubstitutionStress) -> Matrix:
    """The k x k Laplacian built from the substitution stresses."""
    k = sub.k
    m: Matrix = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j:
                w = sub.get(i, j)
                m[i][j] = -w
                m[i][i] += w
    return m


def _orient(a: Point, b: Point, c: Point) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def tutte_interior(
    blocks: LaplacianBlocks,
    sel: OuterFaceSelection,
    boundary_coords: Sequence[Point],
    pmap: PlanarMap,
    stress: StressAssignment,
) -> PlaneEmbedding:
    """Solve for the interior coordinates given the placed outer polygon.

    Both coordinate systems share one elimination pass.  Exact interior
    equilibrium and strict containment in the boundary polygon are
    asserted.
    """
    k = sel.k
    rhs = [
        [
            -sum(blocks.ib[r][b] * boundary_coords[b][0] for b in range(k)),
            -sum(blocks.ib[r][b] * boundary_coords[b][1] for b in range(k)),
        ]
        for r in range(len(blocks.ib))
    ]
    sol = solve_exact(blocks.ii, rhs)
    coords: list[Point] = [(Fraction(p[0]), Fraction(p[1])) for p in boundary_coords]
    coords.extend((row[0], row[1]) for row in sol)
    emb = PlaneEmbedding(coords=tuple(coords), sel=sel)

    # Interior equilibrium, checked directly against the edge list.
    idx = sel.new_index
    for v in sel.interior:
        fx = Fraction(0)
        fy = Fraction(0)
        pv = coords[idx[v]]
        for u in pmap.neighbors(v):
            w = stress.get(u, v)
            pu = coords[idx[u]]
            fx += w * (pv[0] - pu[0])
            fy += w * (pv[1] - pu[1])
        assert fx == 0 and fy == 0, f"interior vertex {v} not in equilibrium"

    # Strictly inside the convex boundary polygon (counterclockwise).
    for p in coords[k:]:
        for b in range(k):
            assert _orient(coords[b], coords[(b + 1) % k], p) > 0, (
                "interior vertex not strictly inside the boundary polygon"
            )
    return emb


def residual_forces(
    emb: PlaneEmbedding,
    pmap: PlanarMap,
    stress: StressAssignment,
    sub: SubstitutionStress,
) -> tuple[Point, ...]:
    """Unresolved forces at the boundary under the interior stresses.

    Computed from the edge list and cross-checked against the Schur
    complement form; the total force is exactly zero.
    """
    sel = emb.sel
    k = sel.k
    idx = sel.new_index
    forces: list[Point] = []
    for v in sel.boundary:
        fx = Fraction(0)
        fy = Fraction(0)
        pv = emb.coords[idx[v]]
        for u in pmap.neighbors(v):
            w = stress.get(u, v)
            pu = emb.coords[idx[u]]
            fx += w * (pv[0] - pu[0])
            fy += w * (pv[1] - pu[1])
        forces.append((fx, fy))

    lt = schur_complement_matrix(sub)
    for i in range(k):
        fx = sum(lt[i][j] * emb.coords[j][0] for j in range(k))
        fy = sum(lt[i][j] * emb.coords[j][1] for j in range(k))
        assert (fx, fy) == forces[i], "force mismatch between edge sum and Schur form"
    total = (
        sum(f[0] for f in forces),
        sum(f[1] for f in forces),
    )
    assert total == (0, 0), "boundary forces do not cancel in total"
    return tuple(forces)
