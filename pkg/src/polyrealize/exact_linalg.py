"""Exact rational linear algebra: Laplacian assembly, solves, determinants.

Everything runs over fractions.Fraction / Python integers; floating
point never enters.  Determinants of integer matrices use fraction-free
Bareiss elimination, solves use plain rational Gaussian elimination with
first-nonzero pivoting (deterministic).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import SingularMatrix, SingularReducedLaplacian
from .planar_map import OuterFaceSelection, PlanarMap

Matrix = list[list[Fraction]]


def mat(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0])
    return [
        [sum((arow[t] * b[t][j] for t in range(len(b))), Fraction(0)) for j in range(cols)]
        for arow in a
    ]


def mat_transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def determinant_exact(a: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix via Bareiss elimination."""
    n = len(a)
    m = [[int(x) for x in row] for row in a]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            for r in range(col + 1, n):
                if m[r][col] != 0:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[col][col]
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * pivot - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def determinant_rational(a: Matrix) -> Fraction:
    """Determinant over the rationals by Gaussian elimination."""
    n = len(a)
    m = [row[:] for row in a]
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            det = -det
        pivot = m[col][col]
        det *= pivot
        for r in range(col + 1, n):
            factor = m[r][col] / pivot
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def solve_exact(a: Matrix, rhs: Matrix) -> Matrix:
    """Solve A X = rhs exactly for all right-hand sides at once.

    The solution is verified by back-substitution; the residual is
    required to be exactly zero.
    """
    n = len(a)
    w = len(rhs[0])
    aug = [list(a[r]) + list(rhs[r]) for r in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrix(f"no pivot in column {col}")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        for r in range(col + 1, n):
            factor = aug[r][col] / pivot
            if factor:
                for c in range(col, n + w):
                    aug[r][c] -= factor * aug[col][c]
    x: Matrix = [[Fraction(0)] * w for _ in range(n)]
    for r in range(n - 1, -1, -1):
        for j in range(w):
            s = aug[r][n + j]
            for c in range(r + 1, n):
                s -= aug[r][c] * x[c][j]
            x[r][j] = s / aug[r][r]
    for r in range(n):
        for j in range(w):
            residual = sum(a[r][c] * x[c][j] for c in range(n)) - rhs[r][j]
            assert residual == 0, f"nonzero residual at ({r}, {j})"
    return x


@dataclass(frozen=True)
class StressAssignment:
    """Symmetric per-edge weights; keys are ordered pairs (i, j), i < j."""

    weights: dict[tuple[int, int], Fraction]

    def get(self, i: int, j: int) -> Fraction:
        return self.weights[(i, j) if i < j else (j, i)]

    @staticmethod
    def unit_interior(pmap: PlanarMap, sel: OuterFaceSelection) -> "StressAssignment":
        """Weight 1 on interior edges, 0 on the outer-face edges."""
        k = sel.k
        ring = {
            tuple(sorted((sel.boundary[a], sel.boundary[(a + 1) % k])))
            for a in range(k)
        }
        weights = {
            e: Fraction(0) if e in ring else Fraction(1) for e in sorted(pmap.edges)
        }
        return StressAssignment(weights)


@dataclass(frozen=True)
class LaplacianBlocks:
    """Weighted Laplacian in boundary-first indexing and its blocks.

    Indices follow sel.order: boundary vertices first (in placement
    order), then interior vertices ascending.  det_reduced is the exact
    determinant of the interior block.
    """

    k: int
    full: Matrix
    det_reduced: int

    @property
    def n(self) -> int:
        return len(self.full)

    @property
    def bb(self) -> Matrix:
        return [row[: self.k] for row in self.full[: self.k]]

    @property
    def bi(self) -> Matrix:
        return [row[self.k:] for row in self.full[: self.k]]

    @property
    def ib(self) -> Matrix:
        return [row[: self.k] for row in self.full[self.k:]]

    @property
    def ii(self) -> Matrix:
        return [row[self.k:] for row in self.full[self.k:]]


def assemble_laplacian(
    pmap: PlanarMap, sel: OuterFaceSelection, stress: StressAssignment
) -> LaplacianBlocks:
    """Build the weighted Laplacian in boundary-first indexing.

    Row sums are zero by construction; det of the interior block is
    computed exactly (Bareiss when all entries are integers).
    """
    n = pmap.n
    idx = sel.new_index
    full: Matrix = [[Fraction(0)] * n for _ in range(n)]
    for (u, v) in sorted(pmap.edges):
        w = stress.get(u, v)
        a, b = idx[u], idx[v]
        full[a][b] -= w
        full[b][a] -= w
        full[a][a] += w
        full[b][b] += w
    reduced = [row[sel.k:] for row in full[sel.k:]]
    if all(x.denominator == 1 for row in reduced for x in row):
        det = determinant_exact([[int(x) for x in row] for row in reduced])
    else:
        det = determinant_rational(reduced)  # type: ignore[assignment]
    if det == 0:
        raise SingularReducedLaplacian("det of interior Laplacian block is zero")
    return LaplacianBlocks(k=sel.k, full=full, det_reduced=det)
