"""Exact linear algebra against independent brute-force oracles."""

import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import maps
from polyrealize.errors import SingularMatrix
from polyrealize.exact_linalg import (
    StressAssignment,
    assemble_laplacian,
    determinant_exact,
    determinant_rational,
    mat,
    mat_mul,
    mat_transpose,
    solve_exact,
)
from polyrealize.planar_map import choose_outer_face, validate


def det_by_cofactor(a):
    """O(n!) Leibniz/cofactor determinant, the oracle."""
    n = len(a)
    if n == 1:
        return a[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in a[1:]]
        total += (-1) ** j * a[0][j] * det_by_cofactor(minor)
    return total


small_int_matrix = st.integers(min_value=2, max_value=5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-9, max_value=9), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


@settings(max_examples=200, deadline=None)
@given(small_int_matrix)
def test_bareiss_matches_cofactor(a):
    assert determinant_exact(a) == det_by_cofactor(a)


@settings(max_examples=100, deadline=None)
@given(small_int_matrix)
def test_bareiss_matches_rational_elimination(a):
    assert determinant_exact(a) == determinant_rational(mat(a))


@settings(max_examples=100, deadline=None)
@given(small_int_matrix)
def test_determinant_of_transpose(a):
    assert determinant_exact(a) == determinant_exact(
        [list(row) for row in zip(*a)]
    )


def test_solve_matches_cramer():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 5)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        d = det_by_cofactor(a)
        if d == 0:
            continue
        b = [[rng.randint(-9, 9)] for _ in range(n)]
        x = solve_exact(mat(a), mat(b))
        for i in range(n):
            repl = [row[:] for row in a]
            for r in range(n):
                repl[r][i] = b[r][0]
            assert x[i][0] == Fraction(det_by_cofactor(repl), d)


def test_solve_singular_raises():
    a = mat([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrix):
        solve_exact(a, mat([[1], [1]]))


def test_mat_mul_transpose():
    a = mat([[1, 2], [3, 4], [5, 6]])
    b = mat_transpose(a)
    prod = mat_mul(b, a)
    assert prod == mat([[35, 44], [44, 56]])


def test_unit_interior_stress_zero_on_ring():
    pm = validate(maps.CUBE)
    sel = choose_outer_face(pm)
    stress = StressAssignment.unit_interior(pm, sel)
    k = sel.k
    ring = {
        tuple(sorted((sel.boundary[a], sel.boundary[(a + 1) % k])))
        for a in range(k)
    }
    for e in pm.edges:
        assert stress.get(*e) == (0 if e in ring else 1)


def test_laplacian_row_sums_zero():
    for raw in (maps.TETRAHEDRON, maps.CUBE, maps.dodecahedron()):
        pm = validate(raw)
        sel = choose_outer_face(pm)
        blocks = assemble_laplacian(pm, sel, StressAssignment.unit_interior(pm, sel))
        for row in blocks.full:
            assert sum(row) == 0
        assert blocks.det_reduced > 0


def test_laplacian_block_shapes():
    pm = validate(maps.dodecahedron())
    sel = choose_outer_face(pm)
    blocks = assemble_laplacian(pm, sel, StressAssignment.unit_interior(pm, sel))
    k = sel.k
    assert len(blocks.bb) == k and len(blocks.bb[0]) == k
    assert len(blocks.bi) == k and len(blocks.bi[0]) == pm.n - k
    assert len(blocks.ib) == pm.n - k and len(blocks.ib[0]) == k
    assert len(blocks.ii) == pm.n - k and len(blocks.ii[0]) == pm.n - k
    assert blocks.bi == mat_transpose(blocks.ib)


def test_det_reduced_independent_of_boundary_rotation():
    pm = validate(maps.CUBE)
    sel = choose_outer_face(pm)
    base = assemble_laplacian(pm, sel, StressAssignment.unit_interior(pm, sel))
    from polyrealize.planar_map import with_boundary_order

    for rot in range(1, sel.k):
        order = sel.boundary[rot:] + sel.boundary[:rot]
        sel2 = with_boundary_order(pm, sel, order)
        other = assemble_laplacian(pm, sel2, StressAssignment.unit_interior(pm, sel2))
        assert other.det_reduced == base.det_reduced
