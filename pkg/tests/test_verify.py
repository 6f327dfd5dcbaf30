"""Output certificates and the counting oracles."""

import pytest

import maps
from polyrealize import realize
from polyrealize.errors import TooLargeForBruteForce
from polyrealize.exact_linalg import StressAssignment, assemble_laplacian
from polyrealize.lifting import LiftedPolytope
from polyrealize.planar_map import choose_outer_face, validate
from polyrealize.verification import (
    check_realization,
    count_spanning_b_forests,
    count_spanning_trees,
    degree_product,
)


def test_tetrahedron_counts():
    pm = validate(maps.TETRAHEDRON)
    sel = choose_outer_face(pm)
    assert count_spanning_b_forests(pm, sel) == 3
    assert count_spanning_trees(pm) == 16  # Cayley: 4^2


def test_cube_counts():
    pm = validate(maps.CUBE)
    sel = choose_outer_face(pm)
    assert count_spanning_b_forests(pm, sel) == 45
    assert count_spanning_trees(pm) == 384


def test_small_example_forest_count():
    pm = validate(maps.SMALL_EXAMPLE)
    sel = choose_outer_face(pm, maps.SMALL_EXAMPLE_OUTER)
    assert count_spanning_b_forests(pm, sel) == 95


def test_forest_count_equals_reduced_determinant():
    for raw in (
        maps.TETRAHEDRON,
        maps.CUBE,
        maps.OCTAHEDRON,
        maps.prism(5),
        maps.antiprism(4),
    ):
        pm = validate(raw)
        sel = choose_outer_face(pm)
        blocks = assemble_laplacian(pm, sel, StressAssignment.unit_interior(pm, sel))
        assert blocks.det_reduced == count_spanning_b_forests(pm, sel)


def test_count_inequalities():
    for raw in (maps.TETRAHEDRON, maps.CUBE, maps.prism(5), maps.antiprism(4)):
        pm = validate(raw)
        sel = choose_outer_face(pm)
        fb = count_spanning_b_forests(pm, sel)
        trees = count_spanning_trees(pm)
        assert fb < trees < degree_product(pm) < 6 ** pm.n


def test_brute_force_guard():
    pm = validate(maps.dodecahedron())
    sel = choose_outer_face(pm)
    with pytest.raises(TooLargeForBruteForce):
        count_spanning_b_forests(pm, sel)
    with pytest.raises(TooLargeForBruteForce):
        count_spanning_trees(pm)


def test_certificate_all_true_on_basics():
    for raw in (maps.TETRAHEDRON, maps.CUBE, maps.dodecahedron(), maps.prism(6)):
        r = realize(raw)
        assert r.certificate.all_ok, r.certificate.witnesses


def _perturb(poly: LiftedPolytope, pos: int, dz: int) -> LiftedPolytope:
    verts = list(poly.vertices)
    x, y, z = verts[pos]
    verts[pos] = (x, y, z + dz)
    return LiftedPolytope(
        vertices=tuple(verts),
        planes=poly.planes,
        f0=poly.f0,
        f1=poly.f1,
        z_shift=poly.z_shift,
    )


def test_perturbed_height_breaks_certificate():
    r = realize(maps.dodecahedron())
    broken = _perturb(r.poly, r.pmap.n - 1, 1)
    cert = check_realization(broken, r.pmap, r.sel, r.boundary_stress)
    assert not cert.all_ok
    assert not cert.planarity_ok
    assert cert.witnesses


def test_perturbed_height_breaks_equilibrium_flag():
    r = realize(maps.CUBE)
    broken = _perturb(r.poly, 0, 7)
    cert = check_realization(broken, r.pmap, r.sel, r.boundary_stress)
    assert not cert.all_ok


def test_certificate_dict_shape():
    r = realize(maps.TETRAHEDRON)
    d = r.certificate.as_dict()
    assert d["all_ok"] is True
    assert set(d) == {
        "equilibrium_ok",
        "planarity_ok",
        "convex_position_ok",
        "face_lattice_ok",
        "stress_signs_ok",
        "z_bound_ok",
        "theorem_bound_ok",
        "all_ok",
        "witnesses",
    }
