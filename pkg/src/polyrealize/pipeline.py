"""End-to-end realization pipeline.

Order of operations: validate the map, pick the outer face, assemble the
weighted Laplacian, compute substitution stresses, classify the boundary
case (possibly relabeling the outer cycle and, for mirrored pentagon
relabelings, flipping the whole map so faces stay counterclockwise),
place the boundary by closed forms, solve the interior, scale to the
integer grid, lift to heights, and certify the result.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .boundary_placement import (
    BoundaryPlacement,
    BoundaryStressSolution,
    CaseType,
    Classification,
    boundary_stresses,
    classify,
    place_boundary,
)
from .equilibrium import (
    PlaneEmbedding,
    SubstitutionStress,
    residual_forces,
    substitution_stresses,
    tutte_interior,
)
from .exact_linalg import StressAssignment, assemble_laplacian
from .grid_embedding import (
    GridEmbedding,
    ScalingFactors,
    apply_scaling,
    gcd_reduce,
    scale_factors,
)
from .lifting import LiftedPolytope, choose_f1, lift_vertices, propagate_planes
from .planar_map import (
    OuterFaceSelection,
    PlanarMap,
    choose_outer_face,
    validate,
    with_boundary_order,
)
from .verification import Certificate, check_realization, check_theorem_bounds


@dataclass(frozen=True)
class ReducedRealization:
    """Grid and lift after dividing out the coordinate gcds."""

    grid: GridEmbedding
    poly: LiftedPolytope
    gcd_x: int
    gcd_y: int
    certificate: Optional[Certificate]


@dataclass(frozen=True)
class Realization:
    """Everything the pipeline produced, in boundary-first indexing.

    pmap and sel reflect the final orientation and boundary order; the
    vertex at position sel.new_index[v] of poly.vertices realizes the
    input vertex v.
    """

    pmap: PlanarMap
    sel: OuterFaceSelection
    classification: Classification
    sub: SubstitutionStress
    placement: BoundaryPlacement
    plane: PlaneEmbedding
    factors: ScalingFactors
    grid: GridEmbedding
    f1: int
    poly: LiftedPolytope
    boundary_stress: BoundaryStressSolution
    certificate: Optional[Certificate]
    bounds_checked: bool
    reduced: Optional[ReducedRealization]
    timings: tuple[tuple[str, float], ...]

    @property
    def case(self) -> CaseType:
        return self.classification.case

    def vertex_coordinates(self) -> tuple[tuple[int, int, int], ...]:
        """Integer coordinates indexed by original vertex id."""
        poly = self.reduced.poly if self.reduced is not None else self.poly
        idx = self.sel.new_index
        return tuple(poly.vertices[idx[v]] for v in range(self.pmap.n))

    def digest(self) -> str:
        """Deterministic fingerprint of the output coordinates."""
        payload = json.dumps(
            [list(p) for p in self.vertex_coordinates()], separators=(",", ":")
        ).encode()
        return hashlib.sha256(payload).hexdigest()

    def report(self) -> dict:
        """JSON-serializable run report with exact rational strings."""
        sub = self.sub
        out = {
            "n": self.pmap.n,
            "edges": self.pmap.num_edges,
            "faces": self.pmap.num_faces,
            "outer_face": self.sel.f0,
            "boundary": list(self.sel.boundary),
            "case": self.case.value,
            "relabeling": list(self.classification.perm),
            "orientation_flipped": self.classification.reversed_cycle,
            "det_reduced": sub.det_reduced,
            "substitution_stresses": {
                f"{i},{j}": _frac_str(sub.get(i, j))
                for i in range(sub.k)
                for j in range(i + 1, sub.k)
            },
            "boundary_stresses": [
                _frac_str(v) for v in self.boundary_stress.values
            ],
            "scale_x": self.factors.s_x,
            "scale_y": self.factors.s_y,
            "span_x": self.grid.delta_x,
            "span_y": self.grid.delta_y,
            "max_z": self.poly.max_z,
            "vertices": [list(p) for p in self.poly.vertices],
            "digest": self.digest(),
            "timings_ms": {
                name: round(sec * 1000.0, 3) for name, sec in self.timings
            },
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.as_dict()
            out["theorem_bounds_checked"] = self.bounds_checked
        if self.reduced is not None:
            red = self.reduced
            out["reduced"] = {
                "gcd_x": red.gcd_x,
                "gcd_y": red.gcd_y,
                "span_x": red.grid.delta_x,
                "span_y": red.grid.delta_y,
                "max_z": red.poly.max_z,
                "vertices": [list(p) for p in red.poly.vertices],
            }
            if red.certificate is not None:
                out["reduced"]["certificate"] = red.certificate.as_dict()
        return out


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def realize(
    source: Union[dict, PlanarMap],
    *,
    outer_face: Optional[int] = None,
    reduce: bool = False,
    verify: bool = True,
) -> Realization:
    """Realize a 3-connected planar map as a convex integer 3-polytope."""
    timings: list[tuple[str, float]] = []

    def clock(name: str, start: float) -> float:
        now = time.perf_counter()
        timings.append((name, now - start))
        return now

    t = time.perf_counter()
    pmap = source if isinstance(source, PlanarMap) else validate(source)
    sel = choose_outer_face(pmap, outer_face)
    t = clock("validate", t)

    stress = StressAssignment.unit_interior(pmap, sel)
    blocks = assemble_laplacian(pmap, sel, stress)
    sub = substitution_stresses(blocks)
    t = clock("laplacian", t)

    cls = classify(sub, sel.k)
    if cls.reversed_cycle:
        pmap = pmap.reversed_orientation()
    if cls.perm != tuple(range(sel.k)) or cls.reversed_cycle:
        new_boundary = tuple(sel.boundary[p] for p in cls.perm)
        sel = with_boundary_order(pmap, sel, new_boundary)
        stress = StressAssignment.unit_interior(pmap, sel)
        blocks = assemble_laplacian(pmap, sel, stress)
        relabeled = substitution_stresses(blocks)
        expected = sub.permuted(cls.perm)
        assert relabeled.omega == expected.omega
        assert relabeled.det_reduced == expected.det_reduced
        sub = relabeled
    t = clock("classify", t)

    placement = place_boundary(cls.case, sub)
    plane = tutte_interior(blocks, sel, placement.coords, pmap, stress)
    residual_forces(plane, pmap, stress, sub)
    bstress = boundary_stresses(cls.case, sub)
    _check_plane_equilibrium(plane, pmap, sel, stress, bstress)
    t = clock("embed", t)

    factors = scale_factors(cls.case, sub)
    grid = apply_scaling(plane, factors, sub)
    f1 = choose_f1(pmap, sel)
    planes = propagate_planes(grid, pmap, sel, f1)
    poly = lift_vertices(planes, grid, pmap, sel, f1)
    t = clock("lift", t)

    cert: Optional[Certificate] = None
    # The per-type global coordinate ceilings assume the outer face is a
    # smallest face of the graph (the ceilings come from spanning-tree
    # counts that depend on the smallest face size); skip them when an
    # override picked a larger face.
    bounds_applicable = sel.k == min(len(f) for f in pmap.faces)
    if verify:
        cert = check_realization(poly, pmap, sel, bstress)
        if bounds_applicable:
            bounds = check_theorem_bounds(poly, cls.case, pmap.n)
            if not all(bounds.values()):
                cert.theorem_bound_ok = False
                cert.witnesses.append(f"coordinate bound exceeded: {bounds}")
        t = clock("verify", t)

    reduced: Optional[ReducedRealization] = None
    if reduce:
        red_grid, gx, gy = gcd_reduce(grid, sub)
        red_planes = propagate_planes(red_grid, pmap, sel, f1)
        red_poly = lift_vertices(red_planes, red_grid, pmap, sel, f1)
        red_cert = (
            check_realization(red_poly, pmap, sel, bstress) if verify else None
        )
        reduced = ReducedRealization(
            grid=red_grid, poly=red_poly, gcd_x=gx, gcd_y=gy, certificate=red_cert
        )
        t = clock("reduce", t)

    return Realization(
        pmap=pmap,
        sel=sel,
        classification=cls,
        sub=sub,
        placement=placement,
        plane=plane,
        factors=factors,
        grid=grid,
        f1=f1,
        poly=poly,
        boundary_stress=bstress,
        certificate=cert,
        bounds_checked=verify and bounds_applicable,
        reduced=reduced,
        timings=tuple(timings),
    )


def _check_plane_equilibrium(
    plane: PlaneEmbedding,
    pmap: PlanarMap,
    sel: OuterFaceSelection,
    stress: StressAssignment,
    bstress: BoundaryStressSolution,
) -> None:
    """Exact equilibrium of the rational embedding under the full stress."""
    k = sel.k
    weights = dict(stress.weights)
    for a in range(k):
        u, v = sel.boundary[a], sel.boundary[(a + 1) % k]
        weights[(min(u, v), max(u, v))] = bstress.values[a]
    idx = sel.new_index
    for v in range(pmap.n):
        fx = Fraction(0)
        fy = Fraction(0)
        pv = plane.coords[idx[v]]
        for u in pmap.neighbors(v):
            w = weights[(min(u, v), max(u, v))]
            pu = plane.coords[idx[u]]
            fx += w * (pv[0] - pu[0])
            fy += w * (pv[1] - pu[1])
        assert fx == 0 and fy == 0, f"vertex {v} not in full equilibrium"
