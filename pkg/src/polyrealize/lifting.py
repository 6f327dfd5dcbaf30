"""Lifting the stressed integer plane embedding to a convex 3-polytope.

Face planes are propagated across interior edges only, starting from an
interior face fixed in the xy-plane.  Each plane is stored as the pair
(a, d) with height map p -> <p, a> + d.  With integer coordinates and
unit interior stresses every plane parameter and every height is an
integer; heights are normalized so the smallest is zero.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InconsistentHeight, PathInconsistency
from .grid_embedding import GridEmbedding
from .planar_map import OuterFaceSelection, PlanarMap

IntPoint = tuple[int, int]


@dataclass(frozen=True)
class FacePlane:
    face: int
    a: tuple[int, int]
    d: int

    def height(self, p: IntPoint) -> int:
        return self.a[0] * p[0] + self.a[1] * p[1] + self.d


@dataclass(frozen=True)
class LiftedPolytope:
    """Integer vertex coordinates plus per-face planes.

    vertices are indexed like the grid embedding (boundary first); the
    outer face has no propagated plane (planes[f0] is None).  raw_z keeps
    the heights before normalization (start face in the xy-plane, all
    heights <= 0).
    """

    vertices: tuple[tuple[int, int, int], ...]
    planes: tuple[Optional[FacePlane], ...]
    f0: int
    f1: int
    z_shift: int

    @property
    def max_z(self) -> int:
        return max(v[2] for v in self.vertices)


def choose_f1(pmap: PlanarMap, sel: OuterFaceSelection) -> int:
    """The interior face across the first boundary edge from the outer face.

    The first boundary edge joins the first two placed boundary vertices;
    sharing an edge with the outer face keeps the height bound tight.
    """
    u, v = sel.boundary[0], sel.boundary[1]
    for fi, face in enumerate(pmap.faces):
        if fi == sel.f0:
            continue
        m = len(face)
        for a in range(m):
            if {face[a], face[(a + 1) % m]} == {u, v}:
                return fi
    raise AssertionError("boundary edge not shared with an interior face")


def _directed_edge_faces(pmap: PlanarMap) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for fi, face in enumerate(pmap.faces):
        m = len(face)
        for a in range(m):
            out[(face[a], face[(a + 1) % m])] = fi
    return out


def propagate_planes(
    grid: GridEmbedding,
    pmap: PlanarMap,
    sel: OuterFaceSelection,
    f1: int,
    *,
    traversal: str = "bfs",
    use_raw: bool = False,
) -> tuple[Optional[FacePlane], ...]:
    """Assign a plane to every interior face by crossing interior edges.

    The start face gets a = (0, 0), d = 0.  Crossing the directed edge
    (i, j) from the known face right of it to the unknown face left of it
    adds the stress-weighted rotated edge vector; all interior stresses
    are one here.  Whenever propagation reaches an already known face the
    plane must agree exactly, which certifies path independence.

    traversal is "bfs" or "dfs" (used by tests to exercise a second
    spanning tree of the dual); both must produce identical planes.
    """
    coords = grid.raw_coords if use_raw else grid.coords
    idx = sel.new_index
    left_face = _directed_edge_faces(pmap)
    ring = {
        (sel.boundary[a], sel.boundary[(a + 1) % sel.k]) for a in range(sel.k)
    }
    ring |= {(j, i) for (i, j) in ring}

    planes: list[Optional[FacePlane]] = [None] * pmap.num_faces
    planes[f1] = FacePlane(face=f1, a=(0, 0), d=0)
    frontier: deque[int] = deque([f1])
    while frontier:
        fr = frontier.popleft() if traversal == "bfs" else frontier.pop()
        plane_r = planes[fr]
        assert plane_r is not None
        for a in range(len(pmap.faces[fr])):
            face = pmap.faces[fr]
            u, v = face[a], face[(a + 1) % len(face)]
            if (u, v) in ring:
                continue
            fl = left_face[(v, u)]
            if fl == sel.f0:
                continue
            # fl lies left of the directed edge (v, u); stress is 1.
            pv = coords[idx[v]]
            pu = coords[idx[u]]
            ax = plane_r.a[0] - (pv[1] - pu[1])
            ay = plane_r.a[1] + (pv[0] - pu[0])
            d = plane_r.d + (pv[1] * pu[0] - pv[0] * pu[1])
            if planes[fl] is None:
                planes[fl] = FacePlane(face=fl, a=(ax, ay), d=d)
                frontier.append(fl)
            elif planes[fl].a != (ax, ay) or planes[fl].d != d:
                raise PathInconsistency(
                    f"face {fl} received conflicting planes via different paths"
                )
    for fi in range(pmap.num_faces):
        if fi != sel.f0 and planes[fi] is None:
            raise PathInconsistency(
                f"face {fi} unreachable through interior edges"
            )
    return tuple(planes)


def lift_vertices(
    planes: Sequence[Optional[FacePlane]],
    grid: GridEmbedding,
    pmap: PlanarMap,
    sel: OuterFaceSelection,
    f1: int,
    *,
    use_raw: bool = False,
) -> LiftedPolytope:
    """Read each height off an incident interior face and normalize.

    All interior faces incident to a vertex must agree on its height
    exactly.  Heights are then translated so the minimum is zero; the
    bound z < 2 n dx dy on the realized spans is asserted.
    """
    coords = grid.raw_coords if use_raw else grid.coords
    idx = sel.new_index
    heights: list[Optional[int]] = [None] * pmap.n
    for fi, face in enumerate(pmap.faces):
        plane = planes[fi]
        if plane is None:
            continue
        for v in face:
            z = plane.height(coords[idx[v]])
            if heights[v] is None:
                heights[v] = z
            elif heights[v] != z:
                raise InconsistentHeight(
                    f"faces disagree on the height of vertex {v}"
                )
    assert all(h is not None for h in heights)
    z_by_pos = [heights[v] for v in sel.order]
    shift = -min(z_by_pos)  # type: ignore[type-var]
    vertices = tuple(
        (coords[p][0], coords[p][1], z_by_pos[p] + shift)  # type: ignore[operator]
        for p in range(pmap.n)
    )
    dx = max(v[0] for v in vertices) - min(v[0] for v in vertices)
    dy = max(v[1] for v in vertices) - min(v[1] for v in vertices)
    max_z = max(v[2] for v in vertices)
    assert 0 <= max_z < 2 * pmap.n * dx * dy, "height bound violated"
    return LiftedPolytope(
        vertices=vertices,
        planes=tuple(planes),
        f0=sel.f0,
        f1=f1,
        z_shift=shift,
    )
