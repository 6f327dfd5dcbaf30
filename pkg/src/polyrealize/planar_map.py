"""Validated planar maps (graphs of 3-polytopes) and outer-face selection.

A planar map is given by its vertex count and the list of all face
cycles, consistently oriented: every directed edge occurs in exactly one
face cycle.  This fixes the combinatorial embedding, so no planarity
testing is needed.  Validation checks closedness, simplicity, Euler's
formula, minimum degree three and 3-connectivity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    EulerViolation,
    FaceTooLarge,
    InvalidMapError,
    NotClosedSurface,
    NotSimple,
    NotThreeConnected,
)


@dataclass(frozen=True)
class PlanarMap:
    """Combinatorial structure of a 3-polytope.

    faces are cyclic vertex-index sequences; edges is the derived set of
    unordered pairs (i, j) with i < j; vertex_rotation gives the cyclic
    neighbor order around each vertex induced by the face cycles.
    """

    n: int
    faces: tuple[tuple[int, ...], ...]
    edges: frozenset[tuple[int, int]]
    vertex_rotation: tuple[tuple[int, ...], ...]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def degree(self, v: int) -> int:
        return len(self.vertex_rotation[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.vertex_rotation[v]

    def reversed_orientation(self) -> "PlanarMap":
        """The same map with every face cycle reversed (mirror image)."""
        rev = tuple(tuple(reversed(f)) for f in self.faces)
        return validate({"vertices": self.n, "faces": [list(f) for f in rev]})


@dataclass(frozen=True)
class OuterFaceSelection:
    """Choice of outer face and the induced boundary-first relabeling.

    boundary lists the outer-face vertices in the cyclic order in which
    they get placed counterclockwise in the plane; interior lists the
    remaining vertices in ascending order.  new_index maps an original
    vertex id to its index in the boundary-first ordering.
    """

    f0: int
    k: int
    boundary: tuple[int, ...]
    interior: tuple[int, ...]
    new_index: tuple[int, ...]

    @property
    def order(self) -> tuple[int, ...]:
        """Original vertex ids in boundary-first order."""
        return self.boundary + self.interior


def _directed_edges(face: Sequence[int]) -> Iterable[tuple[int, int]]:
    m = len(face)
    for a in range(m):
        yield face[a], face[(a + 1) % m]


def _check_connected(adj: Sequence[Iterable[int]], removed: frozenset[int], n: int) -> bool:
    remaining = [v for v in range(n) if v not in removed]
    if not remaining:
        return True
    seen = {remaining[0]}
    stack = [remaining[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(remaining)


def validate(raw: dict) -> PlanarMap:
    """Validate a raw planar-map dict {"vertices": n, "faces": [...]}.

    Raises a subclass of InvalidMapError describing the first defect
    found; returns the immutable PlanarMap otherwise.
    """
    if not isinstance(raw, dict):
        raise InvalidMapError("input must be a JSON object")
    unknown = set(raw) - {"vertices", "faces"}
    if unknown:
        raise InvalidMapError(f"unknown keys in input: {sorted(unknown)}")
    if "vertices" not in raw or "faces" not in raw:
        raise InvalidMapError('input must have keys "vertices" and "faces"')
    n = raw["vertices"]
    if not isinstance(n, int) or n < 4:
        raise InvalidMapError("vertex count must be an integer >= 4")
    faces_raw = raw["faces"]
    if not isinstance(faces_raw, list) or not faces_raw:
        raise InvalidMapError("faces must be a non-empty list of index cycles")

    faces: list[tuple[int, ...]] = []
    for f in faces_raw:
        if not isinstance(f, list) or len(f) < 3:
            raise InvalidMapError("every face must be a list of at least 3 indices")
        for v in f:
            if not isinstance(v, int) or not 0 <= v < n:
                raise InvalidMapError(f"face vertex index {v!r} out of range [0, {n})")
        if len(set(f)) != len(f):
            raise NotSimple(f"face {f} repeats a vertex")
        faces.append(tuple(f))

    # Closedness: every directed edge in exactly one face cycle.
    directed: dict[tuple[int, int], int] = {}
    for fi, f in enumerate(faces):
        for i, j in _directed_edges(f):
            if i == j:
                raise NotSimple(f"loop at vertex {i}")
            if (i, j) in directed:
                raise NotClosedSurface(f"directed edge {(i, j)} occurs twice")
            directed[(i, j)] = fi
    for i, j in directed:
        if (j, i) not in directed:
            raise NotClosedSurface(f"directed edge {(j, i)} missing")

    edges = frozenset((min(i, j), max(i, j)) for (i, j) in directed)
    if 2 * len(edges) != len(directed):
        raise NotSimple("parallel edge detected (undirected pair in more than two faces)")

    if n - len(edges) + len(faces) != 2:
        raise EulerViolation(
            f"n - E + F = {n} - {len(edges)} + {len(faces)} != 2"
        )

    # Rotation at each vertex: in the face corner (a, v, b) the neighbor b
    # follows a.  The induced permutation must be a single cycle, else the
    # vertex star is not a disk.
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for f in faces:
        m = len(f)
        for a in range(m):
            prev_v, v, next_v = f[a - 1], f[a], f[(a + 1) % m]
            succ[v][prev_v] = next_v
    rotations: list[tuple[int, ...]] = []
    for v in range(n):
        nbrs = succ[v]
        if len(nbrs) < 3:
            raise NotThreeConnected(f"vertex {v} has degree {len(nbrs)} < 3")
        start = min(nbrs)
        cycle = [start]
        cur = nbrs[start]
        while cur != start:
            if len(cycle) > len(nbrs):
                raise NotClosedSurface(f"vertex star of {v} is not a single cycle")
            cycle.append(cur)
            cur = nbrs[cur]
        if len(cycle) != len(nbrs):
            raise NotClosedSurface(f"vertex star of {v} is not a single cycle")
        rotations.append(tuple(cycle))

    # 3-connectivity by exhaustive pair removal; fine at desk scale.
    adj: list[list[int]] = [list(r) for r in rotations]
    if not _check_connected(adj, frozenset(), n):
        raise NotThreeConnected("graph is disconnected")
    for u in range(n):
        for w in range(u + 1, n):
            if not _check_connected(adj, frozenset((u, w)), n):
                raise NotThreeConnected(f"removing vertices {u} and {w} disconnects the graph")

    return PlanarMap(
        n=n,
        faces=tuple(faces),
        edges=edges,
        vertex_rotation=tuple(rotations),
    )


def load(path: str) -> PlanarMap:
    """Load and validate a planar map from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidMapError(f"invalid JSON: {exc}") from exc
    return validate(raw)


def _boundary_order(face: Sequence[int]) -> tuple[int, ...]:
    # The outer cycle as listed runs clockwise around the rest of the
    # graph, so the placement order is the reversed cycle; rotate the
    # smallest vertex id to the front for determinism.
    rev = list(reversed(face))
    a = rev.index(min(rev))
    return tuple(rev[a:] + rev[:a])


def choose_outer_face(pmap: PlanarMap, override: Optional[int] = None) -> OuterFaceSelection:
    """Pick the outer face (smallest, then lowest index) and relabel.

    With override, that face is used instead; it must have at most five
    vertices.
    """
    if override is not None:
        if not 0 <= override < pmap.num_faces:
            raise InvalidMapError(f"outer face index {override} out of range")
        if len(pmap.faces[override]) > 5:
            raise FaceTooLarge(
                f"face {override} has {len(pmap.faces[override])} > 5 vertices"
            )
        f0 = override
    else:
        f0 = min(range(pmap.num_faces), key=lambda i: (len(pmap.faces[i]), i))
    face = pmap.faces[f0]
    k = len(face)
    assert k <= 5, "a 3-connected planar graph always has a face with <= 5 edges"
    boundary = _boundary_order(face)
    interior = tuple(v for v in range(pmap.n) if v not in set(boundary))
    new_index = [0] * pmap.n
    for idx, v in enumerate(boundary + interior):
        new_index[v] = idx
    return OuterFaceSelection(
        f0=f0,
        k=k,
        boundary=boundary,
        interior=interior,
        new_index=tuple(new_index),
    )


def with_boundary_order(
    pmap: PlanarMap, sel: OuterFaceSelection, boundary: Sequence[int]
) -> OuterFaceSelection:
    """Selection with the same outer face but a different boundary order."""
    assert set(boundary) == set(sel.boundary)
    new_index = [0] * pmap.n
    for idx, v in enumerate(tuple(boundary) + sel.interior):
        new_index[v] = idx
    return OuterFaceSelection(
        f0=sel.f0,
        k=sel.k,
        boundary=tuple(boundary),
        interior=sel.interior,
        new_index=tuple(new_index),
    )


def interior_connectivity_check(pmap: PlanarMap, sel: OuterFaceSelection) -> bool:
    """True iff deleting the boundary leaves the interior connected."""
    removed = frozenset(sel.boundary)
    adj = [list(r) for r in pmap.vertex_rotation]
    return _check_connected(adj, removed, pmap.n)
