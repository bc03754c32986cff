"""Face lattice of a polyhedral unit ball.

Proper faces are recovered from facet-vertex incidence by closing the facet
family under intersection; the hypercube and cross-polytope balls of l-inf
and l1 use direct combinatorial generation instead (sign patterns), and their
per-dimension counts are available in closed form up to dimension 12 without
materializing the lattice.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError
from .linalg import Vec, affine_rank, dot, unit
from .spaces import (
    INF,
    SpaceSpec,
    ball_vertices,
    dual_ball_vertices,
    is_polyhedral_like,
    norm,
    require_dim,
)
from .support import support_set

_MAX_LATTICE_DIM_GENERAL = 6
_MAX_LATTICE_DIM_CLOSED_FORM = 8


@dataclass(frozen=True)
class Face:
    """A proper face of the unit ball.

    ``vertices`` is exactly the set of ball vertices on the face (sorted
    canonically); ``supporting`` lists the dual-ball vertices attaining value
    one on every vertex of the face.
    """

    vertices: tuple[Vec, ...]
    dim: int
    supporting: tuple[Vec, ...]

    def centroid(self) -> Vec:
        count = Fraction(len(self.vertices))
        return tuple(
            sum(v[k] for v in self.vertices) / count for k in range(len(self.vertices[0]))
        )

    def negated(self) -> "Face":
        return Face(
            tuple(sorted(tuple(-c for c in v) for v in self.vertices)),
            self.dim,
            tuple(sorted(tuple(-c for c in f) for f in self.supporting)),
        )


@dataclass(frozen=True)
class FaceCensus:
    counts: tuple[int, ...]  # |F_k| for k = 0 .. n-1
    total: int


def _require_polyhedral(space: SpaceSpec) -> None:
    if not is_polyhedral_like(space):
        raise InputError("not_polyhedral", f"{space!r} is not a polyhedral space")


@lru_cache(maxsize=None)
def face_lattice(space: SpaceSpec) -> tuple[Face, ...]:
    """All proper faces, each exactly once, sorted by (dim, vertex list)."""
    _require_polyhedral(space)
    if space.kind == "lp":
        if space.dim > _MAX_LATTICE_DIM_CLOSED_FORM:
            raise InputError(
                "dim_too_large",
                f"materializing 3^{space.dim} faces exceeds the desk-scale guard; "
                "use face_census for counts",
            )
        faces = _cube_faces(space.dim) if space.p == INF else _cross_faces(space.dim)
    else:
        if space.dim > _MAX_LATTICE_DIM_GENERAL:
            raise InputError("dim_too_large", "general face lattices are limited to dimension 6")
        faces = _faces_by_intersection(space)
    return tuple(sorted(faces, key=lambda f: (f.dim, f.vertices)))


def _cube_faces(n: int) -> list[Face]:
    one = Fraction(1)
    faces = []
    for pattern in itertools.product((-1, 0, 1), repeat=n):
        frozen = [i for i, s in enumerate(pattern) if s != 0]
        if not frozen:
            continue  # the whole ball, not a proper face
        free = [i for i, s in enumerate(pattern) if s == 0]
        verts = []
        for signs in itertools.product((one, -one), repeat=len(free)):
            v = [Fraction(s) for s in pattern]
            for pos, s in zip(free, signs):
                v[pos] = s
            verts.append(tuple(v))
        supporting = tuple(unit(n, i, pattern[i]) for i in frozen)
        faces.append(Face(tuple(sorted(verts)), len(free), supporting))
    return faces


def _cross_faces(n: int) -> list[Face]:
    one = Fraction(1)
    faces = []
    for pattern in itertools.product((-1, 0, 1), repeat=n):
        supp = [i for i, s in enumerate(pattern) if s != 0]
        if not supp:
            continue
        verts = tuple(sorted(unit(n, i, pattern[i]) for i in supp))
        free = [i for i, s in enumerate(pattern) if s == 0]
        supporting = []
        for signs in itertools.product((one, -one), repeat=len(free)):
            f = [Fraction(s) for s in pattern]
            for pos, s in zip(free, signs):
                f[pos] = s
            supporting.append(tuple(f))
        faces.append(Face(verts, len(supp) - 1, tuple(sorted(supporting))))
    return faces


def _faces_by_intersection(space: SpaceSpec) -> list[Face]:
    verts = ball_vertices(space)
    duals = dual_ball_vertices(space)
    facets = [
        frozenset(i for i, v in enumerate(verts) if dot(f, v) == 1) for f in duals
    ]
    closed: set[frozenset[int]] = set(facets)
    frontier = list(closed)
    while frontier:
        fresh = []
        for s in frontier:
            for f in facets:
                meet = s & f
                if meet and meet not in closed:
                    closed.add(meet)
                    fresh.append(meet)
        frontier = fresh
    faces = []
    for index_set in closed:
        vs = tuple(sorted(verts[i] for i in index_set))
        supporting = tuple(sorted(f for f in duals if all(dot(f, v) == 1 for v in vs)))
        faces.append(Face(vs, affine_rank(vs), supporting))
    return faces


def face_census(space: SpaceSpec) -> FaceCensus:
    """Per-dimension face counts |F_k|, k = 0 .. n-1."""
    _require_polyhedral(space)
    n = space.dim
    if space.kind == "lp":
        if space.p == INF:
            counts = tuple(math.comb(n, k) * 2 ** (n - k) for k in range(n))
        else:
            counts = tuple(math.comb(n, k + 1) * 2 ** (k + 1) for k in range(n))
    else:
        counts_list = [0] * n
        for face in face_lattice(space):
            counts_list[face.dim] += 1
        counts = tuple(counts_list)
    return FaceCensus(counts, sum(counts))


def extreme_points(space: SpaceSpec) -> tuple[Vec, ...]:
    """The extreme points of the unit ball (its vertices)."""
    _require_polyhedral(space)
    return tuple(sorted(ball_vertices(space)))


def minimal_face(space: SpaceSpec, x: Vec) -> Face:
    """The unique face containing x in its relative interior.

    Its vertex set consists of the ball vertices on which every supporting
    functional of x attains value one; its supporting set equals J(x).
    """
    _require_polyhedral(space)
    require_dim(space, x)
    if norm(space, x) != 1:
        raise InputError("not_unit", "x must lie on the unit sphere")
    sup = support_set(space, x).vertices
    vs = tuple(sorted(v for v in ball_vertices(space) if all(dot(f, v) == 1 for f in sup)))
    return Face(vs, affine_rank(vs), tuple(sorted(sup)))


def is_relative_interior(space: SpaceSpec, x: Vec, face: Face) -> bool:
    return minimal_face(space, x).vertices == face.vertices


def antipodal_representatives(space: SpaceSpec) -> tuple[Face, ...]:
    """One face per antipodal pair {F, -F}, in canonical order."""
    chosen = []
    for face in face_lattice(space):
        if face.vertices <= face.negated().vertices:
            chosen.append(face)
    return tuple(chosen)
