"""Finite-dimensional real normed spaces, operators and duality.

Two families of spaces are supported:

* ``lp`` spaces with a rational exponent ``p >= 1`` or ``p = inf``;
* ``polyhedral`` spaces given by the vertices of their unit ball
  (the V-representation of a symmetric full-dimensional polytope).

Arithmetic split: everything polyhedral -- which includes l1 and l-infinity,
internally lowered to cross-polytope/hypercube balls -- runs exactly over
`fractions.Fraction`; lp spaces with 1 < p < infinity run in floats (for
p = 2 the squared norm and pairings stay exact on rational inputs, since
only the norm itself involves a square root).
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

from .errors import DimensionMismatch, InputError
from .linalg import (
    Mat,
    Vec,
    dot,
    is_zero_vec,
    mat,
    mat_vec,
    matrix_rank,
    solve_square,
    transpose,
    unit,
    vec,
    vec_neg,
)
from .simplex import feasible_point

INF = "inf"

EXACT = "exact"
FLOAT = "float"

# Hypercube vertex sets grow as 2^n; reject anything past this.
MAX_CUBE_DIM = 12
# General polar enumeration scans n-subsets of the vertex list.
_MAX_POLAR_SUBSETS = 500_000


def float_tolerance() -> float:
    """Relative tolerance used on every float-path decision (env-overridable)."""
    return float(os.environ.get("BJLEVEL_FLOAT_TOL", "1e-9"))


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError("bad_rational", f"not a rational number: {text!r}") from exc


def parse_vector(text: str) -> Vec:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise InputError("bad_vector", f"not a comma-separated rational vector: {text!r}")
    return tuple(parse_rational(p) for p in parts)


def frac_str(value: Fraction) -> str:
    return str(value)


def sgn(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class SpaceSpec:
    """A finite-dimensional real normed space.

    ``kind`` is ``"lp"`` (with ``p`` a Fraction or the string ``"inf"``) or
    ``"polyhedral"`` (with ``ball_vertices`` the unit-ball vertex list).
    Instances are immutable and hashable; all derived data (polars, face
    lattices) is cached per space.
    """

    kind: str
    dim: int
    p: Optional[Union[Fraction, str]] = None
    ball_vertices: Optional[tuple[Vec, ...]] = None

    def __repr__(self) -> str:  # compact, e.g. lp(1)^3
        if self.kind == "lp":
            return f"lp({self.p})^{self.dim}"
        return f"polyhedral^{self.dim}[{len(self.ball_vertices or ())} vertices]"


def lp_space(p: Union[int, str, Fraction], dim: int) -> SpaceSpec:
    if dim < 1:
        raise InputError("bad_dim", f"dimension must be >= 1, got {dim}")
    if p == INF or p == math.inf:
        if dim > MAX_CUBE_DIM:
            raise InputError(
                "dim_too_large",
                f"l-infinity unit ball has 2^{dim} vertices; dimensions above "
                f"{MAX_CUBE_DIM} are rejected",
            )
        return SpaceSpec("lp", dim, INF, None)
    pf = parse_rational(p)
    if pf < 1:
        raise InputError("bad_exponent", f"lp exponent must satisfy p >= 1, got {pf}")
    if pf == 1 and dim > MAX_CUBE_DIM:
        raise InputError(
            "dim_too_large",
            f"the dual ball of l1^{dim} has 2^{dim} vertices; dimensions above "
            f"{MAX_CUBE_DIM} are rejected",
        )
    return SpaceSpec("lp", dim, pf, None)


def l1(dim: int) -> SpaceSpec:
    return lp_space(1, dim)


def l2(dim: int) -> SpaceSpec:
    return lp_space(2, dim)


def linf(dim: int) -> SpaceSpec:
    return lp_space(INF, dim)


def polyhedral_space(vertices: Iterable[Iterable], validate: bool = True) -> SpaceSpec:
    verts = tuple(vec(v) for v in vertices)
    if not verts:
        raise InputError("bad_ball", "polyhedral space needs at least one ball vertex")
    dim = len(verts[0])
    if validate:
        _validate_ball_vertices(verts, dim)
    return SpaceSpec("polyhedral", dim, None, verts)


def _validate_ball_vertices(verts: tuple[Vec, ...], dim: int) -> None:
    if any(len(v) != dim for v in verts):
        raise DimensionMismatch("ball vertices have inconsistent dimensions")
    if len(set(verts)) != len(verts):
        raise InputError("bad_ball", "duplicate ball vertices")
    vert_set = set(verts)
    for v in verts:
        if is_zero_vec(v):
            raise InputError("bad_ball", "zero vector listed as a ball vertex")
        if vec_neg(v) not in vert_set:
            raise InputError("bad_ball", f"ball vertices are not symmetric: missing -{v}")
    if matrix_rank(verts) != dim:
        raise InputError("bad_ball", "ball vertices do not span the space")
    for idx, v in enumerate(verts):
        others = [w for j, w in enumerate(verts) if j != idx]
        # v extreme <=> v is not a convex combination of the other vertices.
        rows = [[w[k] for w in others] for k in range(dim)]
        rows.append([Fraction(1)] * len(others))
        rhs = list(v) + [Fraction(1)]
        if feasible_point(rows, rhs) is not None:
            raise InputError("bad_ball", f"listed vertex {v} is not an extreme point")


def is_exact(space: SpaceSpec) -> bool:
    return space.kind == "polyhedral" or space.p == 1 or space.p == INF


def is_polyhedral_like(space: SpaceSpec) -> bool:
    return is_exact(space)


def arithmetic_mode(space: SpaceSpec) -> str:
    return EXACT if is_exact(space) else FLOAT


def require_dim(space: SpaceSpec, x: Vec) -> None:
    if len(x) != space.dim:
        raise DimensionMismatch(
            f"vector has dimension {len(x)}, space has dimension {space.dim}"
        )


def norm(space: SpaceSpec, x: Vec) -> Union[Fraction, float]:
    """The norm of x: a Fraction on exact paths, a float on lp float paths."""
    require_dim(space, x)
    if space.kind == "polyhedral":
        return max(dot(f, x) for f in dual_ball_vertices(space))
    if space.p == 1:
        return sum((abs(c) for c in x), Fraction(0))
    if space.p == INF:
        return max(abs(c) for c in x)
    if space.p == 2:
        return math.sqrt(float(norm_squared(space, x)))
    pf = float(space.p)
    return sum(abs(float(c)) ** pf for c in x) ** (1.0 / pf)


def norm_squared(space: SpaceSpec, x: Vec) -> Union[Fraction, float]:
    """Exact squared norm where available (polyhedral, l1, l-inf, l2)."""
    if space.kind == "lp" and space.p == 2:
        require_dim(space, x)
        return sum((c * c for c in x), Fraction(0))
    value = norm(space, x)
    return value * value


def conjugate_exponent(p: Union[Fraction, str]) -> Union[Fraction, str]:
    if p == INF:
        return Fraction(1)
    if p == 1:
        return INF
    return p / (p - 1)


def dual_space(space: SpaceSpec) -> SpaceSpec:
    """The dual space: lp(q) with 1/p + 1/q = 1, or the polar polytope."""
    if space.kind == "lp":
        return lp_space(conjugate_exponent(space.p), space.dim)
    return SpaceSpec("polyhedral", space.dim, None, polar_vertices(space))


def dual_norm(space: SpaceSpec, f: Vec) -> Union[Fraction, float]:
    return norm(dual_space(space), f)


def ball_vertices(space: SpaceSpec) -> tuple[Vec, ...]:
    """Vertices of the unit ball (polyhedral-like spaces only)."""
    if space.kind == "polyhedral":
        return space.ball_vertices
    if space.p == 1:
        return _cross_polytope_vertices(space.dim)
    if space.p == INF:
        return _hypercube_vertices(space.dim)
    raise InputError("not_polyhedral", f"{space!r} has no polyhedral unit ball")


def dual_ball_vertices(space: SpaceSpec) -> tuple[Vec, ...]:
    """Vertices of the dual unit ball (= facet functionals of the primal ball)."""
    if space.kind == "polyhedral":
        return polar_vertices(space)
    if space.p == 1:
        return _hypercube_vertices(space.dim)
    if space.p == INF:
        return _cross_polytope_vertices(space.dim)
    raise InputError("not_polyhedral", f"{space!r} has no polyhedral dual ball")


@lru_cache(maxsize=None)
def _cross_polytope_vertices(dim: int) -> tuple[Vec, ...]:
    return tuple(unit(dim, i, s) for i in range(dim) for s in (1, -1))


@lru_cache(maxsize=None)
def _hypercube_vertices(dim: int) -> tuple[Vec, ...]:
    if dim > MAX_CUBE_DIM:
        raise InputError("dim_too_large", f"2^{dim} hypercube vertices exceed the desk-scale guard")
    one = Fraction(1)
    return tuple(
        tuple(Fraction(s) for s in signs)
        for signs in itertools.product((one, -one), repeat=dim)
    )


@lru_cache(maxsize=None)
def polar_vertices(space: SpaceSpec) -> tuple[Vec, ...]:
    """Vertices of the polar polytope, i.e. the facet functionals of the ball.

    Enumerates all dim-subsets of ball vertices, solves f(v_i) = 1 and keeps
    the solutions that are valid on every vertex (f(v) <= 1).  Each such f is
    a vertex of the polar; every polar vertex arises this way.
    """
    verts = ball_vertices(space)
    n = space.dim
    if math.comb(len(verts), n) > _MAX_POLAR_SUBSETS:
        raise InputError(
            "too_many_vertices",
            f"polar enumeration over C({len(verts)},{n}) subsets exceeds the desk-scale guard",
        )
    ones = (Fraction(1),) * n
    found: set[Vec] = set()
    for subset in itertools.combinations(verts, n):
        f = solve_square(mat(subset), ones)
        if f is None or f in found:
            continue
        if all(dot(f, v) <= 1 for v in verts):
            found.add(f)
    return tuple(sorted(found))


def on_unit_sphere(space: SpaceSpec, x: Vec) -> bool:
    value = norm(space, x)
    if is_exact(space):
        return value == 1
    return abs(value - 1.0) <= 10 * float_tolerance()


@dataclass(frozen=True)
class Operator:
    """A linear map between two spaces, stored as a dense rational matrix.

    The matrix has ``codomain.dim`` rows and ``domain.dim`` columns and acts
    by the usual matrix-vector product.
    """

    matrix: Mat
    domain: SpaceSpec
    codomain: SpaceSpec

    def __post_init__(self) -> None:
        if len(self.matrix) != self.codomain.dim:
            raise DimensionMismatch(
                f"matrix has {len(self.matrix)} rows, codomain dimension is {self.codomain.dim}"
            )
        if any(len(row) != self.domain.dim for row in self.matrix):
            raise DimensionMismatch(
                f"matrix rows must have length {self.domain.dim} (domain dimension)"
            )

    def __call__(self, x: Vec) -> Vec:
        require_dim(self.domain, x)
        return mat_vec(self.matrix, x)


def operator(rows: Iterable[Iterable], domain: SpaceSpec, codomain: Optional[SpaceSpec] = None) -> Operator:
    matrix = mat(rows)
    if matrix and any(len(row) != domain.dim for row in matrix):
        raise DimensionMismatch(f"matrix rows must have length {domain.dim} (domain dimension)")
    if codomain is None:
        if len(matrix) != domain.dim:
            raise InputError(
                "missing_codomain",
                "non-square operator matrix needs an explicit codomain space",
            )
        codomain = domain
    return Operator(matrix, domain, codomain)


def identity_operator(space: SpaceSpec) -> Operator:
    n = space.dim
    return Operator(tuple(unit(n, i) for i in range(n)), space, space)


def diagonal_operator(space: SpaceSpec, entries: Iterable) -> Operator:
    diag = vec(entries)
    if len(diag) != space.dim:
        raise DimensionMismatch("diagonal length must equal the space dimension")
    n = space.dim
    rows = tuple(tuple(diag[i] if i == j else Fraction(0) for j in range(n)) for i in range(n))
    return Operator(rows, space, space)


def zero_operator(domain: SpaceSpec, codomain: Optional[SpaceSpec] = None) -> Operator:
    codomain = codomain or domain
    rows = tuple((Fraction(0),) * domain.dim for _ in range(codomain.dim))
    return Operator(rows, domain, codomain)


def adjoint(op: Operator) -> Operator:
    """The adjoint map between dual spaces; (adjoint g)(x) = g(op x)."""
    return Operator(transpose(op.matrix), dual_space(op.codomain), dual_space(op.domain))


def is_zero_operator(op: Operator) -> bool:
    return all(all(entry == 0 for entry in row) for row in op.matrix)


# ---------------------------------------------------------------------------
# JSON-dict forms (rationals serialized as "p/q" strings)


def vector_to_strings(x: Vec) -> list[str]:
    return [frac_str(c) for c in x]


def space_to_dict(space: SpaceSpec) -> dict:
    if space.kind == "lp":
        return {"kind": "lp", "p": frac_str(space.p) if space.p != INF else INF, "dim": space.dim}
    return {
        "kind": "polyhedral",
        "dim": space.dim,
        "ball_vertices": [vector_to_strings(v) for v in space.ball_vertices],
    }


def space_from_dict(data: dict) -> SpaceSpec:
    try:
        kind = data["kind"]
    except (TypeError, KeyError) as exc:
        raise InputError("bad_space_file", "space object needs a 'kind' field") from exc
    if kind == "lp":
        try:
            return lp_space(data["p"], int(data["dim"]))
        except KeyError as exc:
            raise InputError("bad_space_file", f"lp space needs field {exc}") from exc
    if kind == "polyhedral":
        try:
            verts = data["ball_vertices"]
            dim = int(data["dim"])
        except KeyError as exc:
            raise InputError("bad_space_file", f"polyhedral space needs field {exc}") from exc
        space = polyhedral_space([[parse_rational(c) for c in v] for v in verts])
        if space.dim != dim:
            raise DimensionMismatch("declared dim does not match ball vertices")
        return space
    raise InputError("bad_space_file", f"unknown space kind {kind!r}")


def operator_to_dict(op: Operator) -> dict:
    return {"matrix": [vector_to_strings(row) for row in op.matrix]}


def operator_from_dict(data: dict, domain: SpaceSpec, codomain: Optional[SpaceSpec] = None) -> Operator:
    try:
        rows = data["matrix"]
    except (TypeError, KeyError) as exc:
        raise InputError("bad_operator_file", "operator object needs a 'matrix' field") from exc
    return operator([[parse_rational(c) for c in row] for row in rows], domain, codomain)
