"""Level vectors of an operator, decided by exact dual certificates.

A nonzero x is a level vector of T exactly when T maps some kernel
hyperplane of a supporting functional at x into the orthogonality set of Tx.
Through the supporting-functional characterization of subspace orthogonality
this reduces to a linear feasibility question:

    exists f in J(x), g in J(Tx)  with  (adjoint T) g = (||Tx||/||x||) f,

where the scale is pinned by evaluating both sides at x.  Local preservation
of Birkhoff-James orthogonality at x is the same condition quantified over
every f in J(x), i.e. the polytope containment (||Tx||/||x||) J(x) inside
(adjoint T)(J(Tx)).  Both are decided by small exact LPs over the vertex
coefficients of the two support polytopes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InputError, InternalCheckError
from .faces import antipodal_representatives, face_census
from .linalg import (
    Vec,
    dot,
    is_zero_vec,
    kernel_basis,
    mat_vec,
    solve_square,
    transpose,
    unit,
    vec_scale,
    vec_sub,
)
from .oracle import RationalStream, sample_sphere
from .orthogonality import bj_orthogonal, subspace_orthogonal
from .simplex import feasible_point
from .spaces import (
    EXACT,
    FLOAT,
    Operator,
    SpaceSpec,
    dual_ball_vertices,
    float_tolerance,
    is_exact,
    is_polyhedral_like,
    norm,
    norm_squared,
    polyhedral_space,
    require_dim,
)
from .support import functional_in_support, support_set

Scalar = Union[Fraction, float]


@dataclass(frozen=True)
class LevelCertificate:
    """Witness that x is a level vector of T.

    ``f`` in J(x) and ``g`` in J(Tx) satisfy (adjoint T) g = (||Tx||/||x||) f;
    the level number is ||Tx||^2/||x||^2.  When Tx = 0 the certificate is the
    degenerate record with level number 0 and no functional pair.
    """

    x: Vec
    f: Optional[tuple]
    g: Optional[tuple]
    level_number: Scalar
    mode: str


@dataclass(frozen=True)
class DirectionalPreservation:
    holds: bool
    witness: Optional[tuple]


@dataclass(frozen=True)
class PreservationReport:
    """Whether T preserves Birkhoff-James orthogonality at a point.

    On failure, ``failing_functional`` is a vertex of J(x) outside the
    containment and ``counterexample`` is a verified pair (y, margin) with
    x orthogonal to y while Tx is not orthogonal to Ty.
    """

    holds: bool
    failing_functional: Optional[tuple]
    counterexample: Optional[tuple[Vec, Scalar]]
    mode: str


def _mode_pair(op: Operator) -> str:
    dom_exact = is_exact(op.domain)
    cod_exact = is_exact(op.codomain)
    if dom_exact and cod_exact:
        return EXACT
    if dom_exact != cod_exact:
        raise InputError(
            "mixed_arithmetic",
            "operators between exact (polyhedral/l1/l-inf) and float (lp) spaces "
            "are not supported",
        )
    return FLOAT


def _adjoint_images(op: Operator, functionals) -> list[Vec]:
    tmat = transpose(op.matrix)
    return [mat_vec(tmat, q) for q in functionals]


def _rationalize(x: Vec) -> Vec:
    # Floats convert exactly (binary expansion), keeping the pipeline rational.
    return tuple(c if isinstance(c, Fraction) else Fraction(c) for c in x)


def is_level_vector(op: Operator, x: Vec) -> Optional[LevelCertificate]:
    """A level certificate for x, or None when x is not a level vector."""
    x = _rationalize(x)
    require_dim(op.domain, x)
    if is_zero_vec(x):
        raise InputError("zero_vector", "x must be nonzero")
    mode = _mode_pair(op)
    tx = op(x)
    if is_zero_vec(tx):
        return LevelCertificate(x, None, None, Fraction(0), mode)
    if mode == FLOAT:
        return _level_vector_float(op, x, tx)

    scale = norm(op.codomain, tx) / norm(op.domain, x)
    p_verts = support_set(op.domain, x).vertices
    q_verts = support_set(op.codomain, tx).vertices
    adj = _adjoint_images(op, q_verts)
    k = norm_squared(op.codomain, tx) / norm_squared(op.domain, x)

    if len(p_verts) == 1 and len(q_verts) == 1:
        if adj[0] == vec_scale(scale, p_verts[0]):
            return LevelCertificate(x, p_verts[0], q_verts[0], k, EXACT)
        return None

    np_, nq = len(p_verts), len(q_verts)
    rows = []
    rhs = []
    for coord in range(op.domain.dim):
        rows.append(
            [-scale * p[coord] for p in p_verts] + [a[coord] for a in adj]
        )
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * np_ + [Fraction(0)] * nq)
    rhs.append(Fraction(1))
    rows.append([Fraction(0)] * np_ + [Fraction(1)] * nq)
    rhs.append(Fraction(1))
    point = feasible_point(rows, rhs)
    if point is None:
        return None
    lam, mu = point[:np_], point[np_:]
    f = tuple(sum(l * p[k2] for l, p in zip(lam, p_verts)) for k2 in range(op.domain.dim))
    g = tuple(sum(m * q[k2] for m, q in zip(mu, q_verts)) for k2 in range(op.codomain.dim))
    if _adjoint_images(op, [g])[0] != vec_scale(scale, f):
        raise InternalCheckError("level certificate fails its defining equation")
    return LevelCertificate(x, f, g, k, EXACT)


def _level_vector_float(op: Operator, x: Vec, tx: Vec) -> Optional[LevelCertificate]:
    tol = float_tolerance()
    if op.domain.p == 2 and op.codomain.p == 2:
        # Right-singular-vector test, exact on rational input: M^T M x = k x.
        # Inputs that arrived as floats (e.g. functionals produced by a
        # normalization) carry dyadic rounding, absorbed by the tolerance.
        k = norm_squared(op.codomain, tx) / norm_squared(op.domain, x)
        residual = vec_sub(mat_vec(transpose(op.matrix), tx), vec_scale(k, x))
        if any(abs(r) > tol * max(1, abs(k)) for r in residual):
            return None
        f = support_set(op.domain, x).vertices[0]
        g = support_set(op.codomain, tx).vertices[0]
        return LevelCertificate(x, f, g, k, FLOAT)
    scale = float(norm(op.codomain, tx)) / float(norm(op.domain, x))
    f = support_set(op.domain, x).vertices[0]
    g = support_set(op.codomain, tx).vertices[0]
    image = [
        sum(float(op.matrix[r][k]) * g[r] for r in range(op.codomain.dim))
        for k in range(op.domain.dim)
    ]
    if all(abs(i - scale * fc) <= tol * max(1.0, scale) for i, fc in zip(image, f)):
        k = float(norm_squared(op.codomain, tx)) / float(norm_squared(op.domain, x))
        return LevelCertificate(x, f, g, k, FLOAT)
    return None


def level_number(op: Operator, x: Vec) -> Scalar:
    """The level number ||Tx||^2/||x||^2 of a level vector x."""
    cert = is_level_vector(op, x)
    if cert is None:
        raise InputError("not_level_vector", f"{x} is not a level vector of the operator")
    return cert.level_number


def preserves_bj_directional(op: Operator, x: Vec, f: Vec) -> DirectionalPreservation:
    """Does T preserve orthogonality at x with respect to ker f, f in J(x)?

    Holds exactly when some g in J(Tx) pulls back to (||Tx||/||x||) f under
    the adjoint; the witness g is returned.
    """
    x = _rationalize(x)
    require_dim(op.domain, x)
    if is_zero_vec(x):
        raise InputError("zero_vector", "x must be nonzero")
    if not functional_in_support(op.domain, x, f):
        raise InputError("not_supporting", "f is not a supporting functional of x")
    mode = _mode_pair(op)
    tx = op(x)
    if is_zero_vec(tx):
        return DirectionalPreservation(True, None)
    if mode == FLOAT:
        cert = _level_vector_float(op, x, tx)
        return DirectionalPreservation(cert is not None, cert.g if cert else None)
    scale = norm(op.codomain, tx) / norm(op.domain, x)
    g = _membership_witness(op, tx, vec_scale(scale, tuple(f)))
    return DirectionalPreservation(g is not None, g)


def _membership_witness(op: Operator, tx: Vec, target: Vec) -> Optional[tuple]:
    """g in J(Tx) with (adjoint T) g = target, or None."""
    q_verts = support_set(op.codomain, tx).vertices
    adj = _adjoint_images(op, q_verts)
    if len(q_verts) == 1:
        return q_verts[0] if adj[0] == target else None
    rows = [[a[k] for a in adj] for k in range(op.domain.dim)]
    rows.append([Fraction(1)] * len(q_verts))
    rhs = list(target) + [Fraction(1)]
    mu = feasible_point(rows, rhs)
    if mu is None:
        return None
    return tuple(
        sum(m * q[k] for m, q in zip(mu, q_verts)) for k in range(op.codomain.dim)
    )


def preserves_bj_at(op: Operator, x: Vec) -> PreservationReport:
    """Decide local preservation of Birkhoff-James orthogonality at x.

    Checks every vertex f of J(x) for membership of (||Tx||/||x||) f in the
    adjoint image of J(Tx); on the first failure a counterexample direction y
    with x orthogonal to y and Tx not orthogonal to Ty is produced by an LP
    and re-verified through `bj_orthogonal` before being reported.
    """
    x = _rationalize(x)
    require_dim(op.domain, x)
    if is_zero_vec(x):
        raise InputError("zero_vector", "x must be nonzero")
    mode = _mode_pair(op)
    tx = op(x)
    if is_zero_vec(tx):
        return PreservationReport(True, None, None, mode)
    if mode == FLOAT:
        return _preserves_float(op, x, tx)
    scale = norm(op.codomain, tx) / norm(op.domain, x)
    for f in support_set(op.domain, x).vertices:
        if _membership_witness(op, tx, vec_scale(scale, f)) is None:
            y, margin = _counterexample_direction(op, tx, f)
            if not bj_orthogonal(op.domain, x, y).orthogonal:
                raise InternalCheckError("counterexample is not orthogonal to x")
            if bj_orthogonal(op.codomain, tx, op(y)).orthogonal:
                raise InternalCheckError("counterexample images remained orthogonal")
            return PreservationReport(False, f, (y, margin), mode)
    return PreservationReport(True, None, None, mode)


def _counterexample_direction(op: Operator, tx: Vec, f: Vec) -> tuple[Vec, Fraction]:
    """y with f(y) = 0 and g(Ty) >= 1 for every vertex g of J(Tx).

    Such y exists whenever the membership of (||Tx||/||x||) f fails, up to
    replacing y by -y; the free variables are split as y = u - w.
    """
    n = op.domain.dim
    q_verts = support_set(op.codomain, tx).vertices
    adj = _adjoint_images(op, q_verts)
    nslack = len(q_verts)
    rows = []
    rhs = []
    rows.append(list(f) + [-c for c in f] + [Fraction(0)] * nslack)
    rhs.append(Fraction(0))
    for j, a in enumerate(adj):
        slack = [Fraction(0)] * nslack
        slack[j] = Fraction(-1)
        rows.append(list(a) + [-c for c in a] + slack)
        rhs.append(Fraction(1))
    point = feasible_point(rows, rhs)
    if point is None:
        raise InternalCheckError(
            "membership failed but no counterexample direction exists"
        )
    y = tuple(point[k] - point[n + k] for k in range(n))
    margin = min(dot(a, y) for a in adj)
    return y, margin


def _preserves_float(op: Operator, x: Vec, tx: Vec) -> PreservationReport:
    tol = float_tolerance()
    cert = _level_vector_float(op, x, tx)
    if cert is not None:
        return PreservationReport(True, None, None, FLOAT)
    # Smooth float spaces: J(x) = {f}; failure yields a kernel direction of f
    # on which the image functional does not vanish.
    f = support_set(op.domain, x).vertices[0]
    g = support_set(op.codomain, tx).vertices[0]
    d = [
        sum(float(op.matrix[r][k]) * g[r] for r in range(op.codomain.dim))
        for k in range(op.domain.dim)
    ]
    best_y, best_val = None, 0.0
    for j in range(op.domain.dim):
        if op.domain.p == 2:
            # ker f = ker <., x>: the projection is exactly rational.
            ratio = x[j] / sum((c * c for c in x), Fraction(0))
            y = vec_sub(unit(op.domain.dim, j), vec_scale(ratio, x))
        else:
            fx = sum(fc * float(xc) for fc, xc in zip(f, x))
            y = vec_sub(
                unit(op.domain.dim, j),
                vec_scale(Fraction(f[j] / fx).limit_denominator(10**12), x),
            )
        val = abs(sum(dc * float(yc) for dc, yc in zip(d, y)))
        if val > best_val:
            best_y, best_val = y, val
    if best_y is None or best_val <= tol:
        return PreservationReport(False, f, None, FLOAT)
    return PreservationReport(False, f, (best_y, best_val), FLOAT)


def kernel_condition(op: Operator, x: Vec) -> bool:
    """Necessary condition for level vectors: Tx = 0 or ker T inside x-orthogonal set."""
    require_dim(op.domain, x)
    if is_zero_vec(x):
        raise InputError("zero_vector", "x must be nonzero")
    if is_zero_vec(op(x)):
        return True
    basis = kernel_basis(op.matrix)
    if not basis:
        return True
    return subspace_orthogonal(op.domain, x, basis).orthogonal


@dataclass(frozen=True)
class FaceProbe:
    """Level-vector findings on one antipodal face pair."""

    face_vertices: tuple[Vec, ...]
    face_dim: int
    points: tuple[Vec, ...]
    level_numbers: tuple[Optional[Scalar], ...]

    @property
    def all_level(self) -> bool:
        return all(k is not None for k in self.level_numbers)

    @property
    def found(self) -> tuple[Scalar, ...]:
        return tuple(k for k in self.level_numbers if k is not None)


@dataclass(frozen=True)
class LevelNumberReport:
    """An under-approximation of the level-number set L(T) by face sampling.

    Faces are probed at their centroid plus seeded strictly-positive convex
    combinations of their vertices; the true L(T) may contain further values,
    hence ``under_approximation`` is always True.  For a fixed seed the
    report is deterministic.
    """

    values: tuple[Scalar, ...]
    per_face: tuple[FaceProbe, ...]
    bound: Optional[Fraction]
    under_approximation: bool
    seed: int
    samples_per_face: int


def enumerate_level_numbers(op: Operator, samples_per_face: int, seed: int) -> LevelNumberReport:
    """Probe every antipodal face pair of the domain ball for level vectors."""
    if not is_polyhedral_like(op.domain):
        raise InputError("not_polyhedral", "enumeration needs a polyhedral domain")
    if samples_per_face < 0:
        raise InputError("bad_count", "samples_per_face must be >= 0")
    stream = RationalStream(seed)
    probes = []
    values: set[Fraction] = set()
    for face in antipodal_representatives(op.domain):
        points = [face.centroid()]
        if face.dim > 0:
            for _ in range(samples_per_face):
                weights = [stream.next_positive_fraction() for _ in face.vertices]
                total = sum(weights)
                points.append(
                    tuple(
                        sum(w * v[k] for w, v in zip(weights, face.vertices)) / total
                        for k in range(op.domain.dim)
                    )
                )
        numbers = []
        for point in points:
            cert = is_level_vector(op, point)
            numbers.append(cert.level_number if cert else None)
            if cert:
                values.add(cert.level_number)
        probes.append(FaceProbe(face.vertices, face.dim, tuple(points), tuple(numbers)))
    bound = None
    if op.domain == op.codomain:
        bound = level_count_bound(op.domain, op)
    return LevelNumberReport(
        tuple(sorted(values)), tuple(probes), bound, True, seed, samples_per_face
    )


def level_count_bound(space: SpaceSpec, op: Operator) -> Fraction:
    """Face-count bound on |L(T)| for T acting on a polyhedral space.

    Half the number of proper faces when T is injective; with an m-dimensional
    kernel, the faces of the kernel section of the ball are excluded and the
    single level number 0 is added back.
    """
    if not is_polyhedral_like(space):
        raise InputError("not_polyhedral", "the bound is for polyhedral spaces")
    if op.domain != space or op.codomain != space:
        raise InputError("bad_operator", "the bound applies to operators from the space to itself")
    total = face_census(space).total
    basis = kernel_basis(op.matrix)
    if not basis:
        return Fraction(total, 2)
    section = kernel_section_space(space, basis)
    g_total = face_census(section).total
    return Fraction(total - g_total, 2) + 1


def kernel_section_space(space: SpaceSpec, basis: list[Vec]) -> SpaceSpec:
    """The unit ball of a subspace (here: ker T) as an m-dimensional polytope.

    In the coordinates z of the given basis the section ball is cut out by
    the facet functionals of the ambient ball; its vertices are enumerated
    from m-subsets of active constraints.
    """
    m = len(basis)
    rows = sorted({tuple(dot(phi, b) for b in basis) for phi in dual_ball_vertices(space)})
    rows = [r for r in rows if any(c != 0 for c in r)]
    if math.comb(len(rows), m) > 500_000:
        raise InputError("too_many_vertices", "kernel section enumeration exceeds the guard")
    ones = (Fraction(1),) * m
    found: set[Vec] = set()
    for subset in itertools.combinations(rows, m):
        z = solve_square(tuple(subset), ones)
        if z is None or z in found:
            continue
        if all(dot(r, z) <= 1 for r in rows):
            found.add(z)
    return polyhedral_space(sorted(found))


def search_non_level_vector(op: Operator, samples: int, seed: int) -> Optional[Vec]:
    """First sampled unit vector that is not a level vector, if any.

    Sampling is incomplete: returning None reports an inconclusive search,
    not a proof that every unit vector is a level vector.
    """
    for x in sample_sphere(op.domain, samples, seed):
        if is_level_vector(op, x) is None:
            return x
    return None
