"""Birkhoff-James orthogonality decisions with dual certificates.

Over the reals, x is Birkhoff-James orthogonal to y exactly when some
f in J(x) kills y, i.e. when min f(y) <= 0 <= max f(y) over J(x).  The dual
route evaluates the finitely many vertices of J(x); the oracle route
minimizes ||x + t y|| directly and is used to cross-validate it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import InputError
from .linalg import Vec, dot, is_zero_vec, matrix_rank
from .oracle import minimize_norm_1d
from .simplex import feasible_point
from .spaces import (
    EXACT,
    FLOAT,
    SpaceSpec,
    arithmetic_mode,
    float_tolerance,
    norm,
    require_dim,
)
from .support import SupportSet, support_set

Scalar = Union[Fraction, float]


@dataclass(frozen=True)
class OrthogonalityVerdict:
    """Outcome of a Birkhoff-James orthogonality test.

    ``witness`` (present when orthogonal, x != 0 and the method is dual) is a
    functional in J(x) with f(y) = 0; ``margin`` is the distance of the value
    interval [min f(y), max f(y)] from zero (0 when orthogonal).
    """

    orthogonal: bool
    witness: Optional[tuple]
    method: str  # "dual" | "oracle"
    mode: str  # "exact" | "float"
    margin: Optional[Scalar] = None
    warning: Optional[str] = None


def bj_orthogonal(space: SpaceSpec, x: Vec, y: Vec) -> OrthogonalityVerdict:
    """Decide x BJ-orthogonal y via the supporting-functional interval."""
    require_dim(space, x)
    require_dim(space, y)
    mode = arithmetic_mode(space)
    if is_zero_vec(x):
        return OrthogonalityVerdict(True, None, "dual", mode, Fraction(0) if mode == EXACT else 0.0)
    sup = support_set(space, x)
    if mode == EXACT:
        return _dual_exact(sup, y)
    return _dual_float(space, sup, x, y)


def _dual_exact(sup: SupportSet, y: Vec) -> OrthogonalityVerdict:
    values = [(dot(f, y), f) for f in sup.vertices]
    lo, f_lo = min(values)
    hi, f_hi = max(values)
    if lo <= 0 <= hi:
        if lo == 0:
            witness = f_lo
        elif hi == 0:
            witness = f_hi
        else:
            t = -lo / (hi - lo)
            witness = tuple(a + t * (b - a) for a, b in zip(f_lo, f_hi))
        return OrthogonalityVerdict(True, witness, "dual", EXACT, Fraction(0))
    margin = min(abs(lo), abs(hi))
    return OrthogonalityVerdict(False, None, "dual", EXACT, margin)


def _dual_float(
    space: SpaceSpec, sup: SupportSet, x: Vec, y: Vec
) -> OrthogonalityVerdict:
    tol = float_tolerance()
    if space.p == 2:
        # Pairings stay exact on rational input even though the norm does not.
        s = sum((xc * yc for xc, yc in zip(x, y)), Fraction(0))
        orthogonal = s == 0
        margin = abs(float(s)) / float(norm(space, x))
    else:
        f = sup.vertices[0]
        value = sum(fc * float(yc) for fc, yc in zip(f, y))
        scale = max(1.0, float(norm(space, y)))
        orthogonal = abs(value) <= tol * scale
        margin = abs(value)
    warning = None
    if not orthogonal and margin <= 10 * tol * max(1.0, float(norm(space, y))):
        warning = "decision margin within 10x float tolerance"
    witness = sup.vertices[0] if orthogonal else None
    return OrthogonalityVerdict(orthogonal, witness, "dual", FLOAT, margin, warning)


def bj_orthogonal_oracle(space: SpaceSpec, x: Vec, y: Vec) -> OrthogonalityVerdict:
    """Decide orthogonality by minimizing ||x + t y|| directly."""
    require_dim(space, x)
    require_dim(space, y)
    mode = arithmetic_mode(space)
    if is_zero_vec(y) or is_zero_vec(x):
        return OrthogonalityVerdict(True, None, "oracle", mode, Fraction(0) if mode == EXACT else 0.0)
    nx = norm(space, x)
    _, min_value = minimize_norm_1d(space, x, y)
    gap = nx - min_value
    if mode == EXACT:
        return OrthogonalityVerdict(gap == 0, None, "oracle", mode, gap)
    tol = float_tolerance()
    return OrthogonalityVerdict(gap <= tol * max(1.0, float(nx)), None, "oracle", mode, gap)


def subspace_orthogonal(
    space: SpaceSpec, x: Vec, basis: Sequence[Vec]
) -> OrthogonalityVerdict:
    """Decide whether span(basis) is contained in the BJ-orthogonality set of x.

    Equivalent, via the supporting-functional characterization, to the
    existence of f in J(x) vanishing on every basis vector; decided by an LP
    over convex coefficients of the J(x) vertices.
    """
    require_dim(space, x)
    if is_zero_vec(x):
        raise InputError("zero_vector", "x must be nonzero")
    basis = [tuple(b) for b in basis]
    if not basis:
        raise InputError("empty_basis", "basis must contain at least one vector")
    for b in basis:
        require_dim(space, b)
    if matrix_rank(basis) != len(basis):
        raise InputError("dependent_basis", "basis vectors must be linearly independent")
    sup = support_set(space, x)
    if sup.mode == FLOAT:
        return _subspace_float(space, sup, x, basis)
    verts = sup.vertices
    rows = [[dot(f, b) for f in verts] for b in basis]
    rows.append([Fraction(1)] * len(verts))
    rhs = [Fraction(0)] * len(basis) + [Fraction(1)]
    coeffs = feasible_point(rows, rhs)
    if coeffs is None:
        return OrthogonalityVerdict(False, None, "dual", EXACT)
    witness = tuple(
        sum(c * f[k] for c, f in zip(coeffs, verts)) for k in range(space.dim)
    )
    return OrthogonalityVerdict(True, witness, "dual", EXACT, Fraction(0))


def _subspace_float(
    space: SpaceSpec, sup: SupportSet, x: Vec, basis: Sequence[Vec]
) -> OrthogonalityVerdict:
    tol = float_tolerance()
    if space.p == 2:
        ok = all(sum((xc * bc for xc, bc in zip(x, b)), Fraction(0)) == 0 for b in basis)
    else:
        f = sup.vertices[0]
        ok = all(
            abs(sum(fc * float(bc) for fc, bc in zip(f, b)))
            <= tol * max(1.0, float(norm(space, b)))
            for b in basis
        )
    witness = sup.vertices[0] if ok else None
    return OrthogonalityVerdict(ok, witness, "dual", FLOAT)
