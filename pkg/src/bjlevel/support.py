"""Supporting-functional sets J(x) and smoothness.

J(x) is the set of norm-one functionals attaining the norm at x.  On
polyhedral-like spaces it is a face of the dual unit ball and is returned by
its (exact, irredundant) vertex list; on lp spaces with 1 < p < infinity it
is the singleton gradient functional.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InputError
from .linalg import Vec, dot, is_zero_vec, unit
from .spaces import (
    EXACT,
    FLOAT,
    INF,
    MAX_CUBE_DIM,
    SpaceSpec,
    dual_ball_vertices,
    float_tolerance,
    is_exact,
    norm,
    require_dim,
    sgn,
)

Functional = tuple  # Fractions in exact mode, floats in float mode


@dataclass(frozen=True)
class SupportSet:
    """The polytope J(x) of supporting functionals at a base point.

    ``vertices`` is the V-representation: every functional in J(x) is a
    convex combination of them.  ``mode`` records whether entries are exact
    rationals or floats; ``warning`` flags near-degenerate float decisions.
    """

    base_point: Vec
    vertices: tuple[Functional, ...]
    mode: str
    warning: str | None = None


def support_set(space: SpaceSpec, x: Vec) -> SupportSet:
    require_dim(space, x)
    if is_zero_vec(x):
        raise InputError("zero_vector", "J(x) is undefined at x = 0")
    if is_exact(space):
        return SupportSet(x, _exact_vertices(space, x), EXACT)
    return SupportSet(x, (_lp_gradient(space, x),), FLOAT)


def _exact_vertices(space: SpaceSpec, x: Vec) -> tuple[Vec, ...]:
    value = norm(space, x)
    if space.kind == "lp" and space.p == 1:
        # Dual cube: signs are pinned on the support of x, free elsewhere.
        zeros = [i for i, c in enumerate(x) if c == 0]
        if len(zeros) > MAX_CUBE_DIM:
            raise InputError("dim_too_large", "2^(#zeros) support vertices exceed the guard")
        one = Fraction(1)
        base = [Fraction(sgn(c)) for c in x]
        out = []
        for signs in itertools.product((one, -one), repeat=len(zeros)):
            f = list(base)
            for pos, s in zip(zeros, signs):
                f[pos] = s
            out.append(tuple(f))
        return tuple(sorted(out))
    if space.kind == "lp" and space.p == INF:
        return tuple(
            sorted(unit(space.dim, i, sgn(c)) for i, c in enumerate(x) if abs(c) == value)
        )
    return tuple(sorted(f for f in dual_ball_vertices(space) if dot(f, x) == value))


def _lp_gradient(space: SpaceSpec, x: Vec) -> tuple[float, ...]:
    if space.p == 2:
        nrm = norm(space, x)
        return tuple(float(c) / nrm for c in x)
    pf = float(space.p)
    nrm = norm(space, x)
    scale = nrm ** (pf - 1.0)
    return tuple(
        math.copysign(abs(float(c)) ** (pf - 1.0), float(c)) / scale if c != 0 else 0.0
        for c in x
    )


def is_smooth(space: SpaceSpec, x: Vec) -> bool:
    """True when J(x) is a singleton (the norm is Gateaux differentiable at x)."""
    return len(support_set(space, x).vertices) == 1


def eval_range(
    support: SupportSet, y: Vec
) -> tuple[Union[Fraction, float], Union[Fraction, float]]:
    """(min, max) of f(y) over J(x); extrema over the polytope = over vertices."""
    if len(y) != len(support.base_point):
        raise InputError("dimension_mismatch", "vector dimension does not match the support set")
    if support.mode == EXACT:
        values = [dot(f, y) for f in support.vertices]
    else:
        values = [sum(fc * float(yc) for fc, yc in zip(f, y)) for f in support.vertices]
    return min(values), max(values)


def functional_in_support(space: SpaceSpec, x: Vec, f: Vec) -> bool:
    """Exact membership test f in J(x) (checks f(x) = ||x|| and ||f||* = 1)."""
    from .spaces import dual_norm  # local import to keep module init light

    require_dim(space, x)
    require_dim(space, f)
    if not is_exact(space):
        tol = float_tolerance()
        fx = sum(float(fc) * float(xc) for fc, xc in zip(f, x))
        return abs(fx - float(norm(space, x))) <= tol and abs(dual_norm(space, f) - 1.0) <= tol
    return dot(f, x) == norm(space, x) and dual_norm(space, f) == 1
