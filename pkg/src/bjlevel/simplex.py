"""Exact-rational simplex for small dense problems.

Solves  min c.x  s.t.  A x = b, x >= 0  entirely over Fractions using the
two-phase method with Bland's anti-cycling rule.  Problem sizes in this
package stay around a few dozen variables and about a dozen rows, so a dense
tableau with reduced costs recomputed per iteration is plenty fast and keeps
the implementation easy to audit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[tuple[Fraction, ...]]
    value: Optional[Fraction]


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    pv = tableau[row][col]
    tableau[row] = [v / pv for v in tableau[row]]
    for i in range(len(tableau)):
        if i != row and tableau[i][col] != 0:
            factor = tableau[i][col]
            tableau[i] = [v - factor * w for v, w in zip(tableau[i], tableau[row])]
    basis[row] = col


def _reduced_costs(
    tableau: list[list[Fraction]], basis: list[int], cost: list[Fraction]
) -> list[Fraction]:
    ncols = len(cost)
    reduced = list(cost)
    for i, bv in enumerate(basis):
        cb = cost[bv]
        if cb != 0:
            row = tableau[i]
            for j in range(ncols):
                if row[j] != 0:
                    reduced[j] -= cb * row[j]
    return reduced


def _iterate(
    tableau: list[list[Fraction]],
    basis: list[int],
    cost: list[Fraction],
    allowed: int,
) -> str:
    """Run Bland-rule pivots on columns < allowed until optimal/unbounded."""
    while True:
        reduced = _reduced_costs(tableau, basis, cost)
        entering = next((j for j in range(allowed) if reduced[j] < 0), None)
        if entering is None:
            return OPTIMAL
        pivot_row = None
        best_ratio = None
        for i, row in enumerate(tableau):
            coeff = row[entering]
            if coeff > 0:
                ratio = row[-1] / coeff
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[pivot_row])
                ):
                    best_ratio = ratio
                    pivot_row = i
        if pivot_row is None:
            return UNBOUNDED
        _pivot(tableau, basis, pivot_row, entering)


def solve_standard_lp(
    a_eq: Sequence[Sequence[Fraction]],
    b_eq: Sequence[Fraction],
    cost: Optional[Sequence[Fraction]] = None,
) -> LPResult:
    """Solve min cost.x s.t. a_eq x = b_eq, x >= 0 (cost None = pure feasibility)."""
    nrows = len(a_eq)
    ncols = len(a_eq[0]) if nrows else (len(cost) if cost else 0)
    if nrows == 0:
        x = (ZERO,) * ncols
        val = sum((c * xi for c, xi in zip(cost, x)), ZERO) if cost else ZERO
        return LPResult(OPTIMAL, x, val)

    tableau: list[list[Fraction]] = []
    for row, rhs in zip(a_eq, b_eq, strict=True):
        row = list(row) + [rhs]
        if rhs < 0:
            row = [-v for v in row]
        tableau.append(row)

    # Phase 1: artificial variable per row, minimize their sum.
    basis = []
    for i in range(nrows):
        for row_idx, row in enumerate(tableau):
            row.insert(ncols + i, ONE if row_idx == i else ZERO)
        basis.append(ncols + i)
    phase1_cost = [ZERO] * ncols + [ONE] * nrows
    status = _iterate(tableau, basis, phase1_cost, ncols + nrows)
    assert status == OPTIMAL  # phase-1 objective is bounded below by zero
    infeasibility = sum((tableau[i][-1] for i in range(len(tableau)) if basis[i] >= ncols), ZERO)
    if infeasibility != 0:
        return LPResult(INFEASIBLE, None, None)

    # Drive leftover (zero-valued) artificials out of the basis, then drop them.
    for i in range(len(tableau) - 1, -1, -1):
        if basis[i] >= ncols:
            col = next((j for j in range(ncols) if tableau[i][j] != 0), None)
            if col is None:
                tableau.pop(i)
                basis.pop(i)
            else:
                _pivot(tableau, basis, i, col)
    tableau = [row[:ncols] + [row[-1]] for row in tableau]

    if cost is None:
        cost = [ZERO] * ncols
    else:
        cost = list(cost)
        status = _iterate(tableau, basis, cost, ncols)
        if status == UNBOUNDED:
            return LPResult(UNBOUNDED, None, None)

    x = [ZERO] * ncols
    for i, bv in enumerate(basis):
        x[bv] = tableau[i][-1]
    value = sum((c * xi for c, xi in zip(cost, x)), ZERO)
    return LPResult(OPTIMAL, tuple(x), value)


def feasible_point(
    a_eq: Sequence[Sequence[Fraction]], b_eq: Sequence[Fraction]
) -> Optional[tuple[Fraction, ...]]:
    """A point with a_eq x = b_eq, x >= 0, or None when the system is infeasible."""
    res = solve_standard_lp(a_eq, b_eq)
    return res.x if res.status == OPTIMAL else None
