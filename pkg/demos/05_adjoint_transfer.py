"""Level vectors transfer to the adjoint; full preservation does not.

If x is a unit level vector of T with Tx != 0, the certificate functional
psi in J(Tx/||Tx||) is a level vector of the adjoint with the same level
number.  Local preservation of orthogonality is stronger and does NOT
survive the passage: T can preserve at x while the adjoint fails at psi.
"""

from fractions import Fraction as F

from bjlevel import (
    adjoint,
    adjoint_level_transfer,
    bj_orthogonal,
    diagonal_operator,
    linf,
    preserves_bj_at,
)


def fmt(xs):
    return "(" + ", ".join(str(c) for c in xs) + ")"


space = linf(3)
op = diagonal_operator(space, [1, 2, 3])
dual_op = adjoint(op)
print(f"T = diag(1,2,3) on {space}; adjoint acts on {dual_op.domain}.")

for x in [(F(1), F(0), F(0)), (F(0), F(1), F(0))]:
    record = adjoint_level_transfer(op, x)
    print(f"\nAt x = {fmt(x)}: psi = {fmt(record.psi)}, level number {record.level_number} on both sides")
    here = preserves_bj_at(op, x).holds
    there = preserves_bj_at(dual_op, tuple(record.psi))
    print(f"  T preserves orthogonality at x: {here}")
    print(f"  adjoint preserves orthogonality at psi: {there.holds}")
    if not there.holds:
        y, _ = there.counterexample
        images_orthogonal = bj_orthogonal(
            dual_op.codomain, dual_op(tuple(record.psi)), dual_op(y)
        ).orthogonal
        print(f"  counterexample on the dual side: psi orthogonal to {fmt(y)},")
        print(f"  images orthogonal: {images_orthogonal}")
