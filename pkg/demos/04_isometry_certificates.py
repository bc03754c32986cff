"""Certifying scalar multiples of isometries from finitely many checks.

On a polyhedral space, local orthogonality preservation at every extreme
point of the unit ball already forces the operator to be a scalar multiple
of an isometry -- a finite, exact certificate.  Having every extreme point
as a level vector is NOT enough, and random probing can refute but never
certify.
"""

from fractions import Fraction as F

from bjlevel import (
    certify_scalar_isometry_polyhedral,
    diagonal_operator,
    is_level_vector,
    l1,
    l2,
    linf,
    operator,
    probe_scalar_isometry_grid,
    scalar_identity_test,
)


def fmt(xs):
    return "(" + ", ".join(str(c) for c in xs) + ")"


space = l1(3)
t123 = diagonal_operator(space, [1, 2, 3])

numbers = []
for u in [(F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1))]:
    numbers.append(is_level_vector(t123, u).level_number)
print(f"diag(1,2,3) on {space}: every extreme point is a level vector,")
print(f"  with level numbers {sorted(numbers)} on +-e1, +-e2, +-e3.")

report = certify_scalar_isometry_polyhedral(t123)
print(f"  Still refuted as a scalar isometry: witness pair x = {fmt(report.witness[0])},")
print(f"  y = {fmt(report.witness[1])} (orthogonal before, not after).")

perm = operator([["0", "-3/2", "0"], ["3/2", "0", "0"], ["0", "0", "3/2"]], space)
report = certify_scalar_isometry_polyhedral(perm)
print(f"\nA scaled signed permutation: {report.verdict} with scale {report.scale}.")

rotation = operator([["3/5", "-4/5", "0"], ["4/5", "3/5", "0"], ["0", "0", "1"]], l2(3))
probe = probe_scalar_isometry_grid(rotation, l2(3), 200, 7)
print(f"\nA rotation on {l2(3)} probed at 200 points: {probe.verdict}")
print(f"  (grid evidence only, scale estimate {probe.scale}; sampling never certifies).")

s = diagonal_operator(linf(3), [2, 2, 2])
candidates = [
    (F(1), F(1, 2), F(1, 4)),
    (F(1, 2), F(1), F(1, 4)),
    (F(1, 4), F(1, 2), F(1)),
]
verdict = scalar_identity_test(s, candidates)
print(f"\nEigenvector test for 2*identity on {linf(3)} with smooth unit candidates:")
print(f"  certified = {verdict.certified}, lambda = {verdict.eigenvalue}")
