"""Birkhoff-James orthogonality, decided two independent ways.

x is Birkhoff-James orthogonal to y when no scalar multiple of y can shorten
x: ||x + t*y|| >= ||x|| for every real t.  On a polyhedral space the library
decides this exactly through supporting functionals, and the brute-force
oracle confirms it by minimizing the norm along the line directly.
"""

from fractions import Fraction as F

from bjlevel import bj_orthogonal, bj_orthogonal_oracle, l1, minimize_norm_1d, norm


def fmt(xs):
    return "(" + ", ".join(str(c) for c in xs) + ")"


space = l1(3)
u = (F(1), F(0), F(0))
v = (F(1, 2), F(1, 2), F(0))

print(f"Working in {space}: ||u|| = {norm(space, u)}, ||v|| = {norm(space, v)}")

verdict = bj_orthogonal(space, u, v)
print(f"\nIs u = {fmt(u)} orthogonal to v = {fmt(v)}?  ->  {verdict.orthogonal}")
print(f"Witness functional f with f(u) = ||u|| and f(v) = 0:  f = {fmt(verdict.witness)}")

oracle = bj_orthogonal_oracle(space, u, v)
print(f"The norm-minimization oracle agrees: {oracle.orthogonal}")

# Orthogonality is direction-sensitive: images under a linear map can lose it.
x = (F(2), F(0), F(0))
y = (F(1), F(1, 2), F(0))
verdict = bj_orthogonal(space, x, y)
minimizer, smallest = minimize_norm_1d(space, x, y)
print(f"\nIs x = {fmt(x)} orthogonal to y = {fmt(y)}?  ->  {verdict.orthogonal}")
print(f"Indeed ||x + ({minimizer})*y|| = {smallest} < {norm(space, x)} = ||x||")
