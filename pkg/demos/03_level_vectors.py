"""Level vectors: where an operator acts like a scalar times an isometry.

x is a level vector of T when some pair of supporting functionals f at x and
g at Tx satisfies (adjoint T) g = (||Tx||/||x||) f; the associated level
number is ||Tx||^2/||x||^2.  Being a level vector is weaker than T locally
preserving orthogonality at x, and the set of level numbers over the whole
space is controlled by the face count of the unit ball.
"""

from fractions import Fraction as F

from bjlevel import (
    diagonal_operator,
    enumerate_level_numbers,
    is_level_vector,
    l1,
    level_count_bound,
    linf,
    preserves_bj_at,
)


def fmt(xs):
    return "(" + ", ".join(str(c) for c in xs) + ")"


def fmt_all(vecs):
    return "{" + ", ".join(fmt(v) for v in vecs) + "}"


space = l1(3)
op = diagonal_operator(space, [2, 1, 1])
u = (F(1), F(0), F(0))

cert = is_level_vector(op, u)
print(f"diag(2,1,1) on {space} at u = {fmt(u)}:")
print(f"  level vector with level number k = {cert.level_number}")
print(f"  certificate pair: f = {fmt(cert.f)}, g = {fmt(cert.g)}")

report = preserves_bj_at(op, u)
y, margin = report.counterexample
print(f"  ...yet local orthogonality preservation fails: u is orthogonal to")
print(f"  y = {fmt(y)}, while the images are separated by margin {margin}.")

print()
linf2 = linf(2)
d21 = diagonal_operator(linf2, [2, 1])
enum = enumerate_level_numbers(d21, 5, 42)
values = ", ".join(str(k) for k in enum.values)
print(f"diag(2,1) on {linf2}: sampled level numbers {{{values}}}")
print(f"  (an under-approximation: {enum.under_approximation}; face-count bound {enum.bound})")
for probe in enum.per_face:
    found = ", ".join(str(k) for k in sorted(set(probe.found))) or "none"
    print(f"  face conv{fmt_all(probe.face_vertices)}: level numbers found {{{found}}}")

print()
t123 = diagonal_operator(space, [1, 2, 3])
print(f"diag(1,2,3) on {space}: |L(T)| <= {level_count_bound(space, t123)}")
with_kernel = diagonal_operator(linf(3), [1, 1, 0])
print(f"diag(1,1,0) on {linf(3)} (1-dim kernel): |L(T)| <= {level_count_bound(linf(3), with_kernel)}")
