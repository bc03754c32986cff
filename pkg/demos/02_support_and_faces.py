"""Supporting functionals and the face structure of polyhedral unit balls.

J(x) collects the norm-one functionals attaining the norm at x; its size
detects smoothness, and it pins down the unique face of the unit ball that
holds x in its relative interior.
"""

from fractions import Fraction as F

from bjlevel import (
    face_census,
    face_lattice,
    is_smooth,
    l1,
    linf,
    minimal_face,
    polyhedral_space,
    support_set,
)


def fmt(xs):
    return "(" + ", ".join(str(c) for c in xs) + ")"


def fmt_all(vecs):
    return "{" + ", ".join(fmt(v) for v in vecs) + "}"


linf3 = linf(3)
for x in [(F(1), F(1, 2), F(0)), (F(1), F(1), F(0)), (F(1), F(1), F(1))]:
    sup = support_set(linf3, x)
    print(f"J{fmt(x)} on {linf3} = conv{fmt_all(sup.vertices)}   smooth: {is_smooth(linf3, x)}")

print()
for space in (linf(2), linf(3), l1(3), linf(4)):
    census = face_census(space)
    print(f"{space}: faces by dimension {census.counts}, total {census.total} = 3^n - 1")

hexagon = polyhedral_space(
    [("1", "0"), ("-1", "0"), ("0", "1"), ("0", "-1"), ("1", "1"), ("-1", "-1")]
)
print(f"\nA hexagonal ball: census {face_census(hexagon).counts}")
for face in face_lattice(hexagon):
    if face.dim == 1:
        print(f"  edge conv{fmt_all(face.vertices)} supported by {fmt_all(face.supporting)}")

point = (F(1, 2), F(1))
face = minimal_face(linf(2), point)
print(f"\nThe minimal face of {fmt(point)} on {linf(2)} is conv{fmt_all(face.vertices)} (dim {face.dim});")
print(f"its supporting functionals {fmt_all(face.supporting)} equal the vertices of J{fmt(point)}.")
