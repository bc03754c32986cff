"""Differential checks: every LP-backed decision against an independent route."""

from fractions import Fraction

from bjlevel import (
    RationalStream,
    bj_orthogonal,
    is_level_vector,
    preservation_sample_check,
    preserves_bj_at,
    preserves_bj_directional,
    subspace_orthogonal,
    support_set,
)

from ._util import random_operator

F = Fraction


def test_single_generator_subspace_matches_plain_orthogonality(l1_3, linf_3, hexagon):
    # span{b} lies in the orthogonality set of x exactly when x is orthogonal
    # to b, so the subspace LP must reproduce the vertex min/max decision.
    stream = RationalStream(61)
    for space in (l1_3, linf_3, hexagon):
        for _ in range(150):
            x = stream.next_nonzero_vector(space.dim)
            b = stream.next_nonzero_vector(space.dim)
            lp_verdict = subspace_orthogonal(space, x, [b])
            direct = bj_orthogonal(space, x, b)
            assert lp_verdict.orthogonal == direct.orthogonal


def test_preservation_verdicts_respected_by_direct_sampling(l1_3, linf_3, linf_2):
    # A "holds" verdict must survive any number of definition-level samples.
    stream = RationalStream(67)
    for space in (l1_3, linf_3, linf_2):
        for i in range(10):
            op = random_operator(space, stream)
            for j in range(3):
                x = stream.next_nonzero_vector(space.dim)
                report = preserves_bj_at(op, x)
                if report.holds:
                    sampled = preservation_sample_check(op, x, 50, 71 + i + j)
                    assert sampled.violations == ()


def test_vertex_directional_preservation_implies_level(l1_3, linf_3):
    # One-sided: preservation along any single vertex functional certifies a
    # level vector (the converse may need an interior functional).
    stream = RationalStream(73)
    for space in (l1_3, linf_3):
        for _ in range(15):
            op = random_operator(space, stream)
            x = stream.next_nonzero_vector(space.dim)
            if all(c == 0 for c in op(x)):
                continue
            sup = support_set(space, x)
            if any(
                preserves_bj_directional(op, x, f).holds for f in sup.vertices
            ):
                assert is_level_vector(op, x) is not None


def test_interior_functional_can_be_needed(l1_3):
    # diag(2,1,1) at e1: no vertex of J(e1) preserves directionally, yet the
    # level certificate exists through an interior functional.
    from bjlevel import diagonal_operator

    op = diagonal_operator(l1_3, [2, 1, 1])
    x = (F(1), F(0), F(0))
    sup = support_set(l1_3, x)
    assert not any(preserves_bj_directional(op, x, f).holds for f in sup.vertices)
    cert = is_level_vector(op, x)
    assert cert is not None
    assert cert.f not in sup.vertices
