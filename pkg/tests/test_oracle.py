"""Sampling determinism, the 1-D minimizer and direct preservation checks."""

from fractions import Fraction

import pytest

from bjlevel import (
    RationalStream,
    SampleStream,
    diagonal_operator,
    identity_operator,
    minimize_norm_1d,
    norm,
    preservation_sample_check,
    sample_sphere,
)
from bjlevel.linalg import vec_add, vec_scale

from ._util import v

F = Fraction


def test_minimizer_paper_value(l1_3):
    assert minimize_norm_1d(l1_3, v("2,0,0"), v("1,1/2,0")) == (-2, 1)


def test_minimizer_flat_segment(l1_3):
    lam, value = minimize_norm_1d(l1_3, v("1,0,0"), v("1/2,1/2,0"))
    assert value == 1
    assert -2 <= lam <= 0


def test_minimizer_l2():
    # sqrt(1 + t^2) is flat to machine precision near 0, so the float-path
    # minimizer is pinned much more loosely than the minimum value.
    space = __import__("bjlevel").l2(2)
    lam, value = minimize_norm_1d(space, v("1,0"), v("0,1"))
    assert lam == pytest.approx(0.0, abs=1e-6)
    assert value == pytest.approx(1.0, abs=1e-9)


def test_minimizer_never_beaten_by_grid(l1_3, linf_3, hexagon):
    stream = RationalStream(51)
    for space in (l1_3, linf_3, hexagon):
        for _ in range(40):
            x = stream.next_nonzero_vector(space.dim)
            y = stream.next_nonzero_vector(space.dim)
            _, best = minimize_norm_1d(space, x, y)
            bracket = 2 * norm(space, x) / norm(space, y)
            for k in range(41):
                t = -bracket + Fraction(k, 20) * bracket
                assert norm(space, vec_add(x, vec_scale(t, y))) >= best


def test_sampled_norm_map_is_midpoint_convex(l1_3, linf_2):
    stream = RationalStream(53)
    for space in (l1_3, linf_2):
        for _ in range(100):
            x = stream.next_nonzero_vector(space.dim)
            y = stream.next_nonzero_vector(space.dim)
            ts = [Fraction(k - 20, 10) for k in range(41)]
            values = [norm(space, vec_add(x, vec_scale(t, y))) for t in ts]
            for a in range(0, 39, 2):
                mid = a + 1
                assert values[mid] <= (values[a] + values[a + 2]) / 2


def test_sample_sphere_exact_normalization(l1_2, linf_3):
    for x in sample_sphere(l1_2, 5, 7):
        assert sum(abs(c) for c in x) == 1
    for x in sample_sphere(linf_3, 3, 1):
        assert max(abs(c) for c in x) == 1


def test_sample_sphere_float_normalization(l2_3):
    for x in sample_sphere(l2_3, 2, 9):
        assert abs(norm(l2_3, x) - 1.0) <= 1e-12


def test_sample_determinism(l1_3, l2_3):
    for space in (l1_3, l2_3):
        assert sample_sphere(space, 10, 4) == sample_sphere(space, 10, 4)
        assert sample_sphere(space, 10, 4) != sample_sphere(space, 10, 5)
    assert SampleStream(l1_3, 6, 2).vectors() == tuple(sample_sphere(l1_3, 6, 2))


def test_preservation_check_finds_violation(l1_3):
    op = diagonal_operator(l1_3, [2, 1, 1])
    report = preservation_sample_check(op, v("1,0,0"), 100, 3)
    assert len(report.violations) > 0
    y, margin = report.violations[0]
    assert margin > 0


def test_preservation_check_clean_for_identity(l1_3):
    report = preservation_sample_check(identity_operator(l1_3), v("1,1/2,0"), 50, 3)
    assert report.violations == ()


def test_preservation_check_clean_for_diag123_linf(linf_3):
    op = diagonal_operator(linf_3, [1, 2, 3])
    report = preservation_sample_check(op, v("1,0,0"), 100, 3)
    assert report.violations == ()


def test_preservation_check_deterministic(l1_3):
    op = diagonal_operator(l1_3, [2, 1, 1])
    assert preservation_sample_check(op, v("1,0,0"), 40, 12) == preservation_sample_check(
        op, v("1,0,0"), 40, 12
    )
