"""Isometry certification, grid probing, the identity test and adjoint transfer."""

from fractions import Fraction

import pytest

from bjlevel import (
    InputError,
    adjoint,
    adjoint_level_transfer,
    bj_orthogonal,
    certify_scalar_isometry_polyhedral,
    diagonal_operator,
    identity_operator,
    is_level_vector,
    l2,
    linf,
    operator,
    preserves_bj_at,
    preserves_bj_directional,
    probe_scalar_isometry_grid,
    sample_sphere,
    scalar_identity_test,
    zero_operator,
)

from ._util import v

F = Fraction


def test_certify_refutes_diag123_on_l1(l1_3):
    op = diagonal_operator(l1_3, [1, 2, 3])
    report = certify_scalar_isometry_polyhedral(op)
    assert report.verdict == "refuted"
    x, y = report.witness
    assert bj_orthogonal(l1_3, x, y).orthogonal
    assert not bj_orthogonal(l1_3, op(x), op(y)).orthogonal


def test_level_at_extremes_does_not_imply_isometry(l1_3):
    # All six extreme points are level vectors, yet certification refutes.
    op = diagonal_operator(l1_3, [1, 2, 3])
    numbers = set()
    for u in [v("1,0,0"), v("-1,0,0"), v("0,1,0"), v("0,-1,0"), v("0,0,1"), v("0,0,-1")]:
        cert = is_level_vector(op, u)
        assert cert is not None
        numbers.add(cert.level_number)
    assert numbers == {F(1), F(4), F(9)}
    assert certify_scalar_isometry_polyhedral(op).verdict == "refuted"


def test_certify_signed_permutation_on_linf4():
    space = linf(4)
    perm = operator(
        [["0", "-1", "0", "0"], ["1", "0", "0", "0"], ["0", "0", "0", "1"], ["0", "0", "-1", "0"]],
        space,
    )
    report = certify_scalar_isometry_polyhedral(perm)
    assert report.verdict == "certified" and report.scale == 1


def test_certify_scaled_identity(l1_3):
    report = certify_scalar_isometry_polyhedral(diagonal_operator(l1_3, [3, 3, 3]))
    assert report.verdict == "certified" and report.scale == 3


def test_certify_zero_operator(l1_3):
    report = certify_scalar_isometry_polyhedral(zero_operator(l1_3))
    assert report.verdict == "certified" and report.scale == 0


def test_probe_orthogonal_matrix_on_l2_is_inconclusive_positive():
    space = l2(3)
    rotation = operator([["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "1"]], space)
    report = probe_scalar_isometry_grid(rotation, space, 200, 5)
    assert report.verdict == "inconclusive"
    assert report.scale == pytest.approx(1.0, rel=1e-9)


def test_probe_refutes_diag211_on_l1(l1_3):
    op = diagonal_operator(l1_3, [2, 1, 1])
    report = probe_scalar_isometry_grid(op, l1_3, 200, 5)
    assert report.verdict == "refuted"
    assert report.witness is not None
    x, y = report.witness
    assert bj_orthogonal(l1_3, x, y).orthogonal
    assert not bj_orthogonal(l1_3, op(x), op(y)).orthogonal


def test_probe_zero_operator_certified(l2_3):
    report = probe_scalar_isometry_grid(zero_operator(l2_3), l2_3, 10, 1)
    assert report.verdict == "certified" and report.scale == 0


CASE_T = [["3", "-2", "0"], ["1", "0", "0"], ["0", "0", "1"]]
CASE_S_12 = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]]


@pytest.mark.parametrize(
    "matrix,candidates,expected_failure",
    [
        (CASE_S_12, ["1,0,0", "1,1/2,0", "1,0,1/2"], "i"),
        (CASE_T, ["1,1,0", "1,1/2,0", "1,1,1/2"], "ii"),
        (CASE_T, ["1,1/2,0", "1,1,0", "1,1,1/2"], "iii"),
        (CASE_S_12, ["1,0,0", "1,1/2,0", "0,0,1"], "iv"),
    ],
)
def test_scalar_identity_paper_cases(linf_3, matrix, candidates, expected_failure):
    op = operator(matrix, linf_3)
    report = scalar_identity_test(op, [v(c) for c in candidates])
    assert report.failed_conditions == (expected_failure,)
    assert not report.certified
    assert report.independent


def test_scalar_identity_certifies_doubled_identity(linf_3):
    op = diagonal_operator(linf_3, [2, 2, 2])
    report = scalar_identity_test(op, [v("1,1/2,1/4"), v("1/2,1,1/4"), v("1/4,1/2,1")])
    assert report.certified and report.eigenvalue == 2


def test_scalar_identity_input_errors(linf_3):
    op = diagonal_operator(linf_3, [2, 2, 2])
    with pytest.raises(InputError):
        scalar_identity_test(op, [v("1,0,0"), v("0,1,0")])
    with pytest.raises(InputError):
        scalar_identity_test(op, [v("1,0,0"), v("0,1,0"), v("0,0,1/2")])


def test_adjoint_transfer_diag123_linf(linf_3):
    op = diagonal_operator(linf_3, [1, 2, 3])
    record = adjoint_level_transfer(op, v("1,0,0"))
    assert record.psi == v("1,0,0")
    assert record.level_number == 1
    assert record.dual_certificate.level_number == 1


def test_adjoint_transfer_identity(l1_3):
    record = adjoint_level_transfer(identity_operator(l1_3), v("1,0,0"))
    assert record.level_number == 1


def test_adjoint_transfer_diag21_linf2(linf_2):
    op = diagonal_operator(linf_2, [2, 1])
    record = adjoint_level_transfer(op, v("1,1"))
    assert record.psi == v("1,0")
    assert record.level_number == 4
    assert record.dual_certificate.level_number == 4


def test_adjoint_transfer_errors(linf_2):
    op = diagonal_operator(linf_2, [2, 1])
    with pytest.raises(InputError):
        adjoint_level_transfer(op, v("1/2,1/2"))  # not unit
    with pytest.raises(InputError):
        adjoint_level_transfer(op, v("3/4,1"))  # not a level vector
    with pytest.raises(InputError):
        adjoint_level_transfer(diagonal_operator(linf_2, [0, 0]), v("1,1"))


def test_transfer_passes_directional_preservation_on_dual_side(linf_3, linf_2):
    for op, x in [
        (diagonal_operator(linf_3, [1, 2, 3]), v("1,0,0")),
        (diagonal_operator(linf_2, [2, 1]), v("1,1")),
    ]:
        record = adjoint_level_transfer(op, x)
        dual_op = adjoint(op)
        check = preserves_bj_directional(dual_op, tuple(record.psi), record.dual_certificate.f)
        assert check.holds


def test_full_preservation_does_not_transfer_to_adjoint(linf_3):
    # diag(1,2,3) preserves orthogonality at (0,1,0), but its adjoint on l1^3
    # does not preserve it at psi = (0,1,0): the middle coefficient shrinks
    # relative to the first under the adjoint's orthogonality inequality.
    op = diagonal_operator(linf_3, [1, 2, 3])
    x = v("0,1,0")
    assert preserves_bj_at(op, x).holds
    dual_op = adjoint(op)
    report = preserves_bj_at(dual_op, v("0,1,0"))
    assert not report.holds
    y, _ = report.counterexample
    assert bj_orthogonal(dual_op.domain, v("0,1,0"), y).orthogonal
    assert not bj_orthogonal(dual_op.codomain, dual_op(v("0,1,0")), dual_op(y)).orthogonal


def test_isometry_forward_direction_small(l1_3):
    # A scaled signed permutation: every sampled vector must be a level vector.
    op = operator([["0", "3/2", "0"], ["-3/2", "0", "0"], ["0", "0", "3/2"]], l1_3)
    for x in sample_sphere(l1_3, 50, 11):
        cert = is_level_vector(op, x)
        assert cert is not None and cert.level_number == F(9, 4)
    report = certify_scalar_isometry_polyhedral(op)
    assert report.verdict == "certified" and report.scale == F(3, 2)


def test_probe_refutation_witness_verifies_on_l2(l2_3):
    op = diagonal_operator(l2_3, [2, 1, 1])
    report = probe_scalar_isometry_grid(op, l2_3, 50, 3)
    assert report.verdict == "refuted"
    x, y = report.witness
    assert bj_orthogonal(l2_3, x, y).orthogonal
    assert not bj_orthogonal(l2_3, op(x), op(y)).orthogonal


def test_adjoint_transfer_on_l2_rotation(l2_3):
    rot = operator([["3/5", "-4/5", "0"], ["4/5", "3/5", "0"], ["0", "0", "1"]], l2_3)
    record = adjoint_level_transfer(rot, (F(3, 5), F(4, 5), F(0)))
    assert record.level_number == 1
    assert record.dual_certificate.level_number == 1


def test_certify_agrees_with_probe_on_battery(l1_3, linf_3):
    # Certification and a 500-sample probe must tell the same story: certified
    # operators survive probing, refuted ones are caught by it.
    from ._util import random_operator_battery

    battery = []
    for space in (l1_3, linf_3):
        battery.extend(random_operator_battery(space, 25, 1000 + space.dim))
        battery.append(diagonal_operator(space, [1, 2, 3]))
        battery.append(diagonal_operator(space, [2, 2, 2]))
        battery.append(
            operator([["0", "1", "0"], ["-1", "0", "0"], ["0", "0", "-1"]], space)
        )
    for op in battery:
        certified = certify_scalar_isometry_polyhedral(op).verdict == "certified"
        probe = probe_scalar_isometry_grid(op, op.domain, 500, 17)
        assert certified == (probe.verdict != "refuted")
