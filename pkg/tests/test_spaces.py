"""Norms, duals, polars and operators on the core space representations."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bjlevel import (
    InputError,
    RationalStream,
    adjoint,
    ball_vertices,
    diagonal_operator,
    dual_ball_vertices,
    dual_space,
    l1,
    l2,
    linf,
    lp_space,
    norm,
    norm_squared,
    operator,
    polar_vertices,
    polyhedral_space,
    space_from_dict,
    space_to_dict,
)
from bjlevel.simplex import OPTIMAL, solve_standard_lp

from ._util import v

F = Fraction


def minkowski_norm_lp(space, x):
    """Independent oracle: ||x|| = min sum(mu) s.t. sum mu_i v_i = x, mu >= 0."""
    verts = ball_vertices(space)
    rows = [[vert[k] for vert in verts] for k in range(space.dim)]
    cost = [F(1)] * len(verts)
    res = solve_standard_lp(rows, list(x), cost=cost)
    assert res.status == OPTIMAL
    return res.value


def test_l1_norm_example(l1_3):
    assert norm(l1_3, v("1/2,1/2,0")) == 1


def test_linf_norm_example(linf_3):
    assert norm(linf_3, v("1,1/2,0")) == 1


def test_hexagon_norm_against_minkowski_lp(hexagon):
    assert norm(hexagon, v("1,1")) == 1 == minkowski_norm_lp(hexagon, v("1,1"))
    for text in ["1,0", "1,-1", "2,1", "-1/2,1/3"]:
        x = v(text)
        assert norm(hexagon, x) == minkowski_norm_lp(hexagon, x)


def test_l2_norm_squared_is_exact(l2_3):
    x = v("1/3,2/3,2/3")
    assert norm_squared(l2_3, x) == F(1)
    assert norm(l2_3, x) == pytest.approx(1.0, abs=1e-12)


def test_lp_norm_float(l3_3):
    x = v("1,1,1")
    assert norm(l3_3, x) == pytest.approx(3 ** (1 / 3), rel=1e-12)


def test_dual_space_lp_conjugates():
    assert dual_space(l1(3)) == linf(3)
    assert dual_space(linf(2)) == l1(2)
    assert dual_space(l2(3)) == l2(3)
    assert dual_space(lp_space(3, 3)) == lp_space(F(3, 2), 3)


def test_polar_of_cross_polytope_square():
    square = polyhedral_space([("1", "0"), ("0", "1"), ("-1", "0"), ("0", "-1")])
    assert set(polar_vertices(square)) == {v("1,1"), v("1,-1"), v("-1,1"), v("-1,-1")}


def test_polar_involution(hexagon):
    octagon = polyhedral_space(
        [("1", "0"), ("-1", "0"), ("0", "1"), ("0", "-1"),
         ("3/4", "3/4"), ("-3/4", "-3/4"), ("3/4", "-3/4"), ("-3/4", "3/4")]
    )
    for space in (hexagon, octagon):
        double = dual_space(dual_space(space))
        assert set(double.ball_vertices) == set(space.ball_vertices)


def test_hahn_banach_at_desk_scale(hexagon, l1_3, linf_3):
    stream = RationalStream(5)
    for space in (hexagon, l1_3, linf_3):
        duals = dual_ball_vertices(space)
        for _ in range(50):
            x = stream.next_nonzero_vector(space.dim)
            nx = norm(space, x)
            values = [sum(f[k] * x[k] for k in range(space.dim)) for f in duals]
            assert all(val <= nx for val in values)
            assert nx in values


@pytest.mark.parametrize("space_name", ["l1_3", "linf_3", "hexagon"])
def test_triangle_inequality_and_homogeneity_exact(space_name, request):
    space = request.getfixturevalue(space_name)
    stream = RationalStream(17)
    for _ in range(1000):
        x = stream.next_nonzero_vector(space.dim)
        y = stream.next_nonzero_vector(space.dim)
        a = stream.next_fraction()
        assert norm(space, tuple(c + d for c, d in zip(x, y))) <= norm(space, x) + norm(space, y)
        assert norm(space, tuple(a * c for c in x)) == abs(a) * norm(space, x)


@given(
    st.lists(st.fractions(min_value=-5, max_value=5), min_size=3, max_size=3),
    st.lists(st.fractions(min_value=-5, max_value=5), min_size=3, max_size=3),
)
@settings(max_examples=60, deadline=None)
def test_triangle_inequality_hypothesis(xs, ys):
    space = l1(3)
    x, y = tuple(xs), tuple(ys)
    assert norm(space, tuple(c + d for c, d in zip(x, y))) <= norm(space, x) + norm(space, y)


def test_adjoint_pairing_property(l1_3):
    op = operator([["3", "-2", "0"], ["1", "0", "0"], ["0", "0", "1"]], l1_3)
    adj = adjoint(op)
    assert adj.domain == linf(3) and adj.codomain == linf(3)
    stream = RationalStream(23)
    for _ in range(100):
        x = stream.next_nonzero_vector(3)
        g = stream.next_nonzero_vector(3)
        lhs = sum(c * d for c, d in zip(adj(g), x))
        rhs = sum(c * d for c, d in zip(g, op(x)))
        assert lhs == rhs


def test_adjoint_of_diagonal_on_linf(linf_3):
    op = diagonal_operator(linf_3, [1, 2, 3])
    adj = adjoint(op)
    assert adj.matrix == op.matrix
    assert adj.domain == l1(3)


def test_adjoint_transpose_and_identity(l1_3):
    op = operator([["3", "-2", "0"], ["1", "0", "0"], ["0", "0", "1"]], l1_3)
    assert adjoint(op).matrix == tuple(zip(*op.matrix))
    ident = diagonal_operator(l1_3, [1, 1, 1])
    assert adjoint(ident).matrix == ident.matrix


def test_polyhedral_validation_rejects_asymmetric():
    with pytest.raises(InputError):
        polyhedral_space([("1", "0"), ("0", "1"), ("-1", "0")])


def test_polyhedral_validation_rejects_non_extreme():
    with pytest.raises(InputError):
        polyhedral_space([("1", "0"), ("-1", "0"), ("0", "1"), ("0", "-1"), ("1/2", "1/2"), ("-1/2", "-1/2")])


def test_polyhedral_validation_rejects_degenerate_span():
    with pytest.raises(InputError):
        polyhedral_space([("1", "0"), ("-1", "0")])


def test_lp_guards():
    with pytest.raises(InputError):
        lp_space("1/2", 3)
    with pytest.raises(InputError):
        linf(13)


def test_space_dict_round_trip(hexagon, l1_3):
    for space in (hexagon, l1_3, lp_space(F(7, 3), 4)):
        assert space_from_dict(space_to_dict(space)) == space
