import pytest

from chgraphs import forms
from chgraphs.forms import standard_space, singular_points, ts_lines, hyperbolic_partner, has_ts_plane


def num_points(q, d):
    return (q**d - 1) // (q - 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_symplectic_points_and_lines(q):
    S = standard_space("symplectic", 4, q)
    pts = singular_points(S)
    # every projective point is singular for an alternating form
    assert len(pts) == num_points(q, 4)
    lines = ts_lines(S, pts)
    assert len(lines) == (q + 1) * (q**2 + 1)  # GQ(q, q) has as many lines as points
    assert all(len(line) == q + 1 for line in lines)


@pytest.mark.parametrize("q,expected", [(3, 40), (5, 156)])
def test_parabolic_point_counts(q, expected):
    S = standard_space("quadratic", 5, q)
    assert len(singular_points(S)) == expected


@pytest.mark.parametrize("q", [2, 3, 4])
def test_minus_type_point_counts(q):
    S = standard_space("quadratic-", 6, q)
    pts = singular_points(S)
    # (q+1)(q^3+1) points for the GQ(q, q^2) geometry
    assert len(pts) == (q + 1) * (q**3 + 1)
    lines = ts_lines(S, pts)
    assert len(lines) == (q**2 + 1) * (q**3 + 1)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_plus_type_point_counts(q):
    S = standard_space("quadratic+", 4, q)
    assert len(singular_points(S)) == (q + 1) ** 2
    assert len(ts_lines(S)) == 2 * (q + 1)


@pytest.mark.parametrize("q", [2, 3])
def test_unitary_point_counts(q):
    S = standard_space("unitary", 4, q * q)
    pts = singular_points(S)
    assert len(pts) == (q**2 + 1) * (q**3 + 1)
    lines = ts_lines(S, pts)
    assert len(lines) == (q + 1) * (q**3 + 1)


def test_form_values_on_standard_basis():
    S = standard_space("quadratic-", 6, 2)
    e = lambda i: tuple(1 if j == i else 0 for j in range(6))
    for i in range(2):
        assert S.eval_Q(e(i)) == 0 and S.eval_Q(e(2 + i)) == 0
        assert S.eval_f(e(i), e(2 + i)) == 1
    # anisotropic tail: Q(x) = 1, f(x, y) = 1, Q(y) = alpha
    assert S.eval_Q(e(4)) == 1
    assert S.eval_f(e(4), e(5)) == 1
    alpha = S.qvals[5]
    F = S.F
    assert all(F.add[F.add[F.mul[x][x]][x]][alpha] != 0 for x in range(F.q))


def test_anisotropic_pair_has_no_singular_vector():
    for q in (2, 3, 4, 5):
        S = standard_space("quadratic-", 2, q)
        assert singular_points(S) == []


def test_polarisation_identity():
    # f(u, v) = Q(u+v) - Q(u) - Q(v) for quadratic kinds
    for kind, d, q in (("quadratic-", 6, 3), ("quadratic+", 4, 4), ("quadratic", 5, 3)):
        S = standard_space(kind, d, q)
        F = S.F
        probe = [S.decode(i) for i in range(1, min(40, q**d))]
        for u in probe[:12]:
            for v in probe[:12]:
                lhs = S.eval_f(u, v)
                rhs = F.sub[F.sub[S.eval_Q(S.add_vec(u, v))][S.eval_Q(u)]][S.eval_Q(v)]
                assert lhs == rhs


def test_hyperbolic_partner():
    S = standard_space("quadratic-", 6, 3)
    for v in singular_points(S)[:10]:
        w = hyperbolic_partner(S, v)
        assert S.eval_Q(w) == 0
        assert S.eval_f(v, w) == 1
    with pytest.raises(ValueError):
        hyperbolic_partner(S, (0,) * 6)


def test_ts_plane_detection():
    # rank-2 minus-type spaces have no totally singular plane ...
    assert not has_ts_plane(standard_space("quadratic-", 6, 2))
    assert not has_ts_plane(standard_space("symplectic", 4, 2))
    # ... but a rank-3 hyperbolic space does
    assert has_ts_plane(standard_space("quadratic+", 6, 2))


def test_unsupported_inputs():
    with pytest.raises(ValueError):
        standard_space("symplectic", 5, 3)
    with pytest.raises(ValueError):
        standard_space("unitary", 4, 3)
    with pytest.raises(ValueError):
        standard_space("quadratic", 4, 3)
    with pytest.raises(ValueError):
        standard_space("quadratic", 5, 4)
    with pytest.raises(ValueError):
        standard_space("nonsense", 4, 2)
