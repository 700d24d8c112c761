from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from k3config.ecurve import FROB, ID, PI, SIGMA, SIGMA2, THETA, VER, ZERO, apply_expr, enumerate_points
from k3config.quatorder import (
    I,
    J,
    K,
    ONE,
    Quat,
    designated_solution,
    endo_to_quat,
    format_quat,
    hurwitz_elements_of_norm,
    hurwitz_units,
    relation_checks,
    solve_generators,
)

halves = st.integers(-6, 6)


@st.composite
def hurwitz(draw):
    if draw(st.booleans()):
        return Quat(*(draw(halves) for _ in range(4)))
    return Quat(*(Fraction(2 * draw(halves) + 1, 2) for _ in range(4)))


@given(hurwitz(), hurwitz())
def test_norm_is_multiplicative(a, b):
    assert (a * b).nrd() == a.nrd() * b.nrd()
    assert (a * b).conj() == b.conj() * a.conj()


@given(hurwitz())
def test_norm_and_trace(a):
    assert a * a.conj() == Quat(a.nrd())
    assert a + a.conj() == Quat(a.trd())
    assert a.nrd() == int(a.nrd())
    assert a.is_hurwitz()


def test_quaternion_units():
    assert I * J == K and J * K == I and K * I == J
    assert I * I == -ONE
    assert len(hurwitz_units()) == 24
    assert all(u.nrd() == 1 for u in hurwitz_units())


@pytest.mark.parametrize("n,count", [(1, 24), (2, 24), (3, 96)])
def test_elements_of_norm(n, count):
    # 24 * sigma_1(n) for odd n; 24 elements of norm 2
    assert len(hurwitz_elements_of_norm(n)) == count


def test_format():
    assert format_quat(Quat(Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2))) == "-1/2-1/2i-1/2j-1/2k"
    assert format_quat(K) == "k"
    assert format_quat(Quat()) == "0"
    assert format_quat(I - J) == "i-j"


def test_product_leaving_half_integers_raises():
    a = Quat(Fraction(1, 2), Fraction(1, 2), 0, 0)
    b = Quat(Fraction(1, 2), 0, Fraction(1, 2), 0)
    with pytest.raises(ValueError):
        a * b


def test_solution_count_and_designated():
    sols = solve_generators()
    assert len(sols) == 24
    s = designated_solution()
    assert (format_quat(s.sigma), format_quat(s.theta), format_quat(s.frob)) == ("-1/2-1/2i-1/2j-1/2k", "k", "-i+j")
    assert format_quat(s.pi) == "i+j+k"
    assert all(all(relation_checks(x.sigma, x.theta, x.frob).values()) for x in sols)


def test_norms_of_generators():
    assert endo_to_quat(FROB).nrd() == 2
    assert endo_to_quat(VER).nrd() == 2
    assert endo_to_quat(PI).nrd() == 3
    assert endo_to_quat(SIGMA).nrd() == 1
    assert endo_to_quat(ZERO) == Quat()


def test_quaternion_model_matches_points():
    # an expression that vanishes as a quaternion vanishes on E(F_64) and conversely
    pts = enumerate_points(6)
    exprs = [FROB * VER - 2 * ID, PI + 2 * SIGMA + ID, THETA * SIGMA - SIGMA2 * THETA - ID, FROB + VER]
    for e in exprs:
        zero_q = endo_to_quat(e) == Quat()
        zero_p = all(apply_expr(e, P).is_infinity for P in pts)
        assert zero_q == zero_p


@pytest.mark.parametrize("expr", [SIGMA, THETA, FROB, PI, SIGMA * THETA - FROB])
def test_degree_is_norm(expr):
    # |kernel on E(F_64)| divides the degree; for these separable maps of degree <= 3 they agree
    pts = enumerate_points(6)
    q = endo_to_quat(expr)
    kernel = sum(apply_expr(expr, P).is_infinity for P in pts)
    if expr in (SIGMA, THETA, PI):
        assert kernel == q.nrd()
    else:
        assert kernel == 1
