from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from k3config import intmat

small = st.integers(-4, 4)


def matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


def square(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)
    )


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_echelon_transform(A):
    R, T, r = intmat.row_echelon(A)
    assert intmat.matmul(T, A) == R
    assert abs(intmat.det(T)) == 1
    assert all(not any(row) for row in R[r:])
    assert r == Matrix(A).rank()


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_left_kernel(A):
    comp, ker = intmat.left_kernel_basis(A)
    assert len(comp) + len(ker) == len(A)
    assert all(not any(row) for row in intmat.matmul(ker, A)) if ker else True


@settings(max_examples=80, deadline=None)
@given(square())
def test_det_against_sympy(A):
    assert intmat.det(A) == Matrix(A).det()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_smith_against_sympy(A):
    snf = smith_normal_form(Matrix(A), domain=ZZ)
    expected = [abs(snf[i, i]) for i in range(min(snf.shape)) if snf[i, i] != 0]
    got = intmat.smith_invariants(A)
    assert got == expected
    assert all(got[i + 1] % got[i] == 0 for i in range(len(got) - 1))


def test_known_smith_form():
    assert intmat.smith_invariants([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


def test_det_zero_pivot():
    assert intmat.det([[0, 1], [1, 0]]) == -1
    assert intmat.det([[0, 0], [1, 0]]) == 0
