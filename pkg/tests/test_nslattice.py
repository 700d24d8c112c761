import itertools

import pytest
from hypothesis import given, strategies as st

from k3config import expected
from k3config.catalog import BASE_BY_NAME, TABLE_ORDER
from k3config.nslattice import (
    E1_CLASS,
    E2_CLASS,
    X_CLASS,
    curve_class,
    delta_class,
    gram_and_discriminant,
    image_pairing,
    intersection,
    intersection_table,
    pairing_on_A,
    self_intersection,
    tables_across_solutions,
)
from k3config.quatorder import hurwitz_elements_of_norm, hurwitz_units, solve_generators

TABLE = intersection_table()


def test_polarisation_and_axes():
    assert self_intersection(X_CLASS) == 2
    assert intersection(E1_CLASS, E2_CLASS) == 1
    assert self_intersection(E1_CLASS) == self_intersection(E2_CLASS) == 0


def test_curve_classes_are_elliptic():
    for n in TABLE_ORDER:
        assert self_intersection(curve_class(n)) == 0


def test_diagonal_zero_and_symmetric():
    assert all(TABLE[a][a] == 0 for a in range(8))
    assert all(TABLE[a][b] == TABLE[b][a] for a in range(8) for b in range(8))


@pytest.mark.parametrize("a,b", list(itertools.product(TABLE_ORDER, repeat=2)))
def test_pairing_against_degree_oracle(a, b):
    # (image of (x, y)) . {c x + d y = 0} is the degree of c x + d y on E
    assert TABLE[TABLE_ORDER.index(a)][TABLE_ORDER.index(b)] == image_pairing(
        BASE_BY_NAME[a].hom, BASE_BY_NAME[b].locus
    )


def test_table_independent_of_generator_model():
    assert len(solve_generators()) == 24
    assert len(tables_across_solutions()) == 1


def test_entries_stated_in_reference():
    idx = TABLE_ORDER.index
    assert TABLE[idx("F0")][idx("F0'")] == 3
    assert TABLE[idx("pi0")][idx("E0'")] == 3
    assert TABLE[idx("E0")][idx("E0'")] == 1


def test_same_family_numbers_even():
    for a, b in itertools.product(range(8), repeat=2):
        if (a < 4) == (b < 4):
            assert TABLE[a][b] % 2 == 0


def test_reference_agreement_outside_pi0_prime_row():
    idx = TABLE_ORDER.index("pi0'")
    for a, b in itertools.product(range(8), repeat=2):
        if idx not in (a, b):
            assert TABLE[a][b] == expected.INTERSECTION_TABLE[a][b]


def test_translates_share_class():
    assert pairing_on_A("F1", "F2'") == pairing_on_A("F0", "F0'")


units = st.sampled_from(hurwitz_units())
norm2 = st.sampled_from(hurwitz_elements_of_norm(2))


@given(st.one_of(units, norm2), st.one_of(units, norm2), st.one_of(units, norm2), st.one_of(units, norm2))
def test_delta_classes_symmetric_and_isotropic(a1, a2, c1, c2):
    L1 = delta_class(a1, a2)
    L2 = delta_class(c1, c2)
    assert intersection(L1, L2) == intersection(L2, L1)
    assert self_intersection(L1) == 0


def test_gram_of_a2_chain():
    g = gram_and_discriminant([[0, 1], [1, 0]])
    assert (g.rank, g.discriminant, g.signature) == (2, 3, (0, 2))


def test_gram_with_radical():
    # two curves meeting twice: the difference spans the radical
    g = gram_and_discriminant([[0, 2], [2, 0]])
    assert g.rank == 1 and g.radical_rank == 1
    assert g.discriminant == -2
    assert g.radical_basis in ([[1, 1]], [[-1, -1]])
