import itertools

import pytest

from k3config import gkm, models
from k3config.gf2k import GF


def test_projective_points_canonical():
    pts = models.projective_points()
    assert len(pts) == 21
    for p in pts:
        lead = next(c for c in p.coords if c.value)
        assert lead == GF(2).one


def test_canonical_rejects_zero():
    with pytest.raises(ValueError):
        models.ProjPoint.canonical([GF(2).zero] * 3)


def test_pg24_axioms():
    g = models.pg24()
    M = g.matrix
    assert g.is_regular(5) and g.edge_count() == 105
    for i, j in itertools.combinations(range(21), 2):
        assert sum(M[i][k] * M[j][k] for k in range(21)) == 1
        assert sum(M[k][i] * M[k][j] for k in range(21)) == 1


def test_p2p2_lines():
    g = models.p2p2_lines()
    assert g.is_regular(5) and g.edge_count() == 105
    row = g.left.index("A(1:0:0)")
    assert sorted(g.right[j] for j in g.neighbours_left(row)) == sorted(
        f"B{p}" for p in models.projective_points() if p.coords[0].value == 0
    )
    pts = models.projective_points()
    for i, j in itertools.product(range(21), repeat=2):
        if g.matrix[i][j]:
            assert models.on_surface(pts[i].coords, pts[j].coords)


def test_frobenius_twin():
    assert models.frobenius_twin_agrees()


def test_involution():
    swap = models.involution_swap()
    assert len(swap) == 42
    assert all(swap[swap[v]] == v and swap[v] != v for v in swap)


def test_fixed_curve():
    assert models.fixed_curve_count() == 9
    pts = set(models.fixed_points())
    for p in pts:
        for perm in itertools.permutations(range(3)):
            assert models.ProjPoint.canonical([p.coords[k] for k in perm]) in pts


GRAPHS = {
    "pg24": models.pg24,
    "p2p2": models.p2p2_lines,
    "gkm": lambda: models.from_config(gkm.derive_incidence()),
}


@pytest.mark.parametrize("a,b", list(itertools.combinations_with_replacement(GRAPHS, 2)))
def test_pairwise_isomorphic(a, b):
    g1, g2 = GRAPHS[a](), GRAPHS[b]()
    iso = models.graph_iso(g1, g2)
    assert iso is not None
    assert models.check_isomorphism(g1, g2, iso)


def test_self_isomorphism_is_identity():
    g = models.pg24()
    iso = models.graph_iso(g, g)
    assert all(k == v for k, v in iso.mapping.items())


def test_non_isomorphic_graphs():
    g = models.pg24()
    M = [list(r) for r in g.matrix]
    # move one incidence: still 105 edges but degrees break
    i = 0
    j_on = g.neighbours_left(0)[0]
    j_off = next(j for j in range(21) if not M[0][j])
    M[i][j_on], M[i][j_off] = 0, 1
    h = models.BipartiteGraph(g.left, g.right, tuple(map(tuple, M)))
    assert models.graph_iso(g, h) is None


def test_family_swap_is_found_when_needed():
    # the two sides have different degree profiles, so only the swapped map works
    left = ("a", "b")
    right = ("x", "y", "z")
    g1 = models.BipartiteGraph(left, right, ((1, 1, 1), (1, 0, 0)))
    g2 = models.BipartiteGraph(right, left, ((1, 1), (1, 0), (1, 0)))
    iso = models.graph_iso(g1, g2)
    assert iso is not None and iso.swaps_families
    assert models.check_isomorphism(g1, g2, iso)


def test_export_formats():
    g = models.pg24()
    assert g.to_dot().count(" -- ") == 105
    assert g.to_csv().count("\n") == 106
    assert g.to_json() == models.pg24().to_json()
