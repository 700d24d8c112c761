import json

import pytest

from k3config import gkm
from k3config.catalog import FIRST, SECOND
from k3config.nslattice import pairing_on_A

D = gkm.derive_incidence()
C = gkm.closed_form_incidence()


def test_node_order():
    names = [c.name for c in gkm.nodes()]
    assert names[:3] == ["E0", "E1", "E2"]
    assert names[12:21] == [f"l{q}{r}" for q in range(3) for r in range(3)]
    assert names[21] == "E0'"
    assert names[-1] == "l22'"
    assert sum(c.exceptional for c in gkm.nodes()) == 18


def test_derived_examples():
    assert D["F2", "F0'"] == 1
    assert D["F0", "F0'"] == 0
    for q, r, s, t in [(0, 0, 0, 0), (1, 2, 1, 2), (0, 1, 1, 0)]:
        assert D[f"l{q}{r}", f"l{s}{t}'"] == int((q, r) == (s, t))


def test_closed_form_examples():
    assert C["E1", "pi1'"] == 0
    assert C["l01", "F1'"] == 1
    assert C["l00", "V0'"] == 1


@pytest.mark.parametrize("g", [D, C], ids=["derived", "rules"])
def test_verify_config(g):
    assert all(gkm.verify_config(g).values())
    assert len(g.edges()) == 105


def test_exceptional_rules_agree():
    assert all(a.startswith("F") and b.startswith("F") for a, b, *_ in D.differences(C))


def test_derived_and_rules_differ_only_on_f_pairs():
    assert sorted((a, b) for a, b, *_ in D.differences(C)) == [
        ("F1", "F1'"), ("F1", "F2'"), ("F2", "F1'"), ("F2", "F2'"),
    ]


def test_derived_f_rule():
    # F_i . F'_j = 0 exactly when i + j = 0 mod 3
    for i in range(3):
        for j in range(3):
            assert D[f"F{i}", f"F{j}'"] == int((i + j) % 3 != 0)


def test_pairing_consistency():
    rows = gkm.pairing_consistency(pairing_on_A)
    assert len(rows) == 144
    assert all(r["ok"] for r in rows)


def test_fibration():
    rep = gkm.fibration_analysis(D)
    assert rep.ok
    assert len(rep.partitions) == 1 and len(rep.partitions[0]) == 4
    assert {frozenset(h) for h in rep.partitions[0]} == {frozenset(f) for f in gkm.REFERENCE_FIBERS}


def test_fibers_are_cycles():
    idx = {c.name: n for n, c in enumerate(D.nodes)}
    for h in gkm.fibration_analysis(D).partitions[0]:
        for k in range(6):
            assert D.incidence[idx[h[k]]][idx[h[(k + 1) % 6]]] == 1


def test_lattice():
    g = gkm.gram(D)
    assert (g.rank, g.radical_rank, g.discriminant, g.signature) == (22, 20, -4, (1, 21))
    assert g.index_against(-4) == 1
    assert g.elementary_divisors[-2:] == [2, 2]


def test_rule_graph_violates_hodge_index():
    # a K3 has Picard rank <= 22 and exactly one positive direction
    g = gkm.gram(C)
    assert g.rank == 24
    assert g.signature == (2, 22)


def test_shioda_tate():
    st = gkm.shioda_tate_report()
    assert (st["picard_number"], st["discriminant"], st["artin_invariant"]) == (22, -4, 1)


@pytest.mark.parametrize("family", [FIRST, SECOND])
def test_contract_family(family):
    rep = gkm.contract_family(D, family)
    assert rep["a1_points"] == 21 and all(rep["checks"].values())


def test_exports():
    d = json.loads(D.to_json())
    assert d["schema_version"] == gkm.SCHEMA_VERSION
    assert len(d["nodes"]) == 42 and len(d["incidence"]) == 105
    assert D.to_dot().count(" -- ") == 105
    assert D.to_csv().count("\n") == 106
    assert D.to_json() == gkm.derive_incidence().to_json()


def test_display_name():
    assert gkm.display_name("l12'") == "ℓ₁₂′"
    assert gkm.display_name("pi0") == "π₀"
