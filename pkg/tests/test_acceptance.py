"""Acceptance criteria, each run at its stated tolerance (exact) and time bound."""

import itertools
import time

import pytest

from k3config import abelian, discrepancy, expected, gkm, models
from k3config.catalog import TABLE_ORDER
from k3config.ecurve import FROB, PI, RELATIONS, enumerate_points, verify_relations
from k3config.nslattice import intersection_table, pairing_on_A, tables_across_solutions
from k3config.quatorder import endo_to_quat, solve_generators
from k3config.suites import quotient_checks

crit = pytest.mark.criterion


@crit("1 endomorphism relations")
def test_relation_suite_exhaustive_on_f64():
    start = time.perf_counter()
    results = verify_relations(6, RELATIONS)
    elapsed = time.perf_counter() - start
    assert len(enumerate_points(6)) == 81
    assert len(results) == 11
    assert elapsed < 1.0
    failed = [label for label, ok in results if not ok]
    assert failed == [], f"identities failing on E(F_64): {failed}"


@crit("2 quaternion model")
def test_quaternion_model():
    start = time.perf_counter()
    sols = solve_generators.__wrapped__()
    tables = tables_across_solutions()
    elapsed = time.perf_counter() - start
    assert len(sols) >= 1
    assert endo_to_quat(FROB).nrd() == 2
    assert endo_to_quat(PI).nrd() == 3
    assert len(tables) == 1
    assert elapsed < 1.0


@crit("3 intersection table")
def test_intersection_table_entry_for_entry():
    table = intersection_table()
    idx = TABLE_ORDER.index
    assert table[idx("F0")][idx("F0'")] == 3
    assert table[idx("pi0")][idx("E0'")] == 3
    assert all(table[a][a] == 0 for a in range(8))
    wrong = [
        (TABLE_ORDER[a], TABLE_ORDER[b], table[a][b], expected.INTERSECTION_TABLE[a][b])
        for a, b in itertools.product(range(8), repeat=2)
        if table[a][b] != expected.INTERSECTION_TABLE[a][b]
    ]
    assert wrong == [], f"entries differing (row, column, derived, reference): {wrong}"


# cells where the derived tables differ from the reference, with the reason recorded
DOCUMENTED = {
    ("F2", "P2xP0"),
    *{("F4", f"P{i}x{row}") for i in range(3)
      for row in ("(1,w)", "(1,w^2)", "(w,w)", "(w,w^2)", "(w^2,w)", "(w^2,w^2)")},
    ("F4", "(w^2,w^2)xP1"),
}


@crit("4 torsion incidence tables")
def test_torsion_tables():
    t2 = abelian.incidence_table_f2()
    assert len(t2) == 9
    assert all(len(c["First"]) + len(c["Second"]) == 8 for c in t2.values())
    t4 = abelian.incidence_table_f4()
    assert len(t4) == 72
    assert all(len(v) == 2 for v in t4.values())
    mism = discrepancy.torsion_mismatches()
    for m in mism:
        print(f"documented discrepancy {m.table} {m.cell}: derived {m.derived}, reference {m.transcribed}; "
              + "; ".join(m.reasons))
    assert {(m.table, m.cell) for m in mism} == DOCUMENTED
    assert all(m.corroborated for m in mism)


@crit("5 multiplicity accounting")
def test_multiplicity_accounting():
    rows = abelian.multiplicity_accounting(pairing_on_A)
    assert len(rows) == 276
    assert [r for r in rows if not r["ok"]] == []


@crit("6 configuration")
def test_configuration_verified():
    g = gkm.derive_incidence()
    checks = gkm.verify_config(g)
    assert all(checks.values()), checks
    assert len(g.edges()) == 105


@crit("6 configuration")
def test_derived_equals_closed_form():
    diff = gkm.derive_incidence().differences(gkm.closed_form_incidence())
    assert diff == [], f"(curve, curve, derived, closed form): {diff}"


@crit("7 fibration")
def test_fibration():
    g = gkm.derive_incidence()
    rep = gkm.fibration_analysis(g)
    assert len(rep.partitions) == 1
    fibers = rep.partitions[0]
    assert len(fibers) == 4
    assert {frozenset(h) for h in fibers} == {frozenset(h) for h in gkm.REFERENCE_FIBERS}
    assert all(rep.checks.values()), rep.checks
    assert sum(len(h) for h in fibers) == 24


@crit("8 lattice")
def test_lattice():
    g = gkm.gram(gkm.derive_incidence())
    assert g.rank == 22
    st = gkm.shioda_tate_report()
    assert st["picard_number"] == 2 + 4 * 5 == 22
    assert st["discriminant"] == -(6**4) // 18**2 == -4
    print(f"span discriminant {g.discriminant}, index in a lattice of discriminant -4: {g.index_against(-4)}")
    assert g.discriminant == -4
    assert g.index_against(-4) == 1


@crit("9 model equivalence")
def test_models_isomorphic():
    start = time.perf_counter()
    graphs = {
        "pg24": models.pg24(),
        "p2p2": models.p2p2_lines(),
        "gkm": models.from_config(gkm.derive_incidence()),
    }
    for a, b in itertools.combinations(graphs, 2):
        iso = models.graph_iso(graphs[a], graphs[b])
        assert iso is not None, (a, b)
        assert models.check_isomorphism(graphs[a], graphs[b], iso)
    swap = models.involution_swap()
    assert all(swap[swap[v]] == v and swap[v][0] != v[0] for v in swap)
    assert time.perf_counter() - start < 5.0


@crit("10 quotient map")
def test_quotient_map():
    checks = quotient_checks()
    assert all(checks.values()), checks
