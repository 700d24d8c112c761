from k3config import discrepancy


def test_derived_point_sets_are_well_formed():
    assert discrepancy.derived_defects() == {}


def test_torsion_mismatch_list():
    ms = discrepancy.torsion_mismatches()
    assert sum(m.table == "F2" for m in ms) == 1
    assert sum(m.table == "F4" for m in ms) == 19
    assert all(m.corroborated for m in ms)


def test_f2_mismatch_cell():
    (m,) = [m for m in discrepancy.torsion_mismatches() if m.table == "F2"]
    assert m.cell == "P2xP0"
    assert set(m.curves) == {"V1'", "V2'"}


def test_suspected_typo_cell():
    (m,) = [m for m in discrepancy.torsion_mismatches() if m.cell == "(w^2,w^2)xP1"]
    assert set(m.derived) == {"pi2", "E1'"}
    assert set(m.transcribed) == {"pi2", "E0'"}


def test_pi_prime_columns_follow_other_sign():
    defects = discrepancy.transcribed_defects()
    for i in range(3):
        assert any("meets pi0 with number 25" in r for r in defects[f"pi{i}'"])


def test_transcribed_defects_limited_to_second_family():
    assert all(name.endswith("'") for name in discrepancy.transcribed_defects())


def test_intersection_mismatches():
    ms = discrepancy.intersection_mismatches()
    assert sorted(m.cell for m in ms) == ["(F0',pi0')", "(F0,pi0')", "(V0',pi0')", "(V0,pi0')"]


def test_rule_mismatches_corroborated():
    ms = discrepancy.rule_mismatches()
    assert len(ms) == 4
    assert all(len(m.reasons) == 2 for m in ms)
