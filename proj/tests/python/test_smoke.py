"""Smoke tests for the gkcert extension module."""

import json

import pytest

gkcert = pytest.importorskip("gkcert")

C5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]


def test_version():
    assert isinstance(gkcert.__version__, str) and gkcert.__version__


def test_stahl_values():
    assert gkcert.stahl_rhs(1, 2, 5) == 3
    assert gkcert.stahl_rhs(2, 2, 5) == 5
    assert gkcert.stahl_rhs(3, 2, 5) == 8
    assert gkcert.thm_s2_value(4, 7) == 14
    assert gkcert.thm_s2_value(4, 7) == gkcert.stahl_rhs(4, 2, 7)
    # exact beyond 64 bits
    assert gkcert.stahl_rhs(2**62, 2, 8) == 2**64


def test_formula_strings():
    assert gkcert.thm_general_lower(3, 3, 6) == "6/1"
    assert gkcert.thm_general_lower(3, 3, 6, "1/2") == "11/2"
    assert gkcert.bukh_cox_lower(3, 2, 5) == "15/2"


def test_graph_json():
    g = json.loads(gkcert.graph_json(5, 2, 1))
    assert g["n"] == 10
    assert g["degree"] == 3
    assert g["edges"] == "15"
    assert "edge_list" not in g
    g = json.loads(gkcert.graph_json(5, 2, 1, with_edges=True))
    assert len(g["edge_list"]) == 15


def test_odd_girth():
    assert gkcert.odd_girth_exceeds(5, 2, 1, 3) is True
    assert gkcert.odd_girth_exceeds(5, 2, 1, 5) is False


def test_representation():
    r = gkcert.representation(6, 3, 1, 2)
    assert r["n"] == 20
    assert r["R"] == 22
    assert r["rank"] == 10
    assert r["rank_le_R"] and r["symmetric"] and r["represents"]


def test_representation_rejects_composite_modulus():
    with pytest.raises(RuntimeError):
        gkcert.representation(5, 2, 1, 4)


def test_lempel():
    f = gkcert.lempel_factorize([[1, 1], [1, 1]])
    assert f["r"] == 1
    b = f["b"]
    for i in range(2):
        for j in range(2):
            assert sum(b[i][k] * b[j][k] for k in range(f["r"])) % 2 == 1
    assert gkcert.lempel_factorize([[1, 0], [0, 1]])["r"] == 2
    with pytest.raises(RuntimeError):
        gkcert.lempel_factorize([[0, 1], [1, 0]])


def test_certificate_round_trip():
    text = gkcert.cycle_cert(3, 6)
    doc = json.loads(text)
    assert doc["claim"] == "cycles"
    assert doc["verdict"] is True
    assert doc["graph"]["n"] == "20"
    v = gkcert.verify_cert(text)
    assert v["matches"] is True
    assert v["stored_verdict"] is True
    assert v["regenerated_verdict"] is True
    assert v["mismatch"] == ""


def test_certificate_tamper_detected():
    doc = json.loads(gkcert.cycle_cert(3, 6))
    doc["representation"]["rank"] = 9
    v = gkcert.verify_cert(json.dumps(doc))
    assert v["matches"] is False
    assert v["mismatch"] == "/representation/rank"


def test_other_certificates():
    assert json.loads(gkcert.triangle_free_cert(6))["verdict"] is True
    assert json.loads(gkcert.vchrom_cert(8))["verdict"] is True


def test_crossover():
    res = gkcert.crossover("ell:3", 12)
    assert res["found"] is True
    assert res["minimal_d"] == 12
    assert res["reports"][-1]["R"] == 794
    assert res["reports"][-1]["n"] == 924
    res = gkcert.crossover("d8", 24)
    assert res["minimal_d"] == 24


def test_oracles():
    assert gkcert.minrank_exact(4, []) == 4
    assert gkcert.minrank_exact(5, C5) == 3
    assert gkcert.od_exact_gf2(3, [(0, 1), (1, 2), (0, 2)]) == 3
    assert gkcert.multichromatic_exact(5, C5, 1) == 3
    assert gkcert.multichromatic_exact(5, C5, 2) == 5


def test_budget_exception():
    with pytest.raises(gkcert.BudgetExceeded):
        gkcert.minrank_exact(5, C5, 2, 3)


def test_subspaces():
    full3 = json.dumps(
        {"ambient": 3, "basis": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}
    )
    plane = json.dumps({"ambient": 3, "basis": [["1", "0", "0"], ["0", "1", "0"]]})
    line = json.dumps({"ambient": 2, "basis": [["1", "0"]]})
    full2 = json.dumps({"ambient": 2, "basis": [["1", "0"], ["0", "1"]]})

    assert gkcert.uncovered_vector(full2, [line]) == ["1/1", "1/1"]

    res = json.loads(gkcert.avoiding_subspace(full3, [plane], 2))
    assert res["dim"] == 1

    res = json.loads(gkcert.graded_subspace(full3, [plane], 2))
    assert res["dim"] == 2
