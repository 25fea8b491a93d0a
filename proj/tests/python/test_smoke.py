import os

import pytest

import zetakirch as zk

FIXTURES = os.environ.get("ZETAKIRCH_FIXTURE_DIR", os.path.join(os.path.dirname(__file__), "..", "data"))


def load(name):
    with open(os.path.join(FIXTURES, name)) as f:
        return zk.Graph.parse(f.read())


def test_graph_basics():
    g = load("p3.wgr")
    assert g.n == 3
    assert g.m == 2
    assert g.total_weight() == "5"
    assert g.weighted_degrees() == ["2", "5", "3"]


def test_from_edges_and_validation():
    g = zk.Graph.from_edges(3, [(0, 1, "2"), (1, 2, "3")])
    assert zk.weighted_complexity(g) == "6"
    with pytest.raises(ValueError):
        zk.Graph.from_edges(2, [(0, 0, "1")])  # loop
    with pytest.raises(ValueError):
        zk.Graph.parse("bogus")


def test_kirchhoff_report():
    rep = zk.kirchhoff_report(load("p3.wgr"))
    assert rep["kappa_w"] == "6"
    assert rep["kf"] == "5/3"
    assert rep["kf_star"] == "15"
    assert rep["kf_plus"] == "31/3"
    assert rep["kf_z"] == "1"
    rs = {(r["p"], r["q"]): r["r"] for r in rep["resistances"]}
    assert rs == {(0, 1): "1/2", (0, 2): "5/6", (1, 2): "1/3"}


def test_complexity_oracle_pair():
    k4 = load("k4.wgr")
    assert zk.weighted_complexity(k4) == "16"
    assert zk.brute_force_complexity(k4) == "16"


def test_zeta_identities():
    k4 = load("k4.wgr")
    assert zk.theorem10_check(k4)
    assert zk.verify_theorems_11_12(k4)
    t13 = zk.verify_theorem13(k4)
    assert t13["ok"] and t13["lhs"] == "1728"
    hn = zk.verify_hashimoto_northshield(k4)
    assert hn["ok"] and hn["value"] == "-256"
    c1 = zk.verify_corollary1(k4)
    assert c1["ok"] and c1["expected"] == "64"


def test_f_w_constant_term():
    terms = zk.f_w_poly(load("k3.wgr"))
    assert {"du": 0, "dt": 0, "coeff": "1"} in terms
    assert zk.eval_f_w(load("k3.wgr"), "0", "0") == "1"
    # the curve substitution kills f_w: spot-check u = 1 - 1/t at t = 2
    assert zk.eval_f_w(load("k3.wgr"), "1/2", "2") == "0"


def test_covering_path():
    k3 = load("k3.wgr")
    cover = zk.derived_graph(k3, "Z2", ["0", "0", "1"])
    assert cover.n == 6 and cover.m == 6
    assert zk.weighted_complexity(cover) == "6"
    t15 = zk.verify_theorem15(k3, "Z2", ["0", "0", "1"])
    assert t15["ok"] and t15["formula"] == "6" and t15["direct"] == "6"
    assert zk.verify_theorem14(k3, "Z2", ["0", "0", "1"])["ok"]
    t16 = zk.verify_theorem16(k3, "Z2", ["0", "0", "1"])
    assert t16["ok"] and t16["variant1"] and t16["variant2"] and t16["variant3"]
    with pytest.raises(ValueError):
        zk.derived_graph(k3, "Z2", ["0", "0", "0"])  # disconnected lift


def test_numeric_covering_path():
    k3 = load("k3.wgr")
    t14 = zk.verify_theorem14(k3, "Z3", ["0", "0", "1"])
    assert t14["ok"] and not t14["exact"]
