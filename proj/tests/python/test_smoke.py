import json
import math
from pathlib import Path

import pytest

import centralitylab as cl

DATA = Path(__file__).resolve().parent.parent / "data"


def test_parse_and_stats():
    g = cl.Graph.parse("a b\nb c\n")
    assert (g.node_count, g.edge_count) == (3, 2)
    assert g.labels == ["a", "b", "c"]
    s = cl.graph_stats(g)
    assert s["mean_degree"] == pytest.approx(4 / 3)
    assert s["clustering"] == 0.0


def test_measures_on_path():
    g = cl.Graph(3, [(0, 1), (1, 2)])
    assert len(cl.measure_names()) == 16
    assert cl.compute_measure(g, "DC") == [0.5, 1.0, 0.5]
    assert cl.compute_measure(g, "Betweenness") == [0.0, 1.0, 0.0]
    assert cl.rank_nodes(cl.compute_measure(g, "Closeness"))[0] == 1
    for name in cl.measure_names():
        assert len(cl.compute_measure(g, name)) == 3


def test_errors():
    g = cl.Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        cl.compute_measure(g, "nope")
    with pytest.raises(ValueError):
        cl.Graph(2, [(0, 5)])
    with pytest.raises(ValueError):
        cl.Graph.parse("a b\nlonely\n")
    with pytest.raises(ValueError):
        cl.kendall_tau([1.0, 2.0], [1.0])


def test_kendall_tau():
    assert cl.kendall_tau([1, 2, 3, 4], [1, 2, 3, 4]) == 1.0
    assert cl.kendall_tau([1, 2, 3, 4], [4, 3, 2, 1]) == -1.0
    assert cl.kendall_tau([1, 1, 2], [1, 2, 3], "a") < cl.kendall_tau([1, 1, 2], [1, 2, 3], "b")


def test_sir_limits_and_determinism():
    g = cl.Graph(3, [(0, 1), (1, 2)])
    assert cl.simulate(g, [0], beta=1.0, runs=20)["recovered"] == [3] * 20
    assert cl.seedset_infection_rate(g, [0], beta=0.0, runs=20) == pytest.approx(1 / 3)
    a = cl.simulate(g, [1], beta=0.5, runs=2000, seed=7)
    b = cl.simulate(g, [1], beta=0.5, runs=2000, seed=7, workers=3)
    assert a["recovered"] == b["recovered"]
    assert abs(a["mean"] - 2.0) < 4 * a["standard_error"]


def test_run_corpus(tmp_path):
    out = tmp_path / "out"
    r = cl.run_corpus(DATA / "toy", out, runs=50, l_grid=[1, 2, 4], ranking_seed_size=2)
    assert [n["name"] for n in r["networks"]] == ["kite", "lollipop"]
    assert r["failures"] == []
    assert len(r["measures"]) == 16
    assert all(r["correlation"][i][i] == 1.0 for i in range(16))
    assert -1.0 <= r["ranking_tau"] <= 1.0
    report = json.loads((out / "report.json").read_text())
    assert report["content_hash"] == r["content_hash"]
    again = cl.run_corpus(DATA / "toy", out, runs=50, l_grid=[1, 2, 4], ranking_seed_size=2)
    assert again["content_hash"] == r["content_hash"]
    assert again["cache_misses"] == 0


def test_partial_failure_reported(tmp_path):
    r = cl.run_corpus(DATA / "mixed", tmp_path, runs=10, l_grid=[1, 2], ranking_seed_size=1)
    assert [n["name"] for n in r["networks"]] == ["good"]
    assert len(r["failures"]) == 1 and r["failures"][0][0].endswith("bad.txt")
    assert not math.isnan(r["networks"][0]["beta"])
