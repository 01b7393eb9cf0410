import math
import pathlib

import pytest

grasp = pytest.importorskip("grasp")

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def path3():
    return grasp.Graph(3, [(0, 1), (1, 2)])


def k3():
    return grasp.Graph(3, [(0, 1), (1, 2), (0, 2)])


def test_graph_basics():
    g = path3()
    assert g.num_nodes == 3
    assert g.num_edges == 2
    assert g.has_edge(0, 1)
    assert not g.has_edge(0, 2)
    assert g.degree(1) == 2


def test_metrics():
    m = grasp.compute_metrics(k3())
    assert m["diameter"] == 1.0
    assert m["clustering"] == 1.0
    assert m["assortativity"] is None
    assert math.isclose(m["spectral_gap"], 1.5)
    total, avg, disconnected = grasp.total_resistance(path3())
    assert math.isclose(total, 4.0)
    assert math.isclose(avg, 4.0 / 3.0)
    assert not disconnected


def test_curvature():
    assert math.isclose(grasp.balanced_forman(k3(), 0, 1), 1.5)
    assert math.isclose(grasp.ollivier_ricci(k3(), 0, 1), 0.5)


def test_rewire_and_similarity():
    r = grasp.rewire(path3(), "gtr", budget=1)
    assert r["added"] == [(0, 2)]
    assert r["removed"] == []
    assert r["graph"] == k3()

    s = grasp.similarity(path3(), k3())
    assert math.isclose(s["jaccard"], 2.0 / 3.0)
    assert math.isclose(s["sp_length_w1"], 1.0 / 3.0)

    same = grasp.similarity(k3(), k3())
    assert same["jaccard"] == 1.0
    assert same["laplacian_spectrum_dist"] == 0.0


def test_rewire_determinism():
    g = grasp.Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    a = grasp.rewire(g, "sdrf", budget=3, seed=42)
    b = grasp.rewire(g, "sdrf", budget=3, seed=42)
    assert a["added"] == b["added"]
    assert a["graph"] == b["graph"]


def test_load_tudataset():
    bundle = grasp.load_tudataset(str(DATA / "TOY"), "TOY")
    assert len(bundle.graphs) == 3
    assert bundle.labels == [1, 0, 1]
    assert bundle.graphs[0].num_edges == 3


def test_wasserstein():
    assert math.isclose(grasp.wasserstein1([0.0, 0.0], [0.0, 2.0]), 1.0)
    assert grasp.wasserstein1([1.0, 2.0], [1.0, 2.0]) == 0.0
