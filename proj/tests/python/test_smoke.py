import pytest

import spiralcolor as sc


def triangle():
    return sc.PlanarGraph.build(3, [[1, 2], [2, 0], [0, 1]], [0, 1, 2])


def test_build_and_faces():
    g = triangle()
    assert g.vertex_count == 3
    assert g.edge_count == 3
    assert sorted(len(f) for f in g.faces) == [3, 3]
    again = sc.PlanarGraph.from_json(g.to_json())
    assert again.fingerprint == g.fingerprint


def test_invalid_embedding_raises():
    with pytest.raises(ValueError):
        sc.PlanarGraph.build(3, [[1, 2], [2], [0, 1]], [0, 1, 2])
    with pytest.raises(ValueError):
        sc.PlanarGraph.from_json('{"n": 3')


def test_short_cycles():
    c4 = sc.PlanarGraph.build(4, [[3, 1], [0, 2], [1, 3], [2, 0]], [0, 3, 2, 1])
    assert sc.find_short_cycles(c4) == [[0, 1, 2, 3]]
    assert not sc.is_g6(c4)


def test_gadget_coloring():
    g = sc.gadget_hexagon_triangles()
    assert sc.is_g6(g)
    assert len(sc.triangles(g)) == 6
    d = sc.decompose(g)
    assert len(d["chains"]) == 1
    out = sc.color(g)
    assert out["status"] == "success"
    assert out["counts"] == [3, 3, 6]
    assert sc.verify(g, out["colors"]) == []


def test_hub_gadget():
    g = sc.gadget_three_triangles_hub()
    colors = sc.color(g)["colors"]
    assert colors[2] == colors[5] == colors[8]
    assert colors[9] != colors[2]


def test_oracle_and_cross_check():
    g = sc.gen_random_g6(25, 0.5, 3)
    assert sc.is_g6(g)
    verdict = sc.exact_3color(g)
    assert verdict["status"] == "colorable"
    assert sc.verify(g, verdict["colors"]) == []
    assert sc.cross_check(g) in {"consistent_success", "heuristic_incomplete"}


def test_generator_determinism():
    a = sc.gen_random_g6(40, 0.3, 12345)
    b = sc.gen_random_g6(40, 0.3, 12345)
    assert a.to_json() == b.to_json()


def test_hunt_summary():
    summary = sc.hunt(count=40, n_max=30, workers=2)
    assert summary["runs"] == 40
    assert summary["counterexample_candidates"] == 0
