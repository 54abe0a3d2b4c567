import pytest

import geocover as gc

K4_UNIT = [
    ["a-b", "a", "a-d", "d"],
    ["a", "a-c", "c", "c-d"],
    ["c-d", "d", "b-d", "b"],
    ["c", "b-c", "b", "a-b"],
]


def test_graph_construction():
    k4 = gc.Graph.standard("complete", 4)
    assert (k4.num_vertices, k4.num_edges) == (4, 6)
    g = gc.Graph(["x", "y"], [("x", "y"), ("y", "y")])
    assert g.edges == [("x", "y"), ("y", "y")]
    assert gc.Graph.from_json(g.to_json()).edges == g.edges
    assert "sawtooth" in gc.standard_graph_tags()


def test_cover_numbers():
    r = gc.cover_number(gc.Graph.standard("complete", 4))
    assert r["cover_number"] == 4
    assert r["lower"] <= 4 <= r["upper"]
    (w,) = r["witnesses"]
    assert gc.check_cover(gc.Graph.standard("complete", 4), w["paths"], w["weights"])["accepted"]
    assert gc.cover_number(gc.Graph.standard("complete_bipartite", 2, 3))["cover_number"] == 3
    saw = gc.Graph.standard("sawtooth", 3)
    assert gc.cover_number(saw)["cover_number"] == 2
    assert gc.cover_number(saw, unweighted=True)["cover_number"] == 3


def test_budget():
    with pytest.raises(gc.BudgetExhausted) as info:
        gc.cover_number(gc.Graph.standard("complete", 4), max_size=3)
    assert (info.value.lower, info.value.upper) == (4, 6)


def test_distinct():
    r = gc.distinct_optimal_covers(gc.Graph.standard("complete", 4))
    assert r["distinct"] == len(r["witnesses"]) >= 1


def test_check_cover():
    k4 = gc.Graph.standard("complete", 4)
    r = gc.check_cover(k4, K4_UNIT)
    assert r["missing_segments"] == []
    assert r["feasible"]
    assert gc.check_cover(k4, K4_UNIT, {s: "1" for s in r["weights"]})["accepted"]
    short = [K4_UNIT[0], K4_UNIT[1], K4_UNIT[2], ["c", "b-c", "b"]]
    assert gc.check_cover(k4, short)["missing_segments"] == ["a-b:1"]
    with pytest.raises(gc.ParseError):
        gc.check_cover(k4, [["a", "nope"]])


def test_classify():
    assert gc.classify_two([["p", "q", "r"], ["p", "s", "r"]])["compatible"]
    assert not gc.classify_two([["a", "y", "b"], ["b", "a", "y"]])["compatible"]
    r = gc.classify_three([["p1", "p2", "p3", "p4"], ["p3", "p1", "p4"], ["p2", "p4"]])
    assert r == {"verdict": "not-geodesible", "admissible": False}
    with pytest.raises(gc.ParseError):
        gc.classify_three([["a"], ["b"]])


def test_atlas():
    rows = gc.atlas(1, variants=False)
    assert len(rows) == 21
    assert {r["config"] for r in rows if r["admissible"]} == {"6", "7", "12", "14"}
    assert gc.atlas_mismatches(1) == []


def test_dot():
    dot = gc.to_dot(gc.Graph.standard("path", 1), [["v0", "v0-v1", "v1"]], title="P2")
    assert "graph" in dot and '"v0"' in dot
