import json
import math
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gspline import WeightedGraph, is_connected, is_simple, path_gcd, permute, simple_paths, star
from gspline.errors import InvalidGraph, InvalidVertex, PathExplosion
from gspline.graph import Edge, Path, default_path_limit, path_gcds_to


def complete(n, w=1):
    return WeightedGraph.from_edges(n, [(a, b, w) for a, b in combinations(range(1, n + 1), 2)])


def test_connectivity():
    assert is_connected(complete(4, 7))
    assert not is_connected(WeightedGraph(2))
    assert is_connected(WeightedGraph(1))
    assert is_connected(WeightedGraph(0))


def test_simplicity(k4):
    assert is_simple(k4)
    assert not is_simple(WeightedGraph.from_edges(2, [(1, 2, 3), (2, 1, 5)]))
    assert is_simple(WeightedGraph(3))


def test_star(k4):
    assert [(w, wt) for w, wt, _ in star(k4, 4)] == [(1, 12), (2, 15), (3, 8)]
    assert star(WeightedGraph(2), 1) == []
    multi = WeightedGraph.from_edges(2, [(1, 2, 3), (1, 2, 5)])
    assert star(multi, 1) == [(2, 3, 0), (2, 5, 1)]
    with pytest.raises(InvalidVertex):
        star(k4, 5)


def test_star_length_is_degree(k4):
    for v in range(1, 5):
        assert len(star(k4, v)) == k4.degree(v) == 3


def test_triangle_paths():
    g = WeightedGraph.from_edges(3, [(1, 2, 2), (2, 3, 3), (1, 3, 4)])
    paths = simple_paths(g, 1, 2)
    assert [p.vertices for p in paths] == [(1, 2), (1, 3, 2)]


def test_k4_filtered_paths(k4):
    paths = simple_paths(k4, 2, 1, lambda v: v > 2)
    assert len(paths) == 5
    assert sorted(path_gcd(k4, p) for p in paths) == [1, 2, 3, 4, 6]


def test_parallel_edges_give_distinct_paths():
    g = WeightedGraph.from_edges(2, [(1, 2, 3), (1, 2, 5)])
    paths = simple_paths(g, 1, 2)
    assert len(paths) == 2
    assert {p.edge_ids for p in paths} == {(0,), (1,)}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_path_count_complete_graph(n):
    expected = sum(math.factorial(n - 2) // math.factorial(n - 2 - k) for k in range(n - 1))
    for a, b in [(1, 2), (1, n), (n - 1, n)]:
        assert len(simple_paths(complete(n), a, b)) == expected


def test_path_gcd_examples(k4):
    # v2 v4 v3 v1 has weights 15, 8, 6
    assert path_gcd(k4, Path((2, 4, 3, 1), (4, 5, 1))) == 1
    assert path_gcd(k4, Path((2, 4, 1), (4, 2))) == 3
    assert path_gcd(k4, Path((1, 2), (0,))) == 6
    with pytest.raises(InvalidVertex):
        path_gcd(k4, Path((1, 2), (5,)))


def test_path_limit(k4):
    with pytest.raises(PathExplosion) as info:
        simple_paths(complete(6), 1, 2, limit=10)
    assert info.value.count == 11 and info.value.limit == 10
    assert len(simple_paths(k4, 1, 2, limit=5)) == 5


def test_path_limit_env(monkeypatch):
    monkeypatch.setenv("SPLINE_PATH_LIMIT", "3")
    assert default_path_limit() == 3
    with pytest.raises(PathExplosion):
        simple_paths(complete(5), 1, 2)
    monkeypatch.delenv("SPLINE_PATH_LIMIT")
    assert default_path_limit() == 100_000


def test_same_endpoints_rejected(k4):
    with pytest.raises(InvalidVertex):
        simple_paths(k4, 1, 1)
    with pytest.raises(InvalidVertex):
        path_gcds_to(k4, 1, [1, 2])


def test_graph_validation():
    with pytest.raises(InvalidGraph):
        WeightedGraph.from_edges(2, [(1, 1, 3)])
    with pytest.raises(InvalidGraph):
        WeightedGraph.from_edges(2, [(1, 3, 3)])
    with pytest.raises(InvalidGraph):
        WeightedGraph.from_edges(2, [(1, 2, 0)])
    with pytest.raises(InvalidGraph):
        WeightedGraph(2, (Edge(1, 2, 1, 0), Edge(1, 2, 1, 0)))
    with pytest.raises(InvalidGraph):
        WeightedGraph(2, (), ("a",))


def test_parse_rejects_malformed():
    with pytest.raises(InvalidGraph):
        WeightedGraph.loads("not json")
    with pytest.raises(InvalidGraph):
        WeightedGraph.loads('{"edges": []}')
    with pytest.raises(InvalidGraph):
        WeightedGraph.loads('{"vertices": ["a", "b"], "edges": [{"u": 1, "v": 2, "w": "x"}]}')
    with pytest.raises(InvalidGraph):
        WeightedGraph.loads('{"vertices": ["a", "b"], "edges": [{"u": 1, "v": 1, "w": "2"}]}')


def test_fixture_matches_golden_weights(k4):
    assert [(e.u, e.v, e.weight) for e in k4.edges] == [
        (1, 2, 6), (1, 3, 6), (1, 4, 12), (2, 3, 20), (2, 4, 15), (3, 4, 8)
    ]
    assert k4.labels == ("v1", "v2", "v3", "v4")


def test_weights_serialize_as_strings():
    g = WeightedGraph.from_edges(2, [(1, 2, 10**40 + 1)])
    data = json.loads(g.dumps())
    assert data["edges"][0]["w"] == str(10**40 + 1)
    assert WeightedGraph.loads(g.dumps()) == g


@st.composite
def multigraphs(draw):
    n = draw(st.integers(min_value=0, max_value=6))
    if n < 2:
        return WeightedGraph(n, (), tuple(f"x{k}" for k in range(n)))
    pair = st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(st.tuples(pair, st.integers(1, 10**30)), max_size=12))
    return WeightedGraph.from_edges(n, [(u, v, w) for (u, v), w in edges], [f"x{k}" for k in range(n)])


@given(multigraphs())
def test_serialization_round_trip(g):
    assert WeightedGraph.loads(g.dumps()) == g


def test_permute(k4):
    h = permute(k4, [4, 3, 2, 1])
    assert h.labels == ("v4", "v3", "v2", "v1")
    assert [(w, wt) for w, wt, _ in star(h, 1)] == [(2, 8), (3, 15), (4, 12)]
    with pytest.raises(InvalidVertex):
        permute(k4, [1, 2, 3])
