import random

import pytest

from gspline import Spline, WeightedGraph, build_basis, enumerate_splines, flow_up_index, is_minimal_in_class, leading_term, verify
from gspline.errors import LengthMismatch, SearchBoundExceeded, ZeroSpline
from randgraphs import connected_simple, random_multigraph


def test_verify_k4_elements(k4):
    assert verify(k4, Spline([0, 12, 12, 12])).ok
    assert verify(k4, Spline([1, 1, 1, 1])).ok


def test_m3_with_zero_last_entry_is_not_a_spline(k4):
    report = verify(k4, Spline([0, 0, 60, 0]))
    assert not report.ok
    [bad] = report.violations
    assert (bad.u, bad.v, bad.modulus) == (3, 4, 8)
    assert verify(k4, Spline([0, 0, 60, 60])).ok


def test_verify_lists_every_violation(k4):
    report = verify(k4, Spline([0, 1, 2, 3]))
    assert len(report.violations) == 6
    assert report.to_dict()["valid"] is False


def test_verify_multigraph_and_disconnected():
    g = WeightedGraph.from_edges(3, [(1, 2, 4), (1, 2, 6)])
    assert verify(g, Spline([0, 12, 5])).ok
    assert [v.modulus for v in verify(g, Spline([0, 6, 0])).violations] == [4]


def test_length_mismatch(k4):
    with pytest.raises(LengthMismatch):
        verify(k4, Spline([1, 1]))


@pytest.mark.parametrize(
    "entries, index", [([0, 0, 0, 120], 3), ([1, 1, 1, 1], 0), ([0, 0, 0, 0], 4), ([0, -5, 0, 0], 1)]
)
def test_flow_up_index(entries, index):
    assert flow_up_index(Spline(entries)) == index


def test_leading_term():
    assert leading_term(Spline([0, 12, 12, 12])) == 12
    assert leading_term(Spline([1, 1, 1, 1])) == 1
    assert leading_term(Spline([0, 0, -60, 60])) == -60
    with pytest.raises(ZeroSpline):
        leading_term(Spline([0, 0]))


def test_minimality_oracle(k4):
    assert is_minimal_in_class(k4, Spline([0, 0, 0, 120]))
    assert not is_minimal_in_class(k4, Spline([0, 0, 0, 240]))
    assert not is_minimal_in_class(k4, Spline([0, 0, 0, -120]))
    assert is_minimal_in_class(k4, Spline([1, 1, 1, 1]))
    assert not is_minimal_in_class(k4, Spline([0, 24, 24, 24]))
    with pytest.raises(SearchBoundExceeded):
        is_minimal_in_class(k4, Spline([0, 0, 0, 120]), search_bound=5)


def test_minimality_of_ones_on_random_graphs():
    rng = random.Random(4)
    for _ in range(5):
        g = connected_simple(rng, 5, 20)
        assert is_minimal_in_class(g, Spline([1] * 5))


def test_spline_arithmetic_and_json():
    s = Spline([1, 2, 3])
    assert 2 * s - s == s
    assert -s == Spline([-1, -2, -3])
    assert Spline.loads('{"entries": ["0", "-12", "12"]}') == Spline([0, -12, 12])
    assert s.to_dict() == {"entries": ["1", "2", "3"]}


@pytest.mark.parametrize("seed", range(20))
def test_module_closure(seed):
    rng = random.Random(seed)
    g = random_multigraph(rng, n_max=3, lcm_max=200)
    box = enumerate_splines(g).splines
    for _ in range(20):
        s, t = Spline(rng.choice(box)), Spline(rng.choice(box))
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        assert verify(g, a * s + b * t)


@pytest.mark.parametrize("seed", range(20))
def test_basis_combinations_verify(seed):
    rng = random.Random(seed)
    g = connected_simple(rng, rng.randint(2, 6), 30)
    basis = build_basis(g)
    s = basis.combine([rng.randint(-20, 20) for _ in range(g.n)])
    t = basis.combine([rng.randint(-20, 20) for _ in range(g.n)])
    a, b = rng.randint(-9, 9), rng.randint(-9, 9)
    assert verify(g, a * s + b * t)
    if a and flow_up_index(s) < g.n:
        assert flow_up_index(a * s) == flow_up_index(s)
