"""Star-clique and edge-collapse rewriting, and complete collapse sequences.

A star-clique removes a vertex and joins each pair of its former neighbours by an
edge weighted with the gcd of the two star weights. An edge collapse replaces a
bundle of parallel edges by one edge weighted with the lcm of the bundle. Applying
both to ``v_n, v_{n-1}, ..., v_2`` reduces a connected graph to a single vertex.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Union

from .errors import Disconnected, NotSimple
from .graph import Edge, WeightedGraph, is_connected, is_simple, star


@dataclass(frozen=True)
class StarClique:
    removed: int
    star_neighbors: tuple[int, ...]
    star_weights: tuple[int, ...]
    # ((u, v), weight) in the input graph's numbering
    new_edges: tuple[tuple[tuple[int, int], int], ...]
    # index_map[old - 1] is the new index, or None for the removed vertex
    index_map: tuple[int | None, ...]

    def to_dict(self) -> dict:
        return {
            "op": "star_clique",
            "removed": self.removed,
            "star_neighbors": list(self.star_neighbors),
            "star_weights": [str(w) for w in self.star_weights],
            "new_edges": [{"u": u, "v": v, "w": str(w)} for (u, v), w in self.new_edges],
            "index_map": list(self.index_map),
        }


@dataclass(frozen=True)
class EdgeCollapse:
    pair: tuple[int, int]
    merged_weights: tuple[int, ...]
    new_weight: int

    def to_dict(self) -> dict:
        return {
            "op": "edge_collapse",
            "pair": list(self.pair),
            "merged_weights": [str(w) for w in self.merged_weights],
            "new_weight": str(self.new_weight),
        }


CollapseStep = Union[StarClique, EdgeCollapse]


def star_clique(g: WeightedGraph, v: int) -> tuple[WeightedGraph, StarClique]:
    """Remove ``v`` and connect its neighbours pairwise by gcd-weighted edges.

    Vertices above ``v`` shift down by one. The result may have parallel edges.
    """
    g.check_vertex(v)
    if not is_simple(g):
        raise NotSimple("star-clique needs a simple graph")
    st = star(g, v)
    if not st and g.n > 1:
        raise Disconnected(f"vertex {v} is isolated in a graph with {g.n} vertices")

    def remap(x: int) -> int:
        return x if x < v else x - 1

    next_id = g.next_edge_id()
    kept = [
        Edge(remap(e.u), remap(e.v), e.weight, e.edge_id) for e in g.edges if v not in (e.u, e.v)
    ]
    new_edges = []
    for (a, wa, _), (b, wb, _) in combinations(st, 2):
        w = math.gcd(wa, wb)
        new_edges.append(((a, b), w))
        kept.append(Edge(remap(a), remap(b), w, next_id))
        next_id += 1
    labels = g.labels[: v - 1] + g.labels[v:]
    step = StarClique(
        removed=v,
        star_neighbors=tuple(x for x, _, _ in st),
        star_weights=tuple(w for _, w, _ in st),
        new_edges=tuple(new_edges),
        index_map=tuple(None if x == v else remap(x) for x in range(1, g.n + 1)),
    )
    return WeightedGraph(g.n - 1, tuple(kept), labels), step


def edge_collapse_all(g: WeightedGraph) -> tuple[WeightedGraph, list[EdgeCollapse]]:
    """Replace every bundle of parallel edges by one edge weighted with their lcm.

    The merged edge takes the position of the bundle's first edge and a fresh id.
    """
    bundles: dict[tuple[int, int], list[Edge]] = {}
    for e in g.edges:
        bundles.setdefault(e.pair, []).append(e)
    if all(len(b) == 1 for b in bundles.values()):
        return g, []
    next_id = g.next_edge_id()
    steps = []
    merged = {}
    for pair in sorted(p for p, b in bundles.items() if len(b) > 1):
        ws = tuple(e.weight for e in bundles[pair])
        new = math.lcm(*ws)
        steps.append(EdgeCollapse(pair, ws, new))
        merged[pair] = Edge(pair[0], pair[1], new, next_id)
        next_id += 1
    edges = []
    for e in g.edges:
        if len(bundles[e.pair]) == 1:
            edges.append(e)
        elif e is bundles[e.pair][0]:
            edges.append(merged[e.pair])
    return WeightedGraph(g.n, tuple(edges), g.labels), steps


def collapse_once(g: WeightedGraph, v: int) -> tuple[WeightedGraph, list[CollapseStep]]:
    """Star-clique on ``v`` followed by collapsing every parallel bundle."""
    h, sc = star_clique(g, v)
    h, ec = edge_collapse_all(h)
    return h, [sc, *ec]


@dataclass(frozen=True)
class CollapseSequence:
    """The chain ``G_n -> ... -> G_1`` produced by removing ``v_n`` down to ``v_2``.

    ``graphs[k]`` is ``G_{n-k}``; ``star_weights_of[i]`` holds the star weights of
    ``v_i`` as read in ``G_i``, aligned with ``star_neighbors_of[i]``.
    """

    graphs: tuple[WeightedGraph, ...]
    steps: tuple[CollapseStep, ...]
    star_weights_of: dict[int, tuple[int, ...]] = field(default_factory=dict)
    star_neighbors_of: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.graphs[0].n

    def level(self, i: int) -> WeightedGraph:
        """``G_i``, the graph on ``v_1..v_i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"level {i} outside 1..{self.n}")
        return self.graphs[self.n - i]

    def to_dict(self) -> dict:
        return {
            "graphs": [g.to_dict() for g in self.graphs],
            "star_weights": {
                str(i): [str(w) for w in ws] for i, ws in sorted(self.star_weights_of.items(), reverse=True)
            },
            "steps": [s.to_dict() for s in self.steps],
        }


def complete_collapse(g: WeightedGraph) -> CollapseSequence:
    if g.n < 1:
        raise Disconnected("complete collapse needs at least one vertex")
    if not is_simple(g):
        raise NotSimple("complete collapse needs a simple graph")
    if not is_connected(g):
        raise Disconnected("complete collapse needs a connected graph")
    graphs = [g]
    steps: list[CollapseStep] = []
    weights = {}
    neighbors = {}
    cur = g
    for i in range(g.n, 1, -1):
        cur, level_steps = collapse_once(cur, i)
        sc = level_steps[0]
        weights[i] = sc.star_weights
        neighbors[i] = sc.star_neighbors
        steps.extend(level_steps)
        graphs.append(cur)
    return CollapseSequence(tuple(graphs), tuple(steps), weights, neighbors)
