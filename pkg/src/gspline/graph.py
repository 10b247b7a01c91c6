"""Ordered-vertex weighted multigraphs, simple-path enumeration and JSON I/O.

Vertices are addressed by their 1-based position in the vertex order. The order is
part of the data: flow-up classes, the collapse order and basis indices all key off it.
"""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import kernels
from .errors import InvalidGraph, InvalidVertex

DEFAULT_PATH_LIMIT = 100_000


def default_path_limit() -> int:
    """The path cap, honouring the ``SPLINE_PATH_LIMIT`` environment variable."""
    raw = os.environ.get("SPLINE_PATH_LIMIT")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InvalidGraph(f"SPLINE_PATH_LIMIT must be an integer, got {raw!r}") from None
    return DEFAULT_PATH_LIMIT


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    weight: int
    edge_id: int

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]


@dataclass(frozen=True)
class WeightedGraph:
    """An immutable multigraph on vertices ``1..n`` with positive integer weights."""

    n: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[str, ...] | None = None  # defaults to v1..vn
    _by_id: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraph("vertex count must be non-negative")
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.labels is None:
            labels = tuple(f"v{k}" for k in range(1, self.n + 1))
        else:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise InvalidGraph(f"{len(labels)} labels for {self.n} vertices")
        object.__setattr__(self, "labels", labels)
        by_id = {}
        for e in self.edges:
            if not (1 <= e.u <= self.n and 1 <= e.v <= self.n):
                raise InvalidGraph(f"edge {e.edge_id} has an endpoint outside 1..{self.n}")
            if e.u == e.v:
                raise InvalidGraph(f"edge {e.edge_id} is a self-loop at {e.u}")
            if not isinstance(e.weight, int) or e.weight < 1:
                raise InvalidGraph(f"edge {e.edge_id} weight must be a positive integer")
            if e.edge_id in by_id:
                raise InvalidGraph(f"duplicate edge id {e.edge_id}")
            by_id[e.edge_id] = e
        object.__setattr__(self, "_by_id", by_id)

    @classmethod
    def from_edges(cls, n: int, triples: Iterable[tuple[int, int, int]], labels=None) -> "WeightedGraph":
        """Build from ``(u, v, weight)`` triples, numbering edges 0, 1, ... in order."""
        return cls(n, tuple(Edge(u, v, w, k) for k, (u, v, w) in enumerate(triples)), labels)

    def edge(self, edge_id: int) -> Edge:
        return self._by_id[edge_id]

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise InvalidVertex(f"vertex {v!r} not in 1..{self.n}")
        return v

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return sum(1 for e in self.edges if v in (e.u, e.v))

    def weights(self) -> list[int]:
        return [e.weight for e in self.edges]

    def next_edge_id(self) -> int:
        return max((e.edge_id for e in self.edges), default=-1) + 1

    def label(self, v: int) -> str:
        return self.labels[v - 1]

    # Serialization

    def to_dict(self) -> dict:
        return {
            "vertices": [self.label(v) for v in range(1, self.n + 1)],
            "edges": [
                {"u": e.u, "v": e.v, "w": str(e.weight), "id": e.edge_id} for e in self.edges
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "WeightedGraph":
        try:
            vertices = data["vertices"]
            raw_edges = data.get("edges", [])
        except (TypeError, KeyError) as exc:
            raise InvalidGraph(f"graph JSON needs 'vertices' and 'edges': {exc}") from None
        if not isinstance(vertices, list):
            raise InvalidGraph("'vertices' must be a list")
        edges = []
        for k, item in enumerate(raw_edges):
            try:
                u, v, w = item["u"], item["v"], parse_int(item["w"])
                eid = item.get("id", k)
            except (TypeError, KeyError, ValueError) as exc:
                raise InvalidGraph(f"bad edge #{k}: {exc}") from None
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v, eid)):
                raise InvalidGraph(f"bad edge #{k}: endpoints and id must be integers")
            edges.append(Edge(u, v, w, eid))
        return cls(len(vertices), tuple(edges), tuple(str(x) for x in vertices))

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def loads(cls, text: str) -> "WeightedGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidGraph(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)

    @classmethod
    def load(cls, path) -> "WeightedGraph":
        with open(path) as fh:
            return cls.loads(fh.read())


def parse_int(value) -> int:
    """Integers cross JSON boundaries as decimal strings; plain ints are accepted too."""
    if isinstance(value, bool):
        raise ValueError("booleans are not integers")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value.strip(), 10)
    raise ValueError(f"expected a decimal string, got {value!r}")


def is_connected(g: WeightedGraph) -> bool:
    if g.n <= 1:
        return True
    adj = adjacency(g)
    seen = {1}
    todo = [1]
    while todo:
        v = todo.pop()
        for w, _ in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == g.n


def is_simple(g: WeightedGraph) -> bool:
    pairs = [e.pair for e in g.edges]
    return len(pairs) == len(set(pairs))


def adjacency(g: WeightedGraph) -> dict[int, list[tuple[int, Edge]]]:
    """Map vertex -> [(neighbour, edge)] ordered by neighbour then edge id."""
    adj = {v: [] for v in range(1, g.n + 1)}
    for e in g.edges:
        adj[e.u].append((e.v, e))
        adj[e.v].append((e.u, e))
    for items in adj.values():
        items.sort(key=lambda item: (item[0], item[1].edge_id))
    return adj


def star(g: WeightedGraph, v: int) -> list[tuple[int, int, int]]:
    """Incident edges of ``v`` as ``(neighbour, weight, edge_id)``."""
    g.check_vertex(v)
    return [(w, e.weight, e.edge_id) for w, e in adjacency(g)[v]]


def permute(g: WeightedGraph, order: Sequence[int]) -> WeightedGraph:
    """Reorder vertices so that new vertex ``k`` is old vertex ``order[k-1]``."""
    if sorted(order) != list(range(1, g.n + 1)):
        raise InvalidVertex(f"order must be a permutation of 1..{g.n}")
    new_index = {old: k for k, old in enumerate(order, start=1)}
    edges = tuple(Edge(new_index[e.u], new_index[e.v], e.weight, e.edge_id) for e in g.edges)
    labels = tuple(g.label(old) for old in order)
    return WeightedGraph(g.n, edges, labels)


class _CSR:
    """0-based compressed adjacency consumed by the kernels."""

    __slots__ = ("indptr", "nbrs", "eids", "weights", "edge_ids")

    def __init__(self, g: WeightedGraph):
        adj = adjacency(g)
        pos_of = {e.edge_id: k for k, e in enumerate(g.edges)}
        self.indptr = [0]
        self.nbrs = []
        self.eids = []
        for v in range(1, g.n + 1):
            for w, e in adj[v]:
                self.nbrs.append(w - 1)
                self.eids.append(pos_of[e.edge_id])
            self.indptr.append(len(self.nbrs))
        self.weights = [e.weight for e in g.edges]
        self.edge_ids = [e.edge_id for e in g.edges]


def _run_paths(g, source, is_target, may_pass, limit, record):
    csr = _CSR(g)
    return csr, kernels.path_gcds(
        csr.indptr, csr.nbrs, csr.eids, csr.weights, source - 1, is_target, may_pass, limit, record
    )


def _masks(g, target_set, interior_filter):
    is_target = bytearray(g.n)
    for t in target_set:
        is_target[t - 1] = 1
    may_pass = bytearray(g.n)
    for v in range(1, g.n + 1):
        if not is_target[v - 1] and (interior_filter is None or interior_filter(v)):
            may_pass[v - 1] = 1
    return bytes(is_target), bytes(may_pass)


def simple_paths(
    g: WeightedGraph,
    source: int,
    target: int,
    interior_filter: Callable[[int], bool] | None = None,
    limit: int | None = None,
) -> list[Path]:
    """All simple paths ``source -> target`` whose interior vertices pass ``interior_filter``.

    Parallel edges give distinct paths. Raises PathExplosion past ``limit`` paths.
    """
    g.check_vertex(source)
    g.check_vertex(target)
    if source == target:
        raise InvalidVertex("simple_paths needs distinct endpoints")
    limit = default_path_limit() if limit is None else limit
    is_target, may_pass = _masks(g, [target], interior_filter)
    csr, (_, raw) = _run_paths(g, source, is_target, may_pass, limit, True)
    return [
        Path(tuple(v + 1 for v in verts), tuple(csr.edge_ids[p] for p in positions))
        for verts, positions in raw
    ]


def path_gcds_to(
    g: WeightedGraph,
    source: int,
    targets: Iterable[int],
    interior_filter: Callable[[int], bool] | None = None,
    limit: int | None = None,
) -> list[int]:
    """gcd of every simple path from ``source`` ending at its first vertex in ``targets``."""
    g.check_vertex(source)
    targets = [g.check_vertex(t) for t in targets]
    if source in targets:
        raise InvalidVertex("source cannot be a target")
    limit = default_path_limit() if limit is None else limit
    is_target, may_pass = _masks(g, targets, interior_filter)
    _, (gcds, _) = _run_paths(g, source, is_target, may_pass, limit, False)
    return gcds


def path_gcd(g: WeightedGraph, p: Path) -> int:
    if len(p.edge_ids) != len(p.vertices) - 1:
        raise InvalidVertex("path edge count does not match its vertices")
    for k, eid in enumerate(p.edge_ids):
        e = g.edge(eid)
        if {e.u, e.v} != {p.vertices[k], p.vertices[k + 1]}:
            raise InvalidVertex(f"edge {eid} does not join {p.vertices[k]} and {p.vertices[k + 1]}")
    return math.gcd(*(g.edge(eid).weight for eid in p.edge_ids))
