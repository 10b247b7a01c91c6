"""Leading terms of the flow-up basis from path gcds, without collapsing the graph.

``L(M_i)`` is the lcm, over simple paths from ``v_i`` to lower-indexed vertices, of
the gcd of each path's weights. Only paths that stop at the first lower-indexed
vertex and otherwise pass through higher-indexed vertices are needed: any other
path has a prefix of that kind, and its gcd divides the prefix's.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .errors import Disconnected, InvalidVertex, NotSimple
from .graph import WeightedGraph, is_connected, is_simple, path_gcds_to
from .numtheory import lcm_all


@dataclass(frozen=True)
class PathAggregate:
    source: int
    target: int
    per_path_gcds: tuple[int, ...]
    lcm_value: int


def path_lcm(
    g: WeightedGraph,
    w: int,
    u: int,
    interior_filter: Callable[[int], bool] | None = None,
    limit: int | None = None,
) -> PathAggregate:
    if w == u:
        raise InvalidVertex("path_lcm needs distinct endpoints")
    gcds = path_gcds_to(g, w, [u], interior_filter, limit)
    return PathAggregate(w, u, tuple(gcds), lcm_all(gcds))


def _term_shortcut(g: WeightedGraph, i: int, limit) -> int:
    gcds = path_gcds_to(g, i, range(1, i), lambda v: v > i, limit)
    if not gcds:
        raise Disconnected(f"v_{i} reaches no lower-indexed vertex")
    return lcm_all(gcds)


def _term_all_paths(g: WeightedGraph, i: int, limit) -> int:
    return lcm_all(path_lcm(g, i, j, None, limit).lcm_value for j in range(1, i))


def leading_terms_via_paths(
    g: WeightedGraph,
    *,
    shortcut: bool = True,
    limit: int | None = None,
    threads: int | None = None,
) -> list[int]:
    """``[L(M_1), ..., L(M_n)]`` from path gcds.

    ``shortcut=False`` aggregates every simple path to every lower vertex; it is
    kept as an independent check of the shortcut.
    """
    if not is_simple(g):
        raise NotSimple("leading terms are defined here for simple graphs")
    if not is_connected(g):
        raise Disconnected("leading terms need a connected graph")
    term = _term_shortcut if shortcut else _term_all_paths
    levels = range(2, g.n + 1)
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rest = list(pool.map(lambda i: term(g, i, limit), levels))
    else:
        rest = [term(g, i, limit) for i in levels]
    return ([1] if g.n else []) + rest
