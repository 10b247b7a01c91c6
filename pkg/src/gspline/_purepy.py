"""Pure-Python kernels. Reference semantics for ``_speedups.pyx``; both must agree exactly."""
from math import gcd

from .errors import CapExceeded, PathExplosion


def path_gcds(indptr, nbrs, eids, weights, source, is_target, may_pass, limit, record):
    """Enumerate simple paths from ``source`` that stop at the first target vertex.

    Adjacency is CSR over 0-based vertices: the neighbours of ``v`` are
    ``nbrs[indptr[v]:indptr[v + 1]]`` reached through edge positions ``eids``.
    Interior vertices must have ``may_pass`` set. Returns the gcd of each path in
    DFS order, plus ``(vertices, edge_positions)`` tuples when ``record`` is true.
    """
    gcds = []
    paths = [] if record else None
    on_path = bytearray(len(indptr) - 1)
    on_path[source] = 1
    verts = [source]
    edges = []
    running = [0]
    cursor = [indptr[source]]
    while cursor:
        v = verts[-1]
        pos = cursor[-1]
        if pos == indptr[v + 1]:
            on_path[v] = 0
            verts.pop()
            cursor.pop()
            running.pop()
            if edges:
                edges.pop()
            continue
        cursor[-1] = pos + 1
        w = nbrs[pos]
        if on_path[w]:
            continue
        g = gcd(running[-1], weights[eids[pos]])
        if is_target[w]:
            if len(gcds) >= limit:
                raise PathExplosion(len(gcds) + 1, limit)
            gcds.append(g)
            if record:
                paths.append((tuple(verts) + (w,), tuple(edges) + (eids[pos],)))
            continue
        if not may_pass[w]:
            continue
        on_path[w] = 1
        verts.append(w)
        edges.append(eids[pos])
        running.append(g)
        cursor.append(indptr[w])
    return gcds, paths


def _merge(r, m, a, w):
    g = gcd(m, w)
    if (a - r) % g:
        return None
    wg = w // g
    t = ((a - r) // g) * pow(m // g, -1, wg) % wg
    m2 = m // g * w
    return (r + m * t) % m2, m2


def enumerate_box(back, modulus, cap):
    """All integer vectors in ``[0, modulus)^n`` satisfying the back-edge congruences.

    ``back[k]`` lists ``(j, w)`` with ``j < k``: vertex ``k`` must agree with vertex
    ``j`` modulo ``w``. Each ``w`` must divide ``modulus``. Vertices are fixed in
    order, each one's admissible values forming a single residue class.
    ``cap`` bounds the number of search nodes.
    """
    n = len(back)
    out = []
    if n == 0:
        return [()]
    values = [0] * n
    nodes = 0
    # per depth: next candidate value and step, or None when exhausted
    nxt = [0] * n
    step = [0] * n

    def open_level(k):
        r, m = 0, 1
        for j, w in back[k]:
            merged = _merge(r, m, values[j] % w, w)
            if merged is None:
                return False
            r, m = merged
        nxt[k] = r
        step[k] = m
        return True

    k = 0
    if not open_level(0):
        return out
    while k >= 0:
        if nxt[k] >= modulus:
            k -= 1
            continue
        values[k] = nxt[k]
        nxt[k] += step[k]
        nodes += 1
        if nodes > cap:
            raise CapExceeded(nodes, cap)
        if k == n - 1:
            out.append(tuple(values))
        elif open_level(k + 1):
            k += 1
    return out
