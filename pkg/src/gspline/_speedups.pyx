# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: simple-path gcd enumeration and residue-box search.

Traversal state lives in C arrays; weights and residues stay Python integers so
results are exact for any magnitude. Semantics mirror ``_purepy`` exactly.
"""
from libc.stdlib cimport free, malloc
from math import gcd

from .errors import CapExceeded, PathExplosion


def path_gcds(indptr, nbrs, eids, weights, Py_ssize_t source, is_target, may_pass,
              Py_ssize_t limit, bint record):
    cdef Py_ssize_t n = len(indptr) - 1
    cdef Py_ssize_t m = len(nbrs)
    cdef Py_ssize_t *ip = <Py_ssize_t *>malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *nb = <Py_ssize_t *>malloc((m + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *ed = <Py_ssize_t *>malloc((m + 1) * sizeof(Py_ssize_t))
    cdef unsigned char *tgt = <unsigned char *>malloc(n + 1)
    cdef unsigned char *ok = <unsigned char *>malloc(n + 1)
    cdef unsigned char *on = <unsigned char *>malloc(n + 1)
    cdef Py_ssize_t *sv = <Py_ssize_t *>malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *sp = <Py_ssize_t *>malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *se = <Py_ssize_t *>malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t i, depth, v, w, pos, count = 0
    if not (ip and nb and ed and tgt and ok and on and sv and sp and se):
        free(ip); free(nb); free(ed); free(tgt); free(ok); free(on); free(sv); free(sp); free(se)
        raise MemoryError()
    gcds = []
    paths = [] if record else None
    running = [0] * (n + 1)
    wts = list(weights)
    try:
        for i in range(n + 1):
            ip[i] = indptr[i]
        for i in range(m):
            nb[i] = nbrs[i]
            ed[i] = eids[i]
        for i in range(n):
            tgt[i] = 1 if is_target[i] else 0
            ok[i] = 1 if may_pass[i] else 0
            on[i] = 0
        depth = 0
        sv[0] = source
        sp[0] = ip[source]
        on[source] = 1
        while depth >= 0:
            v = sv[depth]
            pos = sp[depth]
            if pos == ip[v + 1]:
                on[v] = 0
                depth -= 1
                continue
            sp[depth] = pos + 1
            w = nb[pos]
            if on[w]:
                continue
            g = gcd(running[depth], wts[ed[pos]])
            if tgt[w]:
                if count >= limit:
                    raise PathExplosion(count + 1, limit)
                count += 1
                gcds.append(g)
                if record:
                    paths.append((
                        tuple([sv[i] for i in range(depth + 1)]) + (w,),
                        tuple([se[i] for i in range(1, depth + 1)]) + (ed[pos],),
                    ))
                continue
            if not ok[w]:
                continue
            depth += 1
            on[w] = 1
            sv[depth] = w
            sp[depth] = ip[w]
            se[depth] = ed[pos]
            running[depth] = g
        return gcds, paths
    finally:
        free(ip); free(nb); free(ed); free(tgt); free(ok); free(on); free(sv); free(sp); free(se)


cdef object _merge(object r, object m, object a, object w):
    g = gcd(m, w)
    if (a - r) % g:
        return None
    wg = w // g
    t = ((a - r) // g) * pow(m // g, -1, wg) % wg
    m2 = m // g * w
    return ((r + m * t) % m2, m2)


def enumerate_box(back, modulus, long long cap):
    cdef Py_ssize_t n = len(back)
    cdef Py_ssize_t k, j
    cdef long long nodes = 0
    cdef bint opened
    if n == 0:
        return [()]
    out = []
    values = [0] * n
    nxt = [0] * n
    step = [0] * n
    # back-edge lists as tuples of (int j, weight) for cheap iteration
    backs = [tuple((int(jj), ww) for jj, ww in back[k]) for k in range(n)]

    k = 0
    opened = _open(backs, values, nxt, step, 0)
    if not opened:
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
        elif _open(backs, values, nxt, step, k + 1):
            k += 1
    return out


cdef bint _open(list backs, list values, list nxt, list step, Py_ssize_t k):
    r = 0
    m = 1
    for j, w in backs[k]:
        merged = _merge(r, m, values[j] % w, w)
        if merged is None:
            return False
        r, m = merged
    nxt[k] = r
    step[k] = m
    return True
