"""Brute-force ground truth for small instances.

Splines are periodic modulo the lcm ``L`` of all edge weights, so the finite set of
splines with entries in ``[0, L)`` determines the whole module. These routines share
no code with the collapse construction and are used to certify it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .basis import FlowUpBasis, decompose
from .errors import Incompatible, NotInSpan, ScanTooLarge
from .graph import WeightedGraph
from .numtheory import Congruence, CrtSolution
from .spline import Spline

DEFAULT_CAP = 2_000_000
SCAN_LIMIT = 10**6


@dataclass(frozen=True)
class ResidueBox:
    modulus: int
    splines: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.splines)

    def __contains__(self, s) -> bool:
        return tuple(x % self.modulus for x in s) in self.as_set()

    def as_set(self) -> frozenset:
        # cached lazily; the dataclass is frozen
        cached = self.__dict__.get("_set")
        if cached is None:
            cached = frozenset(self.splines)
            object.__setattr__(self, "_set", cached)
        return cached


def enumerate_splines(g: WeightedGraph, cap: int = DEFAULT_CAP) -> ResidueBox:
    """Every spline of ``g`` with entries in ``[0, L)``, in lexicographic order.

    Works for multigraphs and disconnected graphs. Raises CapExceeded past ``cap``
    search nodes.
    """
    modulus = math.lcm(*g.weights()) if g.edges else 1
    back = [[] for _ in range(g.n)]
    for e in g.edges:
        lo, hi = sorted((e.u, e.v))
        back[hi - 1].append((lo - 1, e.weight))
    for items in back:
        items.sort()
    return ResidueBox(modulus, tuple(kernels.enumerate_box(back, modulus, cap)))


@dataclass(frozen=True)
class SpanCheck:
    ok: bool
    counterexample: Spline | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def check_basis_spans(g: WeightedGraph, basis: FlowUpBasis, box: ResidueBox) -> SpanCheck:
    """True iff ``basis`` spans every spline of ``g`` and consists of splines.

    The module is the box representatives plus ``L * Z^n``, so the vectors
    ``L * e_k`` are decomposed too; representatives alone cannot tell a
    generator ``L`` from ``2L``.
    """
    for m in basis.elements:
        if m not in box:
            return SpanCheck(False, m, "basis element is not a spline")
    lattice = [Spline([box.modulus if k == i else 0 for k in range(g.n)]) for i in range(g.n)]
    for s in [*lattice, *(Spline(entries) for entries in box.splines)]:
        try:
            decompose(basis, s)
        except NotInSpan as exc:
            return SpanCheck(False, s, str(exc))
    return SpanCheck(True)


def crt_scan(congruences, limit: int = SCAN_LIMIT) -> CrtSolution:
    """Solve by testing every ``x`` in ``[0, lcm of moduli)``."""
    cs = [c if isinstance(c, Congruence) else Congruence(*c) for c in congruences]
    if not cs:
        raise ValueError("crt_scan needs at least one congruence")
    modulus = math.lcm(*(c.modulus for c in cs))
    if modulus > limit:
        raise ScanTooLarge(modulus, limit)
    for x in range(modulus):
        if all((x - c.residue) % c.modulus == 0 for c in cs):
            return CrtSolution(x, modulus)
    raise Incompatible()
