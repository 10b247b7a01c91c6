"""Spline vectors, verification against the defining congruences, flow-up data."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import LengthMismatch, SearchBoundExceeded, ZeroSpline
from .graph import WeightedGraph, parse_int

DEFAULT_SEARCH_BOUND = 10**6


@dataclass(frozen=True)
class Spline:
    """An integer vertex labelling ``(g_1, ..., g_n)`` in the graph's vertex order.

    Carries no graph: whether it is a spline is decided by :func:`verify`.
    Supports integer linear combinations.
    """

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        object.__setattr__(self, "entries", tuple(int(x) for x in entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __add__(self, other: "Spline") -> "Spline":
        if len(other) != len(self):
            raise LengthMismatch(f"cannot add splines of length {len(self)} and {len(other)}")
        return Spline(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "Spline") -> "Spline":
        return self + (-1) * other

    def __mul__(self, k: int) -> "Spline":
        return Spline(k * a for a in self.entries)

    __rmul__ = __mul__

    def __neg__(self) -> "Spline":
        return self * -1

    def __repr__(self):
        return f"Spline({list(self.entries)})"

    @classmethod
    def zeros(cls, n: int) -> "Spline":
        return cls([0] * n)

    def to_dict(self) -> dict:
        return {"entries": [str(x) for x in self.entries]}

    @classmethod
    def from_dict(cls, data: dict) -> "Spline":
        return cls(parse_int(x) for x in data["entries"])

    @classmethod
    def loads(cls, text: str) -> "Spline":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Violation:
    edge_id: int
    u: int
    v: int
    modulus: int
    difference: int

    def to_dict(self) -> dict:
        return {
            "edge_id": self.edge_id,
            "u": self.u,
            "v": self.v,
            "modulus": str(self.modulus),
            "difference": str(self.difference),
        }


@dataclass(frozen=True)
class VerifyReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {"valid": self.ok, "violations": [x.to_dict() for x in self.violations]}


def verify(g: WeightedGraph, s: Spline) -> VerifyReport:
    """Check every edge congruence; all violations are reported, in edge order."""
    if len(s) != g.n:
        raise LengthMismatch(f"spline has {len(s)} entries, graph has {g.n} vertices")
    bad = []
    for e in g.edges:
        diff = s[e.v - 1] - s[e.u - 1]
        if diff % e.weight:
            bad.append(Violation(e.edge_id, e.u, e.v, e.weight, diff))
    return VerifyReport(tuple(bad))


def flow_up_index(s: Spline) -> int:
    """Number of leading zeros; ``len(s)`` for the zero spline."""
    for k, x in enumerate(s):
        if x:
            return k
    return len(s)


def leading_term(s: Spline) -> int:
    i = flow_up_index(s)
    if i == len(s):
        raise ZeroSpline("the zero spline has no leading term")
    return s[i]


def _proper_divisors(x: int, bound: int) -> list[int]:
    root = math.isqrt(x)
    if root > bound:
        raise SearchBoundExceeded(root, bound)
    small, large = [], []
    for d in range(1, root + 1):
        if x % d == 0:
            small.append(d)
            if d != x // d:
                large.append(x // d)
    return [d for d in small + large[::-1] if d < x]


def is_minimal_in_class(g: WeightedGraph, s: Spline, search_bound: int = DEFAULT_SEARCH_BOUND) -> bool:
    """Brute-force check that ``s`` has the least positive leading term in its flow-up class.

    Achievable leading values of a class, with 0, form an ideal of Z, so it suffices
    to test each proper divisor ``d`` of ``L(s)``: is there a spline
    ``(0, ..., 0, d, *)``? Candidates are checked on the collapsed graph ``G_{i+1}``
    and lifted back to ``g`` through the collapse chain, then re-verified on ``g``.
    """
    from .basis import lift  # circular: basis builds on this module
    from .collapse import complete_collapse

    if not verify(g, s):
        raise ValueError("is_minimal_in_class needs a verified spline")
    lead = leading_term(s)
    if lead <= 0:
        return False
    i = flow_up_index(s)
    seq = complete_collapse(g)
    level = seq.level(i + 1)
    for d in _proper_divisors(lead, search_bound):
        prefix = Spline([0] * i + [d])
        if verify(level, prefix):
            full = lift(seq, prefix)
            if verify(g, full) and leading_term(full) == d:
                return False
    return True
