"""Exact gcd/lcm aggregates and a Chinese Remainder solver for non-coprime moduli.

All arithmetic uses Python integers, so values are never truncated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import Incompatible

__all__ = [
    "Congruence",
    "CrtSolution",
    "gcd_all",
    "lcm_all",
    "lcm_of_gcds",
    "crt_merge",
    "crt_solve",
    "first_incompatible_pair",
]


def _check_nat(value: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"expected an integer, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"expected a non-negative integer, got {value}")
    return value


def gcd_all(values: Iterable[int]) -> int:
    """Greatest common divisor of ``values``; 0 for an empty input."""
    return math.gcd(*(_check_nat(v) for v in values))


def lcm_all(values: Iterable[int]) -> int:
    """Least common multiple of ``values``; 1 for an empty input.

    Raises ValueError on a zero entry, since 0 has no place in the lcm lattice of moduli.
    """
    values = [_check_nat(v) for v in values]
    if any(v == 0 for v in values):
        raise ValueError("lcm_all is undefined for zero entries")
    return math.lcm(*values)


def lcm_of_gcds(groups: Iterable[Sequence[int]]) -> int:
    """lcm over groups of the gcd within each group."""
    gcds = []
    for group in groups:
        if len(group) == 0:
            raise ValueError("lcm_of_gcds groups must be non-empty")
        gcds.append(gcd_all(group))
    return lcm_all(gcds)


@dataclass(frozen=True)
class Congruence:
    """``x ≡ residue (mod modulus)``."""

    residue: int
    modulus: int

    def __post_init__(self):
        _check_nat(self.modulus)
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")

    def canonical(self) -> "Congruence":
        return Congruence(self.residue % self.modulus, self.modulus)

    def holds(self, x: int) -> bool:
        return (x - self.residue) % self.modulus == 0


@dataclass(frozen=True)
class CrtSolution:
    """The class ``residue + modulus * Z``, stored with ``0 <= residue < modulus``."""

    residue: int
    modulus: int

    def __post_init__(self):
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must lie in [0, modulus)")


def _as_congruence(c) -> Congruence:
    if isinstance(c, Congruence):
        return c
    residue, modulus = c
    return Congruence(residue, modulus)


def crt_merge(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    """Merge two congruences; returns ``(r, lcm(m1, m2))`` or None when incompatible."""
    g = math.gcd(m1, m2)
    diff = r2 - r1
    if diff % g:
        return None
    m2g = m2 // g
    # pow(_, -1, 1) is 0, which is the right answer when m2 | m1
    t = (diff // g) * pow(m1 // g, -1, m2g) % m2g
    m = m1 // g * m2
    return (r1 + m1 * t) % m, m


def first_incompatible_pair(congruences: Sequence) -> tuple[int, int] | None:
    """All-pairs solvability test: the first (i, j) with a_i ≢ a_j mod gcd(m_i, m_j), else None."""
    cs = [_as_congruence(c) for c in congruences]
    for (i, a), (j, b) in combinations(enumerate(cs), 2):
        if (a.residue - b.residue) % math.gcd(a.modulus, b.modulus):
            return i, j
    return None


def crt_solve(congruences: Sequence) -> CrtSolution:
    """Solve a system of congruences with arbitrary (not necessarily coprime) moduli.

    Accepts :class:`Congruence` objects or ``(residue, modulus)`` pairs. Merges
    sequentially; on failure at position ``k`` the earlier prefix was solvable, so
    the offending pair necessarily involves ``k`` and is located by a pairwise scan.

    >>> crt_solve([(3, 4), (1, 6)])
    CrtSolution(residue=7, modulus=12)
    """
    cs = [_as_congruence(c) for c in congruences]
    if not cs:
        raise ValueError("crt_solve needs at least one congruence")
    r, m = cs[0].residue % cs[0].modulus, cs[0].modulus
    for k in range(1, len(cs)):
        merged = crt_merge(r, m, cs[k].residue, cs[k].modulus)
        if merged is None:
            for i in range(k):
                if (cs[i].residue - cs[k].residue) % math.gcd(cs[i].modulus, cs[k].modulus):
                    raise Incompatible(i, k)
            raise AssertionError("sequential merge failed but no pair conflicts")
        r, m = merged
    return CrtSolution(r, m)
