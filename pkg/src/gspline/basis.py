"""Flow-up basis construction by collapse and CRT lifting, and decomposition in that basis."""
from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .collapse import CollapseSequence, complete_collapse
from .errors import Incompatible, InternalInconsistency, LengthMismatch, NotInSpan
from .graph import WeightedGraph, parse_int
from .numtheory import crt_solve, lcm_all
from .spline import Spline, leading_term, verify


@dataclass(frozen=True)
class KernelGenerator:
    level: int
    value: int


@dataclass(frozen=True)
class FlowUpBasis:
    """Splines ``M_1..M_n`` with ``M_i`` having exactly ``i - 1`` leading zeros."""

    graph: WeightedGraph
    elements: tuple[Spline, ...]
    generators: tuple[KernelGenerator, ...]

    @property
    def leading_terms(self) -> list[int]:
        return [leading_term(m) for m in self.elements]

    def matrix(self) -> list[list[int]]:
        return [list(m.entries) for m in self.elements]

    def combine(self, coefficients) -> Spline:
        total = Spline.zeros(self.graph.n)
        for a, m in zip(coefficients, self.elements, strict=True):
            total = total + a * m
        return total

    def to_dict(self, trace_ref: str | None = None) -> dict:
        out = {
            "leading_terms": [str(x) for x in self.leading_terms],
            "elements": [m.to_dict() for m in self.elements],
        }
        if trace_ref is not None:
            out["trace_ref"] = trace_ref
        return out

    @classmethod
    def from_dict(cls, graph: WeightedGraph, data: dict) -> "FlowUpBasis":
        elements = tuple(Spline.from_dict(x) for x in data["elements"])
        leads = [parse_int(x) for x in data["leading_terms"]]
        gens = tuple(KernelGenerator(i, v) for i, v in enumerate(leads, start=1))
        return cls(graph, elements, gens)

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def kernel_generators(seq: CollapseSequence) -> list[KernelGenerator]:
    """``m_1 = 1``; for ``i >= 2`` the lcm of ``v_i``'s star weights in ``G_i``."""
    gens = [KernelGenerator(1, 1)]
    for i in range(2, seq.n + 1):
        gens.append(KernelGenerator(i, lcm_all(seq.star_weights_of[i])))
    return gens


def extend_spline(seq: CollapseSequence, partial: Spline) -> Spline:
    """Lift a spline on ``G_r`` to ``G_{r+1}``.

    The restored vertex gets the least non-negative solution of its star congruences.
    """
    r = len(partial)
    if not 1 <= r < seq.n:
        raise LengthMismatch(f"partial spline of length {r} cannot be lifted in a chain of {seq.n}")
    i = r + 1
    system = [
        (partial[j - 1], w) for j, w in zip(seq.star_neighbors_of[i], seq.star_weights_of[i])
    ]
    try:
        sol = crt_solve(system)
    except Incompatible as exc:
        raise InternalInconsistency(
            f"cannot lift to level {i}: {exc}; the partial labelling is not a spline on G_{r}"
        ) from exc
    return Spline(list(partial) + [sol.residue])


def lift(seq: CollapseSequence, partial: Spline) -> Spline:
    """Repeatedly :func:`extend_spline` up to the full graph."""
    s = partial
    while len(s) < seq.n:
        s = extend_spline(seq, s)
    return s


def _element(seq: CollapseSequence, i: int, lead: int) -> Spline:
    if i == 1:
        # lifting (1) would give 0 at neighbours joined by weight-1 edges
        return Spline([1] * seq.n)
    return lift(seq, Spline([0] * (i - 1) + [lead]))


def build_basis(
    g: WeightedGraph,
    *,
    seq: CollapseSequence | None = None,
    leading_terms: list[int] | None = None,
    threads: int | None = None,
) -> FlowUpBasis:
    """Flow-up basis of the spline module of ``g``.

    Seeds ``(0, ..., 0, m_i)`` on ``G_i`` and lifts it level by level. Passing
    ``leading_terms`` (e.g. from the path formula) seeds with those values instead
    of the kernel generators; the result is re-verified either way.
    """
    if seq is None:
        seq = complete_collapse(g)
    gens = kernel_generators(seq)
    leads = [x.value for x in gens] if leading_terms is None else list(leading_terms)
    if len(leads) != g.n:
        raise LengthMismatch(f"{len(leads)} leading terms for {g.n} vertices")
    levels = range(1, g.n + 1)
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            elements = list(pool.map(lambda i: _element(seq, i, leads[i - 1]), levels))
    else:
        elements = [_element(seq, i, leads[i - 1]) for i in levels]
    for i, m in enumerate(elements, start=1):
        if not verify(g, m):
            raise InternalInconsistency(f"M_{i} = {m} does not verify")
    return FlowUpBasis(g, tuple(elements), tuple(gens))


def decompose(basis: FlowUpBasis, s: Spline) -> list[int]:
    """Coefficients ``a`` with ``s = sum(a_i * M_i)``, by forward substitution.

    Raises NotInSpan when a division is inexact, which for a verified spline means
    the basis is broken.
    """
    n = len(basis.elements)
    if len(s) != n:
        raise LengthMismatch(f"spline has {len(s)} entries, basis has {n}")
    residual = list(s.entries)
    coeffs = []
    for i, m in enumerate(basis.elements):
        lead = m[i]
        if lead == 0:
            raise NotInSpan(f"M_{i + 1} has no leading term at position {i + 1}")
        a, rem = divmod(residual[i], lead)
        if rem:
            raise NotInSpan(
                f"entry {i + 1} = {residual[i]} is not a multiple of L(M_{i + 1}) = {lead}"
            )
        coeffs.append(a)
        if a:
            for k in range(n):
                residual[k] -= a * m[k]
    if any(residual):
        raise NotInSpan("basis is not triangular: substitution left a non-zero residual")
    return coeffs


def determinant(basis: FlowUpBasis) -> int:
    """Determinant of the basis matrix, read off the triangular diagonal."""
    return math.prod(m[i] for i, m in enumerate(basis.elements))
