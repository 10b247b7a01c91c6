"""Acceptance criteria, one test per criterion.

Each test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line (visible without ``-s``)
and then asserts, so a failure shows both the line and the pytest traceback.
"""
import io
import json
import math
import random
import time

import pytest

from gspline import (
    Spline,
    build_basis,
    check_basis_spans,
    collapse_once,
    complete_collapse,
    crt_solve,
    decompose,
    determinant,
    edge_collapse_all,
    enumerate_splines,
    is_connected,
    is_simple,
    leading_terms_via_paths,
    path_lcm,
    verify,
)
from gspline import cli
from gspline.errors import CapExceeded, Incompatible

from randgraphs import brute_force_crt, sieve_crt, enumerable_simple_graphs, random_graphs, random_multigraph

K4_TERMS = [1, 12, 60, 120]


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


@pytest.fixture(scope="module")
def certified_graphs():
    graphs, rejected = enumerable_simple_graphs(seed=2024, count=100)
    return graphs, rejected


def _cli_terms(path, method):
    out = io.StringIO()
    code = cli.main(["leading-terms", path, "--method", method], stdout=out)
    return code, [int(x) for x in json.loads(out.getvalue())["leading_terms"]]


def test_1_k4_golden_vector(k4_path, report):
    start = time.perf_counter()
    results = {m: _cli_terms(k4_path, m) for m in ("collapse", "paths")}
    elapsed = time.perf_counter() - start
    ok = all(code == 0 and terms == K4_TERMS for code, terms in results.values()) and elapsed < 1.0
    report(1, ok, f"collapse={results['collapse'][1]} paths={results['paths'][1]} in {elapsed:.3f}s (< 1s)")


def test_2_k4_basis_elements(k4, report):
    basis = build_basis(k4)
    m1, m2, m3, m4 = (list(m) for m in basis.elements)
    zeroed = verify(k4, Spline([0, 0, 60, 0]))
    bad = [(v.u, v.v, v.modulus) for v in zeroed.violations]
    ok = (
        m1 == [1, 1, 1, 1]
        and m2 == [0, 12, 12, 12]
        and m4 == [0, 0, 0, 120]
        and m3[:3] == [0, 0, 60]
        and bool(verify(k4, basis.elements[2]))
        and not zeroed
        and bad == [(3, 4, 8)]
    )
    report(2, ok, f"M1={m1} M2={m2} M3={m3} M4={m4}; (0,0,60,0) violations={bad}")


def test_3_crt_vs_brute_force(report):
    rng = random.Random(3)
    mismatches = 0
    solvable = 0
    scanned = 0
    for _ in range(1000):
        system = [(rng.randrange(-100, 100), rng.randint(1, 60)) for _ in range(rng.randint(1, 5))]
        expected = sieve_crt(system)
        if math.lcm(*(m for _, m in system)) <= 10**5:
            # full scan where affordable, to keep the sieve honest
            scanned += 1
            mismatches += brute_force_crt(system) != expected
        try:
            sol = crt_solve(system)
            got = (sol.residue, sol.modulus)
        except Incompatible:
            got = None
        solvable += expected is not None
        mismatches += got != expected
    fixed_ok = (crt_solve([(3, 4), (1, 6)]).residue, crt_solve([(3, 4), (1, 6)]).modulus) == (7, 12)
    try:
        crt_solve([(1, 4), (2, 6)])
        incompatible_ok = False
    except Incompatible:
        incompatible_ok = True
    ok = mismatches == 0 and fixed_ok and incompatible_ok
    report(
        3,
        ok,
        f"1000 systems ({solvable} solvable, {scanned} also fully scanned), {mismatches} mismatches; "
        f"{{3 mod 4, 1 mod 6}} -> 7 mod 12: {fixed_ok}; {{1 mod 4, 2 mod 6}} incompatible: {incompatible_ok}",
    )


def test_4_collapse_invariance(report):
    start = time.perf_counter()
    graphs = random_graphs(4)
    checked = failures = 0
    for _ in range(200):
        g = next(graphs)
        base = {
            (w, u): path_lcm(g, w, u).lcm_value
            for w in range(1, g.n + 1)
            for u in range(1, g.n + 1)
            if w != u
        }
        for v in range(1, g.n + 1):
            h, steps = collapse_once(g, v)
            index_map = steps[0].index_map
            for (w, u), value in base.items():
                if v in (w, u):
                    continue
                checked += 1
                failures += path_lcm(h, index_map[w - 1], index_map[u - 1]).lcm_value != value
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 60
    report(4, ok, f"200 graphs, {checked} surviving pairs, {failures} changed, {elapsed:.2f}s (< 60s)")


def test_5_edge_collapse_preserves_splines(report):
    rng = random.Random(5)
    differing = rejected = 0
    sizes = []
    while len(sizes) < 100:
        g = random_multigraph(rng)
        try:
            before = enumerate_splines(g, cap=200_000)
        except CapExceeded:
            rejected += 1
            continue
        h, steps = edge_collapse_all(g)
        assert steps
        after = enumerate_splines(h)
        sizes.append(len(before))
        differing += before.modulus != after.modulus or before.as_set() != after.as_set()
    report(
        5,
        differing == 0,
        f"100 multigraphs ({rejected} rejected by the box cap), box sizes {min(sizes)}..{max(sizes)}, {differing} differ",
    )


def test_6_basis_certification(certified_graphs, report):
    graphs, rejected = certified_graphs
    rng = random.Random(6)
    span_failures = roundtrip_failures = det_failures = 0
    for g, box in graphs:
        basis = build_basis(g)
        span_failures += not check_basis_spans(g, basis, box)
        for _ in range(10):
            coeffs = [rng.randint(-10**6, 10**6) for _ in range(g.n)]
            roundtrip_failures += decompose(basis, basis.combine(coeffs)) != coeffs
        det_failures += abs(determinant(basis)) != math.prod(basis.leading_terms)
    ok = span_failures == 0 and roundtrip_failures == 0 and det_failures == 0
    report(
        6,
        ok,
        f"100 graphs ({rejected} rejected by the box cap): {span_failures} span failures, "
        f"{roundtrip_failures}/1000 round-trip failures, {det_failures} determinant mismatches",
    )


def test_7_method_agreement(certified_graphs, report):
    graphs, _ = certified_graphs
    method_diffs = shortcut_diffs = 0
    for g, _ in graphs:
        collapse_terms = build_basis(g).leading_terms
        shortcut = leading_terms_via_paths(g)
        method_diffs += collapse_terms != shortcut
        shortcut_diffs += shortcut != leading_terms_via_paths(g, shortcut=False)
    ok = method_diffs == 0 and shortcut_diffs == 0
    report(7, ok, f"100 graphs: collapse vs paths {method_diffs} differ; shortcut vs all paths {shortcut_diffs} differ")


def test_8_collapse_sequence_invariants(certified_graphs, report):
    graphs, _ = certified_graphs
    failures = []
    for g, _ in graphs:
        seq = complete_collapse(g)
        sizes = [h.n for h in seq.graphs]
        ok = (
            sizes == list(range(g.n, 0, -1))
            and all(is_simple(h) and is_connected(h) for h in seq.graphs)
            and all(seq.level(i).n == i for i in range(1, g.n + 1))
            and sorted(seq.star_weights_of) == list(range(2, g.n + 1))
        )
        if not ok:
            failures.append(g)
    report(8, not failures, f"100 traces, {len(failures)} violate simple/connected/decrementing shape")
