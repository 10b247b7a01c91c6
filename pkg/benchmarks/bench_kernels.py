"""Compare the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints best-of-N wall time per kernel and the speedup. Both backends must return
identical results; the script exits non-zero if they do not.
"""
import argparse
import random
import sys
import timeit

from gspline import WeightedGraph
from gspline import _purepy
from gspline.graph import _CSR

try:
    from gspline import _speedups
except ImportError:
    _speedups = None


def complete_graph(n, seed):
    rng = random.Random(seed)
    triples = [(a, b, rng.choice([6, 10, 12, 15, 20, 30])) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    return WeightedGraph.from_edges(n, triples)


def path_case(n):
    g = complete_graph(n, seed=n)
    csr = _CSR(g)
    is_target = bytes([0] * (n - 1) + [1])
    may_pass = bytes([0] + [1] * (n - 2) + [0])
    return (csr.indptr, csr.nbrs, csr.eids, csr.weights, 0, is_target, may_pass, 10**7, False)


def box_case(n, seed):
    rng = random.Random(seed)
    base = 360
    back = [[(j, base // rng.choice([1, 2, 3, 4, 5, 6])) for j in range(k) if rng.random() < 0.7] for k in range(n)]
    return (back, base, 10**8)


CASES = [
    ("path_gcds K9", "path_gcds", path_case(9)),
    ("path_gcds K11", "path_gcds", path_case(11)),
    ("enumerate_box n=4", "enumerate_box", box_case(4, 1)),
    ("enumerate_box n=5", "enumerate_box", box_case(5, 2)),
]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _speedups is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first")
        return 1
    print(f"{'case':<22}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for label, name, case in CASES:
        slow, fast = getattr(_purepy, name), getattr(_speedups, name)
        if slow(*case) != fast(*case):
            print(f"{label}: backends disagree", file=sys.stderr)
            return 2
        t_py = min(timeit.repeat(lambda: slow(*case), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: fast(*case), number=1, repeat=args.repeat))
        print(f"{label:<22}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
