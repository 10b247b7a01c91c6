"""Command-line front end.

Exit codes: 0 success or valid, 1 a mathematically negative result (invalid spline,
incompatible congruences, disagreeing methods, failed certification), 2 usage or
input errors, 3 a resource limit (path or enumeration cap).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .basis import build_basis, kernel_generators, lift
from .collapse import complete_collapse
from .errors import Incompatible, InvalidGraph, ResourceLimit, SplineError
from .graph import WeightedGraph, default_path_limit, parse_int, permute
from .numtheory import crt_solve
from .oracle import DEFAULT_CAP, check_basis_spans, enumerate_splines
from .paths import leading_terms_via_paths
from .spline import Spline, is_minimal_in_class, verify

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(SplineError):
    pass


def _load_json_arg(text_or_path: str):
    """Accept inline JSON or a path to a JSON file."""
    stripped = text_or_path.lstrip()
    if stripped.startswith(("{", "[")):
        source = text_or_path
    else:
        try:
            with open(text_or_path) as fh:
                source = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {text_or_path}: {exc.strerror}") from None
    try:
        return json.loads(source)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {text_or_path[:40]!r}: {exc}") from None


def _load_graph(args) -> WeightedGraph:
    g = WeightedGraph.from_dict(_load_json_arg(args.graph))
    if getattr(args, "order", None):
        try:
            order = [int(x) for x in args.order.split(",")]
        except ValueError:
            raise UsageError(f"--order must be comma-separated integers, got {args.order!r}") from None
        g = permute(g, order)
    return g


def _strs(values):
    return [str(x) for x in values]


def _collapse_terms(g):
    return [k.value for k in kernel_generators(complete_collapse(g))]


def _compute_terms(g, method, limit, threads):
    """Returns (terms, report) where report is None or a disagreement diff."""
    if method == "collapse":
        return _collapse_terms(g), None
    paths = leading_terms_via_paths(g, limit=limit, threads=threads)
    if method == "paths":
        return paths, None
    collapse = _collapse_terms(g)
    if collapse == paths:
        return collapse, None
    diff = [
        {"index": i, "collapse": str(a), "paths": str(b)}
        for i, (a, b) in enumerate(zip(collapse, paths), start=1)
        if a != b
    ]
    return collapse, {"methods_agree": False, "differences": diff}


def cmd_verify(args, out):
    g = WeightedGraph.from_dict(_load_json_arg(args.graph))
    s = Spline.from_dict(_load_json_arg(args.spline))
    report = verify(g, s)
    out.emit(report.to_dict(), _verify_text(report))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _verify_text(report):
    if report.ok:
        return "valid"
    lines = ["invalid"]
    for v in report.violations:
        lines.append(f"  edge {v.edge_id} (v{v.u}, v{v.v}): difference {v.difference} is not 0 mod {v.modulus}")
    return "\n".join(lines)


def cmd_leading_terms(args, out):
    g = _load_graph(args)
    terms, diff = _compute_terms(g, args.method, args.path_limit, args.threads)
    if diff:
        out.emit(diff, "methods disagree: " + json.dumps(diff["differences"]))
        return EXIT_NEGATIVE
    payload = {"method": args.method, "leading_terms": _strs(terms)}
    if args.method == "both":
        payload["methods_agree"] = True
    out.emit(payload, " ".join(_strs(terms)))
    return EXIT_OK


def cmd_basis(args, out):
    g = _load_graph(args)
    seq = complete_collapse(g)
    terms, diff = _compute_terms(g, args.method, args.path_limit, args.threads)
    if diff:
        out.emit(diff, "methods disagree: " + json.dumps(diff["differences"]))
        return EXIT_NEGATIVE
    basis = build_basis(g, seq=seq, leading_terms=terms, threads=args.threads)
    if args.trace:
        _write_json(args.trace, [s.to_dict() for s in seq.steps])
    payload = basis.to_dict(trace_ref=args.trace)
    payload["method"] = args.method
    if args.order:
        payload["order"] = [int(x) for x in args.order.split(",")]
    if args.method == "both":
        payload["methods_agree"] = True
    text = "\n".join(f"M_{i} = {list(m.entries)}" for i, m in enumerate(basis.elements, start=1))
    out.emit(payload, text)
    return EXIT_OK


def cmd_collapse(args, out):
    g = _load_graph(args)
    seq = complete_collapse(g)
    if args.trace:
        _write_json(args.trace, [s.to_dict() for s in seq.steps])
    lines = [
        f"remove v{i}: star weights {list(ws)}" for i, ws in sorted(seq.star_weights_of.items(), reverse=True)
    ]
    out.emit(seq.to_dict(), "\n".join(lines) or "single vertex; nothing to collapse")
    return EXIT_OK


def cmd_extend(args, out):
    g = _load_graph(args)
    raw = _load_json_arg(args.partial)
    if not isinstance(raw, dict) or not raw:
        raise UsageError("--partial must be a non-empty JSON object of index -> value")
    try:
        labels = {int(k): parse_int(v) for k, v in raw.items()}
    except ValueError as exc:
        raise UsageError(f"bad --partial entry: {exc}") from None
    r = len(labels)
    if sorted(labels) != list(range(1, r + 1)) or r > g.n:
        raise UsageError(f"--partial must label a prefix 1..r of the vertex order (n = {g.n})")
    seq = complete_collapse(g)
    prefix = Spline(labels[k] for k in range(1, r + 1))
    report = verify(seq.level(r), prefix)
    if not report.ok:
        bad = [
            {"u": v.u, "v": v.v, "modulus": str(v.modulus), "values": [str(prefix[v.u - 1]), str(prefix[v.v - 1])]}
            for v in report.violations
        ]
        text = "; ".join(f"g{b['u']} != g{b['v']} mod {b['modulus']}" for b in bad)
        out.emit({"extended": False, "level": r, "incompatible": bad}, "not extendable: " + text)
        return EXIT_NEGATIVE
    full = lift(seq, prefix)
    out.emit({"extended": True, **full.to_dict()}, " ".join(_strs(full.entries)))
    return EXIT_OK


def cmd_crt(args, out):
    raw = _load_json_arg(args.congruences)
    try:
        system = [(parse_int(a), parse_int(m)) for a, m in raw]
        solution = crt_solve(system)
    except Incompatible as exc:
        out.emit({"solvable": False, "incompatible": [exc.i, exc.j]}, f"incompatible: congruences {exc.i} and {exc.j}")
        return EXIT_NEGATIVE
    except (TypeError, ValueError) as exc:
        raise UsageError(f"--congruences must be a non-empty list of [residue, modulus] pairs: {exc}") from None
    out.emit(
        {"solvable": True, "residue": str(solution.residue), "modulus": str(solution.modulus)},
        f"x = {solution.residue} mod {solution.modulus}",
    )
    return EXIT_OK


def cmd_check(args, out):
    g = _load_graph(args)
    checks = []

    def record(name, status, detail=""):
        checks.append({"name": name, "status": status, "detail": detail})

    collapse = _collapse_terms(g)
    paths = leading_terms_via_paths(g, limit=args.path_limit)
    record("methods_agree", "pass" if collapse == paths else "fail", {"collapse": _strs(collapse), "paths": _strs(paths)})
    try:
        unrestricted = leading_terms_via_paths(g, shortcut=False, limit=args.path_limit)
    except ResourceLimit as exc:
        record("shortcut_matches_all_paths", "skipped", str(exc))
    else:
        record("shortcut_matches_all_paths", "pass" if unrestricted == paths else "fail", _strs(unrestricted))

    basis = build_basis(g)
    bad = [i for i, m in enumerate(basis.elements, start=1) if not verify(g, m)]
    record("elements_verify", "fail" if bad else "pass", bad)
    shape_ok = all(m[: i] == tuple([0] * i) and m[i] != 0 for i, m in enumerate(basis.elements))
    record("flow_up_shape", "pass" if shape_ok else "fail")
    try:
        minimal = [is_minimal_in_class(g, m) for m in basis.elements]
    except ResourceLimit as exc:
        record("elements_minimal", "skipped", str(exc))
    else:
        record("elements_minimal", "pass" if all(minimal) else "fail", minimal)
    try:
        box = enumerate_splines(g, cap=args.cap)
    except ResourceLimit as exc:
        record("box_spanned", "skipped", str(exc))
    else:
        result = check_basis_spans(g, basis, box)
        detail = {"modulus": str(box.modulus), "size": len(box)}
        if not result:
            detail["counterexample"] = _strs(result.counterexample.entries)
        record("box_spanned", "pass" if result else "fail", detail)

    certified = all(c["status"] != "fail" for c in checks)
    payload = {"certified": certified, "backend": kernels.BACKEND, "checks": checks}
    text = "\n".join(f"{c['status']:>7}  {c['name']}" for c in checks)
    out.emit(payload, text + f"\n{'certified' if certified else 'NOT certified'}")
    return EXIT_OK if certified else EXIT_NEGATIVE


def _write_json(path, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


class _Output:
    def __init__(self, as_json, stream):
        self.as_json = as_json
        self.stream = stream

    def emit(self, payload, text):
        if self.as_json:
            self.stream.write(json.dumps(payload, indent=2) + "\n")
        else:
            self.stream.write(text + "\n")


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gspline", description="Generalized integer splines on weighted graphs.")
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="as_json", action="store_true", default=None, help="JSON output (default when not a tty)")
    fmt.add_argument("--text", dest="as_json", action="store_false", help="human-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_text, order=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="graph JSON file (or inline JSON)")
        if order:
            p.add_argument("--order", help="vertex order as comma-separated 1-based indices")
        p.add_argument("--path-limit", type=_positive_int, default=None, help="cap on enumerated paths")
        p.add_argument("--threads", type=_positive_int, default=None, help="worker threads; output is identical")
        return p

    p = sub.add_parser("verify", help="check a spline against a graph")
    p.add_argument("graph")
    p.add_argument("spline", help="spline JSON file (or inline JSON)")
    p.set_defaults(func=cmd_verify)

    p = graph_cmd("basis", "construct a flow-up basis")
    p.add_argument("--method", choices=["collapse", "paths", "both"], default="collapse")
    p.add_argument("--trace", help="write the collapse steps to this file")
    p.set_defaults(func=cmd_basis)

    p = graph_cmd("leading-terms", "leading terms of the flow-up basis")
    p.add_argument("--method", choices=["collapse", "paths", "both"], default="both")
    p.set_defaults(func=cmd_leading_terms)

    p = graph_cmd("collapse", "complete collapse sequence")
    p.add_argument("--trace", help="write the collapse steps to this file")
    p.set_defaults(func=cmd_collapse)

    p = graph_cmd("extend", "extend a prefix labelling to a full spline")
    p.add_argument("--partial", required=True, help='JSON object such as {"1":"0","2":"12"}')
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("crt", help="solve a system of congruences")
    p.add_argument("--congruences", required=True, help='JSON list of [residue, modulus], e.g. [["3","4"],["1","6"]]')
    p.set_defaults(func=cmd_crt)

    p = graph_cmd("check", "certify a graph's basis against the brute-force oracle")
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP, help="node cap for residue enumeration")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    as_json = args.as_json if args.as_json is not None else not stdout.isatty()
    out = _Output(as_json, stdout)
    if hasattr(args, "path_limit") and args.path_limit is None:
        try:
            args.path_limit = default_path_limit()
        except InvalidGraph as exc:
            print(f"gspline: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args, out)
    except ResourceLimit as exc:
        out.emit(
            {"error": type(exc).__name__, "message": str(exc), "count": exc.count, "limit": exc.limit},
            f"gspline: {exc}",
        )
        return EXIT_LIMIT
    except (SplineError, ValueError) as exc:
        print(f"gspline: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
