"""Command-line interface.

Exit codes: 0 success, 1 a requested mathematical check failed, 2 usage or
input error.  All numbers are printed exactly (rationals as ``"p/q"``,
quadratic irrationals as ``{"a", "b", "rad"}`` meaning ``a + b*sqrt(rad)``);
``--float`` adds decimal approximations.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds, formats, geometry, spectral
from .errors import PreconditionsNotMet, SpectraError
from .exact import QuadraticSurd
from .fbasis import verify_nb_theorem
from .multigraph import Multigraph, builtin, degree_shift, girth, is_connected, regularity
from .search import SearchSpec, no_multi_edge_at_extremal_order, run_search
from .spectral import Check


class UsageError(Exception):
    pass


_SURD_RE = re.compile(
    r"(?:([+-]?\d+(?:/\d+)?)(?=[+-]))?([+-]?)(?:(\d+(?:/\d+)?)\*)?sqrt\((\d+(?:/\d+)?)\)"
)


def parse_exact(text: str):
    """Parse ``"3/2"``, ``"sqrt(2)"``, ``"-2*sqrt(3)"`` or ``"1/2+3*sqrt(5)"``."""
    s = text.replace(" ", "")
    try:
        if "sqrt(" not in s:
            return Fraction(s)
        m = _SURD_RE.fullmatch(s)
        if m is None:
            raise ValueError
        rational, sign, coef, rad = m.groups()
        surd = QuadraticSurd.sqrt(Fraction(rad)) * Fraction(coef or 1)
        if sign == "-":
            surd = -surd
        return surd + Fraction(rational or 0)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse exact number {text!r}") from None


_SCALAR_ARRAY = re.compile(r"\[\s+([^\[\]{}]*?)\s+\]")


def _dump(obj) -> str:
    """Indented JSON with arrays of scalars kept on one line."""
    text = json.dumps(obj, indent=2)
    text = _SCALAR_ARRAY.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)
    return text + "\n"


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str) -> Multigraph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return formats.read_graph(text)


def _surd_json(x: QuadraticSurd, with_float: bool) -> dict:
    out = x.to_json()
    if with_float:
        out["float"] = float(x)
    return out


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def cmd_construct(args) -> int:
    sidecar = None
    if args.kind in ("polarity-graph", "incidence-graph"):
        if args.q is None:
            raise UsageError(f"{args.kind} needs --q")
        inc = geometry.plane_incidence(args.q)
        g = geometry.polarity_graph(inc.field)
        if args.kind == "incidence-graph":
            g = geometry.incidence_graph(inc.field)
        sidecar = inc.sidecar()
    elif args.kind in ("cycle", "complete"):
        if args.n is None or args.n < 1:
            raise UsageError(f"{args.kind} needs --n >= 1")
        g = builtin(args.kind, args.n)
    elif args.kind == "petersen":
        g = builtin("petersen")
    else:  # shift
        if args.input is None or args.t is None:
            raise UsageError("shift needs --input and --t")
        g = degree_shift(_load_graph(args.input), args.t)

    if args.format == "edges":
        _emit(formats.to_edge_list(g), args.output)
    else:
        doc = formats.graph_to_json(g)
        if sidecar is not None and not args.output and not args.sidecar:
            doc["geometry"] = sidecar
        _emit(_dump(doc), args.output)
    if sidecar is not None and (args.output or args.sidecar):
        path = args.sidecar or str(Path(args.output).with_suffix("")) + ".geometry.json"
        Path(path).write_text(_dump(sidecar))
    return 0


# ---------------------------------------------------------------------------
# certify
# ---------------------------------------------------------------------------

def _check_three_ev(g: Multigraph, with_float: bool) -> dict:
    k = regularity(g).regular_k
    if k is None or not is_connected(g):
        return {"name": "three-ev", "pass": False, "detail": "graph is not connected and regular"}
    cert = spectral.certify_three_eigenvalues(g)
    if cert is None:
        d = spectral.count_distinct_eigenvalues(g)
        return {"name": "three-ev", "pass": False, "detail": f"{d} distinct eigenvalues"}
    eigs = [
        {"value": _surd_json(v, with_float), "multiplicity": m} for v, m in cert.eigenvalues
    ]
    return {
        "name": "three-ev",
        "pass": True,
        "detail": "3 distinct eigenvalues",
        "certificate": cert.to_json(),
        "eigenvalues": eigs,
        "rational_eigenvalues": cert.rational_roots,
    }


def _check_srg(g: Multigraph) -> dict:
    if not g.is_simple:
        return {"name": "srg", "pass": False, "detail": "graph is not simple"}
    if regularity(g).regular_k is None or not is_connected(g):
        return {"name": "srg", "pass": False, "detail": "graph is not connected and regular"}
    params = spectral.srg_params(g)
    if params is None:
        return {"name": "srg", "pass": False, "detail": "not strongly regular"}
    report = bounds.srg_identity(params)
    return {
        "name": "srg",
        "pass": True,
        "parameters": {"n": params.n, "k": params.k, "lambda": params.lam, "mu": params.mu},
        "identity": report.to_json(),
    }


def _check_girth(g: Multigraph, expected: int | None) -> dict:
    value = girth(g)
    shown = "inf" if value == float("inf") else value
    ok = expected is None or value == expected
    out = {"name": "girth", "pass": ok, "girth": shown}
    if expected is not None:
        out["expected"] = expected
    return out


def _check_extremal(g: Multigraph) -> dict:
    try:
        report = spectral.extremal_necessary_conditions(g)
    except (PreconditionsNotMet, SpectraError) as exc:
        return {"name": "extremal", "pass": False, "detail": f"preconditions not met: {exc}"}
    return {"name": "extremal", "pass": report.passed, "conditions": report.to_json()["checks"]}


def _check_plane_double(g: Multigraph) -> dict:
    try:
        rec = geometry.recognize_plane_from_double(g)
    except (PreconditionsNotMet, SpectraError) as exc:
        return {"name": "plane-double", "pass": False, "detail": f"preconditions not met: {exc}"}
    out = rec.to_json()
    return {"name": "plane-double", "pass": rec.recognized, "detail": rec.verdict, "checks": out["checks"]}


def cmd_certify(args) -> int:
    g = _load_graph(args.input)
    results = []
    wanted = args.three_ev or args.srg or args.girth is not False or args.extremal or args.plane_double
    if args.three_ev or not wanted:
        results.append(_check_three_ev(g, args.float))
    if args.srg:
        results.append(_check_srg(g))
    if args.girth is not False:
        results.append(_check_girth(g, args.girth))
    if args.extremal:
        results.append(_check_extremal(g))
    if args.plane_double:
        results.append(_check_plane_double(g))
    ok = all(r["pass"] for r in results)
    _emit(_dump({"pass": ok, "n": g.n, "checks": results}), args.output)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# bound
# ---------------------------------------------------------------------------

def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"bound {args.kind} needs " + ", ".join("--" + m for m in missing))


def cmd_bound(args) -> int:
    kind = args.kind
    if kind == "moore":
        _need(args, "k", "d")
        if args.k < 2 or args.d < 1:
            raise UsageError("moore needs k >= 2 and d >= 1")
        report = bounds.BoundReport(
            "moore",
            bounds.moore_bound(args.k, args.d),
            [Check("k >= 2 and d >= 1", True)],
            {"k": args.k, "d": args.d},
        )
    elif kind == "three-ev":
        _need(args, "k")
        if args.k < 2:
            raise UsageError("three-ev needs k >= 2")
        report = bounds.three_ev_bound(args.k)
    elif kind == "lp":
        _need(args, "k", "f")
        eigs = [parse_exact(e) for e in (args.eig or [])]
        f = bounds.f_from_coeffs(args.k, args.f)
        report = bounds.lp_bound_verify(args.k, eigs, f)
    elif kind == "harmonic":
        _need(args, "k", "f")
        if args.k < 2:
            raise UsageError("harmonic needs k >= 2")
        f = bounds.f_from_coeffs(args.k, args.f)
        report = bounds.harmonic_bound(args.k, f)
    elif kind == "srg-identity":
        _need(args, "n", "k", "lam", "mu")
        report = bounds.srg_identity(spectral.SrgParams(args.n, args.k, args.lam, args.mu))
    else:  # bruck-ryser
        _need(args, "q")
        if args.q < 2:
            raise UsageError("bruck-ryser needs q >= 2")
        report = bounds.bruck_ryser_report(args.q)
    doc = report.to_json()
    if args.float and isinstance(report.value, (int, Fraction)):
        doc["value_float"] = float(report.value)
    _emit(_dump(doc), args.output)
    return 0


# ---------------------------------------------------------------------------
# search / verify-walks / export
# ---------------------------------------------------------------------------

def cmd_search(args) -> int:
    spec = SearchSpec(
        k=args.k,
        n_min=args.nmin,
        n_max=args.nmax,
        allow_loops=args.loops,
        allow_multi=args.multi,
        max_entry=args.max_entry,
    )
    out = Path(args.output or f"search_k{args.k}.jsonl")
    checkpoint = Path(args.checkpoint) if args.checkpoint else out.with_suffix(".checkpoint.json")
    result = run_search(spec, out, checkpoint, jobs=args.jobs, resume=args.resume)
    summary = {
        "spec": spec.to_json(),
        "output": str(out),
        "graphs_by_order": {str(n): c for n, c in sorted(result.count_by_order().items())},
        "three_ev_hits": [
            {
                "n": h.order,
                "adj": [list(r) for r in h.graph.adj],
                "tau_sum": h.certificate.to_json()["tau_sum"],
                "tau_prod": h.certificate.to_json()["tau_prod"],
                "within_three_ev_bound": h.within_bound,
                "extremal_conditions_pass": None if h.extremal is None else h.extremal.passed,
            }
            for h in result.hits
        ],
        "no_multi_edge_at_extremal_order": no_multi_edge_at_extremal_order(result),
    }
    sys.stdout.write(_dump(summary))
    return 0


def cmd_verify_walks(args) -> int:
    g = _load_graph(args.input)
    if args.imax < 1:
        raise UsageError("--imax must be >= 1")
    ok = verify_nb_theorem(g, args.imax)
    sys.stdout.write(_dump({"pass": ok, "n": g.n, "imax": args.imax}))
    return 0 if ok else 1


def cmd_export(args) -> int:
    g = _load_graph(args.input)
    if args.to == "dot":
        text = formats.to_dot(g)
    elif args.to == "edges":
        text = formats.to_edge_list(g)
    else:
        text = _dump(formats.graph_to_json(g))
    _emit(text, args.output)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectra",
        description="Regular multigraphs with three distinct eigenvalues: construction, certificates, bounds.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a graph and print it as JSON")
    p.add_argument("kind", choices=["polarity-graph", "incidence-graph", "cycle", "complete", "petersen", "shift"])
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--input")
    p.add_argument("--format", choices=["json", "edges"], default="json")
    p.add_argument("--output", "-o")
    p.add_argument("--sidecar", help="geometry sidecar path (default: <output>.geometry.json)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("certify", help="run spectral and geometric checks on a graph")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--three-ev", action="store_true")
    p.add_argument("--srg", action="store_true")
    p.add_argument("--girth", nargs="?", type=int, const=None, default=False,
                   help="report the girth; with a value, also require it")
    p.add_argument("--extremal", action="store_true")
    p.add_argument("--plane-double", action="store_true")
    p.add_argument("--float", action="store_true")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("bound", help="evaluate a bound and its hypotheses")
    p.add_argument("kind", choices=["moore", "three-ev", "lp", "harmonic", "srg-identity", "bruck-ryser"])
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--lam", type=int)
    p.add_argument("--mu", type=int)
    p.add_argument("--eig", action="append", help="non-trivial eigenvalue, e.g. 'sqrt(2)'; repeatable")
    p.add_argument("--f", nargs="+", help="F-basis coefficients f_0 f_1 ...")
    p.add_argument("--float", action="store_true")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("search", help="exhaustive search for three-eigenvalue graphs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmin", type=int, default=1)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--loops", action="store_true")
    p.add_argument("--multi", action="store_true")
    p.add_argument("--max-entry", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--resume", action="store_true")
    p.add_argument("--output", "-o", help="JSON-lines result file")
    p.add_argument("--checkpoint")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-walks", help="compare F_i(A) with brute-force walk counts")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--imax", type=int, default=6)
    p.set_defaults(func=cmd_verify_walks)

    p = sub.add_parser("export", help="convert a graph to DOT, JSON or an edge list")
    p.add_argument("--input", "-i", required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", dest="to", action="store_const", const="dot")
    fmt.add_argument("--json", dest="to", action="store_const", const="json")
    fmt.add_argument("--edges", dest="to", action="store_const", const="edges")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_export, to="json")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (UsageError, SpectraError, ValueError) as exc:
        print(f"spectra: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
