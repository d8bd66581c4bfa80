"""Command-line front end.

Subcommands:
  compute  polynomial of one graph (family spec or JSON file), any route,
           optional exact evaluations
  verify   run a named identity suite, exit 0 iff everything passes
  census   copermanental census over a vertex-count range, JSONL catalog
  compare  are two graphs (or one graph under two matrix kinds)
           copermanental?

Exit codes: 0 success / all-pass, 1 verification failure or census
collision involving a connected dumbbell/theta, 2 usage error, 3 input or
IO error.  Big coefficients are always printed as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import IntPoly
from .census import ParseError, run_census, write_catalog
from .decomposition import spec_coalescence_poly
from .graphs import (
    Complete,
    CompleteBipartite,
    Cycle,
    Dumbbell,
    FamilySpec,
    Graph,
    InvalidFamilyParams,
    Lollipop,
    MatrixKind,
    Path,
    Theta,
    generate,
    spec_label,
)
from .permanent import perm_poly, perm_poly_matrix
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

KIND_NAMES = {
    "laplacian": MatrixKind.LAPLACIAN,
    "signless": MatrixKind.SIGNLESS_LAPLACIAN,
    "adjacency": MatrixKind.ADJACENCY,
    "degree": MatrixKind.DEGREE_DIAGONAL,
}


class UsageError(Exception):
    pass


def _add_graph_args(parser: argparse.ArgumentParser, second: bool = False) -> None:
    # The second graph of `compare` gets -b suffixed flags (--family-b, ...).
    tail = "-b" if second else ""
    parser.add_argument(f"--family{tail}",
                        choices=["path", "cycle", "complete", "bipartite", "lollipop", "dumbbell", "theta"])
    parser.add_argument(f"--graph-file{tail}", metavar="PATH")
    for flag in ("n", "a", "b", "p", "q", "r"):
        parser.add_argument(f"--{flag}{tail}", type=int)


def _build_spec(family: str, get) -> FamilySpec:
    def need(*names: str) -> list[int]:
        vals = [get(name) for name in names]
        missing = [name for name, v in zip(names, vals) if v is None]
        if missing:
            raise UsageError(f"family {family} needs --{', --'.join(missing)}")
        return vals

    if family == "path":
        return Path(*need("n"))
    if family == "cycle":
        return Cycle(*need("n"))
    if family == "complete":
        return Complete(*need("n"))
    if family == "bipartite":
        return CompleteBipartite(*need("a", "b"))
    if family == "lollipop":
        return Lollipop(*need("r", "n"))
    if family == "dumbbell":
        return Dumbbell(*need("p", "q", "r"))
    if family == "theta":
        return Theta(*need("p", "q", "r"))
    raise UsageError(f"unknown family {family}")


def _load_graph(args, suffix: str = "") -> tuple[Graph, FamilySpec | None, str]:
    family = getattr(args, f"family{suffix}" if suffix else "family")
    path = getattr(args, f"graph_file{suffix}" if suffix else "graph_file")
    if family and path:
        raise UsageError("give either a family spec or a graph file, not both")
    if family:
        get = lambda name: getattr(args, f"{name}{suffix}" if suffix else name)
        spec = _build_spec(family, get)
        return generate(spec), spec, spec_label(spec)
    if path:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                g = Graph.from_json(fh.read())
        except OSError as exc:
            raise SystemExitWith(EXIT_IO, f"cannot read {path}: {exc}")
        except (ValueError, KeyError) as exc:
            raise SystemExitWith(EXIT_IO, f"bad graph file {path}: {exc}")
        return g, None, path
    raise UsageError("no graph given (use --family or --graph-file)")


class SystemExitWith(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _parse_eval_point(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError as exc:
        raise UsageError(f"bad --eval value {text!r}: {exc}")


def _format_value(v) -> str:
    return str(v)


def cmd_compute(args) -> int:
    g, spec, label = _load_graph(args)
    kind = KIND_NAMES[args.kind]
    route = args.route
    if route in ("auto", "interpolation"):
        poly = perm_poly(g, kind, "interpolation")
    elif route == "ryser-poly":
        poly = perm_poly(g, kind, "ryser-poly")
    elif route == "vertex-expansion":
        poly = perm_poly(g, kind, "vertex-expansion")
    elif route == "coalescence":
        if spec is None or not isinstance(spec, (Lollipop, Dumbbell)):
            raise UsageError("route coalescence applies to lollipop and dumbbell family specs")
        poly = spec_coalescence_poly(spec, kind)
    else:
        raise UsageError(f"unknown route {route}")
    evals = {str(x): _format_value(poly(x)) for x in map(_parse_eval_point, args.eval or [])}
    if args.json:
        print(json.dumps({
            "graph": label,
            "n": g.n,
            "kind": args.kind,
            "route": route,
            "coefficients": poly.to_decimal_strings(),
            "evaluations": evals,
        }, sort_keys=True))
    else:
        print(f"graph: {label}  (n={g.n}, kind={args.kind}, route={route})")
        print(f"coefficients (constant first): {poly.to_decimal_strings()}")
        for x, v in evals.items():
            print(f"value at {x}: {v}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, max_n=args.max_n)
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"suite {report['suite']}: {report['cases']} cases, {len(report['failures'])} failures")
        for failure in report["failures"]:
            print(f"  FAIL {failure['case']}: expected {failure['expected']}, got {failure['got']}")
    return EXIT_OK if not report["failures"] else EXIT_FAIL


def cmd_census(args) -> int:
    kinds = {
        "laplacian": (MatrixKind.LAPLACIAN,),
        "signless": (MatrixKind.SIGNLESS_LAPLACIAN,),
        "both": (MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN),
    }[args.kind]
    report = run_census(args.n_min, args.n_max, kinds=kinds, include_r0=args.include_r0, threads=args.threads)
    if args.out:
        try:
            write_catalog(report.records, args.out)
        except OSError as exc:
            raise SystemExitWith(EXIT_IO, f"cannot write {args.out}: {exc}")
    payload = report.to_dict()
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"census n={report.n_min}..{report.n_max} kinds={','.join(report.kinds)} "
              f"records={len(report.records)} collisions={len(report.collisions)}")
        for c in report.collisions:
            tag = " [connected!]" if c.involves_connected else ""
            print(f"  collision at n={c.n} kind={c.kind}: {', '.join(c.members)}{tag}")
    return EXIT_FAIL if report.connected_collisions else EXIT_OK


def cmd_compare(args) -> int:
    g1, _, label1 = _load_graph(args)
    kind1 = KIND_NAMES[args.kind]
    has_b = args.family_b or args.graph_file_b
    if has_b:
        g2, _, label2 = _load_graph(args, suffix="_b")
    else:
        g2, label2 = g1, label1
    kind2 = KIND_NAMES[args.kind_b] if args.kind_b else kind1
    p1 = perm_poly_matrix_for(g1, kind1)
    p2 = perm_poly_matrix_for(g2, kind2)
    same = p1 == p2
    first_diff = None
    if not same:
        top = max(p1.degree, p2.degree)
        for i in range(top + 1):
            if p1.coeff(i) != p2.coeff(i):
                first_diff = i
                break
    if args.json:
        print(json.dumps({
            "a": {"graph": label1, "kind": kind1.value},
            "b": {"graph": label2, "kind": kind2.value},
            "copermanental": same,
            "first_difference_power": first_diff,
        }, sort_keys=True))
    else:
        print(f"copermanental: {'true' if same else 'false'}")
        if not same:
            print(f"first differing coefficient: x^{first_diff}")
    return EXIT_OK


def perm_poly_matrix_for(g: Graph, kind: MatrixKind) -> IntPoly:
    from .graphs import build_matrix

    if kind in (MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN):
        return perm_poly(g, kind)
    return perm_poly_matrix(build_matrix(g, kind))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permpoly", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="permanental polynomial of one graph")
    _add_graph_args(p_compute)
    p_compute.add_argument("--kind", choices=sorted(KIND_NAMES), default="laplacian")
    p_compute.add_argument("--route", choices=["auto", "interpolation", "ryser-poly", "vertex-expansion", "coalescence"], default="auto")
    p_compute.add_argument("--eval", action="append", metavar="X", help="evaluate at X (integer or a/b); repeatable")
    p_compute.add_argument("--json", action="store_true")
    p_compute.set_defaults(fn=cmd_compute)

    p_verify = sub.add_parser("verify", help="run an identity suite")
    p_verify.add_argument("--suite", choices=sorted(SUITES), required=True)
    p_verify.add_argument("--max-n", type=int, default=None, help="shrink the sweep for a quick run")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(fn=cmd_verify)

    p_census = sub.add_parser("census", help="copermanental census")
    p_census.add_argument("--n-min", type=int, required=True)
    p_census.add_argument("--n-max", type=int, required=True)
    p_census.add_argument("--kind", choices=["laplacian", "signless", "both"], default="both")
    p_census.add_argument("--include-r0", action="store_true",
                          help="include bridge-edge dumbbells (r = 0)")
    p_census.add_argument("--out", metavar="PATH", help="write the JSONL catalog here")
    p_census.add_argument("--threads", type=int, default=1)
    p_census.add_argument("--json", action="store_true")
    p_census.set_defaults(fn=cmd_census)

    p_compare = sub.add_parser("compare", help="copermanental test for two graphs")
    _add_graph_args(p_compare)
    _add_graph_args(p_compare, second=True)
    p_compare.add_argument("--kind", choices=sorted(KIND_NAMES), default="laplacian")
    p_compare.add_argument("--kind-b", choices=sorted(KIND_NAMES), default=None)
    p_compare.add_argument("--json", action="store_true")
    p_compare.set_defaults(fn=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidFamilyParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExitWith as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
