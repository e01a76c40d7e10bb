"""Command line front end.

Exit status: 0 success, 1 verification or bound failure, 2 precondition
violation, 3 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .coloring import (
    bounded_coloring,
    fracdelta_coloring,
    greedy_bound,
    greedy_coloring,
    improved_acyclic_coloring,
)
from .core import DigraphError, degree_stats, is_oriented, weak_components
from .degeneracy import verify_coloring
from .errors import IterationCapError, PreconditionError, SizeCapError
from .generators import FAMILIES, generate
from .io import ParseError, format_coloring, format_edge_list, parse_coloring, parse_edge_list
from .oracle import exact_chi_m
from .patterns import avoids_F, avoids_G

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PRECONDITION = 2
EXIT_PARSE = 3


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(path: str):
    try:
        return parse_edge_list(_read(path))
    except ParseError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: {exc}")
    except OSError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: {exc.strerror}")


class _Exit(Exception):
    def __init__(self, code: int, message: str, payload: dict | None = None):
        super().__init__(message)
        self.code = code
        self.payload = payload or {}


def cmd_stats(args) -> int:
    D = _load(args.input)
    st = degree_stats(D)
    info = {
        "n": D.n,
        "edges": D.num_edges,
        "deltabar": st.max_avg.to_json(),
        "deltatilde_sq": st.max_geom_sq,
        "deltatilde": round(st.max_geom, 6),
        "oriented": is_oriented(D),
        "components": len(weak_components(D)),
        "avoidsF": avoids_F(D),
        "avoidsG": avoids_G(D),
    }
    if args.json:
        print(json.dumps(info, sort_keys=True))
    else:
        print(
            f"n={D.n} m={D.num_edges} deltabar={st.max_avg} deltatilde_sq={st.max_geom_sq} "
            f"deltatilde={st.max_geom:.6f} oriented={_flag(info['oriented'])} "
            f"components={info['components']} avoidsF={_flag(info['avoidsF'])} "
            f"avoidsG={_flag(info['avoidsG'])}"
        )
    return EXIT_OK


def _run_algo(D, algo: str, m: int):
    """Returns (coloring, bound, extra summary fields)."""
    delta = degree_stats(D).max_avg
    if algo == "greedy":
        return greedy_coloring(D, m), greedy_bound(delta, m), {}
    if algo == "fracdelta":
        c, plan = fracdelta_coloring(D, m)
        extra = {"s": plan.s, "r": str(plan.r), "targets": [str(t) for t in plan.targets]}
        return c, plan.bound, extra
    if algo == "improved":
        if m != 1:
            raise PreconditionError(f"the improved pipeline is acyclic (m=1) only, got m={m}")
        c, plan = improved_acyclic_coloring(D)
        extra = {"s": plan.s, "r": str(plan.r), "targets": [str(t) for t in plan.targets]}
        return c, plan.bound, extra
    if algo.startswith("bounded:"):
        try:
            k = int(algo.split(":", 1)[1])
        except ValueError:
            raise _Exit(EXIT_PRECONDITION, f"bad algorithm {algo!r}; use bounded:K")
        return bounded_coloring(D, m, k), k, {}
    raise _Exit(EXIT_PRECONDITION, f"unknown algorithm {algo!r}")


def cmd_color(args) -> int:
    D = _load(args.input)
    try:
        coloring, bound, extra = _run_algo(D, args.algo, args.m)
    except PreconditionError as exc:
        payload = {"reason": exc.reason}
        if exc.witness is not None:
            payload["witness"] = list(exc.witness)
        raise _Exit(EXIT_PRECONDITION, exc.reason, payload)
    except IterationCapError as exc:
        raise _Exit(EXIT_PRECONDITION, str(exc), {"reason": str(exc)})
    verdict = verify_coloring(D, coloring, args.m)
    colors = coloring.num_colors
    ok = bool(verdict) and colors <= bound
    header = {"m": args.m, "algorithm": args.algo, "bound": bound, "seed": args.seed}
    if args.out:
        _write(args.out, format_coloring(coloring, header))
    summary = {
        "algo": args.algo,
        "m": args.m,
        "n": D.n,
        "deltabar": degree_stats(D).max_avg.to_json(),
        "colors": colors,
        "bound": bound,
        "verified": bool(verdict),
        **extra,
    }
    if not verdict:
        summary["failure"] = verdict.describe()
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        print(
            f"algo={args.algo} m={args.m} colors={colors} bound={bound} "
            f"verified={_flag(bool(verdict))}"
        )
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    D = _load(args.input)
    try:
        coloring, header = parse_coloring(_read(args.coloring), D.n)
    except ParseError as exc:
        raise _Exit(EXIT_PARSE, f"{args.coloring}: {exc}")
    m = args.m if args.m is not None else int(header.get("m", 1))
    verdict = verify_coloring(D, coloring, m)
    if args.json:
        print(
            json.dumps(
                {
                    "verified": verdict.ok,
                    "m": m,
                    "colors": coloring.num_colors,
                    "bad_class": verdict.bad_class,
                    "core": list(verdict.core),
                },
                sort_keys=True,
            )
        )
    else:
        print(verdict.describe())
    return EXIT_OK if verdict else EXIT_FAIL


def cmd_exact(args) -> int:
    D = _load(args.input)
    try:
        res = exact_chi_m(D, args.m, max_n=args.max_n)
    except SizeCapError as exc:
        raise _Exit(EXIT_PRECONDITION, str(exc), {"reason": str(exc)})
    if args.out:
        header = {"m": args.m, "algorithm": "exact", "bound": res.chi, "seed": "none"}
        _write(args.out, format_coloring(res.witness, header))
    if args.json:
        print(json.dumps({"m": args.m, "chi": res.chi, "witness": list(res.witness.assignment),
                          "certificate_checked": res.certificate_checked}, sort_keys=True))
    else:
        print(f"chi_{args.m} = {res.chi}")
    return EXIT_OK if res.certificate_checked else EXIT_FAIL


def cmd_gen(args) -> int:
    try:
        D = generate(args.family, args.params, args.seed)
    except (ValueError, RuntimeError) as exc:
        raise _Exit(EXIT_PRECONDITION, str(exc), {"reason": str(exc)})
    header = {"family": args.family, "params": ",".join(args.params), "seed": args.seed}
    _write(args.out, format_edge_list(D, header))
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dicolor", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stats", help="degree statistics and pattern checks")
    s.add_argument("input")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_stats)

    c = sub.add_parser("color", help="run a coloring algorithm and self-verify")
    c.add_argument("input")
    c.add_argument("--m", type=_positive, default=1)
    c.add_argument("--algo", default="greedy", help="greedy | fracdelta | improved | bounded:K")
    c.add_argument("--out")
    c.add_argument("--seed", default="none", help="recorded in the coloring header only")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring file")
    v.add_argument("input")
    v.add_argument("coloring")
    v.add_argument("--m", type=_positive, default=None, help="default: the m in the coloring header")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("exact", help="exact chi_m by backtracking (small inputs)")
    e.add_argument("input")
    e.add_argument("--m", type=_positive, default=1)
    e.add_argument("--max-n", type=int, default=12)
    e.add_argument("--out")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_exact)

    g = sub.add_parser("gen", help="write a generated digraph as an edge list")
    g.add_argument("family", choices=sorted(FAMILIES))
    g.add_argument("params", nargs="*")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": str(exc), "exit": exc.code, **exc.payload}, sort_keys=True))
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DigraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
