"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parameter error,
3 domain error (disconnected input, 64-bit overflow).  Data goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import random
import sys
import time
from typing import Callable, Sequence

from . import __version__
from .distances import distance_summary
from .errors import DomainError, GraphError, InvalidParameterError
from .graph import Family, Graph, format_edge_list, generate, parse_edge_list
from .corpus import DEFAULT_SEED, random_connected
from .hosoya import hosoya_polynomial
from .indices import full_report, wiener_pairwise, wiener_polarity, wiener_transmission
from .oracle import ORACLE_MAX_N, floyd_warshall, polarity_naive, wiener_naive
from .relations import check_all
from .sun_forms import hosoya_sun, wiener_polarity_sun, wiener_sun

PROG = "sunwiener"
DEFAULT_MAX_VERTICES = 100_000

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

# families with an O(1) Wiener formula, keyed by generator size parameter
CLOSED_FORMS: dict[Family, Callable[[int], int]] = {Family.SUN: wiener_sun}


class UsageError(Exception):
    pass


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _size_for(args: argparse.Namespace) -> int:
    size = args.k if args.family == "sun" else args.n
    if size is None:
        raise UsageError(f"--{'k' if args.family == 'sun' else 'n'} is required for family {args.family}")
    return size


def _load(path: str, max_vertices: int) -> tuple[Graph, dict]:
    if path == "-":
        text, name = sys.stdin.read(), "<stdin>"
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        name = os.path.basename(path)
    g = parse_edge_list(text)
    if g.n > max_vertices:
        raise UsageError(f"graph has {g.n} vertices; limit is {max_vertices} (see --max-vertices)")
    provenance = {
        "tool": PROG,
        "version": __version__,
        "input": name,
        "sha256": hashlib.sha256(text.encode()).hexdigest(),
    }
    return g, provenance


def _emit(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "random":
        n = _size_for(args)
        if n < 1:
            raise InvalidParameterError("n must be >= 1")
        g = random_connected(n, args.p, random.Random(args.seed))
    else:
        g = generate(args.family, _size_for(args))
    _emit(format_edge_list(g), args.output)
    return 0


def build_document(g: Graph, provenance: dict) -> dict:
    report = full_report(g)
    doc = report.to_dict()
    doc["hosoya"] = list(hosoya_polynomial(g).coeffs)
    doc["relations"] = [r.to_dict() for r in check_all(g, report)]
    doc["provenance"] = provenance
    return doc


def cmd_compute(args: argparse.Namespace) -> int:
    g, provenance = _load(args.input, args.max_vertices)
    doc = build_document(g, provenance)
    if args.format == "json":
        sys.stdout.write(dumps(doc))
        return 0
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    cols = ["n", "m", "diameter", "wiener", "wiener_polarity", "m1", "m2", "w_d", "hosoya"]
    writer.writerow(cols)
    writer.writerow(
        [";".join(map(str, doc[c])) if isinstance(doc[c], list) else doc[c] for c in cols]
    )
    sys.stdout.write(buf.getvalue())
    return 0


def cmd_relations(args: argparse.Namespace) -> int:
    g, _ = _load(args.input, args.max_vertices)
    sys.stdout.write(dumps([r.to_dict() for r in check_all(g)]))
    return 0


def verify_sun(k: int, oracle_max_n: int = ORACLE_MAX_N) -> dict:
    """Engine, closed form, and (for small k) brute-force values for one k-sun."""
    g = generate(Family.SUN, k)
    engine = {
        "wiener": wiener_pairwise(g),
        "wiener_transmission": wiener_transmission(g),
        "wiener_polarity": wiener_polarity(g),
        "hosoya": list(hosoya_polynomial(g).coeffs),
    }
    closed = {
        "wiener": wiener_sun(k),
        "wiener_polarity": wiener_polarity_sun(k),
        "hosoya": list(hosoya_sun(k).coeffs),
    }
    mismatches = [
        key for key in ("wiener", "wiener_polarity", "hosoya") if engine[key] != closed[key]
    ]
    if engine["wiener_transmission"] != closed["wiener"]:
        mismatches.append("wiener_transmission")
    oracle = None
    if g.n <= oracle_max_n:
        dm = floyd_warshall(g)
        oracle = {"wiener": wiener_naive(dm), "wiener_polarity": polarity_naive(dm)}
        mismatches += [f"oracle_{key}" for key, val in oracle.items() if val != closed[key]]
    distance_summary.cache_clear()
    return {"k": k, "engine": engine, "closed_form": closed, "oracle": oracle, "mismatches": mismatches}


def cmd_verify(args: argparse.Namespace) -> int:
    if args.k_min < 3:
        raise InvalidParameterError("k must be >= 3")
    if args.k_min > args.k_max:
        raise UsageError(f"empty range: --k-min {args.k_min} > --k-max {args.k_max}")
    rows = [verify_sun(k, args.oracle_max_n) for k in range(args.k_min, args.k_max + 1)]
    bad = sum(1 for r in rows if r["mismatches"])
    summary = f"{len(rows)} sizes, {bad} mismatches"
    if args.format == "json":
        sys.stdout.write(dumps({"sizes": len(rows), "mismatches": bad, "summary": summary, "rows": rows}))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "W", "W_p", "d1", "d2", "d3"])
        for r in rows:
            e = r["engine"]
            d = (e["hosoya"] + [0, 0, 0])[:3]
            writer.writerow([r["k"], e["wiener"], e["wiener_polarity"], *d])
        sys.stdout.write(buf.getvalue())
    print(summary, file=sys.stderr)
    for r in rows:
        if r["mismatches"]:
            print(f"k={r['k']}: mismatch in {', '.join(r['mismatches'])}", file=sys.stderr)
    return EXIT_MISMATCH if bad else 0


def _best_time(fn: Callable[[], int], repeat: int) -> tuple[float, int]:
    best, value = float("inf"), 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def cmd_bench(args: argparse.Namespace) -> int:
    if args.repeat < 1:
        raise InvalidParameterError("repeat must be >= 1")
    family = Family(args.family)
    size = _size_for(args)
    g = generate(family, size)

    def engine() -> int:
        distance_summary.cache_clear()
        return wiener_pairwise(g)

    methods: dict[str, dict | None] = {}
    seconds, value = _best_time(engine, args.repeat)
    methods["engine"] = {"seconds": seconds, "wiener": value}
    closed = CLOSED_FORMS.get(family)
    if closed is None:
        methods["closed_form"] = None
        print(f"no closed form registered for family {family.value}; engine only", file=sys.stderr)
    else:
        seconds, cf = _best_time(lambda: closed(size), args.repeat)
        methods["closed_form"] = {"seconds": seconds, "wiener": cf}
    values = {m["wiener"] for m in methods.values() if m is not None}
    doc = {
        "family": family.value,
        "size": size,
        "n": g.n,
        "m": g.m,
        "repeat": args.repeat,
        "methods": methods,
        "agree": len(values) == 1,
    }
    sys.stdout.write(dumps(doc))
    return 0 if doc["agree"] else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Wiener-type indices and k-sun closed forms")
    parser.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p: argparse.ArgumentParser, choices: Sequence[str]) -> None:
        p.add_argument("--family", required=True, choices=choices)
        p.add_argument("--k", type=int, help="sun parameter")
        p.add_argument("--n", type=int, help="vertex count for path/cycle/complete/random")

    families = [f.value for f in Family]
    p = sub.add_parser("gen", help="write a family member as an edge list")
    family_args(p, families + ["random"])
    p.add_argument("--p", type=float, default=0.2, help="extra-edge probability for random graphs")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", "-o", help="output path (default stdout)")
    p.set_defaults(func=cmd_gen)

    for name, func, help_ in (
        ("compute", cmd_compute, "index report for an edge-list file"),
        ("relations", cmd_relations, "evaluate the W / W_P / M1 relations"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help="edge-list path, or - for stdin")
        p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
        if name == "compute":
            p.add_argument("--format", choices=("json", "csv"), default="json")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="closed forms vs engine vs oracle over a range of k")
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--oracle-max-n", type=int, default=ORACLE_MAX_N)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the APSP engine against the closed form")
    family_args(p, families)
    p.add_argument("--repeat", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidParameterError, GraphError, OSError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
