"""Command-line front end: compute sequences and matrices, run the identity ledger.

Usage:
    degenmat compute beta --m 2 --w 1 --lambda lambda --x x
    degenmat compute stirling2 --m 0..4 --k 0..4
    degenmat matrix pascal --n 4 --lambda lambda --x x
    degenmat verify --identity thm-2.1
    degenmat list --format json

Numbers are exact rationals written p/q; the symbols lambda, mu, x, y pass
through as formal variables.  Negative numbers need the ``--x=-1/2`` form.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import matrices as mx
from . import sequences as nb
from .errors import DegenmatError, ParseError, UnknownIdentity
from .ring import SYMBOLS, MultiPoly, as_poly, gff, parse_rational, rising

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FORMATS = ("text", "json", "csv")
PROFILES = ("quick", "full")
GLOBAL_DEFAULTS = {"format": "text", "profile": "quick"}


# -- argument parsing helpers ---------------------------------------------------


def param(text: str) -> MultiPoly:
    """A reserved symbol name or an exact rational; anything else is rejected."""
    text = text.strip()
    if text in SYMBOLS:
        return MultiPoly.symbol(text)
    try:
        return as_poly(parse_rational(text))
    except (ValueError, ZeroDivisionError):
        raise ParseError(
            f"{text!r} is neither a rational p/q nor one of {', '.join(SYMBOLS)}"
        ) from None


def int_range(text: str) -> list[int]:
    """'5' -> [5]; 'a..b' -> [a, ..., b] inclusive."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ParseError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise ParseError(f"{text!r} is not an integer or a range a..b") from None


def _arg_type(fn):
    def wrapped(text):
        try:
            return fn(text)
        except ParseError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    wrapped.__name__ = fn.__name__
    return wrapped


# -- compute ---------------------------------------------------------------------

# name -> (index flags, parameter flags, function)
SEQUENCES = {
    "beta": (("m", "w"), ("lambda", "x"), lambda a: nb.beta(a["m"], a["w"], a["lambda"], a["x"])),
    "alpha": (("m", "w"), ("lambda", "x"), lambda a: nb.alpha(a["m"], a["w"], a["lambda"], a["x"])),
    "bernoulli": (("m", "w"), ("x",), lambda a: nb.bernoulli_classic(a["m"], a["w"], a["x"])),
    "bernoulli2": (("m", "w"), ("x",), lambda a: nb.bernoulli_second(a["m"], a["w"], a["x"])),
    "stirling1": (("m", "k"), (), lambda a: nb.stirling1(a["m"], a["k"])),
    "stirling2": (("m", "k"), (), lambda a: nb.stirling2(a["m"], a["k"])),
    "stirling1-gen": (
        ("m", "k"), ("mu", "lambda", "x"),
        lambda a: nb.stirling1_gen(a["m"], a["k"], (a["mu"], a["lambda"], a["x"])),
    ),
    "stirling2-gen": (
        ("m", "k"), ("mu", "lambda", "x"),
        lambda a: nb.stirling2_gen(a["m"], a["k"], (a["mu"], a["lambda"], a["x"])),
    ),
    "r-stirling1": (("m", "k", "r"), (), lambda a: nb.r_stirling1(a["m"], a["k"], a["r"])),
    "r-stirling2": (("m", "k", "r"), (), lambda a: nb.r_stirling2(a["m"], a["k"], a["r"])),
    "lah": (("m", "k"), (), lambda a: nb.lah(a["m"], a["k"])),
    "hyperharmonic": (("m", "r"), (), lambda a: nb.hyperharmonic(a["m"], a["r"])),
    "gff": (("k",), ("base", "step"), lambda a: gff(a["base"], a["step"], a["k"])),
    "rising": (("k",), ("base",), lambda a: rising(a["base"], a["k"])),
}

INDEX_DEFAULTS = {"m": [0], "k": [0], "w": [1], "r": [0]}
PARAM_DEFAULTS = {"lambda": "lambda", "mu": "1", "x": "x", "base": "x", "step": "lambda"}


def _grid(names, ranges):
    if not names:
        yield {}
        return
    head, rest = names[0], names[1:]
    for v in ranges[head]:
        for tail in _grid(rest, ranges):
            yield {head: v, **tail}


def cmd_compute(args) -> int:
    indices, params, fn = SEQUENCES[args.sequence]
    ranges = {n: getattr(args, n) or INDEX_DEFAULTS[n] for n in indices}
    bound = {}
    for p in params:
        raw = getattr(args, p.replace("lambda", "lam"))
        bound[p] = param(raw if raw is not None else PARAM_DEFAULTS[p])
    rows = []
    for point in _grid(list(indices), ranges):
        value = as_poly(fn({**point, **bound}))
        rows.append((point, value))

    ranged = [n for n in indices if len(ranges[n]) > 1]
    if args.format == "json":
        payload = [
            {"sequence": args.sequence, **point,
             **{p: str(v) for p, v in bound.items()}, "value": str(value)}
            for point, value in rows
        ]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2, ensure_ascii=False))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow([*indices, "value"])
        for point, value in rows:
            w.writerow([*(point[n] for n in indices), str(value)])
    elif not ranged:
        print(rows[0][1])
    elif len(ranged) == 2 and ranged == [n for n in ("m", "k") if n in ranged]:
        _print_triangle(rows, ranges)
    else:
        for point, value in rows:
            label = " ".join(f"{n}={point[n]}" for n in indices)
            print(f"{label}: {value}")
    return EXIT_OK


def _print_triangle(rows, ranges):
    table = {(p["m"], p["k"]): v for p, v in rows}
    ks = ranges["k"]
    cells = [[str(table[m, k]) if k <= m else "" for k in ks] for m in ranges["m"]]
    width = max([len(c) for row in cells for c in row] + [len(str(k)) for k in ks])
    label = max(len(str(m)) for m in ranges["m"])
    print(" " * label + " | " + "  ".join(str(k).rjust(width) for k in ks))
    print("-" * (label + 3 + len(ks) * (width + 2) - 2))
    for m, row in zip(ranges["m"], cells):
        print(str(m).rjust(label) + " | " + "  ".join(c.rjust(width) for c in row).rstrip())


# -- matrix ----------------------------------------------------------------------


def _stirling_t1(kind):
    return lambda a: mx.stirling_matrix_first_type(a.n, (a.mu, a.lam, a.x), kind)


def _stirling_t2(kind):
    return lambda a: mx.stirling_matrix_second_type(a.n, a.h, a.lam, a.x, kind)


FAMILIES = {
    "pascal": lambda a: mx.pascal(a.n, a.lam, a.x),
    "r": lambda a: mx.r_matrix(a.n, a.lam, a.x),
    "t": lambda a: mx.t_matrix(a.n, a.lam, a.x),
    "g": lambda a: mx.g_factor(a.n, a.k or a.n, a.lam, a.x),
    "q": lambda a: mx.q_factor(a.n, a.k or a.n, a.lam, a.x),
    "bernoulli": lambda a: mx.bernoulli_matrix(a.n, a.w, a.lam, a.x),
    "l": lambda a: mx.l_matrix(a.n, a.w, a.lam, a.x),
    "stirling1-t1": _stirling_t1(1),
    "stirling2-t1": _stirling_t1(2),
    "stirling1-t2": _stirling_t2(1),
    "stirling2-t2": _stirling_t2(2),
}


def cmd_matrix(args) -> int:
    if args.n < 1:
        raise ParseError("--n must be a positive integer")
    args.lam, args.mu, args.x = param(args.lam), param(args.mu), param(args.x)
    m = FAMILIES[args.family](args)
    if args.format == "json":
        print(json.dumps(m.to_json(), indent=2, ensure_ascii=False))
    elif args.format == "csv":
        sys.stdout.write(m.to_csv())
    else:
        print(m)
    return EXIT_OK


# -- verify / list ------------------------------------------------------------------


def cmd_verify(args) -> int:
    from . import ledger

    catalog = ledger.CATALOG
    if args.identity == "all":
        ids = catalog.ids()
    else:
        catalog.get(args.identity)  # UnknownIdentity before any work
        ids = [args.identity]
    reports = []
    for ident in ids:
        report = ledger.verify(ident, profile=args.profile, catalog=catalog)
        reports.append(report)
        if args.format == "text":
            print(report.summary(), flush=True)
            for f in report.failures[:3]:
                print(f"  FAIL {f.bindings}: {f.lhs} != {f.rhs}")
    clean = all(r.ok for r in reports)
    if args.format == "json":
        out = [r.to_json() for r in reports]
        print(json.dumps(out[0] if len(out) == 1 else out, indent=2, ensure_ascii=False))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["id", "attempted", "passed", "failures", "elapsed_ms"])
        for r in reports:
            w.writerow([r.id, r.attempted, r.passed, len(r.failures), round(r.elapsed * 1000, 3)])
    elif len(reports) > 1:
        cases = sum(r.attempted for r in reports)
        passed = sum(r.passed for r in reports)
        bad = sum(not r.ok for r in reports)
        print(f"total: {passed}/{cases} cases passed; {len(reports) - bad}/{len(reports)} identities clean")
    return EXIT_OK if clean else EXIT_FAIL


def cmd_list(args) -> int:
    from . import ledger

    entries = ledger.list_identities(ledger.CATALOG)
    if args.format == "json":
        print(json.dumps([{"id": i, "anchor": a, "domain": d} for i, a, d in entries], indent=2, ensure_ascii=False))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["id", "anchor", "domain"])
        w.writerows(entries)
    else:
        for ident, anchor, _ in entries:
            print(f"{ident}  {anchor}")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand; SUPPRESS keeps
    # a subcommand's missing flag from clobbering the top-level value.  The
    # defaults are filled in by main(): set_defaults() would write through to
    # the action objects shared with every subparser.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--profile", choices=PROFILES, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="degenmat",
        description="Exact degenerate Bernoulli, generalized Stirling and Pascal-type computations.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rng = _arg_type(int_range)
    p = sub.add_parser("compute", parents=[common], help="evaluate a sequence")
    p.add_argument("sequence", choices=sorted(SEQUENCES))
    for flag in ("m", "k", "w", "r"):
        p.add_argument(f"--{flag}", type=rng, help="integer or inclusive range a..b")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--mu")
    p.add_argument("--x")
    p.add_argument("--base")
    p.add_argument("--step")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("matrix", parents=[common], help="build a matrix family")
    p.add_argument("family", choices=list(FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default="lambda")
    p.add_argument("--mu", default="1")
    p.add_argument("--x", default="x")
    p.add_argument("--w", type=int, default=1, help="order for bernoulli / l")
    p.add_argument("--h", type=int, default=0, help="shift for the second-type Stirling matrices")
    p.add_argument("--k", type=int, default=None, help="block size for g / q (default n)")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", parents=[common], help="check catalogued identities")
    p.add_argument("--identity", required=True, help="catalog id or 'all'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list", parents=[common], help="list catalogued identities")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    for name, default in GLOBAL_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        code = args.func(args)
        sys.stdout.flush()
        return code
    except BrokenPipeError:
        # output piped into head and friends; silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except UnknownIdentity as exc:
        print(f"degenmat: unknown identity {exc.args[0]!r}; run 'degenmat list' for the catalog",
              file=sys.stderr)
        return EXIT_USAGE
    except (DegenmatError, ValueError) as exc:
        print(f"degenmat: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
