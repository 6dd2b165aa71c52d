"""Command-line front end.

Exit status: 0 on success, 1 when a verification suite reports a failure,
2 on usage or domain errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import constructions as cons
from .errors import DomainError
from .fourier import (
    count_k_covers,
    cover_table,
    granularity,
    sparsity,
    sparsity_01,
    spectrum_covers,
    spectrum_wht,
)
from .gf2poly import add, degree
from .lrank import linear_rank_search
from .polytext import format_poly, parse_poly
from .verify import SUITES, failures, granularity_01, run_suite


def _sort_key(key: str):
    return (0, int(key), "") if key.lstrip("-").isdigit() else (1, 0, key)


def canonical(obj):
    """Sort dict keys recursively; integer-like keys order numerically."""
    if isinstance(obj, dict):
        return {str(k): canonical(obj[k]) for k in sorted(obj, key=lambda k: _sort_key(str(k)))}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(canonical(obj), separators=(",", ":"))


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _load_poly(args):
    if args.n is None:
        raise DomainError("--n is required")
    if (args.poly is None) == (args.construct is None):
        raise DomainError("give exactly one of --poly or --construct")
    if args.poly is not None:
        p = parse_poly(args.poly, args.n)
    else:
        name, _, param = args.construct.partition(":")
        if not param.isdigit():
            raise DomainError(f"--construct expects NAME:d, got {args.construct!r}")
        p = cons.construct(name, int(param), args.n)
    if args.lower_density is not None:
        d = degree(p)
        if d < 1:
            raise DomainError("a lower part needs a polynomial of degree at least 1")
        p = add(p, cons.random_lower_part(d, args.n, Fraction(args.lower_density), args.seed))
    return p


def _emit(args, payload, rows) -> str:
    if args.format == "csv":
        return _csv(rows)
    return dumps(payload)


def cmd_spectrum(args):
    p = _load_poly(args)
    s = spectrum_covers(p) if args.method == "covers" else spectrum_wht(p)
    data = s.to_json_dict()
    return _emit(args, data, [("mask", "coefficient")] + list(data.items())), 0


def cmd_sparsity(args):
    s = _spectrum(args)
    payload = {"sparsity": sparsity_01(s), "sparsity_pm": sparsity(s)}
    return _emit(args, payload, [("key", "value")] + sorted(payload.items())), 0


def cmd_granularity(args):
    s = _spectrum(args)
    payload = {"granularity": granularity(s), "granularity_01": granularity_01(s)}
    return _emit(args, payload, [("key", "value")] + sorted(payload.items())), 0


def _spectrum(args):
    p = _load_poly(args)
    return spectrum_covers(p) if args.method == "covers" else spectrum_wht(p)


def cmd_lrank(args):
    p = _load_poly(args)
    res = linear_rank_search(p, args.r_max)
    witness = res.witness.to_lists() if res.witness is not None else None
    payload = {"lrank": res.rank, "witness": witness}
    rows = [("key", "value"), ("lrank", "" if res.rank is None else res.rank),
            ("witness", "" if witness is None else json.dumps(witness, separators=(",", ":")))]
    return _emit(args, payload, rows), 0


def cmd_covers(args):
    p = _load_poly(args)
    if args.target is not None or args.k is not None:
        if args.target is None or args.k is None:
            raise DomainError("--target and --k go together")
        count = count_k_covers(p.monomials, args.target, args.k)
        payload = {"count": count, "k": args.k, "target": args.target}
        return _emit(args, payload, [("key", "value")] + sorted(payload.items())), 0
    table = cover_table(p, args.cover_method)
    acc = table.nonzero()
    payload = {"A": {str(t): a for t, a in acc.items()},
               "weights": {str(t): str(table.weight(t)) for t in acc}}
    rows = [("mask", "A", "weight")] + [(t, a, str(table.weight(t))) for t, a in acc.items()]
    return _emit(args, payload, rows), 0


def cmd_construct(args):
    p = _load_poly(args)
    payload = {"degree": degree(p), "monomials": len(p.monomials), "n": p.n_vars, "poly": format_poly(p)}
    return _emit(args, payload, [("key", "value")] + sorted(payload.items())), 0


def cmd_verify(args):
    reports = run_suite(args.suite, seed=args.seed, trials=args.trials, n_max=args.n_max, d=args.d, n=args.n)
    status = 1 if failures(reports) else 0
    if args.format == "csv":
        rows = [("claim_id", "params", "relation", "expected", "observed", "pass")]
        for r in reports:
            rows.append((r.claim_id, dumps(r.params), r.relation, dumps(r.expected), dumps(r.observed), r.passed))
        return _csv(rows), status
    return dumps([r.to_dict(timings=args.timings) for r in reports]), status


def _poly_flags(sp):
    sp.add_argument("--n", type=int, help="number of variables")
    sp.add_argument("--poly", help='polynomial text, e.g. "x1*x2 + x3"')
    sp.add_argument("--construct", metavar="NAME:d", help="complete:d | disjoint:d | gip:d | grid:d")
    sp.add_argument("--lower-density", help="add a random part of lower degree (e.g. 1/2)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gf2fourier", description="Exact Fourier analysis of GF(2) polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
        ("spectrum", cmd_spectrum, "full spectrum of f^± as exact dyadic rationals"),
        ("sparsity", cmd_sparsity, "Fourier sparsity of f and f^±"),
        ("granularity", cmd_granularity, "Fourier granularity of f^± and f"),
    ):
        sp = sub.add_parser(name, help=helptext)
        _poly_flags(sp)
        sp.add_argument("--method", choices=("wht", "covers"), default="wht")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("lrank", help="linear rank with a witness system")
    _poly_flags(sp)
    sp.add_argument("--r-max", type=int, default=None)
    sp.set_defaults(func=cmd_lrank)

    sp = sub.add_parser("covers", help="cover accumulators and weights, or a k-cover count")
    _poly_flags(sp)
    sp.add_argument("--target", type=int, help="target subset mask for --k")
    sp.add_argument("--k", type=int, help="count covers of --target by exactly k monomial supports")
    sp.add_argument("--cover-method", choices=("zeta", "dp"), default="zeta")
    sp.set_defaults(func=cmd_covers)

    sp = sub.add_parser("construct", help="print a polynomial family member")
    _poly_flags(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="replay a claim suite")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--trials", type=int, help="trials per instance (suite defaults otherwise)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--timings", action="store_true", help="include per-report runtimes (output no longer reproducible)")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=cmd_verify)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, status = args.func(args)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    print(text, file=stdout)
    return status


def main():
    sys.exit(run())
