"""
Command line front end.

    matchjack coeff --lambda 2 --mu 2 --nu 2
    matchjack table --n 3 --kind marginal --format csv
    matchjack fh --kind Q --r 3
    matchjack verify --suite all --n 4
    matchjack reconstruct --marginals marg.json

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 a
certification failed (a proved identity was contradicted), 4 a size guard
was exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from itertools import product
from pathlib import Path

from . import cache
from .exact import CertificationError
from .partitions import all_partitions, from_str
from .reconstruct import ReconstructionError
from .report import GuardExceeded, Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CERT, EXIT_GUARD = 0, 1, 2, 3, 4

TABLE_KINDS = ("c", "marginal", "d", "h", "a", "atilde")
ALGEBRA_LIMIT = 8
SUITES = ("integrality", "multiplicativity", "matchings", "fh", "reconstruct", "cumulants", "all")


class UsageError(Exception):
    pass


def _partition(text: str):
    try:
        return from_str(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matchjack", description="Connection coefficients of Jack polynomials.")
    p.add_argument("--cache-dir", help="directory for cached Jack expansions")
    p.add_argument("--no-cache", action="store_true", help="do not read or write the disk cache")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeff", help="one coefficient c^lambda_{mu,nu}")
    c.add_argument("--lambda", dest="lam", type=_partition, required=True)
    c.add_argument("--mu", type=_partition, required=True)
    c.add_argument("--nu", type=_partition, required=True)
    c.add_argument("--at", type=int, help="evaluate at this integer value of b")
    c.add_argument("--kind", choices=("c", "d", "h"), default="c")

    t = sub.add_parser("table", help="a full table at size n")
    t.add_argument("--n", type=_positive, required=True)
    t.add_argument("--kind", choices=TABLE_KINDS, default="c")
    t.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    t.add_argument("--output", "-o", help="write to this file instead of stdout")
    t.add_argument("--limit", type=int, help="override the size guard")

    f = sub.add_parser("fh", help="transition matrices of the graded Farahat-Higman algebra")
    f.add_argument("--kind", choices=("U", "L", "M", "N", "Q"), required=True)
    f.add_argument("--r", type=_positive, required=True)
    f.add_argument("--i", type=_positive, help="south-east block index (M only)")
    f.add_argument("--format", choices=("text", "json", "latex"), default="text")

    v = sub.add_parser("verify", help="run an invariant suite and print a JSON report")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--n", type=_positive, default=4)
    v.add_argument("--r", type=_positive, help="degree for the fh suite (default n)")

    r = sub.add_parser("reconstruct", help="rebuild the c table from marginal sums")
    src = r.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=_positive, help="use marginals computed from Jack polynomials")
    src.add_argument("--marginals", help="JSON file of marginal sums")
    r.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    return p


# -- commands ----------------------------------------------------------------


def cmd_coeff(args, out) -> int:
    from .connection import c_coeff, cumulant_d, h_coeff

    sizes = {sum(args.lam), sum(args.mu), sum(args.nu)}
    if len(sizes) != 1:
        raise UsageError(f"partitions of different sizes: {sorted(sizes)}")
    if args.kind == "c":
        v = c_coeff(args.lam, args.mu, args.nu)
    elif args.kind == "d":
        v = cumulant_d(args.lam, args.mu, args.nu)
    else:
        v = h_coeff(args.lam, args.mu, args.nu)[0]
    if args.at is not None:
        print(v(args.at), file=out)
    else:
        from .formats import poly_to_list

        print(v, file=out)
        print("coeffs:", json.dumps(poly_to_list(v)), file=out)
    return EXIT_OK


def _check_guard(n: int, limit: int):
    if n > limit:
        raise GuardExceeded(f"n={n} exceeds the size guard {limit} (use --limit)")


def compute_table(n: int, kind: str, limit: int | None = None) -> dict:
    from . import connection, matchings

    if kind in ("a", "atilde"):
        tables = matchings.count_tables(n, kind == "atilde", limit)
        parts = all_partitions(n)
        return {(lam, mu, nu): tables[lam][mu, nu] for lam, mu, nu in product(parts, repeat=3)}
    _check_guard(n, ALGEBRA_LIMIT if limit is None else limit)
    if kind == "c":
        return connection.c_table(n)
    if kind == "marginal":
        return connection.marginal_table(n)
    parts = all_partitions(n)
    if kind == "d":
        return {k: connection.cumulant_d(*k) for k in product(parts, repeat=3)}
    if kind == "h":
        return {k: connection.h_coeff(*k)[0] for k in product(parts, repeat=3)}
    raise UsageError(f"unknown table kind {kind!r}")


def cmd_table(args, out) -> int:
    from .formats import emit

    text = emit(args.n, args.kind, compute_table(args.n, args.kind, args.limit), args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_fh(args, out) -> int:
    from . import fh

    if args.i is not None and args.kind != "M":
        raise UsageError("--i only applies to --kind M")
    if args.kind == "M" and args.i is not None:
        if args.i > args.r:
            raise UsageError(f"--i must be at most --r ({args.r})")
        m = fh.matrix_M_sub(args.r, args.i)
    else:
        m = {"U": fh.matrix_U, "L": fh.matrix_L, "M": fh.matrix_M, "N": fh.matrix_N, "Q": fh.matrix_Q}[args.kind](args.r)
    text = {"text": m.to_text, "json": m.to_json, "latex": m.to_latex}[args.format]()
    out.write(text.rstrip("\n") + "\n")
    return EXIT_OK


def run_suite(suite: str, n: int, r: int | None = None) -> list[Report]:
    from . import connection, fh, matchings, reconstruct

    r = n if r is None else r
    reports = []
    if suite in ("integrality", "all"):
        reports.append(connection.check_integrality(n))
        reports.append(connection.check_marginals(n))
        rows = Report(f"row sums n={n}")
        for lam, nu in product(all_partitions(n), repeat=2):
            rows.check(connection.check_row_sum(lam, nu), (lam, nu))
        reports.append(rows)
    if suite in ("multiplicativity", "all"):
        reports.append(connection.check_multiplicativity(n))
    if suite in ("matchings", "all"):
        reports.append(matchings.verify_b01(n))
        reports.append(matchings.verify_comb_multiplicativity(n))
    if suite in ("fh", "all"):
        for k in range(1, r + 1):
            reports.append(fh.check_matrices(k))
    if suite in ("reconstruct", "all"):
        rep = Report(f"reconstruction n={n}")
        rep.check(reconstruct.reconstruct_all(n) == connection.c_table(n), "round trip")
        reports.append(rep)
    if suite in ("cumulants", "all"):
        reports.append(connection.check_cumulants(n))
    return reports


def cmd_verify(args, out) -> int:
    reports = run_suite(args.suite, args.n, args.r)
    ok = all(rep.passed for rep in reports)
    doc = {"suite": args.suite, "status": "pass" if ok else "fail", "checks": [rep.to_dict() for rep in reports]}
    out.write(json.dumps(doc, indent=1, default=str) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_reconstruct(args, out) -> int:
    from .formats import emit, load_marginals
    from .reconstruct import reconstruct_all

    if args.marginals:
        try:
            n, marg = load_marginals(Path(args.marginals).read_text())
        except OSError as exc:
            raise UsageError(str(exc)) from None
    else:
        n, marg = args.n, None
    out.write(emit(n, "c", reconstruct_all(n, marg), args.format))
    return EXIT_OK


COMMANDS = {
    "coeff": cmd_coeff,
    "table": cmd_table,
    "fh": cmd_fh,
    "verify": cmd_verify,
    "reconstruct": cmd_reconstruct,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    cache.configure(args.cache_dir, enabled=not args.no_cache)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"matchjack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CertificationError, ReconstructionError) as exc:
        print(f"matchjack: certification failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    except GuardExceeded as exc:
        print(f"matchjack: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(f"matchjack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
