"""``charforge`` command line.

Exit codes: 0 success, 1 a verified identity failed, 2 invalid input,
3 a size bound was exceeded.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import verify
from .characters import MAX_N, character_table, chi_gj, chi_mn, chi_oracle, immanant
from .partitions import Partition, Permutation
from .polyring import GenericMatrix, Monomial, a
from .symfun import is_balanced, schur_jt

ORACLE_MAX_N = 7

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3

_FACTOR = re.compile(r"a\[(\d+),(\d+)\](?:\^(\d+))?")


class InputError(Exception):
    pass


class BoundError(Exception):
    pass


def parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_monomial(text: str, m: int) -> Monomial:
    """Read ``a[i,j]^e*a[k,l]*...`` with 1 <= i, j <= m."""
    exps: dict = {}
    text = text.replace(" ", "")
    if not text:
        raise InputError("empty monomial")
    for factor in text.split("*"):
        match = _FACTOR.fullmatch(factor)
        if not match:
            raise InputError(f"bad monomial factor {factor!r}")
        i, j = int(match[1]), int(match[2])
        e = int(match[3]) if match[3] else 1
        if not (1 <= i <= m and 1 <= j <= m):
            raise InputError(f"a[{i},{j}] is outside a {m} x {m} matrix")
        if e < 1:
            raise InputError(f"exponent must be positive in {factor!r}")
        v = a(i, j)
        exps[v] = exps.get(v, 0) + e
    return Monomial(exps)


def read_matrix(path: str) -> list[list[int]]:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read matrix file: {exc}") from None
    try:
        m = doc["m"]
        entries = doc["entries"]
    except (TypeError, KeyError):
        raise InputError('matrix file needs "m" and "entries"') from None
    if not isinstance(m, int) or m < 1:
        raise InputError('"m" must be a positive integer')
    if len(entries) != m or any(not isinstance(row, list) or len(row) != m for row in entries):
        raise InputError(f'"entries" must be {m} rows of {m} values')
    rows = []
    for row in entries:
        parsed = []
        for x in row:
            if isinstance(x, bool) or not isinstance(x, (str, int)):
                raise InputError(f"entry {x!r} is not an integer string")
            try:
                parsed.append(int(x))
            except ValueError:
                raise InputError(f"entry {x!r} is not an integer string") from None
        rows.append(parsed)
    return rows


def cmd_char(args, out) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    if lam.n != mu.n:
        raise InputError(f"size mismatch: |{lam}| = {lam.n}, |{mu}| = {mu.n}")
    if args.method == "mn":
        value = chi_mn(lam, mu)
    elif args.method == "gj":
        value = chi_gj(lam, mu)
    else:
        if lam.n > ORACLE_MAX_N:
            raise BoundError(f"oracle method is limited to n <= {ORACLE_MAX_N}")
        value = chi_oracle(lam, Permutation.from_cycle_type(mu))
    print(value, file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    if not 1 <= args.n <= MAX_N:
        raise InputError(f"n must be in 1..{MAX_N}")
    table = character_table(args.n)
    labels = [str(p) for p in table.labels]
    if args.format == "json":
        doc = {
            "n": table.n,
            "columns": labels,
            "rows": [
                {"lambda": label, "values": values}
                for label, values in zip(labels, table.matrix())
            ],
        }
        print(json.dumps(doc), file=out)
    else:
        print("\t".join([""] + labels), file=out)
        for label, values in zip(labels, table.matrix()):
            print("\t".join([label] + [str(v) for v in values]), file=out)
    return EXIT_OK


def cmd_immanant(args, out) -> int:
    lam = parse_partition(args.lam)
    rows = read_matrix(args.matrix)
    if lam.n != len(rows):
        raise InputError(f"size mismatch: |{lam}| = {lam.n} but matrix is {len(rows)} x {len(rows)}")
    if lam.n > MAX_N:
        raise BoundError(f"immanants are limited to n <= {MAX_N}")
    print(immanant(rows, lam), file=out)
    return EXIT_OK


def cmd_coeff(args, out) -> int:
    lam = parse_partition(args.lam)
    if args.m < 1:
        raise InputError("m must be positive")
    if args.m > MAX_N:
        raise BoundError(f"m is limited to {MAX_N}")
    mono = parse_monomial(args.monomial, args.m)
    if not is_balanced(mono):
        print("0", file=out)
        print("warning: monomial is not balanced, its coefficient is identically 0", file=sys.stderr)
        return EXIT_INPUT
    value = schur_jt(GenericMatrix.generic(args.m), lam, within=mono).coeff(mono)
    print(value, file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    suite, bound = verify.SUITES[args.suite]
    if not 1 <= args.n <= bound:
        raise InputError(f"suite {args.suite} takes n in 1..{bound}")
    failed = total = 0
    for label, ok, detail in suite(args.n):
        total += 1
        if ok:
            print(f"PASS {label}", file=out)
        else:
            failed += 1
            print(f"FAIL {label}: {detail}", file=out)
    if failed:
        print(f"FAIL ({failed} of {total} instances failed)", file=out)
        return EXIT_FAILED
    print(f"PASS ({total} instances, all identities hold)", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="charforge", description="Exact S_n characters and immanants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", help="one character value chi^lambda(mu)")
    p.add_argument("--lambda", dest="lam", required=True, help="e.g. 2,2,2,1")
    p.add_argument("--mu", required=True, help="conjugacy class, e.g. 3,2,2")
    p.add_argument("--method", choices=["mn", "gj", "oracle"], default="mn")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("table", help="full character table of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("immanant", help="immanant of an integer matrix")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--matrix", required=True, help='JSON file {"m": 3, "entries": [["1", ...], ...]}')
    p.set_defaults(func=cmd_immanant)

    p = sub.add_parser("coeff", help="coefficient of a monomial in s_lambda of a generic matrix")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--monomial", required=True, help="e.g. a[1,2]*a[2,1]^2")
    p.add_argument("--m", type=int, required=True, help="matrix size")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("verify", help="check a family of identities")
    p.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
