"""Command line interface.

Subcommands:

    count   polynomial for one module and dimension vector
    table   grid of polynomials over every dimension vector
    verify  compare the engine against brute-force enumeration over F_p
    hall    classical Hall polynomial for a partition triple
    homext  morphism/extension space dimensions between two modules

Output formats: text (default), json, csv.  Exit codes: 0 success, 1
runtime error (including unrealizable verification requests), 2 parse
error, 3 evaluation point is not a prime power (result still printed),
4 verification mismatch.  Errors go to stderr only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .engine import CountingEngine
from .hall import hall_polynomial
from .model import (
    ModuleParseError,
    Partition,
    ext_dim,
    hom_dim,
    parse_module,
)
from .oracle import build_rep, submodule_table

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_BAD_POINT = 3
EXIT_MISMATCH = 4


class InputError(ValueError):
    """User-supplied text failed to parse (exit code 2)."""


def _parse_input(fn, *args):
    try:
        return fn(*args)
    except ModuleParseError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, n + 1):
        if p * p > n:
            return True  # n itself is prime
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return False


def _emit(records: list[dict], fields: list[str], fmt: str, title: str | None = None):
    """Render records as text columns, a json document, or csv."""
    if fmt == "json":
        doc = {"records": records} if title is None else {"kind": title, "records": records}
        print(json.dumps(doc, sort_keys=True))
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore")
        writer.writeheader()
        for rec in records:
            writer.writerow({k: rec.get(k, "") for k in fields})
        sys.stdout.write(buf.getvalue())
        return
    widths = [max(len(str(f)), max((len(str(r.get(f, ""))) for r in records), default=0)) for f in fields]
    print("  ".join(f.ljust(w) for f, w in zip(fields, widths)).rstrip())
    for rec in records:
        print("  ".join(str(rec.get(f, "")).ljust(w) for f, w in zip(fields, widths)).rstrip())


def _parse_dim(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"dimension must be 'a,b', got {text!r}")
    return int(parts[0]), int(parts[1])


def cmd_count(args) -> int:
    module = _parse_input(parse_module, args.module)
    a, b = _parse_input(_parse_dim, args.dim)
    engine = CountingEngine(memoize=not args.no_cache)
    poly = engine.count(module, a, b)
    record = {"module": str(module), "a": a, "b": b, "polynomial": poly.to_string()}
    fields = ["module", "a", "b", "polynomial"]
    status = EXIT_OK
    if args.at is not None:
        value = poly.eval_at(Fraction(args.at))
        record["at"] = args.at
        record["value"] = str(value) if value.denominator != 1 else value.numerator
        fields += ["at", "value"]
        if not _is_prime_power(args.at):
            print(
                f"warning: {args.at} is not a prime power >= 2; "
                "the value does not count anything",
                file=sys.stderr,
            )
            status = EXIT_BAD_POINT
    if args.euler:
        record["euler"] = poly.eval_integer(1)
        fields.append("euler")
    if args.format == "text":
        line = record["polynomial"]
        if "value" in record:
            line += f"\nat q={record['at']}: {record['value']}"
        if "euler" in record:
            line += f"\neuler characteristic: {record['euler']}"
        print(line)
    else:
        _emit([record], fields, args.format, title="count")
    return status


def cmd_table(args) -> int:
    module = _parse_input(parse_module, args.module)
    m, n = module.dim_vector()
    engine = CountingEngine(memoize=not args.no_cache)
    cells = [
        {"a": a, "b": b, "polynomial": engine.count(module, a, b).to_string()}
        for a in range(m + 1)
        for b in range(n + 1)
    ]
    if args.format == "json":
        print(
            json.dumps(
                {"kind": "table", "module": str(module), "dim": [m, n], "cells": cells},
                sort_keys=True,
            )
        )
    elif args.format == "csv":
        for cell in cells:
            cell["module"] = str(module)
        _emit(cells, ["module", "a", "b", "polynomial"], "csv")
    else:
        width = max(len(c["polynomial"]) for c in cells)
        print(f"# {module}   rows a = 0..{m}, columns b = 0..{n}")
        grid = {(c["a"], c["b"]): c["polynomial"] for c in cells}
        for a in range(m + 1):
            print("  ".join(grid[(a, b)].ljust(width) for b in range(n + 1)).rstrip())
    return EXIT_OK


def cmd_verify(args) -> int:
    module = _parse_input(parse_module, args.module)
    engine = CountingEngine(memoize=not args.no_cache)
    rep = build_rep(module, args.prime)
    table = submodule_table(rep)
    if args.dim is not None:
        a, b = _parse_input(_parse_dim, args.dim)
        table = {(a, b): table.get((a, b), 0)}
    records = []
    mismatches = 0
    for (a, b), expected in sorted(table.items()):
        got = engine.count(module, a, b).eval_integer(args.prime)
        ok = got == expected
        mismatches += not ok
        records.append(
            {
                "module": str(module),
                "p": args.prime,
                "a": a,
                "b": b,
                "engine": got,
                "oracle": expected,
                "match": ok,
            }
        )
    _emit(
        records,
        ["module", "p", "a", "b", "engine", "oracle", "match"],
        args.format,
        title="verify",
    )
    if mismatches:
        print(f"{mismatches} mismatching cells", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_hall(args) -> int:
    lam = _parse_input(Partition.parse, args.lam)
    mu = _parse_input(Partition.parse, args.mu)
    nu = _parse_input(Partition.parse, args.nu)
    poly = hall_polynomial(lam, nu, mu)
    if args.format == "text":
        print(poly.to_string("x"))
    else:
        record = {
            "lambda": list(lam.parts),
            "mu": list(mu.parts),
            "nu": list(nu.parts),
            "polynomial": poly.to_string("x"),
        }
        if args.format == "json":
            print(json.dumps({"kind": "hall", "records": [record]}, sort_keys=True))
        else:
            record = {
                "lambda": ",".join(map(str, lam.parts)),
                "mu": ",".join(map(str, mu.parts)),
                "nu": ",".join(map(str, nu.parts)),
                "polynomial": poly.to_string("x"),
            }
            _emit([record], ["lambda", "mu", "nu", "polynomial"], "csv")
    return EXIT_OK


def cmd_homext(args) -> int:
    x = _parse_input(parse_module, args.x)
    y = _parse_input(parse_module, args.y)
    record = {
        "x": str(x),
        "y": str(y),
        "hom": hom_dim(x, y),
        "ext": ext_dim(x, y),
    }
    if args.format == "text":
        print(f"hom = {record['hom']}")
        print(f"ext = {record['ext']}")
    elif args.format == "json":
        print(json.dumps({"kind": "homext", "records": [record]}, sort_keys=True))
    else:
        _emit([record], ["x", "y", "hom", "ext"], "csv")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kronq",
        description="Submodule counts of Kronecker modules over finite fields, "
        "as exact polynomials in q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, module=True):
        if module:
            p.add_argument("-m", "--module", required=True, help="module descriptor")
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default="text"
        )
        p.add_argument(
            "--no-cache", action="store_true", help="disable memoization"
        )

    p = sub.add_parser("count", help="count submodules of one dimension vector")
    common(p)
    p.add_argument("-d", "--dim", required=True, help="dimension vector 'a,b'")
    p.add_argument("--at", type=int, help="also evaluate at this field size")
    p.add_argument("--euler", action="store_true", help="also evaluate at q=1")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="grid of counts over all dimension vectors")
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="compare engine with brute force over F_p")
    common(p)
    p.add_argument("-p", "--prime", type=int, required=True, choices=(2, 3, 5))
    p.add_argument("-d", "--dim", help="single dimension vector 'a,b'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hall", help="classical Hall polynomial")
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,1")
    p.add_argument("--mu", required=True, help="subgroup type")
    p.add_argument("--nu", required=True, help="quotient type")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_hall)

    p = sub.add_parser("homext", help="hom/ext dimensions between two modules")
    p.add_argument("-x", required=True, help="first module descriptor")
    p.add_argument("-y", required=True, help="second module descriptor")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_homext)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ModuleParseError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
