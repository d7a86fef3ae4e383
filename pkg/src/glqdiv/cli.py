"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage, 3 I/O error,
4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from glqdiv import chardeg, glq, statistics, verify
from glqdiv.errors import IntegralityError
from glqdiv.statistics import ProportionReport, SweepConfig

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_IO, EXIT_INTERNAL = 0, 1, 2, 3, 4

CSV_HEADER = ["kind", "n", "q", "d", "n0", "numerator", "denominator", "decimal"]


class UsageError(ValueError):
    pass


def parse_int_list(values: Sequence[str]) -> list[int]:
    """Parse ``["2,3", "5..7"]`` style values into ``[2, 3, 5, 6, 7]``."""
    out: list[int] = []
    for value in values:
        for token in value.split(","):
            token = token.strip()
            if not token:
                continue
            try:
                if ".." in token:
                    lo, hi = token.split("..", 1)
                    out.extend(range(int(lo), int(hi) + 1))
                else:
                    out.append(int(token))
            except ValueError:
                raise UsageError(f"not an integer or range: {token!r}") from None
    return out


def read_config(path: str) -> dict[str, list[str]]:
    """Flat ``key=value`` file; repeated keys accumulate into lists."""
    out: dict[str, list[str]] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        out.setdefault(key, []).append(value)
    return out


def build_config(args: argparse.Namespace) -> SweepConfig:
    raw: dict[str, list[str]] = {}
    if args.config:
        raw = read_config(args.config)
    known = {"q", "d", "n", "n0", "kind", "format", "out"}
    unknown = set(raw) - known
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")

    def pick(flag, key):
        return flag if flag else raw.get(key, [])

    kinds = [k for v in pick(args.kind, "kind") for k in v.split(",") if k]
    fmt = args.format or (raw.get("format") or ["csv"])[-1]
    out = args.out or (raw.get("out") or [None])[-1]
    config = SweepConfig(
        q_list=parse_int_list(pick(args.q, "q")),
        d_list=parse_int_list(pick(args.d, "d")),
        n_range=parse_int_list(pick(args.n, "n")),
        n0_list=parse_int_list(pick(args.n0, "n0")) or [1],
        kinds=kinds or [statistics.HELMET_CERTIFIED],
        output_format=fmt,
        output_path=out,
    )
    if not config.q_list:
        raise UsageError("no q values given")
    if not config.d_list and any(k != statistics.P_DIVISIBLE for k in config.kinds):
        raise UsageError("no d values given")
    try:
        config.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return config


def emit_csv(rows: Sequence[ProportionReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([r.kind, r.n, r.q, r.d, "" if r.n0 is None else r.n0,
                         r.numerator, r.denominator, r.decimal()])
    return buf.getvalue()


def parse_csv(text: str) -> list[ProportionReport]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_HEADER:
        raise ValueError(f"unexpected header {reader.fieldnames}")
    return [
        ProportionReport(
            kind=row["kind"],
            n=int(row["n"]),
            q=int(row["q"]),
            d=int(row["d"]),
            n0=int(row["n0"]) if row["n0"] else None,
            numerator=int(row["numerator"]),
            denominator=int(row["denominator"]),
        )
        for row in reader
    ]


def emit_json(rows: Sequence[ProportionReport], errors=()) -> str:
    payload = {
        "rows": [
            {"kind": r.kind, "n": r.n, "q": r.q, "d": r.d, "n0": r.n0,
             "numerator": str(r.numerator), "denominator": str(r.denominator),
             "decimal": r.decimal()}
            for r in rows
        ],
        "errors": [{"cell": list(cell), "error": msg} for cell, msg in errors],
    }
    return json.dumps(payload, indent=2) + "\n"


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_degrees(args: argparse.Namespace) -> int:
    n, q = args.n, args.q
    if n is None or q is None:
        raise UsageError("degrees needs --n and --q")
    if n < 0:
        raise UsageError("n must be nonnegative")
    try:
        glq.prime_power(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    records = []
    for mu in glq.enumerate_profiles(n, q):
        fac = chardeg.degree(mu, q)
        rec = {"profile": str(mu), "multiplicity": glq.profile_multiplicity(mu, q)}
        if args.factored:
            rec.update(a_mu=fac.a_mu, b_mu=fac.b_mu)
        rec["degree"] = fac.d_mu
        records.append(rec)

    if args.format == "json":
        text = json.dumps([{k: (v if isinstance(v, str) else str(v)) for k, v in r.items()}
                           for r in records], indent=2) + "\n"
    else:
        buf = io.StringIO()
        fields = ["profile", "multiplicity"] + (["a_mu", "b_mu"] if args.factored else []) + ["degree"]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        text = buf.getvalue()
    _write(text, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        counts = verify.run_suite(args.suite)
    except verify.VerificationFailure as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return EXIT_FAILED
    for name, count in counts.items():
        print(f"{name}: ok ({count} checks)")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    config = build_config(args)
    result = statistics.sweep(config)
    for cell, msg in result.errors:
        print(f"cell {cell}: {msg}", file=sys.stderr)
    if config.output_format == "json":
        text = emit_json(result.rows, result.errors)
    else:
        text = emit_csv(result.rows)
    _write(text, config.output_path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glqdiv", description="Character degree divisibility for GL(n, q).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degrees", help="list character degrees by degree profile")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--factored", action="store_true", help="also print a_mu and b_mu")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("verify", help="run internal consistency suites")
    p.add_argument("suite", choices=("partitions", "valuations", "degrees", "voltas", "all"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="exact divisibility proportions over a parameter grid")
    p.add_argument("--config", help="key=value file; repeated keys form lists")
    p.add_argument("--q", action="append", help="prime powers, e.g. 2,3 or 2..5")
    p.add_argument("--d", action="append")
    p.add_argument("--n", action="append", help="e.g. 1..8")
    p.add_argument("--n0", action="append")
    p.add_argument("--kind", action="append", help=", ".join(statistics.KINDS))
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (IntegralityError, ArithmeticError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
