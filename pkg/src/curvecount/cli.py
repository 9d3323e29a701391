"""Command-line frontend.

    curvecount compute --genus 2 --degree 5
    curvecount table --max-degree 10 --format csv
    curvecount verify --max-degree 15
    curvecount breakdown --degree 4 --format json

Exit status: 0 on success, 1 if a check or internal invariant fails, 2 on
usage errors. ``--cache PATH`` (default: ``$CURVECOUNT_CACHE``) persists
computed values between runs without changing any output.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .cache import CacheFormatError, CountCache, load_cache, save_cache
from .exact import CountingError
from .genus_two import breakdown, n_genus_two, tacnodal_count
from .rational import n_rational
from .verification import run_suite

FORMATS = ("plain", "csv", "json")
TABLE_COLUMNS = ("d", "N_d", "N_2_d", "T_d")
CACHE_ENV = "CURVECOUNT_CACHE"


@dataclass
class CliConfig:
    command: str
    genus: int | None = None
    degree: int | None = None
    max_degree: int | None = None
    format: str = "plain"
    cache_path: Path | None = None


def _positive_int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvecount", description="Exact counts of rational and genus-two plane curves."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cache(p):
        p.add_argument("--cache", type=Path, default=None, help=f"cache file (default ${CACHE_ENV})")

    p = sub.add_parser("compute", help="print a single count")
    p.add_argument("--genus", type=int, choices=(0, 2), required=True)
    p.add_argument("--degree", type=_positive_int, required=True)
    add_cache(p)

    p = sub.add_parser("table", help="rows d, N_d, N_2_d, T_d for d = 1..max-degree")
    p.add_argument("--max-degree", type=_positive_int, required=True)
    p.add_argument("--format", choices=FORMATS, default="plain")
    add_cache(p)

    p = sub.add_parser("verify", help="run the invariant suite and print a JSON report")
    p.add_argument("--max-degree", type=_positive_int, required=True)
    add_cache(p)

    p = sub.add_parser("breakdown", help="N_2_d split into its stratum contributions")
    p.add_argument("--degree", type=_positive_int, required=True)
    p.add_argument("--format", choices=FORMATS, default="plain")
    add_cache(p)
    return parser


def parse_config(argv: list[str] | None = None) -> CliConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.max_degree < 7:
        parser.error("verify needs --max-degree >= 7 so the published table is covered")
    cache_path = args.cache
    if cache_path is None and os.environ.get(CACHE_ENV):
        cache_path = Path(os.environ[CACHE_ENV])
    return CliConfig(
        command=args.command,
        genus=getattr(args, "genus", None),
        degree=getattr(args, "degree", None),
        max_degree=getattr(args, "max_degree", None),
        format=getattr(args, "format", "plain"),
        cache_path=cache_path,
    )


def render_table(rows: list[tuple[int, int, int, int]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        objs = [{col: str(v) for col, v in zip(TABLE_COLUMNS, row)} for row in rows]
        return json.dumps(objs, indent=2) + "\n"
    cells = [TABLE_COLUMNS] + [tuple(str(v) for v in row) for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(TABLE_COLUMNS))]
    return "".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n" for r in cells)


def cmd_compute(config: CliConfig, cache: CountCache) -> tuple[int, str]:
    if config.genus == 0:
        value = n_rational(config.degree, cache)
    else:
        value = n_genus_two(config.degree, cache)
    return 0, f"{value}\n"


def cmd_table(config: CliConfig, cache: CountCache) -> tuple[int, str]:
    rows = [
        (d, n_rational(d, cache), n_genus_two(d, cache), tacnodal_count(d, cache))
        for d in range(1, config.max_degree + 1)
    ]
    return 0, render_table(rows, config.format)


def cmd_verify(config: CliConfig, cache: CountCache) -> tuple[int, str]:
    report = run_suite(config.max_degree, cache=cache)
    return (0 if report.passed else 1), report.to_json() + "\n"


def cmd_breakdown(config: CliConfig, cache: CountCache) -> tuple[int, str]:
    fields = breakdown(config.degree, cache).as_strings()
    if config.format == "json":
        return 0, json.dumps(fields, indent=2) + "\n"
    if config.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields.keys())
        writer.writerow(fields.values())
        return 0, buf.getvalue()
    return 0, "".join(f"{k}: {v}\n" for k, v in fields.items())


COMMANDS = {
    "compute": cmd_compute,
    "table": cmd_table,
    "verify": cmd_verify,
    "breakdown": cmd_breakdown,
}


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    cache = CountCache()
    if config.cache_path is not None and config.cache_path.exists():
        try:
            cache = load_cache(config.cache_path)
        except CacheFormatError as exc:
            print(f"curvecount: bad cache file {config.cache_path}: {exc}", file=sys.stderr)
            return 2

    try:
        status, output = COMMANDS[config.command](config, cache)
    except CountingError as exc:
        print(f"curvecount: internal invariant violated: {exc}", file=sys.stderr)
        return 1

    sys.stdout.write(output)
    if config.cache_path is not None:
        save_cache(config.cache_path, cache)
    return status


if __name__ == "__main__":
    sys.exit(main())
