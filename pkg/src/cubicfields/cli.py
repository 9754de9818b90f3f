"""Command-line entry point (``cubicfields``)."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .conductors import enumerate_conductors
from .errors import CubicFieldError, InvalidInputError
from .survey import classify_conductor, run_survey, stats
from .system_matrix import build_matrix, parse_offdiagonal, rank_f3
from .theorems import check_theorem_A, check_theorem_B, check_theorem_C, check_theorem_D

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

_CHECKS = {
    "a": check_theorem_A,
    "b": check_theorem_B,
    "c": check_theorem_C,
    "d": check_theorem_D,
}


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise InvalidInputError(f"not a comma-separated integer list: {text!r}") from exc


def cmd_enumerate(args: argparse.Namespace) -> int:
    out = sys.stdout
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(("conductor", "factors", "t", "m"))
        for c in enumerate_conductors(args.max, args.t):
            w.writerow((c.value, " ".join(map(str, c.factors)), c.t, c.m))
    else:
        for c in enumerate_conductors(args.max, args.t):
            out.write(
                json.dumps(
                    {"conductor": c.value, "factors": list(c.factors), "t": c.t, "m": c.m},
                    separators=(",", ":"),
                )
                + "\n"
            )
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    print(classify_conductor(args.c).to_json())
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise InvalidInputError("--jobs must be positive")
    summary = run_survey(
        args.max,
        t_filter=args.t,
        jobs=args.jobs,
        out=args.out if args.out else sys.stdout,
        tame_only=args.tame_only,
        resume=args.resume,
    )
    text = summary.to_csv()
    if args.summary:
        Path(args.summary).write_text(text, encoding="utf-8")
    elif args.out:
        Path(str(args.out) + ".summary.csv").write_text(text, encoding="utf-8")
    else:
        sys.stderr.write(text)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    sys.stdout.write(stats(args.max, jobs=args.jobs).to_csv())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    names = "abcd" if args.theorem == "all" else args.theorem
    ok = True
    for name in names:
        rep = _CHECKS[name]()
        print(rep.summary_line())
        ok = ok and rep.passed
    return EXIT_OK if ok else EXIT_FAIL


def cmd_matrix(args: argparse.Namespace) -> int:
    t, a = parse_offdiagonal(_int_list(args.a))
    v = _int_list(args.v)
    if len(v) != t:
        raise InvalidInputError(f"expected {t} valuations, got {len(v)}")
    if any(x % 3 == 0 for x in v):
        raise InvalidInputError("valuations must be nonzero mod 3")
    m = build_matrix(a, v, t)
    rep = rank_f3(m)
    for row in m.entries:
        print(" ".join(map(str, row)))
    print(f"r={rep.r} rho={rep.rho}" + (f" shape={rep.shape}" if rep.shape else ""))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicfields",
        description="Cubic residue graphs and 3-class ranks of cyclic cubic fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list conductors up to a bound")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="classify one conductor")
    p.add_argument("c", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("survey", help="classify all conductors up to a bound")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="JSONL output file (default: stdout)")
    p.add_argument("--summary", default=None, help="CSV summary file")
    p.add_argument("--tame-only", action="store_true")
    p.add_argument("--resume", action="store_true", help="continue an existing --out file")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("stats", help="summary statistics up to a bound")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="exhaustive theorem checks")
    p.add_argument("--theorem", choices=("a", "b", "c", "d", "all"), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("matrix", help="system matrix and rank for given exponents")
    p.add_argument("--a", required=True, help="off-diagonal exponents a12,a13,...,a43")
    p.add_argument("--v", required=True, help="valuations v1,...,vt")
    p.set_defaults(func=cmd_matrix)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CubicFieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
