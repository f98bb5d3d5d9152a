"""Command-line entry point: ``backcalc queens ...`` and ``backcalc lawcheck ...``.

Exit codes: 0 success, 1 law failure or naive/derived mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from backcalc.laws import LAW_IDS, FuzzConfig, LawReport, run_suite
from backcalc.queens import expansion_count, solutions


def _uint(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _u64(text: str) -> int:
    value = _uint(text)
    if value >= 2**64:
        raise argparse.ArgumentTypeError(f"seed does not fit in 64 bits: {value}")
    return value


def _positive(text: str) -> int:
    value = _uint(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="backcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("queens", help="solve n-queens with the naive or derived program")
    q.add_argument("--n", type=_uint, required=True)
    q.add_argument("--mode", choices=("naive", "derived", "both"), required=True)
    q.add_argument("--count-only", action="store_true")
    q.add_argument("--stats", action="store_true", help="report selector expansions per variant")
    q.add_argument("--json", action="store_true")

    lc = sub.add_parser("lawcheck", help="check the law catalogue on random programs")
    which = lc.add_mutually_exclusive_group(required=True)
    which.add_argument("--all", action="store_true")
    which.add_argument("--law", action="append", metavar="ID")
    lc.add_argument("--cases", type=_uint, default=500)
    lc.add_argument("--seed", type=_u64, default=0)
    lc.add_argument("--depth", type=_positive, default=4)
    lc.add_argument("--json", action="store_true")
    return parser


def cmd_queens(n: int, mode: str, count_only: bool, stats: bool, as_json: bool) -> tuple[int, str]:
    variants = ("naive", "derived") if mode == "both" else (mode,)
    found = {v: solutions(n, v) for v in variants}
    sols = found[variants[-1]]
    match = all(found[v] == sols for v in variants)
    expansions = {v: expansion_count(n, v) for v in variants} if stats else None

    if as_json:
        payload = {
            "n": n,
            "mode": mode,
            "count": len(sols),
            "solutions": [list(s) for s in sols],
            "expansions": expansions,
        }
        if mode == "both":
            payload["match"] = match
        return (0 if match else 1), json.dumps(payload, sort_keys=True)

    lines = []
    if count_only:
        lines.append(str(len(sols)))
    else:
        lines.extend(" ".join(map(str, s)) for s in sols)
    if expansions is not None:
        lines.extend(f"expansions {v} {c}" for v, c in expansions.items())
    if mode == "both":
        lines.append("match" if match else "mismatch")
    return (0 if match else 1), "\n".join(lines)


def cmd_lawcheck(
    law_ids: Sequence[str] | None, cases: int, seed: int, depth: int, as_json: bool
) -> tuple[int, str]:
    unknown = [i for i in law_ids or () if i not in LAW_IDS]
    if unknown:
        return 2, f"unknown law id(s): {', '.join(unknown)}; known: {', '.join(LAW_IDS)}"
    cfg = FuzzConfig(max_depth=depth, cases=cases, seed=seed)
    reports = run_suite(cfg, law_ids)
    status = 0 if all(r.passed for r in reports) else 1
    if as_json:
        return status, "\n".join(json.dumps(_report_json(r), sort_keys=True) for r in reports)
    lines = []
    for r in reports:
        if r.note:
            lines.append(f"# {r.law_id}: {r.note}")
        lines.append(f"{r.law_id} {r.cases_run} {'PASS' if r.passed else 'FAIL'}")
        for i, cx in enumerate(r.failures):
            lines.append(f"  counterexample {i + 1} of {r.failed_cases} failing cases:")
            lines.extend("  " + line for line in cx.lines())
    return status, "\n".join(lines)


def _report_json(r: LawReport) -> dict:
    out = {
        "id": r.law_id,
        "cases": r.cases_run,
        "failed_cases": r.failed_cases,
        "failures": [cx.to_json() for cx in r.failures],
    }
    if r.note:
        out["note"] = r.note
    return out


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "queens":
        status, text = cmd_queens(args.n, args.mode, args.count_only, args.stats, args.json)
    else:
        ids = None if args.all else args.law
        status, text = cmd_lawcheck(ids, args.cases, args.seed, args.depth, args.json)
    stream = sys.stderr if status == 2 else sys.stdout
    if text:
        print(text, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
