"""Command-line entry point: ``reedcheck {check,expansion-suite,replay,list-checks}``."""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext
from pathlib import Path

from .expansions import ExpansionSpec
from .graph import DEFAULT_VERTEX_CAP, GraphError
from .patterns import UnknownPatternError, parse_class_list, pattern
from .registry import CHECKS, UnknownCheckError, resolve_checks
from .replay import replay
from .runner import EXIT_FAIL, EXIT_FATAL, EXIT_OK, RunConfig, Summary, dumps, run_corpus, run_expansion_suite


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reedcheck", description="Exhaustive and randomized checks of Reed's conjecture and related claims.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run registry checks over a graph6 corpus")
    check.add_argument("--input", required=True, help="graph6 file, or - for stdin")
    check.add_argument("--classes", default="", help='forbidden-subgraph classes, e.g. "P5,coP5;C4,P5"')
    check.add_argument("--checks", default="all", help="comma list of check ids, or all")
    check.add_argument("--report", required=True, help="JSONL report path")
    check.add_argument("--config", help="key=value file with max_hole_len, vertex_cap, time_budget_ms, seed, parallelism")
    check.add_argument("--max-hole-len", type=int)
    check.add_argument("--vertex-cap", type=int)
    check.add_argument("--budget-ms", type=int)
    check.add_argument("--seed", type=int)
    check.add_argument("--jobs", type=int)

    suite = sub.add_parser("expansion-suite", help="closed-form chromatic number of odd-hole expansions against the exact solver")
    suite.add_argument("--lengths", type=_int_list, default=(5, 7))
    suite.add_argument("--max-chi", type=_int_list, default=(3, 2), help="one value, or one per length")
    suite.add_argument("--random", type=int, default=0, help="number of random expansions to check as well")
    suite.add_argument("--seed", type=int, default=0)
    suite.add_argument("--vector", type=_int_list, help="single chi vector around an odd hole")
    suite.add_argument("--spec", help="expansion spec file (base and components as edge lists)")
    suite.add_argument("--budget-ms", type=int)
    suite.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP)

    rp = sub.add_parser("replay", help="independently re-verify every fail witness in a report")
    rp.add_argument("--report", required=True)
    rp.add_argument("--input", required=True)

    sub.add_parser("list-checks", help="show the check registry")
    return parser


def cmd_check(args: argparse.Namespace) -> int:
    try:
        checks = resolve_checks(args.checks)
        classes = parse_class_list(args.classes) if args.classes.strip() else []
        for c in classes:
            for name in c.forbidden:
                pattern(name)
        config = RunConfig.from_file(args.config) if args.config else RunConfig()
    except (UnknownCheckError, UnknownPatternError, ValueError, OSError) as exc:
        print(f"reedcheck: {exc}", file=sys.stderr)
        return EXIT_FATAL
    config = config.merged(
        max_hole_len=args.max_hole_len,
        vertex_cap=args.vertex_cap,
        time_budget_ms=args.budget_ms,
        seed=args.seed,
        parallelism=args.jobs,
    )
    try:
        source = sys.stdin if args.input == "-" else open(args.input)
    except OSError as exc:
        print(f"reedcheck: {exc}", file=sys.stderr)
        return EXIT_FATAL
    summary = Summary()
    with source if args.input != "-" else nullcontext(source), open(args.report, "w") as report:
        for item in run_corpus(source, classes, checks, config):
            if isinstance(item, Summary):
                summary = item
            else:
                report.write(dumps(item) + "\n")
    print(json.dumps(summary.as_dict(), indent=2))
    return summary.exit_code()


def cmd_expansion_suite(args: argparse.Namespace) -> int:
    spec = None
    try:
        if args.spec:
            spec = ExpansionSpec.parse(Path(args.spec).read_text(), cap=args.vertex_cap)
        result = run_expansion_suite(
            lengths=args.lengths,
            max_chis=args.max_chi,
            random_count=args.random,
            seed=args.seed,
            vector=args.vector,
            spec=spec,
            budget_ms=args.budget_ms,
        )
    except (GraphError, ValueError, OSError) as exc:
        print(f"reedcheck: {exc}", file=sys.stderr)
        return EXIT_FATAL
    print(json.dumps(result, indent=2))
    return EXIT_OK if result["ok"] else EXIT_FAIL


def cmd_replay(args: argparse.Namespace) -> int:
    try:
        with open(args.report) as rep, open(args.input) as inp:
            rows, ok = replay(rep, inp)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"reedcheck: {exc}", file=sys.stderr)
        return EXIT_FATAL
    for row in rows:
        print(dumps(row))
    print(json.dumps({"failures": len(rows), "reproduced": sum(r["reproduced"] for r in rows), "ok": ok}))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_list_checks(args: argparse.Namespace) -> int:
    for c in CHECKS.values():
        flags = []
        if not c.executable:
            flags.append("not executable")
        elif not c.in_all:
            flags.append("explicit only")
        tail = f"  [{', '.join(flags)}]" if flags else ""
        print(f"{c.id:24} {c.hypothesis}{tail}")
        if c.note:
            print(f"{'':24} note: {c.note}")
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "expansion-suite": cmd_expansion_suite,
    "replay": cmd_replay,
    "list-checks": cmd_list_checks,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
