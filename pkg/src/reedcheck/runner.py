"""Corpus runner and the expansion formula suite."""

from __future__ import annotations

import itertools
import json
import random
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields, replace
from functools import partial
from pathlib import Path

from .budget import BudgetExceeded
from .expansions import (
    ExpansionSpec,
    chi_odd_expansion,
    complete_realization,
    mixed_realization,
    odd_hole_spec,
    verify_expansion_reed,
)
from .graph import (
    DEFAULT_VERTEX_CAP,
    GRAPH6_HEADER,
    Graph,
    Graph6Error,
    GraphError,
    cycle_graph,
    from_graph6,
)
from .patterns import ClassExpr, is_class_member
from .registry import BUDGET, CHECKS, FAIL, VERDICTS, GraphContext, Outcome, run_named_check

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_FATAL = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    max_hole_len: int | None = None
    vertex_cap: int = DEFAULT_VERTEX_CAP
    time_budget_ms: int | None = None
    seed: int = 0
    parallelism: int = 1

    @classmethod
    def from_file(cls, path: str | Path) -> RunConfig:
        """Read ``key=value`` lines; ``#`` starts a comment."""
        known = {f.name for f in fields(cls)}
        values: dict = {}
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in known:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = None if value.lower() in ("", "none") else int(value)
        return cls(**values)

    def merged(self, **overrides) -> RunConfig:
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def iter_corpus(lines: Iterable[str]) -> Iterator[tuple[int, int, str]]:
    """(input_index, line_number, text) for each graph line."""
    index = 0
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text == GRAPH6_HEADER:
            continue
        yield index, lineno, text
        index += 1


def process_graph(item: tuple[int, int, str], *, classes: tuple[ClassExpr, ...], checks: tuple[str, ...], config: RunConfig) -> dict:
    index, lineno, text = item
    record: dict = {"input_index": index, "line": lineno, "graph6": text}
    try:
        g = from_graph6(text, cap=config.vertex_cap)
    except (Graph6Error, GraphError) as exc:
        record["error"] = {"type": type(exc).__name__, "offset": getattr(exc, "offset", None), "message": str(exc)}
        return record
    record["n"] = g.n
    record["m"] = g.m
    ctx = GraphContext(g, max_hole_len=config.max_hole_len, budget_ms=config.time_budget_ms, seed=config.seed)
    if g.n:
        try:
            record["invariants"] = ctx.record.as_dict()
        except BudgetExceeded:
            record["invariants"] = None
    else:
        record["invariants"] = None
    record["class_verdicts"] = {str(c): is_class_member(g, c).as_dict() for c in classes}
    record["checks"] = [run_named_check(cid, ctx).as_dict(cid) for cid in checks]
    return record


@dataclass
class Summary:
    graphs: int = 0
    decode_errors: int = 0
    counts: dict | None = None

    def exit_code(self) -> int:
        totals = {v: sum(c[v] for c in (self.counts or {}).values()) for v in VERDICTS}
        if totals[FAIL]:
            return EXIT_FAIL
        if totals[BUDGET]:
            return EXIT_BUDGET
        if self.decode_errors:
            return EXIT_FATAL
        return EXIT_OK

    def as_dict(self) -> dict:
        return {"graphs": self.graphs, "decode_errors": self.decode_errors, "checks": self.counts, "exit_code": self.exit_code()}


def run_corpus(lines: Iterable[str], classes: Iterable[ClassExpr], checks: Iterable[str], config: RunConfig = RunConfig()) -> Iterator[dict | Summary]:
    """Yield one report record per input graph, in input order, then a :class:`Summary`."""
    checks = tuple(checks)
    for cid in checks:
        if cid not in CHECKS or not CHECKS[cid].executable:
            raise KeyError(f"unknown or non-executable check {cid!r}")
    work = partial(process_graph, classes=tuple(classes), checks=checks, config=config)
    items = iter_corpus(lines)
    summary = Summary(counts={cid: {v: 0 for v in VERDICTS} for cid in checks})
    if config.parallelism > 1:
        pool = ProcessPoolExecutor(max_workers=config.parallelism)
        results = pool.map(work, items, chunksize=32)
    else:
        pool = None
        results = map(work, items)
    try:
        for record in results:
            summary.graphs += 1
            if "error" in record:
                summary.decode_errors += 1
            for c in record.get("checks", ()):
                summary.counts[c["id"]][c["verdict"]] += 1
            yield record
    finally:
        if pool is not None:
            pool.shutdown()
    yield summary


def dumps(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


# ---------------------------------------------------------------------------
# expansion suite


def _parse_vector(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(",") if t.strip())


def vector_sweep(length: int, max_chi: int, *, budget_ms: int | None = None) -> dict:
    """Closed form against exact chi for every vector in {1..max_chi}^length,
    realised with complete and with mixed components."""
    out = {"length": length, "max_chi": max_chi, "vectors": 0, "agree_complete": 0, "agree_mixed": 0, "reed_pass": 0, "disagreements": []}
    for chis in itertools.product(range(1, max_chi + 1), repeat=length):
        row = single_vector(chis, budget_ms=budget_ms)
        out["vectors"] += 1
        out["agree_complete"] += row["complete"]["formula"] == "pass"
        out["agree_mixed"] += row["mixed"]["formula"] == "pass"
        out["reed_pass"] += row["complete"]["reed"] == "pass" and row["mixed"]["reed"] == "pass"
        if row["complete"]["formula"] != "pass" or row["mixed"]["formula"] != "pass":
            out["disagreements"].append({
                "chis": list(chis),
                "formula": row["formula"],
                "exact_complete": row["complete"]["invariants"]["chi"],
                "exact_mixed": row["mixed"]["invariants"]["chi"],
            })
    return out


def single_vector(chis: tuple[int, ...], *, budget_ms: int | None = None) -> dict:
    complete = verify_expansion_reed(odd_hole_spec(complete_realization(chis)), budget_ms=budget_ms)
    mixed = verify_expansion_reed(odd_hole_spec(mixed_realization(chis)), budget_ms=budget_ms)
    return {"chis": list(chis), "formula": chi_odd_expansion(chis), "complete": complete.as_dict(), "mixed": mixed.as_dict()}


def _random_graph(rng: random.Random, n: int) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    return Graph.from_edges(n, edges)


def random_expansion_specs(count: int, seed: int, max_component: int = 3) -> list[ExpansionSpec]:
    """Alternate odd-hole bases (C5, C7) with random bipartite bases."""
    rng = random.Random(seed)
    specs = []
    for i in range(count):
        if i % 2 == 0:
            base = cycle_graph(rng.choice((5, 7)))
        else:
            a, b = rng.randint(1, 3), rng.randint(1, 3)
            edges = [(x, a + y) for x in range(a) for y in range(b) if rng.random() < 0.6]
            base = Graph.from_edges(a + b, edges)
        comps = tuple(_random_graph(rng, rng.randint(1, max_component)) for _ in range(base.n))
        specs.append(ExpansionSpec(base, comps))
    return specs


def run_expansion_suite(
    lengths: tuple[int, ...] = (5, 7),
    max_chis: tuple[int, ...] = (3, 2),
    random_count: int = 0,
    seed: int = 0,
    vector: tuple[int, ...] | None = None,
    spec: ExpansionSpec | None = None,
    budget_ms: int | None = None,
) -> dict:
    """Formula/oracle agreement counts and Reed verdicts for generated expansions."""
    summary: dict = {}
    if spec is not None:
        summary["spec"] = verify_expansion_reed(spec, budget_ms=budget_ms).as_dict()
    elif vector is not None:
        summary["vector"] = single_vector(vector, budget_ms=budget_ms)
    else:
        if len(max_chis) == 1:
            max_chis = max_chis * len(lengths)
        if len(max_chis) != len(lengths):
            raise ValueError("--max-chi needs one value or one per length")
        summary["sweeps"] = [vector_sweep(L, c, budget_ms=budget_ms) for L, c in zip(lengths, max_chis)]
    if random_count:
        rows = [verify_expansion_reed(s, budget_ms=budget_ms) for s in random_expansion_specs(random_count, seed)]
        summary["random"] = {
            "count": len(rows),
            "seed": seed,
            "reed_pass": sum(r.reed == "pass" for r in rows),
            "odd_hole": sum(r.base_kind == "odd_hole" for r in rows),
            "formula_pass": sum(r.formula == "pass" for r in rows),
            "formula_fail": [dict(r.as_dict(), index=i) for i, r in enumerate(rows) if r.formula == "fail"],
            "corollary": {v: sum(r.corollary == v for r in rows) for v in ("pass", "fail", "not-applicable")},
        }
    summary["ok"] = _suite_ok(summary)
    return summary


def _suite_ok(summary: dict) -> bool:
    ok = True
    for sw in summary.get("sweeps", ()):
        ok &= sw["agree_complete"] == sw["agree_mixed"] == sw["reed_pass"] == sw["vectors"]
    if "vector" in summary:
        v = summary["vector"]
        ok &= all(v[k]["formula"] == "pass" and v[k]["reed"] == "pass" for k in ("complete", "mixed"))
    if "spec" in summary:
        s = summary["spec"]
        ok &= "fail" not in (s["reed"], s["formula"], s["corollary"])
    if "random" in summary:
        r = summary["random"]
        ok &= r["reed_pass"] == r["count"] and not r["formula_fail"] and not r["corollary"]["fail"]
    return bool(ok)


def outcome_counts(outcomes: Iterable[Outcome]) -> dict:
    counts = {v: 0 for v in VERDICTS}
    for o in outcomes:
        counts[o.verdict] += 1
    return counts
