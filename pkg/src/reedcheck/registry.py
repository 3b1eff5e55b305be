"""Named checks: a hypothesis filter plus an assertion, evaluated on one graph.

Verdicts are ``pass``, ``fail``, ``vacuous`` (hypothesis holds but there is
nothing to assert), ``not-applicable`` and ``budget-exceeded``. Every ``fail``
carries a witness made of plain vertex-id lists so it can be replayed.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass
from functools import cached_property

from .budget import BudgetExceeded
from .expansions import (
    buoy_class_bound_checks,
    layered_coloring_bound,
    min_odd_transversal,
)
from .graph import Graph, complement, induced, is_connected, to_graph6
from .holes import (
    BuoyPreconditionError,
    Hole,
    all_buoy_closures,
    buoy_laminarity_check,
    default_max_len,
    enumerate_odd_holes,
    is_distance_two_pair,
    is_three_consecutive,
    is_well_hooped,
    partial_vertices,
    partition_into_buoys,
    shrink,
)
from .invariants import (
    InvariantRecord,
    chromatic_number,
    clique_in,
    clique_number,
    clique_number_at,
    is_k_critical,
    kcritical_odd_hole_check,
    max_degree,
)
from .patterns import find_induced, pattern

PASS, FAIL, VACUOUS, NA, BUDGET = "pass", "fail", "vacuous", "not-applicable", "budget-exceeded"
VERDICTS = (PASS, FAIL, VACUOUS, NA, BUDGET)


@dataclass
class Outcome:
    verdict: str
    witness: dict | None = None
    details: dict | None = None

    def as_dict(self, check_id: str) -> dict:
        out: dict = {"id": check_id, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details is not None:
            out["details"] = self.details
        return out


class GraphContext:
    """Per-graph cache of the expensive facts several checks share."""

    def __init__(self, g: Graph, *, max_hole_len: int | None = None, budget_ms: int | None = None, seed: int = 0):
        self.g = g
        self.max_len = default_max_len(g) if max_hole_len is None else max_hole_len
        self.budget_ms = budget_ms
        self.seed = seed
        self._free: dict[str, bool] = {}

    @cached_property
    def graph6(self) -> str:
        return to_graph6(self.g)

    @cached_property
    def clique(self):
        return clique_number(self.g, budget_ms=self.budget_ms)

    @cached_property
    def colouring(self):
        return chromatic_number(self.g, budget_ms=self.budget_ms)

    @cached_property
    def record(self) -> InvariantRecord:
        return InvariantRecord(self.clique.size, self.colouring.chi, max_degree(self.g))

    @cached_property
    def holes(self) -> list[Hole]:
        return enumerate_odd_holes(self.g, self.max_len, budget_ms=self.budget_ms)

    @cached_property
    def well_hooped(self):
        return is_well_hooped(self.g, holes=self.holes)

    @cached_property
    def closures(self):
        return all_buoy_closures(self.g, holes=self.holes)

    def free_of(self, *names: str) -> bool:
        for name in names:
            if name not in self._free:
                self._free[name] = find_induced(self.g, pattern(name)) is None
            if not self._free[name]:
                return False
        return True

    def rng(self, salt: str) -> random.Random:
        # string seeds hash deterministically, independent of process or order
        return random.Random(f"{self.seed}|{salt}|{self.graph6}")


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    hypothesis: str
    run: Callable[[GraphContext], Outcome] | None
    executable: bool = True
    in_all: bool = True
    note: str = ""


def _reed_witness(ctx: GraphContext) -> dict:
    rec = ctx.record
    g = ctx.g
    top = max(range(g.n), key=lambda v: (g.degree(v), -v))
    return {
        "clique": list(ctx.clique.vertices),
        "max_degree_vertex": top,
        "omega": rec.omega,
        "delta": rec.delta,
        "chi": rec.chi,
        "reed_bound": rec.reed_bound,
    }


def _reed_outcome(ctx: GraphContext) -> Outcome:
    rec = ctx.record
    if rec.chi <= rec.reed_bound:
        return Outcome(PASS, details={"slack": rec.reed_slack})
    return Outcome(FAIL, _reed_witness(ctx))


def check_reed(ctx: GraphContext) -> Outcome:
    if ctx.g.n == 0:
        return Outcome(NA)
    return _reed_outcome(ctx)


def check_rabern(ctx: GraphContext) -> Outcome:
    if ctx.g.n < 2 or is_connected(complement(ctx.g)):
        return Outcome(NA)
    return _reed_outcome(ctx)


MONOTONE_SAMPLES = 8


def check_chi_monotone(ctx: GraphContext) -> Outcome:
    g = ctx.g
    if g.n < 2:
        return Outcome(NA)
    rng = ctx.rng("chi_monotone")
    rec = ctx.record
    for _ in range(MONOTONE_SAMPLES):
        size = rng.randint(1, g.n - 1)
        subset = sorted(rng.sample(range(g.n), size))
        h = induced(g, subset)
        om = clique_number(h, budget_ms=ctx.budget_ms).size
        ch = chromatic_number(h, budget_ms=ctx.budget_ms).chi
        de = max_degree(h)
        monotone = om <= rec.omega and ch <= rec.chi and de <= rec.delta
        lifted = not (ch == rec.chi and ch <= (om + de + 2) // 2) or rec.chi <= rec.reed_bound
        if not (monotone and lifted):
            return Outcome(FAIL, {
                "subset": subset,
                "sub": {"omega": om, "chi": ch, "delta": de},
                "whole": rec.as_dict(),
            })
    return Outcome(PASS, details={"samples": MONOTONE_SAMPLES})


def check_kcrit_hole(ctx: GraphContext) -> Outcome:
    g = ctx.g
    if g.n == 0 or not is_k_critical(g, budget_ms=ctx.budget_ms):
        return Outcome(NA)
    res = kcritical_odd_hole_check(g, budget_ms=ctx.budget_ms)
    if not res.qualifying:
        return Outcome(VACUOUS, details={"k": res.k})
    if res.passed:
        return Outcome(PASS, details={"k": res.k, "qualifying": list(res.qualifying)})
    v = res.violation
    return Outcome(FAIL, {"vertex": v, "k": res.k, "degree": g.degree(v), "omega_at": clique_number_at(g, v)})


def _profile_witness(hole, x, prof) -> dict:
    return {"hole": list(hole), "vertex": x, "profile": list(prof)}


def check_wh_p5(ctx: GraphContext) -> Outcome:
    if not ctx.free_of("P5", "coP5"):
        return Outcome(NA)
    wh = ctx.well_hooped
    if wh:
        return Outcome(PASS if ctx.holes else VACUOUS)
    v = wh.violation
    return Outcome(FAIL, _profile_witness(v.hole, v.vertex, v.profile))


def _buoy_failure(exc: BuoyPreconditionError) -> Outcome:
    w = {"error": str(exc)}
    if exc.violation is not None:
        w.update(_profile_witness(exc.violation.hole, exc.violation.vertex, exc.violation.profile))
    return Outcome(FAIL, w)


def check_laminar(ctx: GraphContext) -> Outcome:
    if not ctx.well_hooped:
        return Outcome(NA)
    if not ctx.holes:
        return Outcome(VACUOUS)
    try:
        res = buoy_laminarity_check(ctx.g, closures=ctx.closures)
    except BuoyPreconditionError as exc:
        return _buoy_failure(exc)
    if res:
        return Outcome(PASS)
    b1, b2 = res.pair
    return Outcome(FAIL, {"buoys": [b1.as_lists(), b2.as_lists()], "holes": [list(h) for h in res.holes]})


def check_transversal(ctx: GraphContext) -> Outcome:
    if not ctx.well_hooped or not ctx.holes:
        return Outcome(NA)
    t = min_odd_transversal(ctx.g, budget_ms=ctx.budget_ms)
    omega = ctx.record.omega
    details = {"transversal": list(t.vertices), "omega_in_w": t.omega_in_w, "omega": omega}
    if t.omega_in_w <= omega - 1:
        return Outcome(PASS, details=details)
    wmask = sum(1 << v for v in t.vertices)
    clique = clique_in(ctx.g, wmask, budget_ms=ctx.budget_ms).vertices
    return Outcome(FAIL, {"transversal": list(t.vertices), "clique_in_w": list(clique), "omega": omega})


def check_quad_bound(ctx: GraphContext) -> Outcome:
    if not (ctx.free_of("P6", "coP6") and ctx.well_hooped):
        return Outcome(NA)
    lb = layered_coloring_bound(ctx.g, budget_ms=ctx.budget_ms, check_hypotheses=False)
    details = {
        "chi": lb.chi,
        "omega": lb.omega,
        "layered_bound": lb.bound,
        "derived_limit": lb.derived_limit,
        "stated_limit": lb.stated_limit,
        "stated_holds": lb.stated_holds,
    }
    if not lb.stated_holds:
        details["stated_bound_discrepancy"] = True
    if lb.derived_holds:
        return Outcome(PASS, details=details)
    return Outcome(FAIL, {
        "layers": [list(t.vertices) for t in lb.layers],
        "stage_omegas": list(lb.stage_omegas),
        "chi": lb.chi,
        "omega": lb.omega,
    }, details)


def _buoy_bound(which: str) -> Callable[[GraphContext], Outcome]:
    def run(ctx: GraphContext) -> Outcome:
        if not ctx.well_hooped:
            return Outcome(NA)
        try:
            res = buoy_class_bound_checks(ctx.g, budget_ms=ctx.budget_ms, closures=ctx.closures)[which]
        except BuoyPreconditionError as exc:
            return _buoy_failure(exc)
        if res.verdict == FAIL:
            return Outcome(FAIL, dict(res.details, clique=list(ctx.clique.vertices)))
        return Outcome(res.verdict, details=res.details or None)

    return run


def check_chair_bull_profile(ctx: GraphContext) -> Outcome:
    if not ctx.free_of("Chair", "Bull"):
        return Outcome(NA)
    if not ctx.holes:
        return Outcome(VACUOUS)
    for hole in ctx.holes:
        L = len(hole)
        for x, prof in partial_vertices(ctx.g, hole).items():
            if not (is_three_consecutive(prof, L) or (L == 5 and len(prof) == 4)):
                return Outcome(FAIL, _profile_witness(hole, x, prof))
    return Outcome(PASS)


def _profile_rule(names: tuple[str, ...], allowed: Callable[[tuple[int, ...], int], bool]) -> Callable[[GraphContext], Outcome]:
    def run(ctx: GraphContext) -> Outcome:
        if not ctx.free_of(*names):
            return Outcome(NA)
        if not ctx.holes:
            return Outcome(VACUOUS)
        for hole in ctx.holes:
            for x, prof in partial_vertices(ctx.g, hole).items():
                if not allowed(prof, len(hole)):
                    return Outcome(FAIL, _profile_witness(hole, x, prof))
        return Outcome(PASS)

    return run


def _class_reed(*alternatives: tuple[str, ...]) -> Callable[[GraphContext], Outcome]:
    def run(ctx: GraphContext) -> Outcome:
        if ctx.g.n == 0 or not any(ctx.free_of(*names) for names in alternatives):
            return Outcome(NA)
        return _reed_outcome(ctx)

    return run


def check_seinsche(ctx: GraphContext) -> Outcome:
    g = ctx.g
    if g.n < 2 or not ctx.free_of("P4") or not is_connected(g):
        return Outcome(NA)
    if not is_connected(complement(g)):
        return Outcome(PASS)
    return Outcome(FAIL, {"n": g.n})


def check_quotient_c5free(ctx: GraphContext) -> Outcome:
    if not (ctx.free_of("P6") and ctx.well_hooped):
        return Outcome(NA)
    if not ctx.holes:
        return Outcome(VACUOUS)
    try:
        part = partition_into_buoys(ctx.g, closures=ctx.closures)
    except BuoyPreconditionError as exc:
        return _buoy_failure(exc)
    q = shrink(ctx.g, part.buoys, part.leftover)
    emb = find_induced(q.graph, pattern("C5"))
    details = {"buoys": len(part.buoys), "leftover": len(part.leftover), "quotient_n": q.graph.n}
    if emb is None:
        return Outcome(PASS, details=details)
    return Outcome(FAIL, {
        "buoys": [b.as_lists() for b in part.buoys],
        "leftover": list(part.leftover),
        "quotient_c5": list(emb),
    }, details)


def _not_executable(ctx: GraphContext) -> Outcome:  # pragma: no cover - never dispatched
    raise RuntimeError("check is not executable")


MINIMAL_COUNTEREXAMPLE = "hypothesis quantifies over minimal counterexamples to Reed's conjecture, which cannot be constructed"

CHECKS: dict[str, Check] = {c.id: c for c in [
    Check("reed", '"For any graph $G$"', "all graphs", check_reed),
    Check("rabern", '"If $\\overline{G}$ is disconnected then"', "complement disconnected", check_rabern),
    Check("chi_monotone", '"Let $H$ be an induced subgraph"', "sampled induced subgraphs", check_chi_monotone),
    Check("kcrit_hole", '"must belong to some odd hole"', "k-critical with qualifying vertices", check_kcrit_hole),
    Check("wh_p5", '"then $G$ is well-hooped"', "(P5, co-P5)-free", check_wh_p5),
    Check("laminar", '"vertex disjoint or one is contained"', "well-hooped", check_laminar),
    Check("transversal", '"minimum transversal of the odd cycles"', "well-hooped with an odd hole", check_transversal),
    Check("quad_bound", '"$\\frac{\\omega(G)(\\omega(G)-1)}{2}$"', "(P6, co-P6)-free, well-hooped", check_quad_bound),
    Check("indep_buoy", '"each buoy of $G$ is independent"', "(P6, co-P6)-free, well-hooped, buoys independent", _buoy_bound("indep_buoy")),
    Check("full_buoy", '"where each buoy is full"', "co-P6-free, well-hooped, buoys full", _buoy_bound("full_buoy")),
    Check("chair_bull_profile", '"is adjacent to precisely $3$ consecutive vertices"', "(Chair, Bull)-free", check_chair_bull_profile),
    Check("c4p5_profile", '"precisely connected to $3$ consecutive vertices"', "(C4, P5)-free",
          _profile_rule(("C4", "P5"), is_three_consecutive)),
    Check("p5kite_profile", '"connected to $2$ vertices at distance $2$"', "(P5, Kite)-free",
          _profile_rule(("P5", "Kite"), is_distance_two_pair), in_all=False,
          note="known false: graph6 EhdW is (P5, Kite)-free with a partial vertex seeing v1, v3, v4"),
    Check("class_reed_c4p5", '"satisfies Conjecture"', "(C4, P5)-free", _class_reed(("C4", "P5"))),
    Check("class_reed_p5p5barDart", '"satisfies Conjecture"', "(P5, co-P5, Dart)-free", _class_reed(("P5", "coP5", "Dart"))),
    Check("class_reed_p5kite", '"satisfies Conjecture"', "(P5, Kite)-free", _class_reed(("P5", "Kite"))),
    Check("class_reed_chairBullF", '"satisfies Conjecture"', "(Chair, Bull, F)-free, F in {House, Kite, Gem, C5}",
          _class_reed(*[("Chair", "Bull", f) for f in ("House", "Kite", "Gem", "C5")])),
    Check("seinsche", '"see Seinsche"', "P4-free, connected, at least 2 vertices", check_seinsche),
    Check("quotient_c5free", '"Observe that $G^*$ is $C_5$-free"', "P6-free, well-hooped", check_quotient_c5free),
    Check("no_disjoint_xy", '"no two disjoint subsets"', "minimal counterexample", None, executable=False, note=MINIMAL_COUNTEREXAMPLE),
    Check("components_connected", '"each component $G_{i}$ ... is connected"', "minimal counterexample expansion", None, executable=False, note=MINIMAL_COUNTEREXAMPLE),
    Check("every_vertex_on_hole", '"any vertex is contained in an odd hole"', "minimal counterexample", None, executable=False, note=MINIMAL_COUNTEREXAMPLE),
    Check("buoy_partition", '"a partition of the vertices of $G$ in buoys"', "well-hooped minimal counterexample", None, executable=False, note=MINIMAL_COUNTEREXAMPLE),
]}


class UnknownCheckError(KeyError):
    pass


def resolve_checks(spec: str | list[str]) -> list[str]:
    """``"all"`` or a comma list of ids; non-executable ids are rejected."""
    if isinstance(spec, str):
        if spec.strip() == "all":
            return [c.id for c in CHECKS.values() if c.executable and c.in_all]
        spec = [s.strip() for s in spec.split(",") if s.strip()]
    for cid in spec:
        if cid not in CHECKS:
            raise UnknownCheckError(f"unknown check id {cid!r}")
        if not CHECKS[cid].executable:
            raise UnknownCheckError(f"check {cid!r} is documentation only: {CHECKS[cid].note}")
    return list(spec)


def run_named_check(check_id: str, g: Graph | GraphContext, **config) -> Outcome:
    """Evaluate one registered check; budget overruns become a verdict."""
    check = CHECKS.get(check_id)
    if check is None:
        raise UnknownCheckError(f"unknown check id {check_id!r}")
    if not check.executable:
        raise UnknownCheckError(f"check {check_id!r} is documentation only")
    ctx = g if isinstance(g, GraphContext) else GraphContext(g, **config)
    try:
        return check.run(ctx)
    except BudgetExceeded:
        return Outcome(BUDGET)
