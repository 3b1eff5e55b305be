"""Graph expansions, the closed-form chromatic number of odd-hole expansions,
minimum odd-hole transversals and the layered colouring bound."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .budget import Deadline
from .graph import (
    DEFAULT_VERTEX_CAP,
    Graph,
    GraphError,
    VertexCapError,
    bits,
    complete_graph,
    cycle_graph,
    delete_vertices,
    empty_graph,
    from_edge_list,
    induced,
    is_bipartite,
    join,
    mask_of,
    path_graph,
)
from .holes import (
    Hole,
    all_buoy_closures,
    buoy_kind,
    enumerate_odd_holes,
    is_hole,
    is_well_hooped,
)
from .invariants import (
    chromatic_number,
    clique_number,
    invariant_record,
    is_berge,
)
from .patterns import is_free_of


@dataclass(frozen=True)
class ExpansionSpec:
    base: Graph
    components: tuple[Graph, ...]

    def __post_init__(self):
        if len(self.components) != self.base.n:
            raise GraphError(f"{self.base.n} base vertices but {len(self.components)} components")
        for i, c in enumerate(self.components):
            if c.n == 0:
                raise GraphError(f"component {i} is empty")

    @classmethod
    def parse(cls, text: str, *, cap: int = DEFAULT_VERTEX_CAP) -> ExpansionSpec:
        """Edge-list sections separated by lines holding a single ``#``: the base
        graph first, then one component per base vertex."""
        sections: list[list[str]] = [[]]
        for line in text.splitlines():
            if line.strip() == "#":
                sections.append([])
            else:
                sections[-1].append(line)
        graphs = [from_edge_list("\n".join(s), cap=cap) for s in sections]
        return cls(graphs[0], tuple(graphs[1:]))

    def to_text(self) -> str:
        from .graph import to_edge_list

        return "#\n".join(to_edge_list(g) for g in (self.base, *self.components))


@dataclass(frozen=True)
class Expansion:
    graph: Graph
    component_of: tuple[int, ...]  # expanded vertex -> base vertex
    offsets: tuple[int, ...]  # first expanded vertex of each component


def expand(spec: ExpansionSpec, *, cap: int = DEFAULT_VERTEX_CAP) -> Expansion:
    """Substitute component i for base vertex i; components of adjacent base vertices
    are completely joined."""
    sizes = [c.n for c in spec.components]
    total = sum(sizes)
    if total > cap:
        raise VertexCapError(total, cap)
    offsets = []
    acc = 0
    for s in sizes:
        offsets.append(acc)
        acc += s
    blocks = [((1 << s) - 1) << o for s, o in zip(sizes, offsets)]
    rows = []
    owner = []
    for i, comp in enumerate(spec.components):
        cross = 0
        for j in bits(spec.base.rows[i]):
            cross |= blocks[j]
        for r in comp.rows:
            rows.append((r << offsets[i]) | cross)
            owner.append(i)
    return Expansion(Graph._trusted(total, tuple(rows)), tuple(owner), tuple(offsets))


# ---------------------------------------------------------------------------
# closed form for odd-hole expansions


def _validate_chis(chis: Sequence[int]) -> tuple[int, ...]:
    chis = tuple(int(c) for c in chis)
    if len(chis) < 5 or len(chis) % 2 == 0:
        raise ValueError(f"chi vector length must be odd and >= 5, got {len(chis)}")
    if any(c < 1 for c in chis):
        raise ValueError("chi vector entries must be positive")
    return chis


def canonical_rotation(chis: Sequence[int]) -> tuple[int, ...]:
    """Rotate so that positions 0, 1 carry the heaviest edge (least start index)."""
    chis = _validate_chis(chis)
    L = len(chis)
    weights = [chis[i] + chis[(i + 1) % L] for i in range(L)]
    start = weights.index(max(weights))
    return chis[start:] + chis[:start]


def min_triple_index(chis: Sequence[int]) -> int:
    """Least index l in 3..L-2 minimising chi_{l-1} + chi_l + chi_{l+1} (rotated vector)."""
    L = len(chis)
    return min(range(3, L - 1), key=lambda i: (chis[i - 1] + chis[i] + chis[i + 1], i))


def chi_odd_expansion(chis: Sequence[int]) -> int:
    """Chromatic number of an odd-hole expansion from its component chromatic numbers."""
    c = canonical_rotation(chis)
    l = min_triple_index(c)
    top = c[0] + c[1]
    m = c[l - 1] + c[l] + c[l + 1]
    if top >= m:
        return top
    return top + (m - top + 1) // 2


# ---------------------------------------------------------------------------
# Reed checks on expansions


@dataclass
class ExpansionReport:
    n: int
    base_kind: str  # "bipartite" or "odd_hole"
    invariants: dict
    reed: str
    formula: str = "not-applicable"
    formula_value: int | None = None
    corollary: str = "not-applicable"
    chis: tuple[int, ...] = ()
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return "fail" not in (self.reed, self.formula, self.corollary)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "base_kind": self.base_kind,
            "invariants": self.invariants,
            "reed": self.reed,
            "formula": self.formula,
            "formula_value": self.formula_value,
            "corollary": self.corollary,
            "chis": list(self.chis),
        }


def _base_kind(base: Graph) -> str:
    if is_bipartite(base):
        return "bipartite"
    if base.n >= 5 and base.n % 2 and is_hole(base, list(range(base.n))):
        return "odd_hole"
    raise ValueError("expansion base must be bipartite or an odd hole 0-1-...-(n-1)")


def verify_expansion_reed(spec: ExpansionSpec, *, budget_ms: int | None = None, cap: int = DEFAULT_VERTEX_CAP) -> ExpansionReport:
    """Build the expansion, compute exact invariants and check Reed's bound; for
    odd-hole bases also compare the closed form against the exact chromatic number."""
    kind = _base_kind(spec.base)
    g = expand(spec, cap=cap).graph
    rec = invariant_record(g, budget_ms=budget_ms)
    report = ExpansionReport(
        n=g.n,
        base_kind=kind,
        invariants=rec.as_dict(),
        reed="pass" if rec.chi <= rec.reed_bound else "fail",
    )
    if kind == "odd_hole":
        chis = tuple(chromatic_number(c, budget_ms=budget_ms).chi for c in spec.components)
        report.chis = chis
        value = chi_odd_expansion(chis)
        report.formula_value = value
        report.formula = "pass" if value == rec.chi else "fail"
        L = len(chis)
        weights = [chis[i] + chis[(i + 1) % L] for i in range(L)]
        start = weights.index(max(weights))
        rotated = chis[start:] + chis[:start]
        l = min_triple_index(rotated)
        picked = [spec.components[(start + i) % L] for i in (0, 1, l)]
        if all(chromatic_number(a, budget_ms=budget_ms).chi == clique_number(a, budget_ms=budget_ms).size for a in picked):
            report.corollary = report.reed
    return report


def odd_hole_spec(components: Sequence[Graph]) -> ExpansionSpec:
    return ExpansionSpec(cycle_graph(len(components)), tuple(components))


def complete_realization(chis: Sequence[int]) -> list[Graph]:
    return [complete_graph(c) for c in chis]


def _pendant_clique(c: int) -> Graph:
    return Graph.from_edges(c + 1, [(i, j) for i in range(c) for j in range(i + 1, c)] + [(c - 1, c)])


def mixed_components(c: int) -> list[Graph]:
    """Non-complete graphs with chromatic number ``c`` (K1 only as a fallback for c=1)."""
    if c == 1:
        return [empty_graph(2), complete_graph(1)]
    if c == 2:
        return [path_graph(3), cycle_graph(4), complete_graph(2)]
    return [join(cycle_graph(5), complete_graph(c - 3)) if c > 3 else cycle_graph(5), _pendant_clique(c)]


def mixed_realization(chis: Sequence[int]) -> list[Graph]:
    """Component i is option ``i mod k`` among :func:`mixed_components`."""
    out = []
    for i, c in enumerate(chis):
        opts = mixed_components(c)
        out.append(opts[i % len(opts)])
    return out


# ---------------------------------------------------------------------------
# odd-hole transversals


@dataclass(frozen=True)
class TransversalResult:
    vertices: tuple[int, ...]
    omega_in_w: int
    holes: tuple[Hole, ...] = ()

    @property
    def size(self) -> int:
        return len(self.vertices)


class HoleLengthError(ValueError):
    pass


def _hits_all(chosen: int, hole_masks: Sequence[int]) -> bool:
    return all(h & chosen for h in hole_masks)


def _hitting_set_exists(hole_masks: Sequence[int], k: int, allowed: int, deadline: Deadline) -> bool:
    deadline.tick()
    for h in hole_masks:
        first = h
        break
    else:
        return True
    if k == 0:
        return False
    for v in bits(first & allowed):
        rest = [h for h in hole_masks if not (h >> v) & 1]
        if _hitting_set_exists(rest, k - 1, allowed, deadline):
            return True
    return False


def min_hitting_set(hole_masks: Sequence[int], universe: int, *, budget_ms: int | None = None) -> tuple[int, ...]:
    """Lexicographically least minimum-cardinality set meeting every mask."""
    deadline = Deadline(budget_ms)
    k = 0
    while not _hitting_set_exists(list(hole_masks), k, universe, deadline):
        k += 1
    chosen: list[int] = []
    remaining = list(hole_masks)
    allowed = universe
    for left in range(k, 0, -1):
        for v in bits(allowed):
            rest = [h for h in remaining if not (h >> v) & 1]
            if _hitting_set_exists(rest, left - 1, allowed & ~((1 << (v + 1)) - 1), deadline):
                chosen.append(v)
                remaining = rest
                allowed &= ~((1 << (v + 1)) - 1)
                break
        else:  # pragma: no cover - feasibility was established above
            raise AssertionError("hitting set search lost feasibility")
    return tuple(chosen)


def min_odd_transversal(g: Graph, max_len: int | None = None, *, budget_ms: int | None = None) -> TransversalResult:
    """Minimum vertex set meeting every odd hole; ties broken lexicographically.

    All odd holes are enumerated; if any is longer than ``max_len`` the call fails,
    since the caller's length assumption does not hold.
    """
    holes = enumerate_odd_holes(g, budget_ms=budget_ms)
    if max_len is not None:
        longer = [h for h in holes if len(h) > max_len]
        if longer:
            raise HoleLengthError(f"odd hole {list(longer[0])} is longer than max_len={max_len}")
    w = min_hitting_set([mask_of(h) for h in holes], g.vertex_mask, budget_ms=budget_ms)
    omega_w = clique_number(induced(g, w), budget_ms=budget_ms).size if w else 0
    return TransversalResult(w, omega_w, tuple(holes))


@dataclass(frozen=True)
class TransversalCheck:
    passed: bool
    transversal: TransversalResult
    omega: int


def transversal_clique_check(g: Graph, max_len: int | None = None, *, budget_ms: int | None = None) -> TransversalCheck:
    """omega(G[W]) <= omega(G) - 1 for a minimum odd-hole transversal W."""
    t = min_odd_transversal(g, max_len, budget_ms=budget_ms)
    if not t.holes:
        raise ValueError("graph has no odd hole")
    omega = clique_number(g, budget_ms=budget_ms).size
    return TransversalCheck(t.omega_in_w <= omega - 1, t, omega)


@dataclass(frozen=True)
class LayeredBound:
    layers: tuple[TransversalResult, ...]
    stage_omegas: tuple[int, ...]
    bound: int
    omega: int
    chi: int

    @property
    def derived_limit(self) -> int:
        return self.omega * (self.omega + 1) // 2

    @property
    def stated_limit(self) -> int:
        return self.omega * (self.omega - 1) // 2

    @property
    def chi_within_bound(self) -> bool:
        return self.chi <= self.bound

    @property
    def derived_holds(self) -> bool:
        return self.chi <= self.bound <= self.derived_limit

    @property
    def stated_holds(self) -> bool:
        return self.chi <= self.stated_limit


def layered_coloring_bound(g: Graph, max_len: int | None = None, *, budget_ms: int | None = None, check_hypotheses: bool = True) -> LayeredBound:
    """Peel minimum odd-hole transversals until the rest is Berge.

    Each removed remainder is perfect, so it costs at most its clique number in
    colours; the bound is the sum over stages plus the final Berge layer.
    """
    if check_hypotheses:
        if not is_free_of(g, ["P6", "coP6"]):
            raise ValueError("graph is not (P6, co-P6)-free")
        if not is_well_hooped(g, max_len):
            raise ValueError("graph is not well-hooped")
    layers = []
    stage = []
    current = g
    # vertices of ``current`` as original ids
    ids = list(range(g.n))
    while current.n and not is_berge(current):
        t = min_odd_transversal(current, budget_ms=budget_ms)
        rest = delete_vertices(current, t.vertices)
        if not is_berge(rest):
            raise ValueError("removing a minimum odd-hole transversal left a non-Berge graph")
        stage.append(clique_number(rest, budget_ms=budget_ms).size if rest.n else 0)
        layers.append(TransversalResult(tuple(ids[v] for v in t.vertices), t.omega_in_w, tuple(tuple(ids[v] for v in h) for h in t.holes)))
        ids = [ids[v] for v in t.vertices]
        current = induced(current, t.vertices)
    stage.append(clique_number(current, budget_ms=budget_ms).size if current.n else 0)
    omega = clique_number(g, budget_ms=budget_ms).size if g.n else 0
    chi = chromatic_number(g, budget_ms=budget_ms).chi if g.n else 0
    return LayeredBound(tuple(layers), tuple(stage), sum(stage), omega, chi)


# ---------------------------------------------------------------------------
# buoy-class bounds


@dataclass(frozen=True)
class BoundVerdict:
    verdict: str  # pass, fail, vacuous, not-applicable
    details: dict = field(default_factory=dict)


def buoy_class_bound_checks(g: Graph, max_len: int | None = None, *, budget_ms: int | None = None, closures=None) -> dict[str, BoundVerdict]:
    """Reed's bound when every buoy is independent and the graph is (P6, co-P6)-free;
    chi <= ceil(3 omega / 2) when every buoy is full and the graph is co-P6-free."""
    if closures is None:
        closures = all_buoy_closures(g, max_len)
    kinds = [buoy_kind(g, b) for _, b in closures]
    all_indep = all(k.kind == "independent" or k.both for k in kinds)
    all_full = all(k.kind == "full" for k in kinds)
    out: dict[str, BoundVerdict] = {}
    p6free = is_free_of(g, ["P6"])
    cop6free = is_free_of(g, ["coP6"])
    rec = None

    def record():
        nonlocal rec
        if rec is None:
            rec = invariant_record(g, budget_ms=budget_ms)
        return rec

    if not (p6free and cop6free and all_indep):
        out["indep_buoy"] = BoundVerdict("not-applicable")
    else:
        r = record()
        ok = r.chi <= r.reed_bound
        verdict = ("pass" if ok else "fail") if kinds else ("vacuous" if ok else "fail")
        out["indep_buoy"] = BoundVerdict(verdict, {"chi": r.chi, "reed_bound": r.reed_bound})
    if not (cop6free and all_full):
        out["full_buoy"] = BoundVerdict("not-applicable")
    else:
        r = record()
        limit = (3 * r.omega + 1) // 2
        ok = r.chi <= limit
        verdict = ("pass" if ok else "fail") if kinds else ("vacuous" if ok else "fail")
        out["full_buoy"] = BoundVerdict(verdict, {"chi": r.chi, "limit": limit, "omega": r.omega})
    return out
