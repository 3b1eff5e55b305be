"""Exact clique number, chromatic number, maximum degree and Reed's bound."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .budget import Deadline
from .graph import Graph, GraphError, bits, complement, delete_vertices, to_graph6


class CliqueResult(NamedTuple):
    size: int
    vertices: tuple[int, ...]


class ColoringResult(NamedTuple):
    chi: int
    colors: tuple[int, ...]


def _require_vertices(g: Graph) -> None:
    if g.n == 0:
        raise GraphError("operation undefined on the graph with no vertices")


def max_degree(g: Graph) -> int:
    _require_vertices(g)
    return max(g.degrees())


def reed_bound(omega: int, delta: int) -> int:
    """Integer ceiling of (omega + delta + 1) / 2."""
    return (omega + delta + 2) // 2


# ---------------------------------------------------------------------------
# maximum clique


def _colour_bound(rows: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of ``cand``; returns vertices and their colour numbers
    in non-decreasing colour order (the MCQ ordering)."""
    order: list[int] = []
    colour: list[int] = []
    k = 0
    left = cand
    while left:
        k += 1
        q = left
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~rows[v] & ~low
            left &= ~low
            order.append(v)
            colour.append(k)
    return order, colour


def _max_clique_mask(rows: tuple[int, ...], cand: int, deadline: Deadline) -> int:
    best = [0, 0]  # size, mask

    def expand(size: int, clique: int, p: int) -> None:
        deadline.tick()
        order, colour = _colour_bound(rows, p)
        for idx in range(len(order) - 1, -1, -1):
            if size + colour[idx] <= best[0]:
                return
            v = order[idx]
            bit = 1 << v
            newp = p & rows[v]
            if newp:
                expand(size + 1, clique | bit, newp)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = clique | bit
            p &= ~bit

    if cand:
        expand(0, 0, cand)
    return best[1]


def _least_clique_of_size(rows: tuple[int, ...], cand: int, target: int, deadline: Deadline) -> tuple[int, ...]:
    # ascending DFS enumerates cliques in lexicographic order; the first hit is least
    def dfs(chosen: list[int], p: int) -> tuple[int, ...] | None:
        deadline.tick()
        if len(chosen) == target:
            return tuple(chosen)
        need = target - len(chosen)
        if p.bit_count() < need:
            return None
        _, colour = _colour_bound(rows, p)
        if colour[-1] < need:
            return None
        while p:
            if p.bit_count() < need:
                return None
            low = p & -p
            v = low.bit_length() - 1
            p ^= low
            chosen.append(v)
            found = dfs(chosen, p & rows[v])
            chosen.pop()
            if found is not None:
                return found
        return None

    if target == 0:
        return ()
    found = dfs([], cand)
    assert found is not None
    return found


def clique_in(g: Graph, cand: int, *, budget_ms: int | None = None) -> CliqueResult:
    """Maximum clique within the vertex mask ``cand`` (lexicographically least witness)."""
    deadline = Deadline(budget_ms)
    size = _max_clique_mask(g.rows, cand, deadline).bit_count()
    return CliqueResult(size, _least_clique_of_size(g.rows, cand, size, deadline))


def clique_number(g: Graph, *, budget_ms: int | None = None) -> CliqueResult:
    """Exact clique number with the lexicographically least maximum clique.

    Raises :class:`~reedcheck.budget.BudgetExceeded` rather than returning a bound.
    """
    _require_vertices(g)
    return clique_in(g, g.vertex_mask, budget_ms=budget_ms)


def clique_number_at(g: Graph, v: int, *, budget_ms: int | None = None) -> int:
    """Size of a largest clique containing ``v``."""
    _require_vertices(g)
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    deadline = Deadline(budget_ms)
    return 1 + _max_clique_mask(g.rows, g.rows[v], deadline).bit_count()


# ---------------------------------------------------------------------------
# chromatic number: DSATUR branch and bound


def _dsatur_pick(rows, colour, uncoloured, class_masks):
    best_v = -1
    best_key = None
    for v in bits(uncoloured):
        r = rows[v]
        sat = 0
        for cm in class_masks:
            if r & cm:
                sat += 1
        key = (sat, (r & uncoloured).bit_count())
        if best_key is None or key > best_key:
            best_key = key
            best_v = v
    return best_v


def _greedy_dsatur(g: Graph, fixed: list[int]) -> list[int]:
    rows = g.rows
    colour = [-1] * g.n
    class_masks: list[int] = []
    uncoloured = g.vertex_mask
    for c, v in enumerate(fixed):
        colour[v] = c
        class_masks.append(1 << v)
        uncoloured &= ~(1 << v)
    while uncoloured:
        v = _dsatur_pick(rows, colour, uncoloured, class_masks)
        r = rows[v]
        for c, cm in enumerate(class_masks):
            if not r & cm:
                break
        else:
            c = len(class_masks)
            class_masks.append(0)
        colour[v] = c
        class_masks[c] |= 1 << v
        uncoloured &= ~(1 << v)
    return colour


def _normalise(colour: list[int]) -> tuple[int, ...]:
    # relabel colours by first appearance in vertex order
    remap: dict[int, int] = {}
    for c in colour:
        if c not in remap:
            remap[c] = len(remap)
    return tuple(remap[c] for c in colour)


def chromatic_number(g: Graph, *, budget_ms: int | None = None) -> ColoringResult:
    """Exact chromatic number and a proper colouring using colours 0..chi-1."""
    _require_vertices(g)
    deadline = Deadline(budget_ms)
    rows = g.rows
    n = g.n
    clique = _least_clique_of_size(rows, g.vertex_mask, _max_clique_mask(rows, g.vertex_mask, deadline).bit_count(), deadline)
    lower = len(clique)
    best = _greedy_dsatur(g, list(clique))
    upper = max(best) + 1
    if upper == lower:
        return ColoringResult(upper, _normalise(best))

    colour = [-1] * n
    class_masks: list[int] = []
    uncoloured = g.vertex_mask
    for c, v in enumerate(clique):
        colour[v] = c
        class_masks.append(1 << v)
        uncoloured &= ~(1 << v)
    state = {"upper": upper, "best": best}

    def search(uncoloured: int) -> bool:
        deadline.tick()
        if not uncoloured:
            state["best"] = colour[:]
            state["upper"] = len(class_masks)
            return state["upper"] == lower
        v = _dsatur_pick(rows, colour, uncoloured, class_masks)
        r = rows[v]
        rest = uncoloured & ~(1 << v)
        for c in range(len(class_masks)):
            if r & class_masks[c]:
                continue
            colour[v] = c
            class_masks[c] |= 1 << v
            done = search(rest)
            class_masks[c] &= ~(1 << v)
            colour[v] = -1
            if done:
                return True
            if len(class_masks) >= state["upper"]:
                return False
        if len(class_masks) + 1 < state["upper"]:
            colour[v] = len(class_masks)
            class_masks.append(1 << v)
            done = search(rest)
            class_masks.pop()
            colour[v] = -1
            if done:
                return True
        return False

    search(uncoloured)
    return ColoringResult(state["upper"], _normalise(state["best"]))


def is_proper_colouring(g: Graph, colours) -> bool:
    return all(colours[u] != colours[v] for u, v in g.edges())


# ---------------------------------------------------------------------------
# Reed's bound


@dataclass(frozen=True)
class InvariantRecord:
    omega: int
    chi: int
    delta: int

    @property
    def reed_bound(self) -> int:
        return reed_bound(self.omega, self.delta)

    @property
    def reed_slack(self) -> int:
        return self.reed_bound - self.chi

    def as_dict(self) -> dict:
        return {"omega": self.omega, "chi": self.chi, "delta": self.delta, "reed_bound": self.reed_bound}


def invariant_record(g: Graph, *, budget_ms: int | None = None) -> InvariantRecord:
    return InvariantRecord(
        omega=clique_number(g, budget_ms=budget_ms).size,
        chi=chromatic_number(g, budget_ms=budget_ms).chi,
        delta=max_degree(g),
    )


@dataclass(frozen=True)
class ReedResult:
    holds: bool
    slack: int
    record: InvariantRecord
    graph6: str

    def __bool__(self) -> bool:
        return self.holds


def satisfies_reed(g: Graph, *, budget_ms: int | None = None) -> ReedResult:
    rec = invariant_record(g, budget_ms=budget_ms)
    return ReedResult(rec.chi <= rec.reed_bound, rec.reed_slack, rec, to_graph6(g))


# ---------------------------------------------------------------------------
# perfection and criticality


def is_berge(g: Graph) -> bool:
    """No odd hole in ``g`` or its complement (exhaustive hole search)."""
    from .holes import has_odd_hole

    return not has_odd_hole(g) and not has_odd_hole(complement(g))


def _chi_or_zero(g: Graph, budget_ms: int | None) -> int:
    return chromatic_number(g, budget_ms=budget_ms).chi if g.n else 0


@dataclass(frozen=True)
class Criticality:
    critical: bool
    k: int

    def __bool__(self) -> bool:
        return self.critical


def is_k_critical(g: Graph, *, budget_ms: int | None = None) -> Criticality:
    k = chromatic_number(g, budget_ms=budget_ms).chi
    for v in range(g.n):
        if _chi_or_zero(delete_vertices(g, [v]), budget_ms) >= k:
            return Criticality(False, k)
    return Criticality(True, k)


@dataclass(frozen=True)
class HoleMembershipResult:
    passed: bool
    k: int
    qualifying: tuple[int, ...]
    violation: int | None = None


def kcritical_odd_hole_check(g: Graph, *, budget_ms: int | None = None) -> HoleMembershipResult:
    """Every vertex with 2k > d(v) + omega(v) + 1 must lie on an odd hole."""
    from .holes import enumerate_odd_holes

    crit = is_k_critical(g, budget_ms=budget_ms)
    if not crit.critical:
        raise ValueError("graph is not k-critical")
    k = crit.k
    on_hole = 0
    for hole in enumerate_odd_holes(g):
        for v in hole:
            on_hole |= 1 << v
    qualifying = []
    for v in range(g.n):
        if 2 * k > g.degree(v) + clique_number_at(g, v, budget_ms=budget_ms) + 1:
            qualifying.append(v)
            if not (on_hole >> v) & 1:
                return HoleMembershipResult(False, k, tuple(qualifying), v)
    return HoleMembershipResult(True, k, tuple(qualifying))
