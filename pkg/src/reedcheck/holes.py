"""Odd holes, partial vertices, well-hooped recognition and buoys.

A buoy is stored as a cyclic tuple of vertex sets ``A_0..A_{2k}``; consecutive
sets are completely joined and non-consecutive sets have no edges between them.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .budget import Deadline
from .graph import Graph, GraphError, bits, mask_of

Hole = tuple[int, ...]


def default_max_len(g: Graph) -> int:
    return min(g.n, 9)


def _odd_cap(max_len: int | None, g: Graph) -> int:
    if max_len is None:
        max_len = g.n
    return max_len if max_len % 2 else max_len - 1


def iter_odd_holes(g: Graph, max_len: int | None = None, *, budget_ms: int | None = None) -> Iterator[Hole]:
    """Yield chordless odd cycles of length 5..max_len in canonical form.

    Canonical form starts at the least vertex and continues towards its lesser
    cycle neighbour. Holes are yielded grouped by least vertex, not globally sorted.
    ``max_len=None`` means no length limit.
    """
    limit = _odd_cap(max_len, g)
    if limit < 5:
        return
    rows = g.rows
    deadline = Deadline(budget_ms)
    for s in range(g.n):
        above = g.vertex_mask & ~((1 << (s + 1)) - 1)
        ns = rows[s]
        path = [s]

        def extend(last: int, blocked: int) -> Iterator[Hole]:
            deadline.tick()
            length = len(path)
            for v in bits(rows[last] & above & ~blocked):
                if (ns >> v) & 1:
                    # v closes the cycle; any further extension would carry a chord
                    if length >= 4 and length % 2 == 0 and v > path[1]:
                        yield (*path, v)
                elif length + 1 < limit:
                    path.append(v)
                    yield from extend(v, blocked | rows[last] | (1 << last))
                    path.pop()

        for p1 in bits(ns & above):
            path.append(p1)
            # s's other neighbours may appear only as the closing vertex
            yield from extend(p1, 1 << s)
            path.pop()


def enumerate_odd_holes(g: Graph, max_len: int | None = None, *, budget_ms: int | None = None) -> list[Hole]:
    """All odd holes up to ``max_len`` (default: no limit), sorted lexicographically."""
    return sorted(iter_odd_holes(g, max_len, budget_ms=budget_ms))


def has_odd_hole(g: Graph, max_len: int | None = None) -> bool:
    return next(iter_odd_holes(g, max_len), None) is not None


def is_hole(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` is a chordless odd cycle of length >= 5 in ``g``."""
    L = len(cycle)
    if L < 5 or L % 2 == 0 or len(set(cycle)) != L:
        return False
    if any(not 0 <= v < g.n for v in cycle):
        return False
    for i in range(L):
        for j in range(i + 1, L):
            consecutive = j == i + 1 or (i == 0 and j == L - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


# ---------------------------------------------------------------------------
# partial vertices and profiles


def partial_vertices(g: Graph, hole: Sequence[int]) -> dict[int, tuple[int, ...]]:
    """Map each vertex partial to ``hole`` to the cycle positions it is adjacent to."""
    if not is_hole(g, hole):
        raise GraphError(f"{list(hole)} is not an odd hole of the graph")
    on = mask_of(hole)
    out = {}
    L = len(hole)
    for x in bits(g.vertex_mask & ~on):
        hits = g.rows[x] & on
        if hits and hits != on:
            out[x] = tuple(i for i in range(L) if (hits >> hole[i]) & 1)
    return out


def cycle_distance(i: int, j: int, L: int) -> int:
    d = abs(i - j) % L
    return min(d, L - d)


def is_three_consecutive(profile: Sequence[int], L: int) -> bool:
    if len(profile) != 3:
        return False
    s = set(profile)
    return any({i, (i + 1) % L, (i + 2) % L} == s for i in profile)


def is_distance_two_pair(profile: Sequence[int], L: int) -> bool:
    return len(profile) == 2 and cycle_distance(profile[0], profile[1], L) == 2


def is_allowed_profile(profile: Sequence[int], L: int) -> bool:
    return is_three_consecutive(profile, L) or is_distance_two_pair(profile, L)


@dataclass(frozen=True)
class ProfileViolation:
    hole: Hole
    vertex: int
    profile: tuple[int, ...]


@dataclass(frozen=True)
class WellHoopedResult:
    well_hooped: bool
    violation: ProfileViolation | None = None

    def __bool__(self) -> bool:
        return self.well_hooped


def is_well_hooped(g: Graph, max_len: int | None = None, holes: Sequence[Hole] | None = None) -> WellHoopedResult:
    """Every partial vertex of every odd hole sees 3 consecutive cycle vertices or
    exactly 2 vertices at distance two along the cycle."""
    if holes is None:
        holes = enumerate_odd_holes(g, default_max_len(g) if max_len is None else max_len)
    for hole in holes:
        for x, prof in partial_vertices(g, hole).items():
            if not is_allowed_profile(prof, len(hole)):
                return WellHoopedResult(False, ProfileViolation(hole, x, prof))
    return WellHoopedResult(True)


# ---------------------------------------------------------------------------
# buoys


@dataclass(frozen=True)
class Buoy:
    sets: tuple[frozenset[int], ...]

    @property
    def length(self) -> int:
        return len(self.sets)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.sets)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def as_lists(self) -> list[list[int]]:
        return [sorted(a) for a in self.sets]


class BuoyPreconditionError(ValueError):
    """A buoy operation was applied to a hole or graph that is not well-hooped."""

    def __init__(self, message: str, violation: ProfileViolation | None = None):
        super().__init__(message)
        self.violation = violation


def _absorb_position(rows, x: int, set_masks: list[int]) -> int | None:
    L = len(set_masks)
    r = rows[x]
    for i in range(L):
        prev, nxt = set_masks[i - 1], set_masks[(i + 1) % L]
        if (r & prev) != prev or (r & nxt) != nxt:
            continue
        far = 0
        for j in range(L):
            if j not in (i, (i - 1) % L, (i + 1) % L):
                far |= set_masks[j]
        if not r & far:
            return i
    return None


def buoy_closure(g: Graph, hole: Sequence[int], *, reverse: bool = False) -> Buoy:
    """Grow the buoy of ``hole``: start from singletons and absorb outside vertices
    complete to A_{i-1}, A_{i+1} and anticomplete to the other sets, until no change.

    Vertices are scanned in ascending id (descending with ``reverse``).
    """
    for x, prof in partial_vertices(g, hole).items():
        if not is_allowed_profile(prof, len(hole)):
            raise BuoyPreconditionError(
                f"vertex {x} has profile {list(prof)} on hole {list(hole)}",
                ProfileViolation(tuple(hole), x, prof),
            )
    rows = g.rows
    set_masks = [1 << v for v in hole]
    inside = mask_of(hole)
    order = range(g.n - 1, -1, -1) if reverse else range(g.n)
    changed = True
    while changed:
        changed = False
        for x in order:
            if (inside >> x) & 1:
                continue
            i = _absorb_position(rows, x, set_masks)
            if i is not None:
                set_masks[i] |= 1 << x
                inside |= 1 << x
                changed = True
    buoy = Buoy(tuple(frozenset(bits(m)) for m in set_masks))
    broken = validate_buoy(g, buoy)
    if not broken.valid:
        raise BuoyPreconditionError(
            f"closure of hole {list(hole)} breaks {broken.invariant} at {list(broken.witness)}"
        )
    return buoy


@dataclass(frozen=True)
class BuoyCheck:
    valid: bool
    invariant: str | None = None
    witness: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


def validate_buoy(g: Graph, buoy: Buoy) -> BuoyCheck:
    """Check structure, consecutive join, non-consecutive non-join, maximality and
    that no outside vertex is partial to the buoy, in that order."""
    sets = buoy.sets
    L = len(sets)
    if L < 5 or L % 2 == 0:
        return BuoyCheck(False, "structure", (L,))
    seen: set[int] = set()
    for i, a in enumerate(sets):
        if not a:
            return BuoyCheck(False, "structure", (i,))
        if seen & a or any(not 0 <= v < g.n for v in a):
            return BuoyCheck(False, "structure", tuple(sorted(seen & a)) or (i,))
        seen |= a
    rows = g.rows
    masks = [mask_of(a) for a in sets]
    for i in range(L):
        nxt = masks[(i + 1) % L]
        for x in sorted(sets[i]):
            missing = nxt & ~rows[x]
            if missing:
                y = (missing & -missing).bit_length() - 1
                return BuoyCheck(False, "consecutive_join", tuple(sorted((x, y))))
    for i in range(L):
        far = 0
        for j in range(i + 2, L):
            if (j - i) % L not in (1, L - 1):
                far |= masks[j]
        for x in sorted(sets[i]):
            hit = rows[x] & far
            if hit:
                y = (hit & -hit).bit_length() - 1
                return BuoyCheck(False, "nonconsecutive_nonjoin", tuple(sorted((x, y))))
    inside = mask_of(seen)
    for x in bits(g.vertex_mask & ~inside):
        i = _absorb_position(rows, x, masks)
        if i is not None:
            return BuoyCheck(False, "maximality", (x, i))
    for x in bits(g.vertex_mask & ~inside):
        hits = rows[x] & inside
        if hits and hits != inside:
            y = (hits & -hits).bit_length() - 1
            z = (inside & ~hits & -(inside & ~hits)).bit_length() - 1
            return BuoyCheck(False, "not_distinguished", (x, y, z))
    return BuoyCheck(True)


def all_buoy_closures(g: Graph, max_len: int | None = None, holes: Sequence[Hole] | None = None) -> list[tuple[Hole, Buoy]]:
    """(hole, closure) for every odd hole, in hole order. Requires well-hooped input."""
    if holes is None:
        holes = enumerate_odd_holes(g, default_max_len(g) if max_len is None else max_len)
    wh = is_well_hooped(g, holes=holes)
    if not wh:
        raise BuoyPreconditionError("graph is not well-hooped", wh.violation)
    return [(h, buoy_closure(g, h)) for h in holes]


@dataclass(frozen=True)
class LaminarityResult:
    laminar: bool
    pair: tuple[Buoy, Buoy] | None = None
    holes: tuple[Hole, Hole] | None = None

    def __bool__(self) -> bool:
        return self.laminar


def buoy_laminarity_check(g: Graph, max_len: int | None = None, closures=None) -> LaminarityResult:
    """Any two buoy closures are vertex-disjoint or nested."""
    if closures is None:
        closures = all_buoy_closures(g, max_len)
    distinct: dict[int, tuple[Hole, Buoy]] = {}
    for h, b in closures:
        distinct.setdefault(b.mask, (h, b))
    items = list(distinct.items())
    for i, (m1, (h1, b1)) in enumerate(items):
        for m2, (h2, b2) in items[i + 1:]:
            common = m1 & m2
            if common and common != m1 and common != m2:
                return LaminarityResult(False, (b1, b2), (h1, h2))
    return LaminarityResult(True)


@dataclass(frozen=True)
class BuoyPartition:
    buoys: tuple[Buoy, ...]
    leftover: tuple[int, ...]


def partition_into_buoys(g: Graph, max_len: int | None = None, closures=None) -> BuoyPartition:
    """Maximal buoy closures, taken greedily by least vertex, plus the uncovered vertices."""
    if closures is None:
        closures = all_buoy_closures(g, max_len)
    distinct: dict[int, Buoy] = {}
    for _, b in closures:
        distinct.setdefault(b.mask, b)
    masks = list(distinct)
    maximal = [m for m in masks if not any(m != o and m & o == m for o in masks)]
    maximal.sort(key=lambda m: (m & -m).bit_length())
    chosen = []
    covered = 0
    for m in maximal:
        if not m & covered:
            chosen.append(distinct[m])
            covered |= m
    return BuoyPartition(tuple(chosen), tuple(bits(g.vertex_mask & ~covered)))


@dataclass(frozen=True)
class Quotient:
    graph: Graph
    mapping: tuple[int, ...]  # original vertex -> quotient vertex


def shrink(g: Graph, buoys: Sequence[Buoy], leftover: Sequence[int]) -> Quotient:
    """Contract each buoy to one vertex (buoys first, then leftover vertices ascending)."""
    mapping = [-1] * g.n
    k = 0
    for b in buoys:
        for v in b.vertices:
            mapping[v] = k
        k += 1
    for v in sorted(leftover):
        mapping[v] = k
        k += 1
    if -1 in mapping:
        raise GraphError(f"vertex {mapping.index(-1)} is in no buoy and not leftover")
    edges = {(min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) for u, v in g.edges() if mapping[u] != mapping[v]}
    return Quotient(Graph.from_edges(k, sorted(edges)), tuple(mapping))


@dataclass(frozen=True)
class BuoyKind:
    kind: str  # "full", "independent" or "mixed"
    both: bool = False


def buoy_kind(g: Graph, buoy: Buoy) -> BuoyKind:
    rows = g.rows
    stable = full = True
    for a in buoy.sets:
        m = mask_of(a)
        for v in a:
            inner = rows[v] & m
            if inner:
                stable = False
            if inner != m & ~(1 << v):
                full = False
    if full:
        return BuoyKind("full", both=stable)
    if stable:
        return BuoyKind("independent")
    return BuoyKind("mixed")
