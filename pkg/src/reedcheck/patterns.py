"""Catalog of forbidden configurations and induced-subgraph detection."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graph import (
    Graph,
    bits,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    path_graph,
)


class UnknownPatternError(KeyError):
    pass


_FIXED_EDGES = {
    "Chair": [(0, 1), (1, 2), (1, 3), (3, 4)],
    "House": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)],
    "Bull": [(1, 2), (2, 3), (1, 3), (0, 1), (3, 4)],
    "Dart": [(0, 1), (0, 2), (3, 1), (3, 2), (0, 3), (3, 4)],
    "Kite": [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)],
    "Gem": [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
    "Diamond": [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
    "Claw": [(0, 1), (0, 2), (0, 3)],
}


def _build_catalog() -> dict[str, Graph]:
    cat = {name: Graph.from_edges(5 if name not in ("Diamond", "Claw") else 4, edges) for name, edges in _FIXED_EDGES.items()}
    for k in range(1, 8):
        cat[f"P{k}"] = path_graph(k)
        cat[f"K{k}"] = complete_graph(k)
        cat[f"S{k}"] = empty_graph(k)
        if k >= 3:
            cat[f"C{k}"] = cycle_graph(k)
    for k in range(1, 8):
        cat[f"coP{k}"] = complement(cat[f"P{k}"])
    for k in range(3, 8):
        cat[f"coC{k}"] = complement(cat[f"C{k}"])
    cat["coP2uP3"] = complement(disjoint_union(path_graph(2), path_graph(3)))
    cat["K3uK1+K1"] = join(disjoint_union(complete_graph(3), complete_graph(1)), complete_graph(1))
    cat["K1+C4"] = join(complete_graph(1), cycle_graph(4))
    return cat


CATALOG: dict[str, Graph] = _build_catalog()

ALIASES = {
    "P5bar": "coP5",
    "P6bar": "coP6",
    "W4": "K1+C4",
    "(K3uK1)+K1": "K3uK1+K1",
    "P2uP3bar": "coP2uP3",
}


def pattern(name: str) -> Graph:
    key = ALIASES.get(name, name)
    try:
        return CATALOG[key]
    except KeyError:
        raise UnknownPatternError(f"unknown pattern {name!r}") from None


# ---------------------------------------------------------------------------
# induced embeddings


def find_induced(g: Graph, p: Graph) -> tuple[int, ...] | None:
    """Lexicographically least injective map m with edge(m(a), m(b)) <=> edge(a, b),
    as the tuple (m(0), ..., m(k-1)); ``None`` when ``p`` is not an induced subgraph."""
    k = p.n
    if k > g.n:
        return None
    if k == 0:
        return ()
    grows = g.rows
    prows = p.rows
    full = g.vertex_mask
    gdeg = g.degrees()
    pdeg = p.degrees()
    # candidate masks by degree in G and in the complement of G
    by_vertex = []
    for a in range(k):
        need_in, need_out = pdeg[a], (k - 1) - pdeg[a]
        m = 0
        for v in range(g.n):
            if gdeg[v] >= need_in and (g.n - 1 - gdeg[v]) >= need_out:
                m |= 1 << v
        if not m:
            return None
        by_vertex.append(m)
    image = [0] * k

    def place(a: int, cand: int) -> bool:
        for v in bits(cand):
            image[a] = v
            if a + 1 == k:
                return True
            nxt = by_vertex[a + 1]
            pr = prows[a + 1]
            used = 0
            for b in range(a + 1):
                w = image[b]
                used |= 1 << w
                if (pr >> b) & 1:
                    nxt &= grows[w]
                else:
                    nxt &= full & ~grows[w]
            nxt &= ~used
            if nxt and place(a + 1, nxt):
                return True
        return False

    if place(0, by_vertex[0]):
        return tuple(image)
    return None


def contains_induced(g: Graph, p: Graph) -> bool:
    return find_induced(g, p) is not None


@dataclass(frozen=True)
class ClassExpr:
    forbidden: tuple[str, ...]

    def __post_init__(self):
        if not self.forbidden:
            raise ValueError("a class expression needs at least one pattern")
        for name in self.forbidden:
            pattern(name)

    @classmethod
    def parse(cls, text: str) -> ClassExpr:
        """``"P5,House,Dart"`` means (P5, House, Dart)-free."""
        names = tuple(t.strip() for t in text.split(",") if t.strip())
        return cls(names)

    def __str__(self) -> str:
        return ",".join(self.forbidden)


def parse_class_list(text: str) -> list[ClassExpr]:
    return [ClassExpr.parse(part) for part in text.split(";") if part.strip()]


@dataclass(frozen=True)
class Membership:
    member: bool
    pattern: str | None = None
    embedding: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.member

    def as_dict(self) -> dict:
        if self.member:
            return {"member": True}
        return {"member": False, "pattern": self.pattern, "embedding": list(self.embedding)}


def is_class_member(g: Graph, cls: ClassExpr | Sequence[str] | str) -> Membership:
    if isinstance(cls, str):
        cls = ClassExpr.parse(cls)
    elif not isinstance(cls, ClassExpr):
        cls = ClassExpr(tuple(cls))
    for name in cls.forbidden:
        emb = find_induced(g, pattern(name))
        if emb is not None:
            return Membership(False, name, emb)
    return Membership(True)


def is_free_of(g: Graph, names: Iterable[str]) -> bool:
    return all(find_induced(g, pattern(n)) is None for n in names)


def isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and find_induced(g, h) is not None


def _catalog_self_check() -> None:
    identities = [
        ("House = co-P5", isomorphic(CATALOG["House"], complement(path_graph(5)))),
        ("Gem = P4 + K1", isomorphic(CATALOG["Gem"], join(path_graph(4), complete_graph(1)))),
        ("Kite contains Diamond", contains_induced(CATALOG["Kite"], CATALOG["Diamond"])),
        ("Dart contains Diamond", contains_induced(CATALOG["Dart"], CATALOG["Diamond"])),
        ("Chair contains P4", contains_induced(CATALOG["Chair"], CATALOG["P4"])),
    ]
    broken = [name for name, ok in identities if not ok]
    if broken:
        raise RuntimeError(f"pattern catalog identities fail: {broken}")


_catalog_self_check()


def embedding_is_induced(g: Graph, p: Graph, emb: Sequence[int]) -> bool:
    if len(emb) != p.n or len(set(emb)) != p.n:
        return False
    return all(
        g.has_edge(emb[a], emb[b]) == p.has_edge(a, b)
        for a in range(p.n)
        for b in range(a + 1, p.n)
    )
