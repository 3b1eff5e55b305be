"""Simple undirected graphs on vertices 0..n-1, stored as adjacency bitmasks.

Row ``v`` of a graph is an int whose bit ``u`` is set iff ``uv`` is an edge, so
edge queries and neighbourhood intersections are single integer operations.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

DEFAULT_VERTEX_CAP = 64


class GraphError(ValueError):
    """Invalid graph construction or vertex reference."""


class VertexCapError(GraphError):
    def __init__(self, n: int, cap: int, offset: int | None = None):
        where = f" at byte {offset}" if offset is not None else ""
        super().__init__(f"vertex count {n} exceeds cap {cap}{where}")
        self.n = n
        self.cap = cap
        self.offset = offset


class Graph6Error(ValueError):
    """Base class for graph6 decode failures; ``offset`` is the failing byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class Graph6HeaderError(Graph6Error):
    pass


class Graph6TruncatedError(Graph6Error):
    pass


class Graph6BodyError(Graph6Error):
    """Illegal character, nonzero padding or trailing bytes in the edge section."""


class Graph6CapError(Graph6Error, VertexCapError):
    def __init__(self, n: int, cap: int, offset: int):
        # bypass the cooperative chain; VertexCapError has a different signature
        ValueError.__init__(self, f"vertex count {n} exceeds cap {cap} (byte {offset})")
        self.offset = offset
        self.n = n
        self.cap = cap


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph.

    >>> g = Graph.from_edges(3, [(0, 1), (1, 2)])
    >>> g.has_edge(0, 1), g.has_edge(0, 2), g.m
    (True, False, 2)
    """

    __slots__ = ("_n", "_rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise GraphError("negative vertex count")
        if len(rows) != n:
            raise GraphError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in rows)
        for v, r in enumerate(rows):
            if r & ~full:
                raise GraphError(f"row {v} references a vertex >= {n}")
            if (r >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(r):
                if not (rows[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_rows", rows)

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee symmetric loop-free rows
        g = object.__new__(cls)
        object.__setattr__(g, "_n", n)
        object.__setattr__(g, "_rows", rows)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in bits(self._rows[u] >> (u + 1) << (u + 1))]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph, (self._n, self._rows))


# ---------------------------------------------------------------------------
# named constructors


def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# ---------------------------------------------------------------------------
# operations


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabelled 0..k-1 in ascending original order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    rows = []
    for v in keep:
        r = g.rows[v]
        rows.append(sum(1 << i for i, u in enumerate(keep) if (r >> u) & 1))
    return Graph._trusted(len(keep), tuple(rows))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    drop = set(vertices)
    return induced(g, [v for v in range(g.n) if v not in drop])


def disjoint_union(g: Graph, h: Graph, *, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    return compose("disjoint_union", g, h, cap=cap)


def join(g: Graph, h: Graph, *, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    return compose("join", g, h, cap=cap)


def compose(op: str, g: Graph, h: Graph, *, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """``disjoint_union`` places ``h`` after ``g``; ``join`` also adds every cross edge."""
    if op not in ("join", "disjoint_union"):
        raise GraphError(f"unknown composition {op!r}")
    n = g.n + h.n
    if n > cap:
        raise VertexCapError(n, cap)
    gmask = g.vertex_mask
    hmask = h.vertex_mask << g.n
    cross_g = hmask if op == "join" else 0
    cross_h = gmask if op == "join" else 0
    rows = [r | cross_g for r in g.rows] + [(r << g.n) | cross_h for r in h.rows]
    return Graph._trusted(n, tuple(rows))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    return component_of(g, 0, g.vertex_mask) == g.vertex_mask


def component_of(g: Graph, v: int, within: int) -> int:
    """Mask of the component containing ``v`` in the subgraph induced by ``within``."""
    seen = 1 << v
    frontier = seen
    rows = g.rows
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= rows[u]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph) -> list[list[int]]:
    left = g.vertex_mask
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = component_of(g, v, left)
        out.append(list(bits(comp)))
        left &= ~comp
    return out


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(g.rows[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> str:
    out = bytearray(_encode_n(g.n))
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


GRAPH6_HEADER = ">>graph6<<"


def from_graph6(text: str | bytes, *, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Decode one graph6 line. A leading ``>>graph6<<`` header is skipped.

    >>> from_graph6("A_").edges()
    [(0, 1)]
    """
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.rstrip("\r\n")
    base = 0
    if text.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
    data = text[base:]
    if not data:
        raise Graph6HeaderError("missing vertex count", base)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            cls = Graph6HeaderError if i == 0 else Graph6BodyError
            raise cls(f"illegal character {ch!r}", base + i)
    codes = [ord(ch) - 63 for ch in data]
    pos = 0
    if codes[0] != 63:
        n = codes[0]
        pos = 1
    elif len(codes) >= 2 and codes[1] == 63:
        if len(codes) < 8:
            raise Graph6HeaderError("truncated 8-byte vertex count", base + len(codes))
        n = 0
        for c in codes[2:8]:
            n = (n << 6) | c
        pos = 8
    else:
        if len(codes) < 4:
            raise Graph6HeaderError("truncated 4-byte vertex count", base + len(codes))
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        pos = 4
    if n > cap:
        raise Graph6CapError(n, cap, base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = codes[pos:]
    if len(body) < nbytes:
        raise Graph6TruncatedError(f"expected {nbytes} edge bytes, found {len(body)}", base + len(codes))
    if len(body) > nbytes:
        raise Graph6BodyError("trailing bytes after edge section", base + pos + nbytes)
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for b, c in enumerate(body):
        for shift in range(5, -1, -1):
            if k == nbits:
                if (c >> shift) & 1:
                    raise Graph6BodyError("nonzero padding bit", base + pos + b)
                continue
            if (c >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._trusted(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[str]:
    """Yield graph6 payload lines, dropping blank lines and a standalone header."""
    for line in lines:
        line = line.strip()
        if not line or line == GRAPH6_HEADER:
            continue
        yield line


# ---------------------------------------------------------------------------
# edge-list text: "n m" header, then one "u v" line per edge


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str, *, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise GraphError("edge list must start with an 'n m' header")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
    except ValueError as exc:
        raise GraphError(f"bad edge-list header {' '.join(lines[0])!r}") from exc
    if n > cap:
        raise VertexCapError(n, cap)
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for lineno, parts in enumerate(body, start=2):
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    g = Graph.from_edges(n, edges)
    if g.m != m:
        raise GraphError("duplicate edges in edge list")
    return g
