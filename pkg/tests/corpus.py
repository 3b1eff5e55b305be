"""Builds the exhaustive small-graph corpus used by the sweeps.

Graphs on up to 7 vertices come from the networkx graph atlas. Graphs on 8
vertices are every one-vertex extension of a 7-vertex atlas graph, reduced to
isomorphism classes with networkx's VF2 matcher. Nothing here uses reedcheck,
so the corpus is independent of the code it exercises.

Run ``python tests/corpus.py`` to regenerate ``tests/data/graphs{n}.g6``.
"""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import networkx as nx

DATA = Path(__file__).parent / "data"

# OEIS A000088 / A001349, n = 0..8
GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346]
CONNECTED_COUNTS = [0, 1, 1, 2, 6, 21, 112, 853, 11117]


def _invariant(g: nx.Graph) -> tuple:
    tri = nx.triangles(g)
    deg = dict(g.degree())
    return tuple(sorted((deg[v], tri[v], tuple(sorted(deg[u] for u in g[v]))) for v in g))


def atlas_by_order() -> dict[int, list[nx.Graph]]:
    out: dict[int, list[nx.Graph]] = defaultdict(list)
    for g in nx.graph_atlas_g():
        out[g.number_of_nodes()].append(g)
    return out


def extend_by_one(graphs: list[nx.Graph]) -> list[nx.Graph]:
    n = graphs[0].number_of_nodes()
    buckets: dict[tuple, list[nx.Graph]] = defaultdict(list)
    found: list[nx.Graph] = []
    for g in graphs:
        for mask in range(1 << n):
            h = nx.convert_node_labels_to_integers(g)
            h.add_node(n)
            h.add_edges_from((n, v) for v in range(n) if (mask >> v) & 1)
            key = (h.number_of_edges(), _invariant(h))
            if any(nx.is_isomorphic(h, o) for o in buckets[key]):
                continue
            buckets[key].append(h)
            found.append(h)
    return found


def generate(max_n: int = 8) -> dict[int, list[str]]:
    atlas = atlas_by_order()
    out = {}
    for n in range(1, min(max_n, 7) + 1):
        out[n] = [nx.to_graph6_bytes(g, header=False).decode().strip() for g in atlas[n]]
    if max_n >= 8:
        eight = extend_by_one(atlas[7])
        out[8] = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in eight)
    return out


def load(n: int) -> list[str]:
    return (DATA / f"graphs{n}.g6").read_text().split()


if __name__ == "__main__":
    DATA.mkdir(exist_ok=True)
    for n, lines in generate().items():
        assert len(lines) == GRAPH_COUNTS[n], (n, len(lines))
        (DATA / f"graphs{n}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines))
