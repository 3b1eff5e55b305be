"""Re-verify the witnesses of failed checks in a JSONL report.

Deliberately shares no code with the solvers: graphs are decoded here into
plain adjacency sets and every quantity is recomputed by brute force, so a
witness is only accepted if it stands on its own. Intended for desk-scale
graphs (a few dozen vertices at most).
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from itertools import combinations, product

Adj = list[set[int]]


def decode(text: str) -> Adj:
    data = [ord(c) - 63 for c in text.strip()]
    if data[0] == 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    flat = [(byte >> (5 - k)) & 1 for byte in data for k in range(6)]
    adj: Adj = [set() for _ in range(n)]
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if flat[pos]:
                adj[i].add(j)
                adj[j].add(i)
            pos += 1
    return adj


def is_clique(adj: Adj, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return len(set(vs)) == len(vs) and all(b in adj[a] for a, b in combinations(vs, 2))


def omega(adj: Adj, within: Iterable[int] | None = None) -> int:
    pool = list(range(len(adj))) if within is None else sorted(within)
    best = 0
    for k in range(1, len(pool) + 1):
        if any(is_clique(adj, c) for c in combinations(pool, k)):
            best = k
        else:
            break
    return best


def colourable(adj: Adj, k: int, within: list[int] | None = None) -> bool:
    order = list(range(len(adj))) if within is None else list(within)
    colour: dict[int, int] = {}

    def go(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colour[u] for u in adj[v] if u in colour}
        for c in range(min(used + 1, k)):
            if c not in taken:
                colour[v] = c
                if go(i + 1, max(used, c + 1)):
                    return True
                del colour[v]
        return False

    return go(0, 0)


def chi(adj: Adj, within: list[int] | None = None) -> int:
    size = len(adj) if within is None else len(within)
    k = 0
    while not colourable(adj, k, within):
        k += 1
        if k > size:
            break
    return k


def sub(adj: Adj, vs: Iterable[int]) -> Adj:
    vs = sorted(vs)
    index = {v: i for i, v in enumerate(vs)}
    return [{index[u] for u in adj[v] if u in index} for v in vs]


def is_odd_hole(adj: Adj, cycle: list[int]) -> bool:
    L = len(cycle)
    if L < 5 or L % 2 == 0 or len(set(cycle)) != L:
        return False
    for i, j in combinations(range(L), 2):
        consecutive = j - i == 1 or (i == 0 and j == L - 1)
        if (cycle[j] in adj[cycle[i]]) != consecutive:
            return False
    return True


def induces_odd_hole(adj: Adj, vs: tuple[int, ...]) -> bool:
    if len(vs) < 5 or len(vs) % 2 == 0:
        return False
    s = set(vs)
    if any(len(adj[v] & s) != 2 for v in vs):
        return False
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        for u in adj[stack.pop()] & s:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == s


def odd_hole_sets(adj: Adj) -> list[frozenset[int]]:
    n = len(adj)
    return [frozenset(c) for k in range(5, n + 1, 2) for c in combinations(range(n), k) if induces_odd_hole(adj, c)]


def connected(adj: Adj, vs: Iterable[int] | None = None) -> bool:
    vs = set(range(len(adj))) if vs is None else set(vs)
    if not vs:
        return False
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        for u in adj[stack.pop()] & vs:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == vs


def complement(adj: Adj) -> Adj:
    n = len(adj)
    return [set(range(n)) - adj[v] - {v} for v in range(n)]


def reed(om: int, de: int) -> int:
    return (om + de + 2) // 2


# ---------------------------------------------------------------------------
# per-check verifiers; each returns None when the witness stands, else a reason


def _invariants_match(adj: Adj, w: dict) -> str | None:
    om, de, ch = omega(adj), max(len(a) for a in adj), chi(adj)
    if (om, de, ch) != (w.get("omega"), w.get("delta"), w.get("chi")):
        return f"recomputed omega/delta/chi {om}/{de}/{ch} differ from witness"
    if "clique" in w and not (is_clique(adj, w["clique"]) and len(w["clique"]) == om):
        return "stored clique is not a maximum clique"
    return None


def v_reed(adj: Adj, w: dict) -> str | None:
    bad = _invariants_match(adj, w)
    if bad:
        return bad
    if w["chi"] <= reed(w["omega"], w["delta"]):
        return "Reed's bound actually holds"
    return None


def v_monotone(adj: Adj, w: dict) -> str | None:
    s = w["subset"]
    h = sub(adj, s)
    so, sc, sd = omega(h), chi(h), max((len(a) for a in h), default=0)
    wo, wc, wd = omega(adj), chi(adj), max(len(a) for a in adj)
    if {"omega": so, "chi": sc, "delta": sd} != w["sub"]:
        return "subgraph invariants differ from witness"
    if so > wo or sc > wc or sd > wd:
        return None
    if sc == wc and sc <= reed(so, sd) and wc > reed(wo, wd):
        return None
    return "no monotonicity or lifting failure on recomputation"


def v_kcrit(adj: Adj, w: dict) -> str | None:
    v, k = w["vertex"], w["k"]
    n = len(adj)
    if chi(adj) != k:
        return "chromatic number differs"
    for u in range(n):
        if chi(adj, [x for x in range(n) if x != u]) >= k:
            return "graph is not k-critical"
    om_v = 1 + omega(adj, adj[v])
    if not 2 * k > len(adj[v]) + om_v + 1:
        return "vertex does not satisfy the degree inequality"
    if any(v in h for h in odd_hole_sets(adj)):
        return "vertex lies on an odd hole"
    return None


def _profile(adj: Adj, w: dict) -> tuple[list[int], list[int]] | str:
    hole, x = w["hole"], w["vertex"]
    if not is_odd_hole(adj, hole) or x in hole:
        return "stored hole is not an odd hole avoiding the vertex"
    prof = [i for i, v in enumerate(hole) if v in adj[x]]
    if prof != list(w["profile"]) or not 0 < len(prof) < len(hole):
        return "vertex profile differs or vertex is not partial"
    return hole, prof


def _consecutive3(prof: list[int], L: int) -> bool:
    return len(prof) == 3 and any({i, (i + 1) % L, (i + 2) % L} == set(prof) for i in prof)


def _dist2(prof: list[int], L: int) -> bool:
    if len(prof) != 2:
        return False
    d = abs(prof[0] - prof[1]) % L
    return min(d, L - d) == 2


def _profile_verifier(allowed):
    def verify(adj: Adj, w: dict) -> str | None:
        got = _profile(adj, w)
        if isinstance(got, str):
            return got
        hole, prof = got
        if allowed(prof, len(hole)):
            return "profile is allowed"
        return None

    return verify


def _buoy_problem(adj: Adj, sets: list[list[int]]) -> str | None:
    L = len(sets)
    flat = [v for s in sets for v in s]
    if L < 5 or L % 2 == 0 or len(flat) != len(set(flat)) or any(not s for s in sets):
        return "malformed buoy"
    inside = set(flat)
    for i, j in combinations(range(L), 2):
        near = (j - i) % L in (1, L - 1)
        for a, b in product(sets[i], sets[j]):
            if (b in adj[a]) != near:
                return "join/non-join condition broken"
    for x in set(range(len(adj))) - inside:
        seen = adj[x] & inside
        if seen and seen != inside:
            return f"outside vertex {x} is partial"
        for i in range(L):
            if set(sets[i - 1]) | set(sets[(i + 1) % L]) == seen:
                return f"outside vertex {x} could join set {i}"
    return None


def v_laminar(adj: Adj, w: dict) -> str | None:
    b1, b2 = w["buoys"]
    for b in (b1, b2):
        bad = _buoy_problem(adj, b)
        if bad:
            return bad
    s1 = {v for s in b1 for v in s}
    s2 = {v for s in b2 for v in s}
    if s1 & s2 and not s1 <= s2 and not s2 <= s1:
        return None
    return "buoys are disjoint or nested"


def v_transversal(adj: Adj, w: dict) -> str | None:
    holes = odd_hole_sets(adj)
    t = set(w["transversal"])
    if not all(h & t for h in holes):
        return "stored set misses an odd hole"
    for k in range(len(t)):
        if any(all(h & set(c) for h in holes) for c in combinations(range(len(adj)), k)):
            return "a smaller transversal exists"
    om = omega(adj)
    if om != w["omega"]:
        return "omega differs"
    q = w["clique_in_w"]
    if not (set(q) <= t and is_clique(adj, q) and len(q) >= om):
        return "stored clique in W is not a clique of size omega"
    return None


def v_quad(adj: Adj, w: dict) -> str | None:
    om, ch = omega(adj), chi(adj)
    if (om, ch) != (w["omega"], w["chi"]):
        return "omega/chi differ"
    bound = sum(w["stage_omegas"])
    if ch > bound or bound > om * (om + 1) // 2:
        return None
    return "layered bound holds on recomputation"


def v_full(adj: Adj, w: dict) -> str | None:
    om, ch = omega(adj), chi(adj)
    if ch > (3 * om + 1) // 2:
        return None
    return "chi <= ceil(3 omega / 2) on recomputation"


def v_indep(adj: Adj, w: dict) -> str | None:
    om, ch, de = omega(adj), chi(adj), max(len(a) for a in adj)
    if ch > reed(om, de):
        return None
    return "Reed's bound holds on recomputation"


def v_seinsche(adj: Adj, w: dict) -> str | None:
    n = len(adj)
    for quad in combinations(range(n), 4):
        h = sub(adj, quad)
        degs = sorted(len(a) for a in h)
        if degs == [1, 1, 2, 2] and connected(h):
            return "graph contains an induced P4"
    if not connected(adj):
        return "graph is disconnected"
    if not connected(complement(adj)):
        return "complement is disconnected"
    return None


def v_quotient(adj: Adj, w: dict) -> str | None:
    buoys, leftover = w["buoys"], w["leftover"]
    groups = [sorted(v for s in b for v in s) for b in buoys] + [[v] for v in sorted(leftover)]
    flat = [v for g in groups for v in g]
    if sorted(flat) != list(range(len(adj))):
        return "buoys and leftover do not partition the vertices"
    for b in buoys:
        bad = _buoy_problem(adj, b)
        if bad:
            return bad
    owner = {v: i for i, g in enumerate(groups) for v in g}
    q: Adj = [set() for _ in groups]
    for v in range(len(adj)):
        for u in adj[v]:
            if owner[u] != owner[v]:
                q[owner[v]].add(owner[u])
    c5 = w["quotient_c5"]
    if not is_odd_hole(q, c5) or len(c5) != 5:
        return "stored quotient cycle is not an induced C5"
    return None


_wh_profile = _profile_verifier(lambda p, L: _consecutive3(p, L) or _dist2(p, L))


def _or_precondition(verify):
    """Buoy-based checks fail early with a profile witness when the graph is
    not actually well-hooped."""

    def wrapped(adj: Adj, w: dict) -> str | None:
        if "error" in w:
            return _wh_profile(adj, w) if "hole" in w else "precondition failure without a profile witness"
        return verify(adj, w)

    return wrapped


VERIFIERS = {
    "reed": v_reed,
    "rabern": v_reed,
    "class_reed_c4p5": v_reed,
    "class_reed_p5p5barDart": v_reed,
    "class_reed_p5kite": v_reed,
    "class_reed_chairBullF": v_reed,
    "chi_monotone": v_monotone,
    "kcrit_hole": v_kcrit,
    "wh_p5": _wh_profile,
    "chair_bull_profile": _profile_verifier(lambda p, L: _consecutive3(p, L) or (L == 5 and len(p) == 4)),
    "c4p5_profile": _profile_verifier(_consecutive3),
    "p5kite_profile": _profile_verifier(_dist2),
    "laminar": _or_precondition(v_laminar),
    "transversal": v_transversal,
    "quad_bound": v_quad,
    "indep_buoy": _or_precondition(v_indep),
    "full_buoy": _or_precondition(v_full),
    "seinsche": v_seinsche,
    "quotient_c5free": _or_precondition(v_quotient),
}


def replay(report_lines: Iterable[str], input_lines: Iterable[str]) -> tuple[list[dict], bool]:
    """Check every failure in the report; returns per-failure rows and overall success."""
    inputs = [ln.strip() for ln in input_lines if ln.strip() and ln.strip() != ">>graph6<<"]
    rows = []
    ok = True
    for raw in report_lines:
        if not raw.strip():
            continue
        rec = json.loads(raw)
        idx = rec["input_index"]
        if idx >= len(inputs) or inputs[idx] != rec["graph6"]:
            rows.append({"input_index": idx, "check": None, "reproduced": False, "reason": "graph6 does not match input"})
            ok = False
            continue
        for c in rec.get("checks", ()):
            if c["verdict"] != "fail":
                continue
            verify = VERIFIERS.get(c["id"])
            if verify is None:
                reason = "no verifier for this check"
            else:
                try:
                    reason = verify(decode(rec["graph6"]), c.get("witness") or {})
                except (KeyError, TypeError, ValueError, IndexError) as exc:
                    reason = f"malformed witness: {exc!r}"
            rows.append({"input_index": idx, "check": c["id"], "reproduced": reason is None, "reason": reason})
            ok &= reason is None
    return rows, ok
