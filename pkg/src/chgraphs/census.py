"""Combinatorial invariants: distance parameters, strongly regular /
distance-regular recognition, local structure, mu-graphs, and the small
structural obstructions used by the homogeneity checks.

Intersection numbers are computed over *all* ordered vertex pairs, never
sampled; a parameter is reported only when it is constant over every pair at
the relevant distance ("well defined").
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Optional

from .graphs import Graph, _bits


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------


def distance_levels(g: Graph, u: int) -> list:
    """Bitmasks of the distance-i spheres around u (index = distance)."""
    seen = 1 << u
    frontier = seen
    levels = [seen]
    while True:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        if not frontier:
            return levels
        seen |= frontier
        levels.append(frontier)


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for forests."""
    best = None
    n = g.n
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            if best is not None and dist[v] * 2 >= best:
                break
            for u in _bits(g.adj[v]):
                if dist[u] == -1:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v] and dist[u] >= dist[v]:
                    c = dist[u] + dist[v] + 1
                    if best is None or c < best:
                        best = c
    return best


# ---------------------------------------------------------------------------
# parameter report
# ---------------------------------------------------------------------------


@dataclass
class ParameterReport:
    n: int
    connected: bool
    regular: bool
    valency: Optional[int]
    girth: Optional[int]
    diameter: Optional[int]
    k: list = dc_field(default_factory=list)  # sphere sizes k_0..k_d (when well defined)
    c: list = dc_field(default_factory=list)  # c_1..c_d; None where not well defined
    a: list = dc_field(default_factory=list)
    b: list = dc_field(default_factory=list)
    srg: Optional[tuple] = None  # (v, k, lambda, mu)
    intersection_array: Optional[tuple] = None  # ({b_0..b_{d-1}}, {c_1..c_d})
    components: Optional[list] = None  # per-component reports when disconnected

    def to_dict(self):
        d = {
            "n": self.n,
            "connected": self.connected,
            "regular": self.regular,
            "valency": self.valency,
            "girth": self.girth,
            "diameter": self.diameter,
            "k": self.k,
            "c": self.c,
            "a": self.a,
            "b": self.b,
            "srg": list(self.srg) if self.srg else None,
            "intersection_array": [list(x) for x in self.intersection_array]
            if self.intersection_array
            else None,
        }
        if self.components is not None:
            d["components"] = [c.to_dict() for c in self.components]
        return d


def parameters(g: Graph) -> ParameterReport:
    n = g.n
    degs = [g.degree(v) for v in range(n)]
    regular = len(set(degs)) == 1
    gr = girth(g)
    if not g.is_connected():
        comps = [parameters(g.induced(c)) for c in g.components()]
        return ParameterReport(
            n=n,
            connected=False,
            regular=regular,
            valency=degs[0] if regular else None,
            girth=gr,
            diameter=None,
            components=comps,
        )
    levels = [distance_levels(g, u) for u in range(n)]
    diam = max(len(l) for l in levels) - 1
    eccentric = min(len(l) for l in levels) - 1
    # sphere sizes
    k = []
    for i in range(diam + 1):
        sizes = {lv[i].bit_count() if i < len(lv) else 0 for lv in levels}
        k.append(sizes.pop() if len(sizes) == 1 else None)
    c = [None] * (diam + 1)
    a = [None] * (diam + 1)
    b = [None] * (diam + 1)
    for i in range(1, diam + 1):
        cvals, avals, bvals = set(), set(), set()
        for u in range(n):
            lv = levels[u]
            if i >= len(lv):
                continue
            below = lv[i - 1]
            here = lv[i]
            above = lv[i + 1] if i + 1 < len(lv) else 0
            for v in _bits(here):
                row = g.adj[v]
                cvals.add((row & below).bit_count())
                avals.add((row & here).bit_count())
                bvals.add((row & above).bit_count())
        c[i] = cvals.pop() if len(cvals) == 1 else None
        a[i] = avals.pop() if len(avals) == 1 else None
        b[i] = bvals.pop() if len(bvals) == 1 else None
    srg = None
    if regular and diam == 2 and a[1] is not None and c[2] is not None:
        srg = (n, degs[0], a[1], c[2])
    ia = None
    if (
        regular
        and eccentric == diam
        and all(c[i] is not None and a[i] is not None and b[i] is not None for i in range(1, diam + 1))
    ):
        val = degs[0]
        bs = tuple([val] + [val - a[i] - c[i] for i in range(1, diam)])
        cs = tuple(c[1:])
        ia = (bs, cs)
    return ParameterReport(
        n=n,
        connected=True,
        regular=regular,
        valency=degs[0] if regular else None,
        girth=gr,
        diameter=diam,
        k=k,
        c=c[1:],
        a=a[1:],
        b=b[1:],
        srg=srg,
        intersection_array=ia,
    )


# ---------------------------------------------------------------------------
# small-graph isomorphism (backtracking)
# ---------------------------------------------------------------------------


def _fingerprint(g: Graph) -> tuple:
    degs = sorted(g.degree(v) for v in range(g.n))
    tri = 0
    common = []
    for u, v in combinations(range(g.n), 2):
        cnt = (g.adj[u] & g.adj[v]).bit_count()
        common.append((g.has_edge(u, v), cnt))
        if g.has_edge(u, v):
            tri += cnt
    return (g.n, tuple(degs), tri // 3, tuple(sorted(common)))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if sorted(g1.degree(v) for v in range(g1.n)) != sorted(g2.degree(v) for v in range(g2.n)):
        return False
    n = g1.n
    # order g1's vertices so each new vertex touches the already-mapped ones
    order = []
    placed = set()
    degs = [g1.degree(v) for v in range(n)]
    while len(order) < n:
        best, best_key = None, None
        for v in range(n):
            if v in placed:
                continue
            attach = sum(1 for u in order if g1.has_edge(u, v))
            key = (attach, degs[v])
            if best is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed.add(best)
    mapping = [-1] * n
    used = [False] * g2.n

    def bt(i):
        if i == n:
            return True
        v = order[i]
        for w in range(g2.n):
            if used[w] or g2.degree(w) != degs[v]:
                continue
            ok = True
            for u in order[:i]:
                if g1.has_edge(u, v) != g2.has_edge(mapping[u], w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if bt(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return bt(0)


# ---------------------------------------------------------------------------
# local structure
# ---------------------------------------------------------------------------


def local_graph(g: Graph, u: int) -> Graph:
    nbrs = g.neighbors(u)
    if not nbrs:
        raise ValueError(f"vertex {u} is isolated")
    return g.induced(nbrs)


def _clique_decomposition(loc: Graph):
    """(count, size) if loc is a disjoint union of equal cliques, else None."""
    comps = loc.components()
    sizes = {len(c) for c in comps}
    if len(sizes) != 1:
        return None
    s = sizes.pop()
    for comp in comps:
        for v in comp:
            if loc.degree(v) != s - 1:
                return None
    return (len(comps), s)


@dataclass
class LocalStructure:
    kind: str  # "cliques" | "connected" | "mixed"
    t: Optional[int] = None  # local graph is (t+1).K_s
    s: Optional[int] = None
    diameter: Optional[int] = None
    representative: Optional[Graph] = None

    def to_dict(self):
        return {"kind": self.kind, "t": self.t, "s": self.s, "diameter": self.diameter}


def local_structure(g: Graph) -> LocalStructure:
    """Classify the common local graph: (t+1).K_s, connected, or mixed."""
    loc0 = local_graph(g, 0)
    dec = _clique_decomposition(loc0)
    if dec is not None:
        for u in range(1, g.n):
            if _clique_decomposition(local_graph(g, u)) != dec:
                return LocalStructure(kind="mixed")
        count, s = dec
        return LocalStructure(kind="cliques", t=count - 1, s=s, representative=loc0)
    if loc0.is_connected():
        fp0 = _fingerprint(loc0)
        for u in range(1, g.n):
            lu = local_graph(g, u)
            if _fingerprint(lu) != fp0 or not is_isomorphic(loc0, lu):
                return LocalStructure(kind="mixed")
        d = parameters(loc0).diameter
        return LocalStructure(kind="connected", diameter=d, representative=loc0)
    return LocalStructure(kind="mixed")


# ---------------------------------------------------------------------------
# mu-graphs
# ---------------------------------------------------------------------------


@dataclass
class MuClassReport:
    classes: list  # list of (representative Graph, multiplicity, witness pair)
    pairs_at_distance_2: int

    def to_dict(self):
        return {
            "pairs_at_distance_2": self.pairs_at_distance_2,
            "classes": [
                {"order": rep.n, "edges": rep.edge_count(), "multiplicity": mult, "pair": list(pair)}
                for rep, mult, pair in self.classes
            ],
        }


def mu_graph_classes(g: Graph) -> MuClassReport:
    """Isomorphism classes of mu-graphs with multiplicities."""
    levels = [distance_levels(g, u) for u in range(g.n)]
    classes = []  # (rep, fingerprint, mult, witness)
    total = 0
    for u in range(g.n):
        lv = levels[u]
        if len(lv) < 3:
            continue
        for v in _bits(lv[2]):
            if v < u:
                continue
            total += 1
            common = g.adj[u] & g.adj[v]
            mu = g.induced(_bits(common))
            fp = _fingerprint(mu)
            for entry in classes:
                if entry[1] == fp and is_isomorphic(entry[0], mu):
                    entry[2] += 1
                    break
            else:
                classes.append([mu, fp, 1, (u, v)])
    return MuClassReport(
        classes=[(rep, mult, pair) for rep, _, mult, pair in classes],
        pairs_at_distance_2=total,
    )


# ---------------------------------------------------------------------------
# obstruction predicates
# ---------------------------------------------------------------------------


def unique_x(g: Graph):
    """The unique-x property: some (u, v~u, w in G2(u) n G(v)) pins a unique
    x in G(u) n G2(v) with G(u) n G(v) n G(w) = G(u) n G(v) n G(x)."""
    full = (1 << g.n) - 1
    if all(g.adj[v] == full & ~(1 << v) for v in range(g.n)):
        raise ValueError("unique-x is undefined for complete graphs")
    levels = [distance_levels(g, u) for u in range(g.n)]
    for u in range(g.n):
        lu = levels[u]
        if len(lu) < 3:
            continue
        for v in _bits(g.adj[u]):
            lv = levels[v]
            if len(lv) < 3:
                continue
            cand_mask = g.adj[u] & lv[2]  # G(u) n G2(v)
            if not cand_mask:
                continue
            uv = g.adj[u] & g.adj[v]
            for w in _bits(lu[2] & g.adj[v]):
                target = uv & g.adj[w]
                found = None
                count = 0
                for x in _bits(cand_mask):
                    if uv & g.adj[x] == target:
                        count += 1
                        found = x
                        if count > 1:
                            break
                if count == 1:
                    return True, (u, v, w, found)
    return False, None


def has_induced_k4_minus_edge(g: Graph) -> bool:
    """Induced K4-minus-an-edge = an edge with two non-adjacent common neighbours."""
    for u in range(g.n):
        for v in _bits(g.adj[u]):
            if v < u:
                continue
            common = _bits(g.adj[u] & g.adj[v])
            for a, b in combinations(common, 2):
                if not g.has_edge(a, b):
                    return True
    return False


def xplus_obstruction(g: Graph) -> str:
    """"not-4-CH-certified" when the unique-x property holds and some
    G(u) n G2(v) induces a graph that is neither edgeless nor complete."""
    try:
        ok, _ = unique_x(g)
    except ValueError:
        return "inconclusive"  # complete graph: the precondition is empty
    if not ok:
        return "inconclusive"
    levels = [distance_levels(g, u) for u in range(g.n)]
    for u in range(g.n):
        for v in _bits(g.adj[u]):
            lv = levels[v]
            if len(lv) < 3:
                continue
            mask = g.adj[u] & lv[2]
            verts = _bits(mask)
            if len(verts) < 2:
                continue
            sub = g.induced(verts)
            e = sub.edge_count()
            if 0 < e < sub.n * (sub.n - 1) // 2:
                return "not-4-CH-certified"
    return "inconclusive"


def distance_transitive(g: Graph, G) -> bool:
    """G transitive on ordered pairs at every distance i <= diameter."""
    from . import permgrp

    if not g.is_connected():
        return False
    if permgrp.orbit(G, 0) != set(range(g.n)):
        return False
    stab = permgrp.pointwise_stabilizer(G, [0])
    orbs = permgrp.orbits(stab)
    orb_of = {}
    for oi, o in enumerate(orbs):
        for v in o:
            orb_of[v] = oi
    for i, lvl in enumerate(distance_levels(g, 0)):
        if i == 0:
            continue
        sphere = _bits(lvl)
        if len({orb_of[v] for v in sphere}) != 1:
            return False
    return True
