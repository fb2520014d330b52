"""The homogeneity decision engine.

A graph is (G,k)-CH when every isomorphism between connected induced
subgraphs of order <= k extends to an element of G.  The decision works
level by level: once all classes of order m-1 are known to be G-homogeneous,
a subgraph of order m is handled through one of its order-(m-1) subgraphs
Sigma and the attachment set S of the removed vertex; the extension test is
then exact: the pointwise stabiliser P of Sigma in G must be transitive on

    X = { u not in Sigma : Gamma(u) n Sigma = S }.

If every (Sigma, S) passes at level m the graph is (G,m)-CH, and the level-m
class list is built by extending each (Sigma, S) with one new vertex per
P-orbit on X, deduplicating G-equivalent vertex sets with set transporters.
The first failing (Sigma, S) in the deterministic scan order yields a
machine-recheckable witness (two X-vertices in distinct P-orbits).

Homogeneity mode drops the connectivity requirements: Sigma classes may be
disconnected and the attachment set may be empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import permgrp
from .graphs import Graph, _bits, line_graph
from .census import girth as graph_girth


TRUST_LEVELS = ("computed-Aut", "fixture-trusted-Aut", "subgroup-only")


@dataclass(frozen=True)
class Witness:
    sigma: tuple  # representative vertex list of the failing Sigma
    attachment: tuple  # sorted attachment set S (subset of sigma)
    orbit_reps: tuple  # two vertices of X lying in distinct P-orbits

    def to_dict(self):
        return {
            "sigma": list(self.sigma),
            "attachment": list(self.attachment),
            "orbit_reps": list(self.orbit_reps),
        }


@dataclass
class CHReport:
    graph_id: str
    group_id: str
    trust: str
    mode: str
    requested_k: int
    verdicts: dict  # level -> bool; levels above the first failure are absent
    witness: Optional[Witness]
    witness_level: Optional[int]
    class_census: dict  # level -> number of G-orbit classes of that order

    @property
    def max_true(self) -> int:
        return max([k for k, v in self.verdicts.items() if v], default=0)

    def passes(self, k: int) -> bool:
        return bool(self.verdicts.get(k, False))

    def to_dict(self):
        out = {
            "graph": self.graph_id,
            "group": {"source": self.group_id, "trust": self.trust},
            "mode": self.mode,
            "requested_k": self.requested_k,
            "verdicts": [
                {"k": k, "pass": v}
                | ({"witness": self.witness.to_dict()} if (not v and self.witness is not None) else {})
                for k, v in sorted(self.verdicts.items())
            ],
            "census": {str(k): v for k, v in sorted(self.class_census.items())},
        }
        return out


def _orbit_partition_on(P, X):
    """Orbits of P on the P-invariant set X, each sorted; deterministic order."""
    gens = P.strong_generators
    remaining = set(X)
    out = []
    while remaining:
        start = min(remaining)
        orb = {start}
        queue = [start]
        while queue:
            p = queue.pop()
            for s in gens:
                q = s[p]
                if q not in orb:
                    orb.add(q)
                    queue.append(q)
        if not orb <= set(X):
            raise RuntimeError("X is not invariant under the stabiliser; inconsistent input")
        out.append(sorted(orb))
        remaining -= orb
    return out


def check_extension(g: Graph, G, sigma, S):
    """One instance of the extension criterion.

    Returns (passed, orbits of the pointwise stabiliser on X, X).
    Empty X passes vacuously: no vertex realises the attachment pattern, so
    no such extension exists on either side.
    """
    sigma = tuple(sigma)
    Sset = frozenset(S)
    if not Sset <= set(sigma):
        raise ValueError("attachment set must be a subset of sigma")
    sigma_mask = 0
    for v in sigma:
        sigma_mask |= 1 << v
    X = [
        u
        for u in range(g.n)
        if not sigma_mask >> u & 1 and frozenset(v for v in sigma if g.adj[u] >> v & 1) == Sset
    ]
    if not X:
        return True, [], []
    P = permgrp.pointwise_stabilizer(G, sigma)
    orbs = _orbit_partition_on(P, X)
    return len(orbs) <= 1, orbs, X


def _validate_group(g: Graph, G):
    for p in G.generators:
        for v in range(g.n):
            img = 0
            for u in _bits(g.adj[v]):
                img |= 1 << p[u]
            if img != g.adj[p[v]]:
                raise ValueError("supplied group element does not preserve adjacency")


def check(
    g: Graph,
    G,
    K: int,
    mode: str = "ch",
    graph_id: str = "graph",
    group_id: str = "group",
    trust: str = "computed-Aut",
    class_cap_factor: int = 10,
) -> CHReport:
    """Level-wise (G,k)-CH / (G,k)-homogeneity decision for k = 1..K."""
    if K < 1:
        raise ValueError("K must be >= 1")
    mode = mode.lower()
    if mode not in ("ch", "hom"):
        raise ValueError("mode must be 'ch' or 'hom'")
    if trust not in TRUST_LEVELS:
        raise ValueError(f"trust must be one of {TRUST_LEVELS}")
    connected_only = mode == "ch"
    _validate_group(g, G)

    verdicts = {}
    census = {}
    witness = None
    witness_level = None
    cap = class_cap_factor * K

    transitive = permgrp.orbit(G, 0) == set(range(g.n))
    verdicts[1] = transitive
    if transitive:
        census[1] = 1
    if not transitive or K == 1:
        return CHReport(graph_id, group_id, trust, mode, K, verdicts, None, None, census)

    classes = {1: [(0,)]}
    for m in range(2, K + 1):
        level_ok = True
        extensions = []  # (sigma, attachment-sorted, orbit reps)
        for sigma in classes[m - 1]:
            sigma_mask = 0
            for v in sigma:
                sigma_mask |= 1 << v
            patterns = {}
            for u in range(g.n):
                if sigma_mask >> u & 1:
                    continue
                S = frozenset(v for v in sigma if g.adj[u] >> v & 1)
                if connected_only and not S:
                    continue
                patterns.setdefault(S, []).append(u)
            for S in sorted(patterns, key=lambda s: tuple(sorted(s))):
                X = patterns[S]
                P = permgrp.pointwise_stabilizer(G, sigma)
                orbs = _orbit_partition_on(P, X)
                if len(orbs) > 1:
                    witness = Witness(sigma, tuple(sorted(S)), (orbs[0][0], orbs[1][0]))
                    witness_level = m
                    level_ok = False
                    break
                extensions.append((sigma, S, [o[0] for o in orbs]))
            if not level_ok:
                break
        verdicts[m] = level_ok
        if not level_ok:
            break
        # build the level-m class list
        new_classes = []
        for sigma, S, reps in extensions:
            for u in reps:
                cand = sigma + (u,)
                cand_set = frozenset(cand)
                for known in new_classes:
                    if permgrp.set_transporter(G, cand_set, frozenset(known)) is not None:
                        break
                else:
                    new_classes.append(cand)
                    if len(new_classes) > cap:
                        raise RuntimeError(
                            f"class explosion at level {m}: more than {cap} G-orbit classes; "
                            "the supplied group is likely far from the automorphism group"
                        )
        classes[m] = new_classes
        census[m] = len(new_classes)
    return CHReport(graph_id, group_id, trust, mode, K, verdicts, witness, witness_level, census)


def revalidate_witness(g: Graph, G, report: CHReport) -> bool:
    """Re-derive X and the orbit split for a failure witness from scratch."""
    if report.witness is None:
        return False
    w = report.witness
    passed, orbs, X = check_extension(g, G, w.sigma, w.attachment)
    if passed or len(orbs) < 2:
        return False
    reps = set(w.orbit_reps)
    hit = [o for o in orbs if set(o) & reps]
    return len(hit) == 2 and all(len(set(o) & reps) == 1 for o in hit)


def arc_transitivity_degree(g: Graph, G, cap: int = 8) -> int:
    """Largest s <= cap with G transitive on s-arcs (0 if not vertex-transitive)."""
    if cap > 8:
        raise ValueError("cap must be <= 8")
    regular, val = g.is_regular()
    if not regular or val < 2:
        raise ValueError("arc transitivity needs a regular graph of valency >= 2")
    if permgrp.orbit(G, 0) != set(range(g.n)):
        return 0
    prefix = (0,)
    s = 0
    while s < cap:
        last = prefix[-1]
        prev = prefix[-2] if len(prefix) >= 2 else None
        ext = [u for u in _bits(g.adj[last]) if u != prev]
        if not ext:
            break
        P = permgrp.pointwise_stabilizer(G, prefix)
        if not permgrp.is_transitive_on(P, ext):
            break
        s += 1
        prefix = prefix + (min(ext),)
    return s


def girth_bound_check(g: Graph, G) -> bool:
    """Check girth >= 2s-2 for s = the arc-transitivity degree (valency >= 3)."""
    regular, val = g.is_regular()
    if not regular or val < 3:
        raise ValueError("girth bound applies to regular graphs of valency >= 3")
    s = arc_transitivity_degree(g, G)
    gir = graph_girth(g)
    if gir is None:
        return True
    return gir >= 2 * s - 2


def line_graph_transfer(gamma: Graph, K: int, aut_gamma=None, aut_line=None):
    """Check for k = 2..K that L(gamma) is k-CH iff gamma is (k+1)-CH with
    girth >= k+2; returns the per-k comparison, raising on any discrepancy."""
    if not gamma.is_connected():
        raise ValueError("line-graph transfer needs a connected graph")
    regular, val = gamma.is_regular()
    gir = graph_girth(gamma)
    if not regular or val < 3 or gir is None or gir < 5:
        raise ValueError("line-graph transfer needs a regular graph, valency >= 3, girth >= 5")
    L = line_graph(gamma)
    if aut_gamma is None:
        aut_gamma = permgrp.automorphism_group(gamma)
    if aut_line is None:
        aut_line = permgrp.automorphism_group(L)
    left = check(L, aut_line, K, graph_id="line-graph")
    right = check(gamma, aut_gamma, K + 1, graph_id="base-graph")
    rows = []
    for k in range(2, K + 1):
        lhs = left.passes(k)
        rhs = right.passes(k + 1) and gir >= k + 2
        rows.append({"k": k, "line_graph_kCH": lhs, "base_k1CH_and_girth": rhs})
        if lhs != rhs:
            raise AssertionError(f"line-graph transfer violated at k={k}: {lhs} vs {rhs}")
    return rows
