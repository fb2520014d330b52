#!/usr/bin/env python3
"""Regenerate the generator fixtures shipped under fixtures/.

Each fixture is a strong generating set for the full automorphism group of
one of the sporadic graphs, written in the generator file format understood
by chgraphs.graphs.parse_generators.  The graphs themselves are never stored:
every one of them is recovered as the orbital graph of the right valency of
its fixture group, so the fixture files are the single source of truth.

The constructions used here are classical:

* Hoffman-Singleton graph from five pentagons and five pentagrams.
* Higman-Sims graph from the 77-block Steiner system S(3,6,22), built out of
  PG(2,4) lines and one equivalence class of hyperovals.
* McLaughlin graph from the Steiner system S(4,7,23) given by the weight-7
  words of the binary Golay code of length 23.
* Split Cayley hexagon of order (2,2) inside the parabolic quadric in
  PG(6,2), lines cut out by the Grassmann-coordinate conditions; both the
  point graph and the dual point graph are shipped.
* Hall-Janko near octagon from the 315-element involution class of J2, where
  J2 itself arises as the derived subgroup of the automorphism group of a
  rank-3 graph on 100 vertices assembled from U3(3).

Everything is deterministic: the few randomised subgroup searches run with
fixed seeds, and all orbit/coset enumerations use sorted orders.
"""

import argparse
import json
import random
import sys
import time
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from chgraphs import permgrp
from chgraphs.galois import field
from chgraphs.graphs import Geometry, Graph, orbital_graphs, write_generators
from chgraphs.census import girth, parameters
from chgraphs.permgrp import GroupChain, pinv, pmul


# ---------------------------------------------------------------------------
# Hoffman-Singleton
# ---------------------------------------------------------------------------


def hoffman_singleton() -> Graph:
    """Pentagons P_0..P_4, pentagrams Q_0..Q_4; P_h(j) ~ Q_i(h*i + j mod 5)."""

    def P(h, j):
        return 5 * h + j % 5

    def Q(i, k):
        return 25 + 5 * i + k % 5

    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((P(h, j), P(h, j + 1)))
            edges.append((Q(h, j), Q(h, j + 2)))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((P(h, j), Q(i, (h * i + j) % 5)))
    return Graph(50, edges=edges)


# ---------------------------------------------------------------------------
# PG(2,4), hyperovals, and the Higman-Sims graph
# ---------------------------------------------------------------------------


def _pg24():
    """Points and lines of PG(2,4); lines as frozensets of point indices."""
    F = field(4)
    total = 64

    def decode(idx):
        return (idx % 4, idx // 4 % 4, idx // 16)

    def encode(v):
        return v[0] + 4 * v[1] + 16 * v[2]

    seen = bytearray(total)
    points = []
    vec_to_point = {}
    for idx in range(1, total):
        if seen[idx]:
            continue
        v = decode(idx)
        points.append(v)
        for a in range(1, 4):
            w = tuple(F.mul[a][c] for c in v)
            seen[encode(w)] = 1
            vec_to_point[encode(w)] = len(points) - 1
    lines = set()
    for i in range(21):
        for j in range(i + 1, 21):
            pts = {i, j}
            for a in range(1, 4):
                w = tuple(F.add[x][F.mul[a][y]] for x, y in zip(points[i], points[j]))
                pts.add(vec_to_point[encode(w)])
            lines.add(frozenset(pts))
    return points, sorted(lines, key=sorted)


def _hyperoval_class(lines):
    """One equivalence class (56 members) of the 168 hyperovals of PG(2,4).

    A hyperoval is a 6-point set meeting every line in 0 or 2 points; two
    hyperovals are equivalent when their intersection is even.  The class
    containing the lexicographically least hyperoval is returned.
    """
    hyperovals = []
    for combo in combinations(range(21), 6):
        s = frozenset(combo)
        if all(len(s & line) in (0, 2) for line in lines):
            hyperovals.append(s)
    if len(hyperovals) != 168:
        raise RuntimeError(f"expected 168 hyperovals, found {len(hyperovals)}")
    seed = min(hyperovals, key=sorted)
    cls = [h for h in hyperovals if len(h & seed) % 2 == 0]
    if len(cls) != 56:
        raise RuntimeError(f"hyperoval class has {len(cls)} members, expected 56")
    return sorted(cls, key=sorted)


def higman_sims() -> Graph:
    """1 + 22 + 77 vertices from the Steiner system S(3,6,22).

    The 77 blocks are the 21 extended lines {inf} u L and one hyperoval
    class; star ~ every point, point ~ blocks through it, blocks ~ when
    disjoint.
    """
    _, lines = _pg24()
    inf = 21
    blocks = [frozenset(line | {inf}) for line in lines] + _hyperoval_class(lines)
    blocks.sort(key=sorted)
    if len(blocks) != 77:
        raise RuntimeError("S(3,6,22) block count is off")
    edges = [(0, 1 + p) for p in range(22)]
    for b, block in enumerate(blocks):
        for p in block:
            edges.append((1 + p, 23 + b))
    for a in range(77):
        for b in range(a + 1, 77):
            if not blocks[a] & blocks[b]:
                edges.append((23 + a, 23 + b))
    return Graph(100, edges=edges)


# ---------------------------------------------------------------------------
# Golay code and the McLaughlin graph
# ---------------------------------------------------------------------------


def _golay_heptads():
    """The 253 weight-7 words of the length-23 binary Golay code, as masks."""
    g = 0xAE3  # lexicographically least degree-11 factor of x^23 - 1 over GF(2)
    basis = [g << i for i in range(12)]
    words = {0}
    for b in basis:
        words |= {w ^ b for w in words}
    heptads = sorted(w for w in words if bin(w).count("1") == 7)
    if len(heptads) != 253:
        raise RuntimeError(f"expected 253 heptads, found {len(heptads)}")
    return heptads


def mclaughlin() -> Graph:
    """275 vertices from S(4,7,23) with the distinguished point 22 removed.

    Vertices: the 22 remaining points, the 77 hexads (blocks through 22,
    point 22 dropped) and the 176 heptads missing 22.  Adjacency:
    point ~ hexad not containing it, point ~ heptad containing it,
    disjoint hexads, hexad ~ heptad meeting in 3 points, heptads meeting
    in 1 point.
    """
    heptads = _golay_heptads()
    top = 1 << 22
    hexads = sorted(h & ~top for h in heptads if h & top)
    seps = sorted(h for h in heptads if not h & top)
    if len(hexads) != 77 or len(seps) != 176:
        raise RuntimeError("block split under the distinguished point is off")
    edges = []
    for p in range(22):
        bit = 1 << p
        for i, h in enumerate(hexads):
            if not h & bit:
                edges.append((p, 22 + i))
        for i, u in enumerate(seps):
            if u & bit:
                edges.append((p, 99 + i))
    for i in range(77):
        for j in range(i + 1, 77):
            if not hexads[i] & hexads[j]:
                edges.append((22 + i, 22 + j))
    for i, h in enumerate(hexads):
        for j, u in enumerate(seps):
            if bin(h & u).count("1") == 3:
                edges.append((22 + i, 99 + j))
    for i in range(176):
        for j in range(i + 1, 176):
            if bin(seps[i] & seps[j]).count("1") == 1:
                edges.append((99 + i, 99 + j))
    return Graph(275, edges=edges)


# ---------------------------------------------------------------------------
# Split Cayley hexagon of order (2,2)
# ---------------------------------------------------------------------------


def hexagon_geometry() -> Geometry:
    """Points: the parabolic quadric x0 x4 + x1 x5 + x2 x6 + x3^2 = 0 in
    PG(6,2); lines: the quadric lines whose Grassmann coordinates satisfy
    p12 = p34, p54 = p32, p20 = p35, p65 = p30, p01 = p36, p46 = p31."""

    def on_quadric(v):
        return ((v & v >> 4 & 1) ^ (v >> 1 & v >> 5 & 1) ^ (v >> 2 & v >> 6 & 1) ^ (v >> 3 & 1)) == 0

    pts = [v for v in range(1, 128) if on_quadric(v)]
    index = {v: i for i, v in enumerate(pts)}

    def pl(u, v, i, j):
        return (u >> i & v >> j & 1) ^ (u >> j & v >> i & 1)

    def hexagon_line(u, v):
        return (
            pl(u, v, 1, 2) == pl(u, v, 3, 4)
            and pl(u, v, 5, 4) == pl(u, v, 3, 2)
            and pl(u, v, 2, 0) == pl(u, v, 3, 5)
            and pl(u, v, 6, 5) == pl(u, v, 3, 0)
            and pl(u, v, 0, 1) == pl(u, v, 3, 6)
            and pl(u, v, 4, 6) == pl(u, v, 3, 1)
        )

    lines = set()
    for i, u in enumerate(pts):
        for v in pts[i + 1 :]:
            if u ^ v in index and hexagon_line(u, v):
                lines.add(tuple(sorted((i, index[v], index[u ^ v]))))
    if len(lines) != 63:
        raise RuntimeError(f"expected 63 hexagon lines, found {len(lines)}")
    return Geometry(63, sorted(lines))


# ---------------------------------------------------------------------------
# Hall-Janko near octagon
# ---------------------------------------------------------------------------


def _closure(gens, degree):
    ident = tuple(range(degree))
    out = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = pmul(x, g)
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return out


def _derived_subgroup(G, target_order, rng):
    comms = []
    while True:
        a, b = G.random_element(rng), G.random_element(rng)
        comms.append(pmul(pmul(pinv(a), pinv(b)), pmul(a, b)))
        D = GroupChain(comms, G.degree)
        if D.order == target_order:
            return D


def _orbits_under(actions, n):
    seen = set()
    out = []
    for s in range(n):
        if s in seen:
            continue
        orb = {s}
        queue = [s]
        while queue:
            p = queue.pop()
            for a in actions:
                if a[p] not in orb:
                    orb.add(a[p])
                    queue.append(a[p])
        out.append(sorted(orb))
        seen |= orb
    return out


def _edge_closure(seed, act_left, act_right):
    pairs = set(seed)
    frontier = list(pairs)
    while frontier:
        nxt = []
        for i, j in frontier:
            for ga, gb in zip(act_left, act_right):
                e = (ga[i], gb[j])
                if e not in pairs:
                    pairs.add(e)
                    nxt.append(e)
        frontier = nxt
    return pairs


def hall_janko_graph(hexagon_aut: GroupChain) -> Graph:
    """SRG(100,36,14,12) on a star vertex, the 36 conjugates of an L2(7)
    subgroup of U3(3), and the 63 involutions of U3(3)."""
    rng = random.Random(0)
    U = _derived_subgroup(hexagon_aut, 6048, rng)
    H = None
    while H is None:
        a, b = U.random_element(rng), U.random_element(rng)
        cand = GroupChain([a, b], 63)
        if cand.order == 168:
            H = cand
    elements = _closure(list(U.generators), 63)
    sub_elements = frozenset(_closure(list(H.generators), 63))
    ident = tuple(range(63))
    involutions = sorted(x for x in elements if x != ident and pmul(x, x) == ident)
    conjugates = {
        frozenset(pmul(pmul(pinv(x), h), x) for h in sub_elements) for x in elements
    }
    conjugates = sorted(conjugates, key=lambda s: sorted(s)[0])
    if len(involutions) != 63 or len(conjugates) != 36:
        raise RuntimeError("U3(3) involution/subgroup counts are off")

    inv_index = {x: i for i, x in enumerate(involutions)}
    sub_index = {s: i for i, s in enumerate(conjugates)}
    gens = list(U.generators)

    def conj_action(g):
        gi = pinv(g)
        return tuple(inv_index[pmul(pmul(gi, x), g)] for x in involutions)

    def sub_action(g):
        gi = pinv(g)
        return tuple(
            sub_index[frozenset(pmul(pmul(gi, h), g) for h in s)] for s in conjugates
        )

    inv_act = [conj_action(g) for g in gens]
    sub_act = [sub_action(g) for g in gens]

    # the unique valency-24 suborbit of the conjugation action glues the
    # involution layer; subgroup pairs are adjacent when they share a
    # subgroup of order 24, and a subgroup sees the 21 involutions it contains
    centralizer = [conj_action(e) for e in elements if pmul(e, involutions[0]) == pmul(involutions[0], e)]
    suborbit = next(o for o in _orbits_under(centralizer, 63) if len(o) == 24)
    inv_edges = _edge_closure([(0, j) for j in suborbit], inv_act, inv_act)
    home = sub_index[frozenset(sub_elements)]
    contained = [inv_index[x] for x in involutions if x in sub_elements]
    bip = _edge_closure([(home, j) for j in contained], sub_act, inv_act)

    edges = [(0, 1 + i) for i in range(36)]
    for i in range(36):
        for j in range(i + 1, 36):
            if len(conjugates[i] & conjugates[j]) == 24:
                edges.append((1 + i, 1 + j))
    edges.extend((1 + i, 37 + j) for i, j in bip)
    edges.extend((37 + a, 37 + b) for a, b in inv_edges if a < b)
    return Graph(100, edges=edges)


def near_octagon_action(hj_aut: GroupChain):
    """Conjugation action of J2 on its 315-element involution class."""
    rng = random.Random(1)
    J = _derived_subgroup(hj_aut, 604800, rng)
    gens = list(J.generators)
    ident = tuple(range(100))

    def conjugacy_class(x, cap):
        orb = {x}
        queue = [x]
        while queue:
            y = queue.pop()
            for g in gens:
                z = pmul(pmul(pinv(g), y), g)
                if z not in orb:
                    orb.add(z)
                    queue.append(z)
                    if len(orb) > cap:
                        return None
        return orb

    while True:
        x = J.random_element(rng)
        order = 1
        y = x
        while y != ident:
            y = pmul(y, x)
            order += 1
        if order % 2:
            continue
        inv = x
        for _ in range(order // 2 - 1):
            inv = pmul(inv, x)
        cls = conjugacy_class(inv, 315)
        if cls is not None and len(cls) == 315:
            break
    cls = sorted(cls)
    index = {x: i for i, x in enumerate(cls)}
    actions = []
    for g in gens:
        gi = pinv(g)
        actions.append(tuple(index[pmul(pmul(gi, cls[i]), g)] for i in range(315)))
    return actions


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------


def _check(label, actual, expected):
    if actual != expected:
        raise RuntimeError(f"{label}: got {actual}, expected {expected}")


def build_all():
    """Yield (name, graph, expected Aut order, claimed group name, note)."""
    hs = hoffman_singleton()
    _check("Hoffman-Singleton srg", parameters(hs).srg, (50, 7, 0, 1))
    _check("Hoffman-Singleton girth", girth(hs), 5)
    yield "hoffman-singleton", hs, 252000, "PSU(3,5):2", (
        "five pentagons joined to five pentagrams"
    )

    hsg = higman_sims()
    _check("Higman-Sims srg", parameters(hsg).srg, (100, 22, 0, 6))
    yield "higman-sims", hsg, 88704000, "HS:2", (
        "star + 22 points + 77 blocks of S(3,6,22) from PG(2,4) hyperovals"
    )

    mcl = mclaughlin()
    _check("McLaughlin srg", parameters(mcl).srg, (275, 112, 30, 56))
    yield "mcl2", mcl, 1796256000, "McL:2", (
        "22 points + 77 hexads + 176 heptads of S(4,7,23) from the Golay code"
    )

    geo = hexagon_geometry()
    primal = geo.point_graph()
    dual = geo.dual().point_graph()
    _check("hexagon point graph", parameters(primal).intersection_array, ((6, 4, 4), (1, 1, 3)))
    _check("hexagon dual point graph", parameters(dual).intersection_array, ((6, 4, 4), (1, 1, 3)))
    yield "hexagon22", primal, 12096, "G2(2)", (
        "split Cayley hexagon of order (2,2): collinearity on the 63 quadric points"
    )
    yield "hexagon22-dual", dual, 12096, "G2(2)", (
        "split Cayley hexagon of order (2,2): concurrence on the 63 lines"
    )

    hexagon_aut = permgrp.automorphism_group(primal)
    _check("hexagon Aut order", hexagon_aut.order, 12096)
    hj = hall_janko_graph(hexagon_aut)
    _check("Hall-Janko graph srg", parameters(hj).srg, (100, 36, 14, 12))
    hj_aut = permgrp.automorphism_group(hj)
    _check("Hall-Janko graph Aut order", hj_aut.order, 1209600)
    actions = near_octagon_action(hj_aut)
    graphs, _ = orbital_graphs(actions, 315)
    octagon = next(g for g in graphs if g.degree(0) == 10)
    _check(
        "near octagon intersection array",
        parameters(octagon).intersection_array,
        ((10, 8, 8, 2), (1, 1, 4, 5)),
    )
    yield "hall-janko", octagon, 1209600, "J2:2", (
        "near octagon on the 315-element involution class of J2"
    )


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "fixtures"))
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, g, expected_order, group_name, note in build_all():
        t0 = time.time()
        aut = permgrp.automorphism_group(g)
        if aut.order != expected_order:
            raise RuntimeError(
                f"{name}: automorphism group has order {aut.order}, expected {expected_order}"
            )
        valency = g.degree(0)
        meta = {
            "name": name,
            "group": group_name,
            "order": str(aut.order),
            "graph-valency": str(valency),
        }
        gens = sorted(aut.strong_generators)
        (out / f"{name}.gens").write_text(write_generators(g.n, gens, meta))
        (out / f"{name}.meta.json").write_text(
            json.dumps(
                {
                    "name": name,
                    "group": group_name,
                    "order": aut.order,
                    "degree": g.n,
                    "graph_valency": valency,
                    "full_automorphism_group": True,
                    "provenance": f"tools/make_fixtures.py: {note}",
                },
                indent=2,
            )
            + "\n"
        )
        print(f"{name}: degree {g.n}, |Aut| = {aut.order}, {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
