"""Permutation-group engine.

Permutations are tuples of images: p acts on the right, point^p = p[point],
and pmul(a, b) is "apply a, then b".  Groups are held as deterministic
Schreier-Sims stabiliser chains (base and strong generating set), which give
exact big-integer orders, membership tests, pointwise stabilisers (by base
change) and set/tuple transporters (backtracking over the chain).

The graph automorphism search at the bottom is a backtracking
individualisation-refinement search with equitable-partition refinement and
orbit pruning from already-found generators; every emitted generator is
verified to preserve adjacency.
"""

from __future__ import annotations

import sys
from collections import deque

sys.setrecursionlimit(50000)

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def pmul(a: Perm, b: Perm) -> Perm:
    """Composite permutation: apply a, then b."""
    return tuple(b[i] for i in a)


def pinv(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def _validate_perm(p, degree):
    if len(p) != degree:
        raise ValueError(f"permutation degree {len(p)} != {degree}")
    if sorted(p) != list(range(degree)):
        raise ValueError("images are not a bijection")


class _Level:
    __slots__ = ("point", "gens", "orbit")

    def __init__(self, point):
        self.point = point
        self.gens = []  # strong generators fixing all earlier base points
        self.orbit = {}  # orbit point -> transversal perm u with u[self.point] = that point


class GroupChain:
    """A permutation group with a verified base and strong generating set."""

    def __init__(self, generators, degree, base_hint=(), known_order=None):
        self.degree = degree
        gens = []
        for g in generators:
            g = tuple(g)
            _validate_perm(g, degree)
            if not is_identity(g):
                gens.append(g)
        self.generators = gens
        self.levels = []
        seen = set()
        for b in base_hint:
            if b not in seen:
                seen.add(b)
                self.levels.append(_Level(b))
        for g in gens:
            self._place(g)
        self._build(known_order)
        self._stab_cache = {}
        self._transporter_chain_cache = {}

    # -- chain construction -------------------------------------------------

    def _place(self, g):
        """Insert g into the generator lists of every level whose base prefix it fixes."""
        for i, lvl in enumerate(self.levels):
            lvl.gens.append(g)
            if g[lvl.point] != lvl.point:
                return
        # g fixes every existing base point: open a new level at its least moved point
        pt = min(i for i in range(self.degree) if g[i] != i)
        lvl = _Level(pt)
        lvl.gens.append(g)
        self.levels.append(lvl)

    def _recompute_orbit(self, lvl):
        orb = {lvl.point: identity(self.degree)}
        order = [lvl.point]
        queue = deque(order)
        while queue:
            p = queue.popleft()
            u = orb[p]
            for s in lvl.gens:
                q = s[p]
                if q not in orb:
                    orb[q] = pmul(u, s)
                    order.append(q)
                    queue.append(q)
        lvl.orbit = orb
        return order

    def sift(self, g, start=0):
        """Strip g through the chain; returns (residue, first unconsumed level)."""
        g = tuple(g)
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            p = g[lvl.point]
            if p == lvl.point:
                continue
            if p not in lvl.orbit:
                return g, i
            g = pmul(g, pinv(lvl.orbit[p]))
        return g, len(self.levels)

    def _current_order(self):
        o = 1
        for lvl in self.levels:
            o *= max(1, len(lvl.orbit))
        return o

    def _build(self, known_order):
        for lvl in self.levels:
            self._recompute_orbit(lvl)
        if known_order is not None and self._current_order() == known_order:
            return
        i = len(self.levels) - 1
        while i >= 0:
            lvl = self.levels[i]
            bfs_order = self._recompute_orbit(lvl)
            if known_order is not None and self._current_order() == known_order:
                return
            restart = False
            for p in bfs_order:
                u = lvl.orbit[p]
                for s in lvl.gens:
                    q = s[p]
                    w = lvl.orbit[q]
                    sg = pmul(pmul(u, s), pinv(w))
                    if is_identity(sg):
                        continue
                    h, j = self.sift(sg, i + 1)
                    if is_identity(h):
                        continue
                    if j == len(self.levels):
                        pt = min(x for x in range(self.degree) if h[x] != x)
                        self.levels.append(_Level(pt))
                    for l in range(i + 1, j + 1):
                        self.levels[l].gens.append(h)
                    self._recompute_orbit(self.levels[j])
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    # -- queries ------------------------------------------------------------

    @property
    def order(self) -> int:
        return self._current_order()

    @property
    def base(self):
        return [lvl.point for lvl in self.levels]

    @property
    def strong_generators(self):
        out = {}
        for lvl in self.levels:
            for g in lvl.gens:
                out[g] = None
        return list(out)

    def contains(self, g) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        h, _ = self.sift(g)
        return is_identity(h)

    def random_element(self, rng) -> Perm:
        g = identity(self.degree)
        for lvl in self.levels:
            pts = sorted(lvl.orbit)
            g = pmul(g, lvl.orbit[pts[rng.randrange(len(pts))]])
        return g

    def stabilizer_suffix(self, k) -> "GroupChain":
        """The subgroup generated by strong generators fixing the first k base points.

        Valid on a chain whose base was prescribed: levels[k:] form its BSGS.
        """
        obj = GroupChain.__new__(GroupChain)
        obj.degree = self.degree
        obj.levels = self.levels[k:]
        obj.generators = obj.strong_generators
        obj._stab_cache = {}
        obj._transporter_chain_cache = {}
        return obj


def group(gens, degree=None) -> GroupChain:
    """Build a verified stabiliser chain from generators."""
    gens = [tuple(g) for g in gens]
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generating set")
        degree = len(gens[0])
    return GroupChain(gens, degree)


def orbit(G: GroupChain, point: int) -> set:
    gens = G.strong_generators
    orb = {point}
    queue = deque([point])
    while queue:
        p = queue.popleft()
        for s in gens:
            q = s[p]
            if q not in orb:
                orb.add(q)
                queue.append(q)
    return orb


def orbits(G: GroupChain) -> list:
    seen = set()
    out = []
    for p in range(G.degree):
        if p not in seen:
            o = orbit(G, p)
            seen |= o
            out.append(sorted(o))
    return out


def is_transitive_on(G: GroupChain, X) -> bool:
    """True iff G has one orbit on X; the empty set is vacuously true."""
    X = set(X)
    if not X:
        return True
    return X <= orbit(G, min(X))


def pointwise_stabilizer(G: GroupChain, points) -> GroupChain:
    """Chain for the subgroup fixing every listed point (base change)."""
    key = tuple(dict.fromkeys(points))  # dedupe, keep order
    if key in G._stab_cache:
        return G._stab_cache[key]
    if not key:
        return G
    chain = GroupChain(G.strong_generators, G.degree, base_hint=key, known_order=G.order)
    if chain.order != G.order:
        raise RuntimeError("base change changed the group order; chain is inconsistent")
    stab = chain.stabilizer_suffix(len(key))
    G._stab_cache[key] = stab
    return stab


def _prefix_chain(G: GroupChain, prefix) -> GroupChain:
    key = tuple(prefix)
    cache = G._transporter_chain_cache
    if key not in cache:
        chain = GroupChain(G.strong_generators, G.degree, base_hint=key, known_order=G.order)
        if chain.order != G.order:
            raise RuntimeError("base change changed the group order; chain is inconsistent")
        cache[key] = chain
    return cache[key]


def set_transporter(G: GroupChain, A, B):
    """Some g in G with A^g = B, or None.

    Backtracking over a chain whose base starts with sorted(A);
    candidate images are tried smallest first, so the answer is deterministic.
    """
    A = sorted(set(A))
    B = frozenset(B)
    if len(A) != len(B):
        return None
    if not A:
        return identity(G.degree)
    chain = _prefix_chain(G, A)
    k = len(A)
    ident = identity(G.degree)

    def dfs(i, targets):
        if i == k:
            return ident
        lvl = chain.levels[i]
        for p in sorted(lvl.orbit):
            if p in targets:
                u = lvl.orbit[p]
                uinv = pinv(u)
                rest = frozenset(uinv[t] for t in targets if t != p)
                h = dfs(i + 1, rest)
                if h is not None:
                    return pmul(h, u)
        return None

    g = dfs(0, B)
    if g is not None:
        assert frozenset(g[a] for a in A) == B
    return g


def tuple_transporter(G: GroupChain, src, dst):
    """Some g in G with src[i]^g = dst[i] for all i, or None."""
    src = tuple(src)
    dst = tuple(dst)
    if len(src) != len(dst):
        return None
    chain = _prefix_chain(G, src)

    def dfs(i, d):
        if i == len(src):
            return identity(G.degree)
        lvl = chain.levels[i]
        if d[0] not in lvl.orbit:
            return None
        u = lvl.orbit[d[0]]
        uinv = pinv(u)
        h = dfs(i + 1, [uinv[x] for x in d[1:]])
        return pmul(h, u) if h is not None else None

    g = dfs(0, list(dst))
    if g is not None:
        assert all(g[s] == d for s, d in zip(src, dst))
    return g


# ---------------------------------------------------------------------------
# graph automorphism search
# ---------------------------------------------------------------------------


def _is_graph_automorphism(adj, n, p):
    for v in range(n):
        m = adj[v]
        img = 0
        while m:
            low = m & -m
            img |= 1 << p[low.bit_length() - 1]
            m ^= low
        if img != adj[p[v]]:
            return False
    return True


def automorphism_group(g, max_vertices: int = 400) -> GroupChain:
    """Full automorphism group of a graph by individualisation-refinement.

    Backtracking over an equitable-partition refinement tree; subtrees are
    pruned by refinement-trace mismatch and by orbits of the generators found
    so far (both prunings only discard provably redundant branches).  Every
    generator is verified against the adjacency relation before being used.
    """
    n = g.n
    if n > max_vertices:
        raise ValueError(f"graph has {n} vertices; automorphism search bound is {max_vertices}")
    if n == 0:
        raise ValueError("empty graph")
    adj = g.adj

    def refine(cells, splitters):
        queue = deque(splitters)
        trace = []
        while queue:
            W = queue.popleft()
            out = []
            events = []
            for pos, cell in enumerate(cells):
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault((adj[v] & W).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                    continue
                items = sorted(groups.items())
                events.append((pos, tuple((c, len(grp)) for c, grp in items)))
                for c, grp in items:
                    out.append(tuple(grp))
                    m = 0
                    for v in grp:
                        m |= 1 << v
                    queue.append(m)
            if events:
                trace.append(tuple(events))
            cells = out
        return cells, tuple(trace)

    def individualize(cells, v):
        out = []
        masks = []
        for cell in cells:
            if len(cell) > 1 and v in cell:
                rest = tuple(x for x in cell if x != v)
                out.append((v,))
                out.append(rest)
                masks.append(1 << v)
                m = 0
                for x in rest:
                    m |= 1 << x
                masks.append(m)
            else:
                out.append(cell)
        return out, masks

    def target_pos(cells):
        for i, c in enumerate(cells):
            if len(c) > 1:
                return i
        return None

    base_traces = []
    base_vertex = []
    lab0 = []
    gens = []

    def in_orbit_of_tried(v, depth, tried):
        fixers = [p for p in gens if all(p[b] == b for b in base_vertex[:depth])]
        if not fixers:
            return False
        orb = {v}
        queue = deque([v])
        tried_set = set(tried)
        while queue:
            p = queue.popleft()
            if p in tried_set:
                return True
            for s in fixers:
                q = s[p]
                if q not in orb:
                    orb.add(q)
                    queue.append(q)
        return False

    def dfs_map(cells, depth):
        pos = target_pos(cells)
        if pos is None:
            lab = [c[0] for c in cells]
            p = [0] * n
            for i, v in enumerate(lab):
                p[v] = lab0[i]
            p = tuple(p)
            return p if _is_graph_automorphism(adj, n, p) else None
        for v in cells[pos]:
            child, masks = individualize(cells, v)
            child, trace = refine(child, masks)
            if trace != base_traces[depth]:
                continue
            r = dfs_map(child, depth + 1)
            if r is not None:
                return r
        return None

    def dfs_base(cells, depth):
        pos = target_pos(cells)
        if pos is None:
            lab0.extend(c[0] for c in cells)
            return
        cell = cells[pos]
        tried = []
        for v in cell:
            if tried and in_orbit_of_tried(v, depth, tried):
                continue
            child, masks = individualize(cells, v)
            child, trace = refine(child, masks)
            if not tried:
                base_vertex.append(v)
                base_traces.append(trace)
                dfs_base(child, depth + 1)
            else:
                if trace == base_traces[depth]:
                    r = dfs_map(child, depth + 1)
                    if r is not None:
                        gens.append(r)
            tried.append(v)

    start_cells, _ = refine([tuple(range(n))], [(1 << n) - 1])
    dfs_base(start_cells, 0)
    return GroupChain(gens, n)
