"""The core immutable graph type, named constructions and data formats.

Graphs store adjacency as one Python-int bit row per vertex; all derived
constructions emit a deterministic vertex order, so adjacency matrices are
bit-identical across runs.
"""

from __future__ import annotations

from itertools import combinations
from collections import deque

from . import forms
from .galois import field


class Graph:
    """Immutable simple graph with bitset adjacency rows."""

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, edges=None, adj=None, labels=None):
        if n < 1:
            raise ValueError("graphs need at least one vertex")
        self.n = n
        if adj is not None:
            rows = [int(r) for r in adj]
        else:
            rows = [0] * n
            for u, v in edges or ():
                if u == v:
                    raise ValueError(f"loop at vertex {u}")
                if not (0 <= u < n and 0 <= v < n):
                    raise ValueError(f"edge ({u},{v}) out of range")
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row >> n:
                raise ValueError(f"adjacency row {v} exceeds vertex range")
            if row & (1 << v):
                raise ValueError(f"loop at vertex {v}")
        for v in range(n):
            m = rows[v]
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if not rows[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                m ^= low
        self.adj = tuple(rows)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValueError("labels must be unique, one per vertex")
        self.labels = labels

    # -- basic queries ------------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list:
        return _bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            for v in _bits(m):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def is_regular(self):
        degs = {self.degree(v) for v in range(self.n)}
        return (len(degs) == 1, degs.pop() if len(degs) == 0 else min(degs))

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def components(self) -> list:
        left = (1 << self.n) - 1
        comps = []
        while left:
            start = (left & -left).bit_length() - 1
            seen = 1 << start
            frontier = seen
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~seen
                seen |= frontier
            comps.append(_bits(seen))
            left &= ~seen
        return comps

    def bipartition(self):
        """(side0, side1) bitmasks, or None if not bipartite (per component)."""
        color = {}
        side0 = side1 = 0
        for comp in self.components():
            start = comp[0]
            color[start] = 0
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for u in self.neighbors(v):
                    if u not in color:
                        color[u] = 1 - color[v]
                        queue.append(u)
                    elif color[u] == color[v]:
                        return None
        for v, c in color.items():
            if c == 0:
                side0 |= 1 << v
            else:
                side1 |= 1 << v
        return side0, side1

    # -- derived graphs -----------------------------------------------------

    def induced(self, vertices) -> "Graph":
        verts = sorted(vertices)
        pos = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for i, v in enumerate(verts):
            for u in _bits(self.adj[v]):
                if u in pos:
                    rows[i] |= 1 << pos[u]
        return Graph(len(verts), adj=rows)

    def relabel(self, perm) -> "Graph":
        """Image graph under vertex -> perm[vertex]."""
        rows = [0] * self.n
        for v in range(self.n):
            img = 0
            for u in _bits(self.adj[v]):
                img |= 1 << perm[u]
            rows[perm[v]] = img
        return Graph(self.n, adj=rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def _bits(m: int) -> list:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


# ---------------------------------------------------------------------------
# elementary constructions
# ---------------------------------------------------------------------------


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, adj=[full & ~(1 << v) for v in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, edges=[(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(m: int, r: int) -> Graph:
    """K_{m[r]}: m parts of size r; parts contiguous in vertex order."""
    if m < 1 or r < 1:
        raise ValueError("part count and size must be positive")
    n = m * r
    full = (1 << n) - 1
    part_mask = [(((1 << r) - 1) << (p * r)) for p in range(m)]
    return Graph(n, adj=[full & ~part_mask[v // r] for v in range(n)])


def disjoint_union(g: Graph, copies: int) -> Graph:
    if copies < 1:
        raise ValueError("need at least one copy")
    n = g.n
    rows = []
    for c in range(copies):
        for v in range(n):
            rows.append(g.adj[v] << (c * n))
    return Graph(n * copies, adj=rows)


def grid(n: int, m: int) -> Graph:
    """K_n box K_m: pairs (i,j), adjacent when they agree in one coordinate."""
    if n < 2 or m < 2:
        raise ValueError("grid needs both sides >= 2")
    edges = []
    for i in range(n):
        for j in range(m):
            v = i * m + j
            for j2 in range(j + 1, m):
                edges.append((v, i * m + j2))
            for i2 in range(i + 1, n):
                edges.append((v, i2 * m + j))
    return Graph(n * m, edges=edges)


def cross(n: int, m: int) -> Graph:
    """K_n x K_m, the complement of the grid."""
    return complement(grid(n, m))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, adj=[full & ~g.adj[v] & ~(1 << v) for v in range(g.n)], labels=g.labels)


def hypercube(n: int) -> Graph:
    if n < 2:
        raise ValueError("hypercube dimension >= 2")
    rows = [0] * (1 << n)
    for v in range(1 << n):
        for b in range(n):
            rows[v] |= 1 << (v ^ (1 << b))
    return Graph(1 << n, adj=rows)


def folded_cube(n: int) -> Graph:
    """Q_n with antipodal vertices identified; representatives have top bit 0."""
    if n < 3:
        raise ValueError("folded cube needs n >= 3")
    half = 1 << (n - 1)
    full = (1 << n) - 1

    def rep(v):
        return v if v < half else v ^ full

    rows = [0] * half
    for v in range(half):
        for b in range(n):
            rows[v] |= 1 << rep(v ^ (1 << b))
    return Graph(half, adj=rows)


def halved_cube(n: int) -> Graph:
    """Even-weight vertices of Q_n, adjacent at Hamming distance 2."""
    if n < 3:
        raise ValueError("halved cube needs n >= 3")
    verts = [v for v in range(1 << n) if bin(v).count("1") % 2 == 0]
    pos = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for v in verts:
        i = pos[v]
        for b1 in range(n):
            for b2 in range(b1 + 1, n):
                rows[i] |= 1 << pos[v ^ (1 << b1) ^ (1 << b2)]
    return Graph(len(verts), adj=rows)


def halved(g: Graph, side: int = 0) -> Graph:
    """Distance-2 graph on one side of a connected bipartite graph."""
    if not g.is_connected():
        raise ValueError("halved graph needs a connected graph")
    bip = g.bipartition()
    if bip is None:
        raise ValueError("halved graph needs a bipartite graph")
    verts = _bits(bip[side])
    pos = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for v in verts:
        two = 0
        for u in g.neighbors(v):
            two |= g.adj[u]
        two &= ~(1 << v)
        for w in _bits(two):
            rows[pos[v]] |= 1 << pos[w]
    return Graph(len(verts), adj=rows)


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    if not edges:
        raise ValueError("line graph of an edgeless graph")
    rows = [0] * len(edges)
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if a == c or a == d or b == c or b == d:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(len(edges), adj=rows)


def johnson(n: int, k: int) -> Graph:
    verts = list(combinations(range(n), k))
    pos = {s: i for i, s in enumerate(verts)}
    rows = [0] * len(verts)
    for i, a in enumerate(verts):
        sa = set(a)
        for j in range(i + 1, len(verts)):
            if len(sa.intersection(verts[j])) == k - 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(len(verts), adj=rows, labels=[str(v) for v in verts])


def petersen() -> Graph:
    """Complement of the local graph of the halved 5-cube."""
    h = halved_cube(5)
    nbrs = _bits(h.adj[0])
    return complement(h.induced(nbrs))


def icosahedron() -> Graph:
    """The icosahedron: top/bottom vertices plus two 5-cycles."""
    edges = []
    top, bottom = 10, 11
    for i in range(5):
        upper, lower = i, 5 + i
        edges += [(top, upper), (bottom, lower)]
        edges += [(upper, (i + 1) % 5)]
        edges += [(lower, 5 + (i + 1) % 5)]
        edges += [(upper, lower), (upper, 5 + (i + 1) % 5)]
    return Graph(12, edges=edges)


# ---------------------------------------------------------------------------
# geometries
# ---------------------------------------------------------------------------


class Geometry:
    """A partial linear space: indexed points, lines as sorted point tuples."""

    def __init__(self, num_points: int, lines, labels=None):
        self.num_points = num_points
        self.lines = [tuple(sorted(l)) for l in lines]
        self.labels = labels
        pair_seen = set()
        for l in self.lines:
            if len(l) < 2:
                raise ValueError("lines need at least 2 points")
            for pair in combinations(l, 2):
                if pair in pair_seen:
                    raise ValueError(f"points {pair} lie on two lines; not a partial linear space")
                pair_seen.add(pair)

    def validate_gq(self):
        """Check the generalised-quadrangle axiom; returns the order (s, t)."""
        line_sizes = {len(l) for l in self.lines}
        per_point = [0] * self.num_points
        on_line = [set() for _ in range(self.num_points)]
        for li, l in enumerate(self.lines):
            for p in l:
                per_point[p] += 1
                on_line[p].add(li)
        if len(line_sizes) != 1 or len(set(per_point)) != 1:
            raise ValueError("not a GQ: line sizes or point degrees are not constant")
        s = line_sizes.pop() - 1
        t = per_point[0] - 1
        collinear = [set() for _ in range(self.num_points)]
        for l in self.lines:
            for p in l:
                collinear[p].update(l)
        for li, l in enumerate(self.lines):
            lset = set(l)
            for p in range(self.num_points):
                if p in lset:
                    continue
                # GQ axiom: exactly one point of l collinear with p
                hits = sum(1 for x in l if x in collinear[p])
                if hits != 1:
                    raise ValueError(f"GQ axiom fails at point {p}, line {li}: {hits} collinear points")
        return s, t

    def point_graph(self) -> Graph:
        rows = [0] * self.num_points
        for l in self.lines:
            for a, b in combinations(l, 2):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
        return Graph(self.num_points, adj=rows, labels=self.labels)

    def incidence_graph(self) -> Graph:
        """Bipartite graph: points 0..P-1 then lines P..P+L-1."""
        P = self.num_points
        rows = [0] * (P + len(self.lines))
        for li, l in enumerate(self.lines):
            for p in l:
                rows[p] |= 1 << (P + li)
                rows[P + li] |= 1 << p
        return Graph(P + len(self.lines), adj=rows)

    def dual(self) -> "Geometry":
        """Swap points and lines (valid when the dual is partial linear)."""
        lines_through = [[] for _ in range(self.num_points)]
        for li, l in enumerate(self.lines):
            for p in l:
                lines_through[p].append(li)
        return Geometry(len(self.lines), lines_through)


_GQ_SPACES = {
    "W3": ("symplectic", 4, lambda q: q),
    "Q4": ("quadratic", 5, lambda q: q),
    "Q5minus": ("quadratic-", 6, lambda q: q),
    "H3": ("unitary", 4, lambda q: q * q),
    "H4": ("unitary", 5, lambda q: q * q),
}


def gq(kind: str, q: int) -> Geometry:
    """Classical generalised quadrangle from the corresponding formed space.

    For H3/H4 the space lives over GF(q^2).
    """
    if kind not in _GQ_SPACES:
        raise ValueError(f"unknown GQ kind {kind!r}; choose from {sorted(_GQ_SPACES)}")
    form_kind, d, order_of = _GQ_SPACES[kind]
    if order_of(q) ** d > 5000:
        raise ValueError(f"unsupported q={q} for {kind}: ambient space too large")
    S = forms.standard_space(form_kind, d, order_of(q))
    points = forms.singular_points(S)
    lines = forms.ts_lines(S, points)
    labels = ["<" + ",".join(map(str, v)) + ">" for v in points]
    geo = Geometry(len(points), lines, labels=labels)
    geo.validate_gq()
    return geo


def affine_polar(m: int, q: int, eps: str) -> Graph:
    """VO^eps_{2m}(q): all vectors, u ~ v iff Q(u - v) = 0."""
    if eps not in ("+", "-"):
        raise ValueError("eps must be '+' or '-'")
    S = forms.standard_space("quadratic" + eps, 2 * m, q)
    total = q ** (2 * m)
    # precompute singularity of every difference vector
    singular = bytearray(total)
    for idx in range(1, total):
        if S.eval_Q(S.decode(idx)) == 0:
            singular[idx] = 1
    rows = [0] * total
    F = S.F
    sub = F.sub
    for u in range(total):
        uv = S.decode(u)
        for v in range(u + 1, total):
            vv = S.decode(v)
            diff = tuple(sub[a][b] for a, b in zip(uv, vv))
            if singular[S.encode(diff)]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    labels = [",".join(map(str, S.decode(i))) for i in range(total)]
    return Graph(total, adj=rows, labels=labels)


def projective_plane_incidence(q: int) -> Graph:
    """Incidence graph of PG_2(q): 1- vs 2-subspaces of GF(q)^3."""
    if q not in (2, 3, 4):
        raise ValueError("supported planes: q in {2, 3, 4}")
    F = field(q)
    d = 3
    total = q**d

    def decode(idx):
        out = []
        for _ in range(d):
            out.append(idx % q)
            idx //= q
        return tuple(out)

    def encode(v):
        idx = 0
        for c in reversed(v):
            idx = idx * q + c
        return idx

    # projective points: least spanning vector per 1-subspace
    seen = bytearray(total)
    points = []
    vec_to_point = {}
    for idx in range(1, total):
        if seen[idx]:
            continue
        v = decode(idx)
        points.append(v)
        for a in range(1, q):
            w = tuple(F.mul[a][c] for c in v)
            seen[encode(w)] = 1
            vec_to_point[encode(w)] = len(points) - 1
    # lines: 2-subspaces as point sets
    lines = set()
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            pts = {i, j}
            for a in range(1, q):
                w = tuple(F.add[x][F.mul[a][y]] for x, y in zip(points[i], points[j]))
                pts.add(vec_to_point[encode(w)])
            lines.add(tuple(sorted(pts)))
    geo = Geometry(len(points), sorted(lines))
    return geo.incidence_graph()


# ---------------------------------------------------------------------------
# orbital graphs
# ---------------------------------------------------------------------------


def orbital_graphs(gens, degree: int):
    """Graphs of the non-trivial self-paired orbitals of a transitive group.

    Returns (graphs ordered by valency, number of skipped non-self-paired
    orbitals).  Orbital self-pairedness is decided by a transporter query.
    """
    from . import permgrp

    G = permgrp.group([tuple(g) for g in gens], degree)
    if permgrp.orbit(G, 0) != set(range(degree)):
        raise ValueError("generators are not transitive")
    stab = permgrp.pointwise_stabilizer(G, [0])
    suborbits = permgrp.orbits(stab)
    out = []
    skipped = 0
    for sub in suborbits:
        rep = sub[0]
        if rep == 0 and len(sub) == 1:
            continue  # trivial orbital
        if permgrp.tuple_transporter(G, (0, rep), (rep, 0)) is None:
            skipped += 1
            continue
        # edge set = orbit of the unordered pair {0, rep}
        sgens = G.strong_generators
        start = (0, rep) if rep > 0 else (rep, 0)
        seen = {frozenset(start)}
        queue = deque([start])
        rows = [0] * degree
        rows[0] |= 1 << rep
        rows[rep] |= 1
        while queue:
            a, b = queue.popleft()
            for s in sgens:
                p = frozenset((s[a], s[b]))
                if p not in seen:
                    seen.add(p)
                    x, y = tuple(p)
                    rows[x] |= 1 << y
                    rows[y] |= 1 << x
                    queue.append((s[a], s[b]))
        out.append(Graph(degree, adj=rows))
    out.sort(key=lambda g: g.degree(0))
    return out, skipped


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [chr(n + 63)]
    elif n <= 258047:
        head = [chr(126)] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    else:
        raise ValueError("graph too large for this graph6 writer")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = head
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i : i + 6]:
            x = (x << 1) | b
        chars.append(chr(x + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ValueError("empty graph6 input")
    vals = []
    for col, ch in enumerate(s):
        x = ord(ch) - 63
        if not 0 <= x <= 63:
            raise ValueError(f"invalid graph6 character {ch!r} at column {col}")
        vals.append(x)
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        raise ValueError("unsupported graph6 size header")
    if n == 0:
        raise ValueError("graph6 encodes an empty graph")
    need = n * (n - 1) // 2
    if len(body) * 6 < need:
        raise ValueError(f"graph6 body too short: {len(body) * 6} bits < {need}")
    bits = []
    for x in body:
        for shift in range(5, -1, -1):
            bits.append((x >> shift) & 1)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph(n, edges=edges)


def parse_edge_list(text: str) -> Graph:
    edges = []
    maxv = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex")
        edges.append((u, v))
        maxv = max(maxv, u, v)
    if not edges:
        raise ValueError("no edges in edge-list input")
    return Graph(maxv + 1, edges=edges)


def parse_generators(text: str):
    """Parse the generator fixture format.

    Line 1 is "degree N"; each following non-comment line is one permutation
    as N space-separated 0-based images.  Returns (degree, perms, metadata)
    where metadata collects "# key: value" comments.
    """
    degree = None
    perms = []
    meta = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            body = stripped.lstrip("#").strip()
            if ":" in body:
                key, _, val = body.partition(":")
                meta[key.strip()] = val.strip()
            continue
        if degree is None:
            parts = stripped.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise ValueError(f"line {lineno}: expected 'degree N' header")
            degree = int(parts[1])
            if degree < 1:
                raise ValueError(f"line {lineno}: degree must be positive")
            continue
        parts = stripped.split()
        if len(parts) != degree:
            raise ValueError(f"line {lineno}: expected {degree} images, got {len(parts)}")
        try:
            images = tuple(int(x) for x in parts)
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer image") from None
        if sorted(images) != list(range(degree)):
            raise ValueError(f"line {lineno}: images are not a bijection on 0..{degree - 1}")
        perms.append(images)
    if degree is None:
        raise ValueError("missing 'degree N' header")
    return degree, perms, meta


def write_generators(degree: int, perms, meta=None) -> str:
    lines = []
    for key, val in (meta or {}).items():
        lines.append(f"# {key}: {val}")
    lines.append(f"degree {degree}")
    for p in perms:
        lines.append(" ".join(map(str, p)))
    return "\n".join(lines) + "\n"
