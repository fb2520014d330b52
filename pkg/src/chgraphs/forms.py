"""Formed spaces in standard basis over small finite fields.

A FormedSpace is GF(s)^d together with a symplectic, unitary or quadratic
form given by standard-basis data: a Gram matrix for the bilinear (or
sesquilinear) form f, and basis values of Q in the quadratic case.  Standard
bases are built from hyperbolic pairs (e_i, f_i) with
Q(e_i) = Q(f_i) = f(e_i, e_j) = f(f_i, f_j) = 0 and f(e_i, f_j) = delta_ij;
the minus-type quadratic space appends an anisotropic pair (x, y) with
Q(x) = 1, f(x, y) = 1, Q(y) = alpha where X^2 + X + alpha is irreducible.

Vectors are tuples of field elements.  The enumeration order used for all
canonical choices encodes a vector as sum(c_i * s^i), coordinate 0 least
significant; 1- and 2-subspaces are represented by their least spanning
vector / sorted point tuples in that order, so all derived graphs are
bit-identical across runs.
"""

from __future__ import annotations

from .galois import Field, field, frobenius

Vector = tuple

KINDS = ("symplectic", "unitary", "quadratic", "quadratic+", "quadratic-")


class FormedSpace:
    def __init__(self, F: Field, d: int, kind: str, gram, qvals, conj_k: int = 0):
        self.F = F
        self.d = d
        self.kind = kind
        self.gram = gram  # d x d field elements, f(b_i, b_j)
        self.qvals = qvals  # Q on basis vectors (quadratic kinds), else None
        self.conj_k = conj_k  # unitary conjugation is frobenius(., conj_k)
        self._point_index = None

    # -- form evaluation ----------------------------------------------------

    def conj(self, x: int) -> int:
        if self.conj_k:
            return frobenius(self.F, x, self.conj_k)
        return x

    def eval_f(self, u: Vector, v: Vector) -> int:
        if len(u) != self.d or len(v) != self.d:
            raise ValueError("vector dimension mismatch")
        F = self.F
        acc = 0
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.gram[i]
            for j, vj in enumerate(v):
                if vj and row[j]:
                    acc = F.add[acc][F.mul[F.mul[ui][row[j]]][self.conj(vj)]]
        return acc

    def eval_Q(self, v: Vector) -> int:
        if self.qvals is None:
            raise ValueError(f"{self.kind} space has no quadratic form")
        if len(v) != self.d:
            raise ValueError("vector dimension mismatch")
        F = self.F
        acc = 0
        for i, vi in enumerate(v):
            if vi:
                acc = F.add[acc][F.mul[F.mul[vi][vi]][self.qvals[i]]]
        for i in range(self.d):
            if v[i]:
                row = self.gram[i]
                for j in range(i + 1, self.d):
                    if v[j] and row[j]:
                        acc = F.add[acc][F.mul[F.mul[v[i]][v[j]]][row[j]]]
        return acc

    def is_singular(self, v: Vector) -> bool:
        if self.kind == "symplectic":
            return True
        if self.kind == "unitary":
            return self.eval_f(v, v) == 0
        return self.eval_Q(v) == 0

    # -- vector encoding ----------------------------------------------------

    def encode(self, v: Vector) -> int:
        idx = 0
        for c in reversed(v):
            idx = idx * self.F.q + c
        return idx

    def decode(self, idx: int) -> Vector:
        out = []
        for _ in range(self.d):
            out.append(idx % self.F.q)
            idx //= self.F.q
        return tuple(out)

    def scale(self, v: Vector, a: int) -> Vector:
        mul = self.F.mul[a]
        return tuple(mul[c] for c in v)

    def add_vec(self, u: Vector, v: Vector) -> Vector:
        add = self.F.add
        return tuple(add[a][b] for a, b in zip(u, v))

    def __repr__(self):
        return f"FormedSpace({self.kind}, d={self.d}, GF({self.F.q}))"


def _irreducible_alpha(F: Field) -> int:
    """Least alpha (in encoding order) with X^2 + X + alpha irreducible over F."""
    for alpha in range(F.q):
        # reducible iff X^2+X+alpha has a root in F
        if all(F.add[F.add[F.mul[x][x]][x]][alpha] != 0 for x in range(F.q)):
            return alpha
    raise RuntimeError("no irreducible X^2+X+alpha; broken field")


def standard_space(kind: str, d: int, q: int) -> FormedSpace:
    """Standard formed space of the given kind and dimension over GF(q).

    For unitary spaces q must be a square; conjugation is x -> x^sqrt(q).
    """
    if kind not in KINDS:
        raise ValueError(f"unknown form kind {kind!r}")
    F = field(q)
    gram = [[0] * d for _ in range(d)]
    qvals = None
    conj_k = 0
    one = 1
    if kind == "symplectic":
        if d % 2:
            raise ValueError("symplectic spaces have even dimension")
        m = d // 2
        minus_one = F.neg[one]
        for i in range(m):
            gram[i][m + i] = one
            gram[m + i][i] = minus_one
    elif kind == "unitary":
        if F.e % 2:
            raise ValueError("unitary spaces need a square field order")
        conj_k = F.e // 2
        m = d // 2
        for i in range(m):
            gram[i][m + i] = one
            gram[m + i][i] = one
        if d % 2:
            gram[d - 1][d - 1] = one
    elif kind == "quadratic":
        if d % 2 == 0:
            raise ValueError("use quadratic+ or quadratic- in even dimension")
        if F.p == 2:
            raise ValueError("odd-dimensional quadratic spaces are supported for odd q only")
        m = d // 2
        qvals = [0] * d
        for i in range(m):
            gram[i][m + i] = one
            gram[m + i][i] = one
        qvals[d - 1] = one
        gram[d - 1][d - 1] = F.add[one][one]  # f(x,x) = 2 Q(x)
    else:  # quadratic+ / quadratic-
        if d % 2:
            raise ValueError("quadratic+/- spaces have even dimension")
        m = d // 2
        qvals = [0] * d
        hyp = m if kind == "quadratic+" else m - 1
        for i in range(hyp):
            gram[i][hyp + i] = one
            gram[hyp + i][i] = one
        if kind == "quadratic-":
            alpha = _irreducible_alpha(F)
            x_i, y_i = d - 2, d - 1
            qvals[x_i] = one
            qvals[y_i] = alpha
            gram[x_i][y_i] = one
            gram[y_i][x_i] = one
            two = F.add[one][one]
            gram[x_i][x_i] = two  # f(v,v) = 2 Q(v); zero in characteristic 2
            gram[y_i][y_i] = F.mul[two][alpha]
    return FormedSpace(F, d, kind, gram, qvals, conj_k)


def singular_points(S: FormedSpace) -> list:
    """All singular 1-subspaces, each as its least spanning vector, in order."""
    q = S.F.q
    total = q**S.d
    seen = bytearray(total)
    points = []
    for idx in range(1, total):
        if seen[idx]:
            continue
        v = S.decode(idx)
        # mark the whole projective point as seen
        for a in range(1, q):
            seen[S.encode(S.scale(v, a))] = 1
        if S.is_singular(v):
            points.append(v)
    return points


def _point_index(S: FormedSpace, points) -> dict:
    """Map every nonzero vector encoding of a singular point to its index."""
    if S._point_index is None:
        table = {}
        for i, v in enumerate(points):
            for a in range(1, S.F.q):
                table[S.encode(S.scale(v, a))] = i
        S._point_index = table
    return S._point_index


def ts_lines(S: FormedSpace, points=None) -> list:
    """All totally singular 2-subspaces as sorted tuples of point indices."""
    if points is None:
        points = singular_points(S)
    index = _point_index(S, points)
    q = S.F.q
    lines = set()
    npts = len(points)
    for i in range(npts):
        vi = points[i]
        for j in range(i + 1, npts):
            vj = points[j]
            if S.eval_f(vi, vj) != 0:
                continue
            if S.kind == "unitary" and S.eval_f(vj, vi) != 0:
                continue
            # span is totally singular (singularity is closed under the span
            # once f vanishes on the pair); collect its q+1 points
            pts = {i, j}
            for a in range(1, q):
                w = S.add_vec(vi, S.scale(vj, a))
                pts.add(index[S.encode(w)])
            lines.add(tuple(sorted(pts)))
    return sorted(lines)


def hyperbolic_partner(S: FormedSpace, v: Vector) -> Vector:
    """First vector w in enumeration order with Q(w) = 0 and f(v, w) = 1."""
    if S.qvals is None:
        raise ValueError("hyperbolic partners are defined for quadratic spaces")
    if all(c == 0 for c in v) or S.eval_Q(v) != 0:
        raise ValueError("v must be nonzero singular")
    for idx in range(1, S.F.q**S.d):
        w = S.decode(idx)
        if S.eval_Q(w) == 0 and S.eval_f(v, w) == 1:
            return w
    raise RuntimeError("no hyperbolic partner found; the form data is inconsistent")


def has_ts_plane(S: FormedSpace) -> bool:
    """Bounded search for a totally singular 3-subspace (plane)."""
    points = singular_points(S)
    lines = ts_lines(S, points)
    for line in lines:
        vi = points[line[0]]
        vj = points[line[1]]
        on_line = set(line)
        for k, w in enumerate(points):
            if k in on_line:
                continue
            if S.eval_f(vi, w) == 0 and S.eval_f(vj, w) == 0:
                if S.kind != "unitary" or (S.eval_f(w, vi) == 0 and S.eval_f(w, vj) == 0):
                    return True
    return False
