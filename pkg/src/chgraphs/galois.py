"""Arithmetic in small finite fields GF(p^e).

Elements of GF(p^e) are integers 0..q-1 encoding polynomials over GF(p)
modulo a fixed irreducible polynomial: the integer sum(c_i * p^i) stands for
the polynomial sum(c_i * X^i).  The defining polynomial is the
lexicographically least monic irreducible of degree e (least as an integer
encoding of its non-leading coefficients), so element encodings are
reproducible across runs.

Fields are capped at order 32; everything downstream only needs
q in {2,3,4,5,9,16,25}.
"""

from __future__ import annotations

from functools import lru_cache

MAX_ORDER = 32


class Field:
    """GF(p^e) with full addition/multiplication tables (immutable)."""

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus  # coefficients of the defining poly, low degree first
        q = self.q
        self.add = [[self._add_raw(x, y) for y in range(q)] for x in range(q)]
        self.sub = [[self._sub_raw(x, y) for y in range(q)] for x in range(q)]
        self.mul = [[self._mul_raw(x, y) for y in range(q)] for x in range(q)]
        self.neg = [self.sub[0][x] for x in range(q)]
        inv = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if self.mul[x][y] == 1:
                    inv[x] = y
                    break
        self.inv = inv

    # -- raw polynomial arithmetic on integer encodings ---------------------

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(x % self.p)
            x //= self.p
        return out

    def _undigits(self, ds) -> int:
        x = 0
        for c in reversed(ds):
            x = x * self.p + c
        return x

    def _add_raw(self, x: int, y: int) -> int:
        a, b = self._digits(x), self._digits(y)
        return self._undigits([(u + v) % self.p for u, v in zip(a, b)])

    def _sub_raw(self, x: int, y: int) -> int:
        a, b = self._digits(x), self._digits(y)
        return self._undigits([(u - v) % self.p for u, v in zip(a, b)])

    def _mul_raw(self, x: int, y: int) -> int:
        a, b = self._digits(x), self._digits(y)
        prod = [0] * (2 * self.e - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    prod[i + j] = (prod[i + j] + u * v) % self.p
        # reduce modulo the defining polynomial (monic, degree e)
        for i in range(len(prod) - 1, self.e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.e):
                    prod[i - self.e + j] = (prod[i - self.e + j] - c * self.modulus[j]) % self.p
        return self._undigits(prod[: self.e])

    # -- public API ---------------------------------------------------------

    def power(self, x: int, n: int) -> int:
        if n == 0:
            return 1
        r = 1
        while n:
            if n & 1:
                r = self.mul[r][x]
            x = self.mul[x][x]
            n >>= 1
        return r

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"GF({self.q})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(n**0.5) + 1):
        if n % d == 0:
            return False
    return True


def _poly_eval_roots_free(p: int, coeffs: list[int]) -> bool:
    """True if the monic polynomial (low-first coeffs, implicit leading 1) has no root in GF(p)."""
    deg = len(coeffs)
    for x in range(p):
        acc = 1  # leading coefficient
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return False
    return True


def _poly_mul_mod(p: int, a: list[int], b: list[int], mod: list[int]) -> list[int]:
    """Multiply polynomials over GF(p) modulo a monic poly given by low-first coeffs."""
    e = len(mod)
    prod = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                prod[i + j] = (prod[i + j] + u * v) % p
    for i in range(len(prod) - 1, e - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(e):
                prod[i - e + j] = (prod[i - e + j] - c * mod[j]) % p
    out = prod[:e]
    out += [0] * (e - len(out))
    return out


def _is_irreducible(p: int, coeffs: list[int]) -> bool:
    """Irreducibility of the monic poly X^e + sum(coeffs[i] X^i) over GF(p).

    Uses the standard criterion: X^(p^e) = X mod f, and gcd-degree condition
    via X^(p^(e/r)) != X for every prime r | e.  For the tiny degrees here
    (e <= 5) a root check plus the power test is enough.
    """
    e = len(coeffs)
    if e == 1:
        return True
    if coeffs[0] == 0:  # divisible by X
        return False
    if not _poly_eval_roots_free(p, coeffs):
        return False
    if e <= 3:
        # degree 2 or 3: irreducible iff no root
        return True
    # general small-degree test: x^(p^k) for k < e must not equal x
    x = [0, 1] + [0] * (e - 2)
    xp = x[:]
    for k in range(1, e + 1):
        # raise to p-th power
        acc = [1] + [0] * (e - 1)
        n = p
        base = xp[:]
        while n:
            if n & 1:
                acc = _poly_mul_mod(p, acc, base, coeffs)
            base = _poly_mul_mod(p, base, base, coeffs)
            n >>= 1
        xp = acc
        if k < e and xp == x:
            return False
        if k == e and xp != x:
            return False
    return True


@lru_cache(maxsize=None)
def field(q: int) -> Field:
    """Construct GF(q) for a prime power q <= 32.

    The defining polynomial is the lexicographically least monic irreducible
    of the right degree, e.g. X^2+X+1 for GF(4).
    """
    if q < 2 or q > MAX_ORDER:
        raise ValueError(f"field order {q} out of supported range 2..{MAX_ORDER}")
    # factor q as p^e
    p = None
    for cand in range(2, q + 1):
        if _is_prime(cand) and q % cand == 0:
            p = cand
            break
    e = 0
    n = q
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise ValueError(f"{q} is not a prime power (divisible by {p} but {q} != {p}^k)")
    # least monic irreducible of degree e: scan non-leading coefficient
    # encodings in increasing integer order
    for enc in range(p**e):
        coeffs = []
        x = enc
        for _ in range(e):
            coeffs.append(x % p)
            x //= p
        if _is_irreducible(p, coeffs):
            return Field(p, e, tuple(coeffs))
    raise RuntimeError(f"no irreducible polynomial of degree {e} over GF({p})")  # unreachable


def frobenius(F: Field, x: int, k: int) -> int:
    """x ** (p^k) in F."""
    if not 0 <= x < F.q:
        raise ValueError(f"element {x} not in {F!r}")
    k %= F.e  # x^(p^e) = x
    if k == 0:
        return x
    return F.power(x, F.p**k)
