"""Small finite fields GF(p^k) for building projective planes.

Elements are integers 0 .. q-1 read as base-p digit vectors, i.e. the
coefficients of a polynomial over GF(p) reduced modulo a fixed monic
irreducible of degree k.  The modulus is the lowest such polynomial in
the base-p integer encoding, found by trial division at construction
time, so no external tables are involved.  Only q <= 16 is supported;
that covers every plane order this package builds.
"""

from __future__ import annotations

from .errors import UnsupportedOrderError

MAX_ORDER = 16


def _factor_prime_power(q: int):
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
        p += 1
    return (q, 1)


def _poly_divmod(a: list[int], b: list[int], p: int):
    """Polynomial division over GF(p); coefficient lists, low degree first."""
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p) if p > 2 else lb
    quo = [0] * max(1, len(a) - db)
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        if a[-1] == 0:
            a.pop()
            continue
        coef = a[-1] * inv_lb % p
        quo[da - db] = coef
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - coef * b[i]) % p
        a.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return quo, a


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every lower-degree monic polynomial."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for enc in range(p ** d):
            div = _decode(enc, p, d) + [1]
            _, rem = _poly_divmod(poly, div, p)
            if not any(rem):
                return False
    return True


def _decode(enc: int, p: int, k: int) -> list[int]:
    digits = []
    for _ in range(k):
        digits.append(enc % p)
        enc //= p
    return digits


def _encode(digits, p: int) -> int:
    out = 0
    for d in reversed(list(digits)):
        out = out * p + d
    return out


class FiniteField:
    """Arithmetic tables for GF(q), q a prime power at most 16."""

    def __init__(self, q: int):
        pk = _factor_prime_power(q)
        if pk is None or q > MAX_ORDER:
            raise UnsupportedOrderError(
                f"GF({q}) unsupported: need a prime power of at most {MAX_ORDER}")
        self.q = q
        self.p, self.k = pk
        self.modulus = self._find_modulus()
        self._mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = next(b for b in range(1, q) if self._mul[a][b] == 1)

    def _find_modulus(self) -> list[int]:
        p, k = self.p, self.k
        if k == 1:
            return [0, 1]
        for enc in range(p ** k):
            cand = _decode(enc, p, k) + [1]
            if _is_irreducible(cand, p):
                return cand
        raise AssertionError("no irreducible polynomial found")

    def add(self, a: int, b: int) -> int:
        p = self.p
        da, db = _decode(a, p, self.k), _decode(b, p, self.k)
        return _encode(((x + y) % p for x, y in zip(da, db)), p)

    def neg(self, a: int) -> int:
        p = self.p
        return _encode(((-x) % p for x in _decode(a, p, self.k)), p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_slow(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = _decode(a, p, k), _decode(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        _, rem = _poly_divmod(prod, self.modulus, p)
        rem += [0] * (k - len(rem))
        return _encode(rem[:k], p)

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._inv[a]

    def elements(self) -> range:
        return range(self.q)
