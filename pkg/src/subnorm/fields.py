"""Small prime-power fields GF(p^n).

An element is an integer in ``range(p**n)`` whose base-p digits are the
coefficients of a polynomial in the generator (lowest digit = constant term).
For p = 2 this is the usual bit-vector encoding and addition is XOR.
"""
from __future__ import annotations

from functools import cached_property

from .numtheory import isprime, prime_divisors

__all__ = ["GaloisField", "FiniteField2n", "lowest_irreducible"]


def _digits(a: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m`` (coefficient lists, low first)."""
    a = a[:]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [c % p for c in a[:dm]] + [0] * max(0, dm - len(a))


def _monic(code: int, p: int, deg: int) -> list[int]:
    return _digits(code, p, deg) + [1]


def is_irreducible(m: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            if not any(_poly_mod(m, _monic(code, p, d), p)):
                return False
    return True


def lowest_irreducible(p: int, n: int) -> list[int]:
    """Monic irreducible of degree n with the smallest lower-coefficient code."""
    for code in range(p**n):
        m = _monic(code, p, n)
        if is_irreducible(m, p):
            return m
    raise ValueError(f"no irreducible polynomial of degree {n} over GF({p})")


class GaloisField:
    def __init__(self, p: int, n: int):
        if not isprime(p) or n < 1:
            raise ValueError(f"GF({p}^{n}) is not a field")
        self.p = p
        self.n = n
        self.size = p**n
        self.modulus = lowest_irreducible(p, n)
        if not is_irreducible(self.modulus, p):
            raise ValueError("modulus is reducible")
        self._build()

    @property
    def modulus_code(self) -> int:
        """Modulus as an integer in the element encoding (leading term included)."""
        return sum(c * self.p**i for i, c in enumerate(self.modulus))

    def _build(self) -> None:
        p, n, q = self.p, self.n, self.size
        if n == 1:
            self._add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self._neg = [(-a) % p for a in range(q)]
            self._mul = [[a * b % p for b in range(q)] for a in range(q)]
            self._find_generator()
            return
        digits = [_digits(a, p, n) for a in range(q)]
        weights = [p**i for i in range(n)]

        def encode(cs):
            return sum(c * w for c, w in zip(cs, weights))

        self._add = [[encode([(x + y) % p for x, y in zip(digits[a], digits[b])])
                      for b in range(q)] for a in range(q)]
        self._neg = [encode([(-x) % p for x in digits[a]]) for a in range(q)]

        def polymul(a, b):
            prod = [0] * (2 * n - 1)
            for i, x in enumerate(digits[a]):
                if x:
                    for j, y in enumerate(digits[b]):
                        prod[i + j] += x * y
            return encode(_poly_mod(prod, self.modulus, p))

        self._mul = [[polymul(a, b) for b in range(q)] for a in range(q)]
        self._find_generator()

    def _find_generator(self) -> None:
        q = self.size
        gen = None
        for g in range(2, q) if q > 2 else [1]:
            if self.mult_order(g) == q - 1:
                gen = g
                break
        if gen is None:
            raise ValueError("multiplicative group is not cyclic; modulus bug")
        self.generator = gen

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def pow(self, a: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self._mul[out][a]
        return out

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        k, y = 1, a
        while y != 1:
            y = self._mul[y][a]
            k += 1
        return k

    def inverse(self, a: int) -> int:
        return self.pow(a, self.size - 2)

    def frobenius(self, a: int) -> int:
        """a -> a^p."""
        return self.pow(a, self.p)

    @cached_property
    def basis(self) -> list[int]:
        return [self.p**i for i in range(self.n)]

    def subgroup_generator(self, q: int) -> int:
        """A generator of the order-q subgroup of the multiplicative group."""
        if (self.size - 1) % q:
            raise ValueError(f"{q} does not divide {self.size - 1}")
        return self.pow(self.generator, (self.size - 1) // q)

    def check(self) -> None:
        """Field-law spot checks: cyclic unit group and Frobenius of order n."""
        q = self.size
        assert self.mult_order(self.generator) == q - 1
        for d in prime_divisors(q - 1):
            assert self.pow(self.generator, (q - 1) // d) != 1
        frob = list(range(q))
        for k in range(1, self.n + 1):
            frob = [self.frobenius(a) for a in frob]
            fixed_all = frob == list(range(q))
            assert fixed_all == (k == self.n)
        for a in range(q):
            fa = self.frobenius(a)
            for b in range(q):
                assert self.frobenius(self.add(a, b)) == self.add(fa, self.frobenius(b))
                assert self.frobenius(self.mul(a, b)) == self.mul(fa, self.frobenius(b))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.n})"


def FiniteField2n(n: int) -> GaloisField:
    return GaloisField(2, n)
