"""Small integer helpers shared by the group and family code."""
from __future__ import annotations

from sympy import factorint, isprime

__all__ = ["isprime", "prime_divisors", "prime_power_base", "p_share"]


def prime_divisors(n: int) -> list[int]:
    return sorted(factorint(n)) if n > 1 else []


def prime_power_base(n: int) -> int:
    """``p`` if ``n == p**a`` with ``a >= 1``, 1 if ``n == 1``, else 0."""
    if n == 1:
        return 1
    f = factorint(n)
    return next(iter(f)) if len(f) == 1 else 0


def p_share(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q
