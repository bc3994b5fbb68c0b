"""Concrete permutation groups for the families used in the checks."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .fields import GaloisField
from .group import (
    Group,
    PreconditionError,
    SubgroupSet,
    center,
    fitting,
    normalizer,
    o_p,
    closure,
)
from .numtheory import isprime
from .perm import Permutation
from .sylow import sylow_p

__all__ = [
    "FamilySpec",
    "symmetric",
    "cyclic",
    "dihedral",
    "psl2",
    "frobenius",
    "frobenius_dn",
    "zsigmondy",
    "galois_family",
    "galois_nil_ratio",
    "build",
    "parse_family",
]

SYMMETRIC_MAX = 8
PSL2_MAX = 13
GALOIS_MAX_K = 2
FROBENIUS_MAX_ORDER = 5000


def symmetric(n: int) -> Group:
    if not 1 <= n <= SYMMETRIC_MAX:
        raise PreconditionError(f"symmetric: need 1 <= n <= {SYMMETRIC_MAX}, got {n}")
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles([(0, 1)], n))
    if n >= 3:
        gens.append(Permutation.from_cycles([tuple(range(n))], n))
    return closure(n, gens, name=f"S{n}")


def cyclic(n: int) -> Group:
    if n < 1:
        raise PreconditionError(f"cyclic: need n >= 1, got {n}")
    gens = [Permutation.from_cycles([tuple(range(n))], n)] if n > 1 else []
    return closure(n, gens, name=f"C{n}")


def dihedral(n: int) -> Group:
    """Symmetries of the n-gon, order 2n."""
    if n < 3:
        raise PreconditionError(f"dihedral: need n >= 3, got {n}")
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    return closure(n, [rot, ref], name=f"D{n}")


def psl2(p: int) -> Group:
    """PSL(2, p) acting on the projective line; point p stands for infinity."""
    if p < 5 or not isprime(p):
        raise PreconditionError(f"psl2: need a prime p >= 5, got {p}")
    if p > PSL2_MAX:
        raise PreconditionError(f"psl2: p = {p} exceeds the cap {PSL2_MAX}")
    inf = p
    shift = [(z + 1) % p for z in range(p)] + [inf]
    flip = [inf] + [(-pow(z, -1, p)) % p for z in range(1, p)] + [0]
    G = closure(p + 1, [Permutation(shift), Permutation(flip)], name=f"PSL2_{p}")
    if G.order != p * (p * p - 1) // 2:
        raise AssertionError(f"PSL(2,{p}) closure has order {G.order}")
    return G


def _affine_perms(F: GaloisField, mults: list[int], frob: bool = False) -> list[Permutation]:
    """Translations by a basis, multiplications by ``mults`` and optionally v -> v^p."""
    q = F.size
    gens = [Permutation([F.add(v, b) for v in range(q)]) for b in F.basis]
    gens += [Permutation([F.mul(v, a) for v in range(q)]) for a in mults]
    if frob:
        gens.append(Permutation([F.frobenius(v) for v in range(q)]))
    return gens


def _translations(G: Group, F: GaloisField) -> SubgroupSet:
    return SubgroupSet(
        G, sorted(G.find([F.add(v, t) for v in range(F.size)]) for t in range(F.size))
    )


def frobenius(p: int, k: int, q: int) -> Group:
    """The affine group GF(p^k) x| C_q, with C_q acting by multiplication."""
    if not isprime(p):
        raise PreconditionError(f"frobenius: p = {p} is not prime")
    if not isprime(q):
        raise PreconditionError(f"frobenius: q = {q} is not prime")
    if k < 1:
        raise PreconditionError(f"frobenius: need k >= 1, got {k}")
    if (p**k - 1) % q:
        raise PreconditionError(f"frobenius: q = {q} does not divide p^k - 1 = {p**k - 1}")
    for l in range(1, k):
        if (p**l - 1) % q == 0:
            raise PreconditionError(
                f"frobenius: q = {q} divides p^l - 1 = {p**l - 1} for l = {l} < k"
            )
    if p**k * q > FROBENIUS_MAX_ORDER:
        raise PreconditionError(f"frobenius: order {p**k * q} exceeds {FROBENIUS_MAX_ORDER}")
    F = GaloisField(p, k)
    a = F.subgroup_generator(q)
    G = closure(F.size, _affine_perms(F, [a]), name=f"F_{p}_{k}_{q}")
    if G.order != p**k * q:
        raise AssertionError(f"Frobenius closure has order {G.order}")
    N = _translations(G, F)
    x = G.find([F.mul(v, a) for v in range(F.size)])
    mul = G.mul
    if any(mul(n, x) == mul(x, n) for n in N.members if n != 0):
        raise AssertionError("complement does not act fixed-point-freely on the kernel")
    if fitting(G) != N:
        raise AssertionError("Fitting subgroup is not the kernel")
    G.tags.update(kernel=N, complement=x, p=p, k=k, q=q)
    return G


def frobenius_dn(pk: int, q: int):
    """Closed form of dn for a Frobenius group with kernel of order pk and complement C_q."""
    return Fraction(1, pk * q) + Fraction(pk - 1, pk) * Fraction(1, q * q) + Fraction(q - 1, pk * q)


def zsigmondy(n: int) -> int:
    """Least prime dividing 2^n - 1 but no 2^l - 1 with l < n."""
    if n < 2:
        raise PreconditionError(f"zsigmondy: need n >= 2, got {n}")
    m = 2**n - 1
    d = 2
    while d <= m:
        if m % d == 0 and isprime(d) and all((2**l - 1) % d for l in range(1, n)):
            return d
        d += 1
    raise PreconditionError(f"zsigmondy: 2^{n} - 1 has no primitive prime divisor")


@dataclass
class GaloisParts:
    field: GaloisField
    p: int
    V: SubgroupSet
    P_gen: int  # multiplication by the chosen element of order p
    frob: int
    extras: dict = field(default_factory=dict)


def galois_family(k: int, allow_large: bool = False) -> Group:
    """(V x| P) x| Gal(GF(2^n)/GF(2)), n = 2^k, acting on GF(2^n) via v -> sigma(v a) + t."""
    if k < 2 or k > (3 if allow_large else GALOIS_MAX_K):
        raise PreconditionError(
            f"galois: k = {k} out of range (k = 2; k = 3 needs the large-group override)"
        )
    n = 2**k
    p = zsigmondy(n)
    F = GaloisField(2, n)
    a = F.subgroup_generator(p)
    G = closure(F.size, _affine_perms(F, [a], frob=True), name=f"galois_{k}")
    expected = 2 ** (n + k) * p
    if G.order != expected:
        raise AssertionError(f"galois family order {G.order} != {expected}")
    # no element of mixed order: every order is a power of 2 or equals p
    orders = set(G.orders)
    if any(o != p and o & (o - 1) for o in orders):
        raise AssertionError(f"element orders {sorted(orders)} include a mixed order")
    if center(G).order != 1:
        raise AssertionError("center is not trivial")
    y = a
    for j in range(1, n):
        y = F.frobenius(y)
        if y == a:
            raise AssertionError(f"Frobenius^{j} fixes the order-{p} element")
    V = _translations(G, F)
    if o_p(G, 2) != V:
        raise AssertionError("O_2(G) is not the translation subgroup")
    syl = sylow_p(G, 2)
    for S in syl.conjugates:
        if normalizer(G, S) != S:
            raise AssertionError("a Sylow 2-subgroup is not self-normalizing")
    for i, S in enumerate(syl.conjugates):
        for T in syl.conjugates[i + 1:]:
            if S.mask & T.mask != V.mask:
                raise AssertionError("two Sylow 2-subgroups meet outside V")
    G.tags.update(
        parts=GaloisParts(
            field=F,
            p=p,
            V=V,
            P_gen=G.find([F.mul(v, a) for v in range(F.size)]),
            frob=G.find([F.frobenius(v) for v in range(F.size)]),
        ),
        k=k,
        n=n,
        p=p,
    )
    return G


def galois_nil_ratio(k: int, p: int):
    """1 - (p - 1) / (2^k p)."""
    return 1 - Fraction(p - 1, 2**k * p)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"


_ARITY = {"symmetric": 1, "cyclic": 1, "dihedral": 1, "psl2": 1, "frobenius": 3, "galois": 1}


def build(spec: FamilySpec, allow_large: bool = False) -> Group:
    if spec.kind not in _ARITY:
        raise PreconditionError(f"unknown family {spec.kind!r}; choose from {sorted(_ARITY)}")
    if len(spec.params) != _ARITY[spec.kind]:
        raise PreconditionError(
            f"{spec.kind} takes {_ARITY[spec.kind]} parameter(s), got {len(spec.params)}"
        )
    if spec.kind == "galois":
        return galois_family(spec.params[0], allow_large=allow_large)
    ctor = {
        "symmetric": symmetric,
        "cyclic": cyclic,
        "dihedral": dihedral,
        "psl2": psl2,
        "frobenius": frobenius,
    }[spec.kind]
    return ctor(*spec.params)


_SHORT = {"S": "symmetric", "C": "cyclic", "D": "dihedral"}


def parse_family(text: str) -> FamilySpec:
    """Parse ``symmetric:4``, ``frobenius:7,1,3``, ``psl2:5`` or the short forms ``S4``, ``C12``, ``D6``."""
    text = text.strip()
    m = re.fullmatch(r"([SCD])(\d+)", text)
    if m:
        return FamilySpec(_SHORT[m.group(1)], (int(m.group(2)),))
    m = re.fullmatch(r"([a-z0-9]+)[:(]\s*([\d,\s]+?)\s*\)?", text)
    if not m:
        raise PreconditionError(f"cannot parse family {text!r}")
    try:
        params = tuple(int(t) for t in re.split(r"[,\s]+", m.group(2)) if t)
    except ValueError:
        raise PreconditionError(f"cannot parse family {text!r}") from None
    return FamilySpec(m.group(1), params)
