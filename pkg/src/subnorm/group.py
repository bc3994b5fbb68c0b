"""Finite permutation groups with fully enumerated elements.

Elements are addressed by their index in ``Group.elements`` (lexicographic
order of image tuples, so the identity is always index 0).  Subgroups are
``SubgroupSet`` objects carrying a bitmask over those indices.
"""
from __future__ import annotations

from functools import cached_property
from math import gcd
from operator import itemgetter
from typing import Iterable, Iterator, Sequence, Union

from .numtheory import p_share, prime_divisors, prime_power_base
from .perm import Permutation, compose

__all__ = [
    "GroupError",
    "GroupTooLarge",
    "PreconditionError",
    "Group",
    "SubgroupSet",
    "closure",
    "subgroup_generated",
    "element_order",
    "p_part",
    "conjugacy_classes",
    "centralizer",
    "normalizer",
    "center",
    "normal_closure",
    "is_nilpotent",
    "sylows_normal",
    "is_subnormal",
    "o_p",
    "fitting",
    "hypercenter",
    "DEFAULT_MAX_ORDER",
    "TABLE_CAP",
]

DEFAULT_MAX_ORDER = 100_000
TABLE_CAP = 4096


class GroupError(Exception):
    pass


class GroupTooLarge(GroupError):
    pass


class PreconditionError(GroupError, ValueError):
    pass


def _mask_of(indices: Iterable[int], n: int) -> int:
    buf = bytearray((n + 7) >> 3)
    for i in indices:
        buf[i >> 3] |= 1 << (i & 7)
    return int.from_bytes(buf, "little")


def _members_of(mask: int) -> list[int]:
    out = []
    base = 0
    for byte in mask.to_bytes((mask.bit_length() + 7) >> 3, "little"):
        if byte:
            for b in range(8):
                if byte >> b & 1:
                    out.append(base + b)
        base += 8
    return out


class Group:
    """A permutation group given by its full element list.

    Build one with :func:`closure`.  Products are looked up in a cached
    multiplication table when the order is at most ``TABLE_CAP``; larger
    groups compose image tuples on demand.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        elements: list[tuple[int, ...]],
        name: str | None = None,
        table_cap: int = TABLE_CAP,
    ):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = elements
        self.index = {e: i for i, e in enumerate(elements)}
        self.order = len(elements)
        self.name = name or f"G{self.order}"
        self.identity = 0
        self.tags: dict = {}
        self._memo: dict = {}
        self._base = _find_base(elements, degree)
        key = itemgetter(*self._base) if self._base else (lambda e: ())
        self._base_images = [key(e) for e in elements]
        self._by_base = {b: i for i, b in enumerate(self._base_images)}
        if 1 < self.order <= table_cap:
            self._table = self._build_table()
            self.mul = self._mul_table
        else:
            self._table = None
            self.mul = self._mul_compose
        gens = []
        for g in self.generators:
            i = self.index[g.images]
            if i != 0 and i not in gens:
                gens.append(i)
        self.gens = tuple(gens)

    def _build_table(self) -> list[list[int]]:
        by_base, images = self._by_base, self._base_images
        rows = []
        for x in images:
            get = itemgetter(*x) if isinstance(x, tuple) else itemgetter(x)
            rows.append([by_base[get(y)] for y in self.elements])
        return rows

    def _mul_table(self, i: int, j: int) -> int:
        return self._table[i][j]

    def _mul_compose(self, i: int, j: int) -> int:
        x = self._base_images[i]
        y = self.elements[j]
        if isinstance(x, tuple):
            return self._by_base[tuple(y[b] for b in x)]
        return self._by_base[y[x]]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<Group {self.name} order={self.order} degree={self.degree}>"

    def perm(self, i: int) -> Permutation:
        return Permutation(self.elements[i])

    def find(self, p: Permutation | Sequence[int] | str) -> int:
        """Index of an element given as a Permutation, image list or cycle string."""
        if isinstance(p, str):
            p = Permutation.parse(p, self.degree)
        images = p.images if isinstance(p, Permutation) else tuple(p)
        try:
            return self.index[images]
        except KeyError:
            raise PreconditionError(f"{images} is not an element of {self.name}") from None

    @cached_property
    def inv(self) -> list[int]:
        out = [0] * self.order
        for i, e in enumerate(self.elements):
            if out[i]:
                continue
            inv = [0] * self.degree
            for a, b in enumerate(e):
                inv[b] = a
            j = self.index[tuple(inv)]
            out[i] = j
            out[j] = i
        return out

    @cached_property
    def orders(self) -> list[int]:
        mul = self.mul
        out = [0] * self.order
        for i in range(self.order):
            if out[i]:
                continue
            k, y = 1, i
            powers = [i]
            while y != 0:
                y = mul(y, i)
                k += 1
                powers.append(y)
            out[i] = k
            # x^j has order k / gcd(j, k)
            for j in range(1, k):
                if not out[powers[j - 1]]:
                    out[powers[j - 1]] = k // gcd(j, k)
        return out

    @cached_property
    def prime_base(self) -> list[int]:
        """Per element: ``p`` for a nontrivial p-element, 1 for identity, 0 otherwise."""
        cache: dict[int, int] = {}
        out = []
        for k in self.orders:
            if k not in cache:
                cache[k] = prime_power_base(k)
            out.append(cache[k])
        return out

    @cached_property
    def primes(self) -> list[int]:
        return prime_divisors(self.order)

    def power(self, x: int, e: int) -> int:
        k = self.orders[x]
        e %= k
        mul = self.mul
        out, base = 0, x
        while e:
            if e & 1:
                out = mul(out, base)
            base = mul(base, base)
            e >>= 1
        return out

    def conj(self, x: int, g: int) -> int:
        """``g^-1 x g``."""
        return self.mul(self.mul(self.inv[g], x), g)

    def comm(self, x: int, g: int) -> int:
        """``[x, g] = x^-1 g^-1 x g``."""
        inv = self.inv
        return self.mul(self.mul(inv[x], inv[g]), self.mul(x, g))

    @cached_property
    def whole(self) -> "SubgroupSet":
        return SubgroupSet(self, list(range(self.order)), gens=self.gens, mask=(1 << self.order) - 1)

    @cached_property
    def trivial(self) -> "SubgroupSet":
        return SubgroupSet(self, [0], gens=())

    def generate(
        self,
        seeds: Iterable[int],
        base: "SubgroupSet | None" = None,
        limit: int | None = None,
        p_only: int | None = None,
    ) -> "SubgroupSet | None":
        """Subgroup generated by ``base`` and ``seeds``.

        Built coset by coset over ``base`` (Dimino's scheme).  Returns None
        when ``limit`` is given and the result would exceed it, or when
        ``p_only`` is given and an element of order not a power of it appears.
        """
        if base is None:
            base = self.trivial
        flags = bytearray(self.order)
        members = list(base.members)
        for h in members:
            flags[h] = 1
        new = []
        for s in seeds:
            if not flags[s] and s not in new:
                new.append(s)
        if not new:
            return base
        gens = list(base.gens) + new
        mul = self.mul
        pbase = self.prime_base if p_only is not None else None
        reps = [0]
        hm = base.members
        i = 0
        while i < len(reps):
            r = reps[i]
            i += 1
            for s in gens:
                t = mul(r, s)
                if flags[t]:
                    continue
                for h in hm:
                    c = mul(h, t)
                    flags[c] = 1
                    members.append(c)
                if p_only is not None and any(pbase[c] > 1 and pbase[c] != p_only
                                              or pbase[c] == 0 for c in members[-len(hm):]):
                    return None
                if limit is not None and len(members) > limit:
                    return None
                reps.append(t)
        members.sort()
        return SubgroupSet(self, members, gens=tuple(gens))

    def subgroup_from_mask(self, mask: int) -> "SubgroupSet":
        return SubgroupSet(self, _members_of(mask), mask=mask)


class SubgroupSet:
    """A subgroup of ``parent`` stored as sorted member indices plus a bitmask."""

    def __init__(self, parent: Group, members: Sequence[int], gens=None, mask: int | None = None):
        self.parent = parent
        self.members = tuple(members)
        self.mask = _mask_of(self.members, parent.order) if mask is None else mask
        self._gens = None if gens is None else tuple(gens)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def gens(self) -> tuple[int, ...]:
        if self._gens is None:
            G = self.parent
            H = G.trivial
            gens = []
            for m in self.members:
                if not H.mask >> m & 1:
                    H = G.generate([m], base=H)
                    gens.append(m)
            self._gens = tuple(gens)
        return self._gens

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __le__(self, other: "SubgroupSet") -> bool:
        return self.mask & ~other.mask == 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SubgroupSet)
            and other.parent is self.parent
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash(self.mask)

    def __repr__(self) -> str:
        return f"<SubgroupSet order={self.order} of {self.parent.name}>"

    def conjugate(self, g: int) -> "SubgroupSet":
        G = self.parent
        conj = G.conj
        members = sorted(conj(h, g) for h in self.members)
        gens = None if self._gens is None else tuple(conj(h, g) for h in self._gens)
        return SubgroupSet(G, members, gens=gens)

    def is_normal_in(self, K: "SubgroupSet") -> bool:
        conj = self.parent.conj
        return all(conj(h, k) in self for h in self.gens for k in K.gens)


GroupLike = Union[Group, SubgroupSet]


def _as_subgroup(X: GroupLike) -> SubgroupSet:
    return X.whole if isinstance(X, Group) else X


def _find_base(elements: list[tuple[int, ...]], degree: int) -> list[int]:
    """Points whose images already tell the elements apart (greedy, in point order)."""
    base: list[int] = []
    keys: list[tuple[int, ...]] = [()] * len(elements)
    distinct = 1
    for b in range(degree):
        if distinct == len(elements):
            break
        trial = [k + (e[b],) for k, e in zip(keys, elements)]
        n = len(set(trial))
        if n > distinct:
            base.append(b)
            keys, distinct = trial, n
    return base


def closure(
    degree: int,
    generators: Iterable[Permutation],
    max_order: int = DEFAULT_MAX_ORDER,
    name: str | None = None,
) -> Group:
    """Enumerate the group generated by ``generators``."""
    gens = []
    for g in generators:
        if not isinstance(g, Permutation):
            g = Permutation(g)
        if g.degree != degree:
            raise PreconditionError(f"generator {g} has degree {g.degree}, expected {degree}")
        if g not in gens:
            gens.append(g)
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    images = [g.images for g in gens if g.images != ident]
    while frontier:
        nxt = []
        for e in frontier:
            for s in images:
                c = compose(e, s)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
                    if len(seen) > max_order:
                        raise GroupTooLarge(
                            f"group too large: more than {max_order} elements"
                        )
        frontier = nxt
    return Group(degree, gens, sorted(seen), name=name)


def subgroup_generated(G: Group, seeds: Iterable[int]) -> SubgroupSet:
    seeds = list(seeds)
    for s in seeds:
        if not 0 <= s < G.order:
            raise PreconditionError(f"invalid element index {s}")
    return G.generate(seeds)


def element_order(G: Group, x: int) -> int:
    return G.orders[x]


def p_part(G: Group, x: int, p: int) -> int:
    """The p-part of ``x``; the identity when ``p`` does not divide its order."""
    k = G.orders[x]
    pa = p_share(k, p)
    if pa == 1:
        return 0
    m = k // pa
    t = pow(m, -1, pa)
    return G.power(x, m * t)


def conjugacy_classes(G: Group) -> list[list[int]]:
    """Conjugacy classes as sorted index lists, ordered by smallest member."""
    memo = G._memo
    if "classes" in memo:
        return memo["classes"]
    cls_of = [-1] * G.order
    classes = []
    conj = G.conj
    for i in range(G.order):
        if cls_of[i] >= 0:
            continue
        c = len(classes)
        cls_of[i] = c
        orbit = [i]
        for y in orbit:
            for s in G.gens:
                z = conj(y, s)
                if cls_of[z] < 0:
                    cls_of[z] = c
                    orbit.append(z)
        classes.append(sorted(orbit))
    memo["classes"] = classes
    memo["class_of"] = cls_of
    return classes


def class_of(G: Group) -> list[int]:
    conjugacy_classes(G)
    return G._memo["class_of"]


def centralizer(G: Group, x: int) -> SubgroupSet:
    mul = G.mul
    return SubgroupSet(G, [g for g in range(G.order) if mul(g, x) == mul(x, g)])


def center(G: Group) -> SubgroupSet:
    if "center" not in G._memo:
        mul = G.mul
        G._memo["center"] = SubgroupSet(
            G, [x for x in range(G.order) if all(mul(x, s) == mul(s, x) for s in G.gens)]
        )
    return G._memo["center"]


def normalizer(G: Group, H: SubgroupSet) -> SubgroupSet:
    conj = G.conj
    hg = H.gens
    mask = H.mask
    return SubgroupSet(
        G, [g for g in range(G.order) if all(mask >> conj(h, g) & 1 for h in hg)]
    )


def normal_closure(G: Group, seeds: Iterable[int], K: GroupLike) -> SubgroupSet:
    """Smallest normal subgroup of ``K`` containing ``seeds``."""
    K = _as_subgroup(K)
    N = G.generate(seeds)
    queue = list(N.gens)
    conj = G.conj
    i = 0
    while i < len(queue):
        n = queue[i]
        i += 1
        for k in K.gens:
            c = conj(n, k)
            if not N.mask >> c & 1:
                N = G.generate([c], base=N)
                queue.append(c)
    return N


def is_nilpotent(X: GroupLike) -> bool:
    """Lower central series test."""
    L = _as_subgroup(X)
    G = L.parent
    gamma = L
    while gamma.order > 1:
        comms = {G.comm(a, s) for a in gamma.gens for s in L.gens}
        nxt = normal_closure(G, comms, L)
        if nxt.order == gamma.order:
            return False
        gamma = nxt
    return True


def sylows_normal(X: GroupLike) -> bool:
    """Nilpotency via Sylow normality: for every prime p, the p-elements
    of X number exactly the p-part of |X|."""
    L = _as_subgroup(X)
    G = L.parent
    base = G.prime_base
    counts: dict[int, int] = {}
    for m in L.members:
        b = base[m]
        if b > 1:
            counts[b] = counts.get(b, 0) + 1
    n = L.order
    for p in prime_divisors(n):
        if counts.get(p, 0) + 1 != p_share(n, p):
            return False
    return True


def is_subnormal(G: Group, H: SubgroupSet, K: GroupLike) -> bool:
    """Whether H is subnormal in K, via the iterated normal-closure chain."""
    K = _as_subgroup(K)
    if not H <= K:
        raise PreconditionError("H is not contained in K")
    memo = G._memo.setdefault("subnormal", {})
    key = (H.mask, K.mask)
    if key in memo:
        return memo[key]
    cur = K
    while True:
        if cur.order == H.order:
            result = True
            break
        nxt = normal_closure(G, H.gens, cur)
        if nxt.order == cur.order:
            result = False
            break
        cur = nxt
    memo[key] = result
    return result


def o_p(G: Group, p: int) -> SubgroupSet:
    """Intersection of all Sylow p-subgroups."""
    memo = G._memo.setdefault("o_p", {})
    if p not in memo:
        if G.order % p:
            memo[p] = G.trivial
        else:
            from .sylow import sylow_p

            mask = G.whole.mask
            for S in sylow_p(G, p).conjugates:
                mask &= S.mask
            memo[p] = G.subgroup_from_mask(mask)
    return memo[p]


def fitting(G: Group) -> SubgroupSet:
    if "fitting" not in G._memo:
        seeds = [g for p in G.primes for g in o_p(G, p).gens]
        G._memo["fitting"] = G.generate(seeds)
    return G._memo["fitting"]


def hypercenter(G: Group) -> SubgroupSet:
    """Terminal member of the upper central series."""
    if "hypercenter" not in G._memo:
        comm = G.comm
        Z = 1  # mask of the trivial subgroup
        while True:
            members = [
                x for x in range(G.order)
                if all(Z >> comm(x, s) & 1 for s in G.gens)
            ]
            nz = _mask_of(members, G.order)
            if nz == Z:
                break
            Z = nz
        G._memo["hypercenter"] = SubgroupSet(G, members, mask=Z)
    return G._memo["hypercenter"]
