"""Sylow subgroups, their conjugate orbit, and the containment count lambda."""
from __future__ import annotations

from dataclasses import dataclass

from .group import Group, GroupError, PreconditionError, SubgroupSet, normalizer
from .numtheory import p_share

__all__ = ["SylowSystem", "sylow_p", "lam", "lambda_element", "p_subgroups", "is_p_group"]


@dataclass(frozen=True)
class SylowSystem:
    prime: int
    representative: SubgroupSet
    conjugates: tuple[SubgroupSet, ...]

    @property
    def n_p(self) -> int:
        return len(self.conjugates)


def is_p_group(H: SubgroupSet, p: int) -> bool:
    return p_share(H.order, p) == H.order


def _grow(G: Group, p: int) -> SubgroupSet:
    target = p_share(G.order, p)
    base = G.prime_base
    P = G.trivial
    while P.order < target:
        N = normalizer(G, P)
        for y in N.members:
            if base[y] != p or y in P:
                continue
            Q = G.generate([y], base=P, limit=target)
            if Q is not None and is_p_group(Q, p):
                P = Q
                break
        else:
            raise GroupError(f"Sylow {p}-subgroup construction stuck at order {P.order}")
    return P


def sylow_p(G: Group, p: int) -> SylowSystem:
    """One Sylow p-subgroup together with all of its conjugates (memoized)."""
    if G.order % p:
        raise PreconditionError("prime does not divide group order")
    memo = G._memo.setdefault("sylow", {})
    if p in memo:
        return memo[p]
    P = _grow(G, p)
    seen = {P.mask: P}
    orbit = [P]
    for S in orbit:
        for s in G.gens:
            T = S.conjugate(s)
            if T.mask not in seen:
                seen[T.mask] = T
                orbit.append(T)
    orbit.sort(key=lambda S: S.members)
    sys = SylowSystem(p, P, tuple(orbit))
    memo[p] = sys
    return sys


def sylow_membership(G: Group, p: int) -> dict[int, int]:
    """For each p-element, a bitmask of the Sylow p-subgroups containing it.

    Two p-elements generate a p-group iff they share a Sylow p-subgroup.
    """
    memo = G._memo.setdefault("sylow_membership", {})
    if p not in memo:
        out: dict[int, int] = {}
        for i, S in enumerate(sylow_p(G, p).conjugates):
            bit = 1 << i
            for y in S.members:
                out[y] = out.get(y, 0) | bit
        memo[p] = out
    return memo[p]


def lam(G: Group, sys: SylowSystem, H: SubgroupSet) -> int:
    """Number of Sylow subgroups in ``sys`` containing the p-subgroup ``H``."""
    if not is_p_group(H, sys.prime):
        raise PreconditionError(f"H is not a {sys.prime}-group")
    return sum(1 for S in sys.conjugates if H <= S)


def lambda_element(G: Group, sys: SylowSystem, x: int) -> int:
    if G.prime_base[x] not in (1, sys.prime):
        raise PreconditionError(f"element is not a {sys.prime}-element")
    bit = 1 << x
    return sum(1 for S in sys.conjugates if S.mask & bit)


def p_subgroups(G: Group, p: int) -> list[SubgroupSet]:
    """Every p-subgroup of G (trivial one included), by order then members.

    Each p-group of order p^(i+1) is <M, y> for some M of order p^i normal in
    it and y a p-element normalizing M, so the search climbs one layer at a
    time from the trivial group.
    """
    base = G.prime_base
    pelts = [y for y in range(1, G.order) if base[y] == p]
    layer = [G.trivial]
    out = [G.trivial]
    conj = G.conj
    while layer:
        found: dict[int, SubgroupSet] = {}
        for M in layer:
            target = M.order * p
            mm = M.mask
            for y in pelts:
                if mm >> y & 1 or not mm >> G.power(y, p) & 1:
                    continue
                if not all(mm >> conj(h, y) & 1 for h in M.gens):
                    continue
                Q = G.generate([y], base=M, limit=target)
                if Q is not None and Q.order == target and Q.mask not in found:
                    found[Q.mask] = Q
        layer = sorted(found.values(), key=lambda S: S.members)
        out.extend(layer)
    return out
