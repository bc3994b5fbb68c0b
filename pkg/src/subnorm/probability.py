"""Nilpotence and subnormalizer probabilities, computed exactly.

Every ratio is a :class:`fractions.Fraction`.  Counting over all of G is
done per conjugacy class: ``|Nil_G(x)|`` and ``|S_G(x)|`` are class
functions, so one representative per class is enough.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction

from .group import (
    Group,
    GroupTooLarge,
    PreconditionError,
    SubgroupSet,
    conjugacy_classes,
    fitting,
    is_nilpotent,
    is_subnormal,
    normalizer,
    p_part,
)
from .numtheory import prime_divisors
from .sylow import is_p_group, lam, lambda_element, sylow_membership, sylow_p

__all__ = [
    "NIL_CAP",
    "VerificationError",
    "ratio_str",
    "pair_nilpotent",
    "nil_set",
    "dn",
    "subnormalizer_set",
    "spr_element",
    "spr",
    "CasoloResult",
    "casolo_check",
    "s1_set",
    "delta",
    "dc",
    "NilReport",
    "nil_report",
]

NIL_CAP = 5000


class VerificationError(AssertionError):
    """Two independent computations of the same quantity disagreed."""


def ratio_str(r: Fraction) -> str:
    """Always ``numerator/denominator``, e.g. ``1/1``."""
    return f"{r.numerator}/{r.denominator}"


def _check_cap(G: Group, max_order: int | None) -> None:
    cap = NIL_CAP if max_order is None else max_order
    if G.order > cap:
        raise GroupTooLarge(f"group too large: |G| = {G.order} exceeds the cap {cap}")


def _parts(G: Group, x: int) -> dict[int, int]:
    memo = G._memo.setdefault("parts", {})
    if x not in memo:
        memo[x] = {p: p_part(G, x, p) for p in prime_divisors(G.orders[x])}
    return memo[x]


def pair_nilpotent(G: Group, x: int, y: int) -> bool:
    """Whether <x, y> is nilpotent.

    Uses the p-part criterion: <x, y> is nilpotent iff the p-parts of x and
    y commute with the q-parts for p != q, and each pair of p-parts lies in
    a common Sylow p-subgroup.
    """
    mul = G.mul
    px, py = _parts(G, x), _parts(G, y)
    for p, a in px.items():
        for q, b in py.items():
            if p != q and mul(a, b) != mul(b, a):
                return False
    for p, a in px.items():
        b = py.get(p)
        if b is None or mul(a, b) == mul(b, a):
            continue
        where = sylow_membership(G, p)
        if not where[a] & where[b]:
            return False
    return True


def nil_set(G: Group, x: int, max_order: int | None = None) -> list[int]:
    """Sorted indices y with <x, y> nilpotent."""
    _check_cap(G, max_order)
    memo = G._memo.setdefault("nil", {})
    if x not in memo:
        memo[x] = [y for y in range(G.order) if pair_nilpotent(G, x, y)]
    return memo[x]


def dn(G: Group, max_order: int | None = None) -> Fraction:
    """Probability that two uniform random elements generate a nilpotent subgroup."""
    _check_cap(G, max_order)
    total = sum(len(c) * len(nil_set(G, c[0], max_order)) for c in conjugacy_classes(G))
    return Fraction(total, G.order**2)


def _double_coset(G: Group, H: SubgroupSet, g: int) -> set[int]:
    mul = G.mul
    left = [mul(h, g) for h in H.members]
    return {mul(a, h) for a in left for h in H.members}


def subnormalizer_set(
    G: Group, H: "SubgroupSet | int", max_order: int | None = None
) -> list[int]:
    """Sorted indices g with H subnormal in <H, g>; an int means H = <x>.

    <H, g> only depends on the double coset HgH, so each double coset is
    decided once.
    """
    _check_cap(G, max_order)
    if isinstance(H, int):
        key = ("x", H)
        H = G.generate([H])
    else:
        key = ("H", H.mask)
    memo = G._memo.setdefault("subnormalizer", {})
    if key in memo:
        return memo[key]
    done = bytearray(G.order)
    out = []
    for g in range(G.order):
        if done[g]:
            continue
        dc = _double_coset(G, H, g)
        for d in dc:
            done[d] = 1
        L = G.generate([g], base=H)
        if is_subnormal(G, H, L):
            out.extend(dc)
    out.sort()
    memo[key] = out
    return out


def spr_element(G: Group, x: int, verify: bool = False, max_order: int | None = None) -> Fraction:
    """|S_G(x)| / |G|.

    For a p-element this is lambda_G(x) / n_p(G); with ``verify`` the
    brute-force count is computed too and both must agree exactly.
    """
    if x == 0:
        return Fraction(1)
    p = G.prime_base[x]
    if p <= 1:
        return Fraction(len(subnormalizer_set(G, x, max_order)), G.order)
    sys = sylow_p(G, p)
    formula = Fraction(lambda_element(G, sys, x), sys.n_p)
    if verify:
        brute = Fraction(len(subnormalizer_set(G, x, max_order)), G.order)
        if brute != formula:
            raise VerificationError(
                f"{G.name}: |S_G(x)|/|G| = {brute} but lambda/n_p = {formula} for x = {G.perm(x)}"
            )
    return formula


def spr(G: Group, verify: bool = False, max_order: int | None = None) -> Fraction:
    """Average of spr_G(x) over all x in G."""
    _check_cap(G, max_order)
    total = sum(
        len(c) * spr_element(G, c[0], verify, max_order) for c in conjugacy_classes(G)
    )
    return total / G.order


@dataclass(frozen=True)
class CasoloResult:
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def casolo_check(G: Group, p: int, H: SubgroupSet, max_order: int | None = None) -> CasoloResult:
    """Compare |S_G(H)| (brute force) with lambda_G(H) * |N_G(P)|."""
    if not is_p_group(H, p):
        raise PreconditionError(f"H is not a {p}-group")
    lhs = len(subnormalizer_set(G, H, max_order))
    sys = sylow_p(G, p)
    memo = G._memo.setdefault("sylow_normalizer", {})
    if p not in memo:
        memo[p] = normalizer(G, sys.representative).order
    return CasoloResult(lhs, lam(G, sys, H) * memo[p])


def s1_set(G: Group, H: SubgroupSet, max_order: int | None = None) -> list[int]:
    """Sorted indices g with H subnormal in <H, H^g>."""
    _check_cap(G, max_order)
    verdicts: dict[int, bool] = {}
    out = []
    for g in range(G.order):
        Hg = H.conjugate(g)
        if Hg.mask not in verdicts:
            L = G.generate(Hg.gens, base=H)
            verdicts[Hg.mask] = is_subnormal(G, H, L)
        if verdicts[Hg.mask]:
            out.append(g)
    return out


def delta(G: Group, H: SubgroupSet, max_order: int | None = None) -> int:
    """Number of conjugates K of H with H subnormal in <H, K>."""
    _check_cap(G, max_order)
    seen = {H.mask: H}
    orbit = [H]
    for K in orbit:
        for s in G.gens:
            T = K.conjugate(s)
            if T.mask not in seen:
                seen[T.mask] = T
                orbit.append(T)
    return sum(1 for K in orbit if is_subnormal(G, H, G.generate(K.gens, base=H)))


def dc(G: Group) -> Fraction:
    """Probability that two uniform random elements commute."""
    return Fraction(len(conjugacy_classes(G)), G.order)


@dataclass
class ClassRow:
    representative: str
    size: int
    nil: int
    subnormalizer: int
    spr: Fraction


@dataclass
class NilReport:
    group: str
    order: int
    classes: list[ClassRow]
    dn: Fraction
    spr: Fraction
    is_nilpotent: bool
    fitting_index: int
    extra: dict = field(default_factory=dict)

    CSV_COLUMNS = ("group", "|G|", "dn", "spr", "nilpotent", "fitting_index")

    def to_dict(self, decimal: bool = False) -> dict:
        d = {
            "group": self.group,
            "order": self.order,
            "dn": ratio_str(self.dn),
            "spr": ratio_str(self.spr),
            "is_nilpotent": self.is_nilpotent,
            "fitting_index": self.fitting_index,
            "classes": [
                {
                    "representative": r.representative,
                    "size": r.size,
                    "nil": r.nil,
                    "subnormalizer": r.subnormalizer,
                    "spr": ratio_str(r.spr),
                }
                for r in self.classes
            ],
        }
        if decimal:
            d["dn_decimal"] = float(self.dn)
            d["spr_decimal"] = float(self.spr)
        return d

    def csv_row(self, decimal: bool = False) -> list:
        row = [self.group, self.order, ratio_str(self.dn), ratio_str(self.spr),
               str(self.is_nilpotent).lower(), self.fitting_index]
        if decimal:
            row += [f"{float(self.dn):.6f}", f"{float(self.spr):.6f}"]
        return row


def reports_to_csv(reports: list[NilReport], decimal: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = list(NilReport.CSV_COLUMNS)
    if decimal:
        header += ["dn_decimal", "spr_decimal"]
    w.writerow(header)
    for r in reports:
        w.writerow(r.csv_row(decimal))
    return buf.getvalue()


def nil_report(G: Group, verify: bool = False, max_order: int | None = None) -> NilReport:
    rows = []
    for c in conjugacy_classes(G):
        x = c[0]
        rows.append(
            ClassRow(
                representative=G.perm(x).cycle_string(),
                size=len(c),
                nil=len(nil_set(G, x, max_order)),
                subnormalizer=len(subnormalizer_set(G, x, max_order)),
                spr=spr_element(G, x, verify, max_order),
            )
        )
    return NilReport(
        group=G.name,
        order=G.order,
        classes=rows,
        dn=dn(G, max_order),
        spr=spr(G, verify, max_order),
        is_nilpotent=is_nilpotent(G),
        fitting_index=G.order // fitting(G).order,
    )
