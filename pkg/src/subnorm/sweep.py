"""Catalog sweeps: run named checks over groups and collect status rows.

Each row has status ``pass``, ``tight`` (the bound is attained exactly),
``fail`` (the implication is violated) or ``skipped`` (the group was out of
range for the check, or an error occurred).
"""
from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .group import (
    Group,
    GroupError,
    center,
    class_of,
    conjugacy_classes,
    fitting,
    hypercenter,
    is_nilpotent,
    is_subnormal,
    o_p,
    p_part,
)
from .numtheory import prime_divisors
from .probability import (
    casolo_check,
    dc,
    dn,
    nil_set,
    ratio_str,
    spr,
    spr_element,
    subnormalizer_set,
)
from .sylow import lambda_element, p_subgroups, sylow_p

log = logging.getLogger(__name__)

CASOLO_EXHAUSTIVE_MAX = 400
CASOLO_CYCLIC_MAX = 2000
EQUIVARIANCE_FULL_MAX = 200


@dataclass
class Row:
    group: str
    order: int
    check: str
    subject: str
    status: str
    detail: str


def _row(G: Group, check: str, status: str, detail: str = "", subject: str = "") -> Row:
    return Row(G.name, G.order, check, subject, status, detail)


def _bound_check(G: Group, name: str, value: Fraction, bound: Fraction) -> Row:
    nil = is_nilpotent(G)
    detail = f"value={ratio_str(value)} bound={ratio_str(bound)} nilpotent={str(nil).lower()}"
    if nil:
        status = "pass" if value == 1 else "fail"
    elif value > bound:
        status = "fail"
    elif value == bound:
        status = "tight"
    else:
        status = "pass"
    return _row(G, name, status, detail)


def check_dn_bound(G: Group, verify: bool = False) -> list[Row]:
    """dn(G) > 1/2 implies G nilpotent."""
    return [_bound_check(G, "dn-bound", dn(G), Fraction(1, 2))]


def check_spr_bound(G: Group, verify: bool = False) -> list[Row]:
    """spr(G) > 2/3 implies G nilpotent."""
    return [_bound_check(G, "spr-bound", spr(G, verify), Fraction(2, 3))]


def _label(G: Group, x: int) -> str:
    return G.perm(x).cycle_string()


def check_prop21(G: Group, verify: bool = False) -> list[Row]:
    """For a p-element x of order p^r and 1 <= k <= r:
    spr_G(x) > 1/(p^k + 1) implies x^(p^(k-1)) lies in O_p(G).  One row per class."""
    rows = []
    for c in conjugacy_classes(G):
        x = c[0]
        p = G.prime_base[x]
        if p <= 1:
            continue
        s = spr_element(G, x, verify)
        r, m = 0, G.orders[x]
        while m > 1:
            m //= p
            r += 1
        Op = o_p(G, p)
        status, notes = "pass", []
        for k in range(1, r + 1):
            bound = Fraction(1, p**k + 1)
            inside = G.power(x, p ** (k - 1)) in Op
            if s > bound and not inside:
                status = "fail"
                notes.append(f"k={k} violated")
            elif s == bound and not inside and status != "fail":
                status = "tight"
                notes.append(f"k={k} at bound")
        detail = f"p={p} r={r} spr_x={ratio_str(s)}" + (" " + "; ".join(notes) if notes else "")
        rows.append(_row(G, "prop21", status, detail, _label(G, x)))
    return rows or [_row(G, "prop21", "pass", "no nontrivial p-elements")]


def check_cor22(G: Group, verify: bool = False) -> list[Row]:
    """x outside F(G) has spr_G(x) <= 1/3.  One row per class outside F(G)."""
    F = fitting(G)
    third = Fraction(1, 3)
    rows = []
    for c in conjugacy_classes(G):
        x = c[0]
        if x in F:
            continue
        s = spr_element(G, x, verify)
        status = "fail" if s > third else "tight" if s == third else "pass"
        rows.append(_row(G, "cor22", status, f"spr_x={ratio_str(s)}", _label(G, x)))
    return rows or [_row(G, "cor22", "pass", "G = F(G)")]


def _casolo_subgroups(G: Group):
    if G.order <= CASOLO_EXHAUSTIVE_MAX:
        for p in G.primes:
            for H in p_subgroups(G, p):
                yield p, H
    elif G.order <= CASOLO_CYCLIC_MAX:
        seen = set()
        for x in range(G.order):
            p = G.prime_base[x]
            if p <= 1:
                continue
            H = G.generate([x])
            if H.mask not in seen:
                seen.add(H.mask)
                yield p, H


def check_casolo(G: Group, verify: bool = False) -> list[Row]:
    """|S_G(H)| = lambda_G(H) |N_G(P)| for p-subgroups H."""
    if G.order > CASOLO_CYCLIC_MAX:
        return [_row(G, "casolo", "skipped", f"|G| > {CASOLO_CYCLIC_MAX}")]
    mode = "all p-subgroups" if G.order <= CASOLO_EXHAUSTIVE_MAX else "cyclic p-subgroups"
    n = bad = 0
    first = ""
    for p, H in _casolo_subgroups(G):
        n += 1
        res = casolo_check(G, p, H)
        if not res.equal:
            bad += 1
            first = first or f"p={p} |H|={H.order} lhs={res.lhs} rhs={res.rhs}"
    status = "fail" if bad else "pass"
    return [_row(G, "casolo", status, f"{mode}: {n} checked, {bad} unequal {first}".strip())]


def check_wielandt(G: Group, verify: bool = False) -> list[Row]:
    """S_G(x) = G iff <x> subnormal in G iff every p-part of x lies in O_p(G)."""
    bad = []
    for c in conjugacy_classes(G):
        x = c[0]
        a = len(subnormalizer_set(G, x)) == G.order
        b = is_subnormal(G, G.generate([x]), G.whole)
        d = all(p_part(G, x, p) in o_p(G, p) for p in prime_divisors(G.orders[x]))
        if not a == b == d:
            bad.append(_label(G, x))
    return [_row(G, "wielandt", "fail" if bad else "pass", " ".join(bad))]


def check_hypercenter(G: Group, verify: bool = False) -> list[Row]:
    """Nil_G(x) = G iff x lies in the hypercenter."""
    Z = hypercenter(G)
    bad = [
        _label(G, c[0])
        for c in conjugacy_classes(G)
        if (len(nil_set(G, c[0])) == G.order) != (c[0] in Z)
    ]
    return [_row(G, "hypercenter", "fail" if bad else "pass", " ".join(bad))]


def check_gustafson(G: Group, verify: bool = False) -> list[Row]:
    """dc(G) <= 5/8 for nonabelian G."""
    value = dc(G)
    abelian = center(G).order == G.order
    bound = Fraction(5, 8)
    if abelian:
        status = "pass" if value == 1 else "fail"
    else:
        status = "fail" if value > bound else "tight" if value == bound else "pass"
    return [_row(G, "gustafson", status, f"dc={ratio_str(value)} abelian={str(abelian).lower()}")]


def check_lambda_class(G: Group, verify: bool = False) -> list[Row]:
    """lambda_G is constant on each conjugacy class of p-elements."""
    bad = []
    for c in conjugacy_classes(G):
        p = G.prime_base[c[0]]
        if p <= 1:
            continue
        sys = sylow_p(G, p)
        if len({lambda_element(G, sys, y) for y in c}) != 1:
            bad.append(_label(G, c[0]))
    return [_row(G, "lambda-class", "fail" if bad else "pass", " ".join(bad))]


def _transport(G: Group) -> dict[int, int]:
    """For each element y, some g with rep^g = y where rep is y's class representative."""
    conj = G.conj
    out = {}
    for c in conjugacy_classes(G):
        out[c[0]] = 0
        queue = [c[0]]
        for y in queue:
            for s in G.gens:
                z = conj(y, s)
                if z not in out:
                    out[z] = G.mul(out[y], s)
                    queue.append(z)
    return out


def _fresh_nil(G: Group, x: int) -> set[int]:
    from .probability import pair_nilpotent

    return {y for y in range(G.order) if pair_nilpotent(G, x, y)}


def check_equivariance(G: Group, verify: bool = False) -> list[Row]:
    """Nil_G(x^g) = Nil_G(x)^g and S_G(x^g) = S_G(x)^g; also Nil_G(x) within S_G(x).

    Every element is compared with its class representative when
    |G| <= EQUIVARIANCE_FULL_MAX; otherwise only the conjugates of each
    representative by the generators are.
    """
    conj = G.conj
    if G.order <= EQUIVARIANCE_FULL_MAX:
        pairs = list(_transport(G).items())
        cls = class_of(G)
        reps = [c[0] for c in conjugacy_classes(G)]
        pairs = [(reps[cls[y]], y, g) for y, g in pairs]
    else:
        pairs = [(c[0], conj(c[0], s), s) for c in conjugacy_classes(G) for s in G.gens]
    bad = []
    for x, y, g in pairs:
        nx = set(nil_set(G, x))
        sx = set(subnormalizer_set(G, x))
        if not nx <= sx:
            bad.append(f"Nil not within S at {_label(G, x)}")
        ny = _fresh_nil(G, y) if y != x else nx
        sy = set(subnormalizer_set(G, G.generate([y]))) if y != x else sx
        if ny != {conj(z, g) for z in nx} or sy != {conj(z, g) for z in sx}:
            bad.append(_label(G, y))
    return [_row(G, "equivariance", "fail" if bad else "pass",
                 f"{len(pairs)} conjugates compared " + " ".join(bad[:5]))]


CHECKS: dict[str, Callable[[Group, bool], list[Row]]] = {
    "dn-bound": check_dn_bound,
    "spr-bound": check_spr_bound,
    "prop21": check_prop21,
    "cor22": check_cor22,
    "casolo": check_casolo,
    "wielandt": check_wielandt,
    "hypercenter": check_hypercenter,
    "gustafson": check_gustafson,
    "lambda-class": check_lambda_class,
    "equivariance": check_equivariance,
}
THRESHOLD_CHECKS = ("dn-bound", "spr-bound", "prop21", "cor22")


@dataclass
class SweepReport:
    rows: list[Row]

    @property
    def violations(self) -> list[Row]:
        return [r for r in self.rows if r.status == "fail"]

    @property
    def tight(self) -> list[Row]:
        return [r for r in self.rows if r.status == "tight"]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> str:
        counts: dict[str, int] = {}
        for r in self.rows:
            counts[r.status] = counts.get(r.status, 0) + 1
        return json.dumps(
            {"rows": [asdict(r) for r in self.rows], "summary": dict(sorted(counts.items()))},
            indent=2,
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["group", "order", "check", "subject", "status", "detail"])
        for r in self.rows:
            w.writerow([r.group, r.order, r.check, r.subject, r.status, r.detail])
        return buf.getvalue()


def run_checks(
    catalog: Iterable[Group],
    checks: Iterable[str] = tuple(CHECKS),
    verify: bool = False,
    max_order: int | None = None,
) -> SweepReport:
    """Run ``checks`` on each group, in catalog order.  Errors become skipped rows."""
    checks = list(checks)
    for name in checks:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    rows: list[Row] = []
    for G in catalog:
        for name in checks:
            if max_order is not None and G.order > max_order:
                rows.append(_row(G, name, "skipped", f"|G| > max order {max_order}"))
                continue
            try:
                rows.extend(CHECKS[name](G, verify))
            except GroupError as exc:
                log.warning("%s on %s skipped: %s", name, G.name, exc)
                rows.append(_row(G, name, "skipped", str(exc)))
    return SweepReport(rows)


def threshold_sweep(catalog: Iterable[Group], verify: bool = False) -> SweepReport:
    """The dn/spr bounds and the two p-element thresholds over ``catalog``."""
    return run_checks(catalog, THRESHOLD_CHECKS, verify)
