"""Acceptance criteria 1 to 11, each reported as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary.  Everything runs in verification
mode: formula paths are compared with brute force wherever both exist.
"""
from fractions import Fraction

import pytest

from subnorm import catalog
from subnorm.families import FamilySpec, frobenius_dn, galois_family, galois_nil_ratio
from subnorm.group import center, normalizer, o_p
from subnorm.probability import dn, nil_set, pair_nilpotent, s1_set, delta, spr, spr_element
from subnorm.sweep import run_checks, threshold_sweep
from subnorm.sylow import lambda_element, sylow_p

from conftest import get, record
from oracles import all_subgroups, dn_all_pairs, span, subnormal_by_chain


def verdict(number, ok, detail):
    record(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_01_dn_s3(S3):
    pairs = sum(pair_nilpotent(S3, x, y) for x in range(6) for y in range(6))
    brute = Fraction(pairs, 36)
    oracle = dn_all_pairs(S3)
    ok = brute == oracle == dn(S3) == Fraction(1, 2)
    verdict(1, ok, f"dn(S3) = {brute} from 36 pairs (oracle {oracle})")


def test_criterion_02_spr_s3(S3):
    value = spr(S3, verify=True)
    verdict(2, value == Fraction(2, 3), f"spr(S3) = {value}")


def test_criterion_03_casolo(full_catalog):
    rep = run_checks(full_catalog, ["casolo"], verify=True)
    covered = [r for r in rep.rows if r.status != "skipped"]
    too_small = [r.group for r in rep.rows if r.status == "skipped" and r.order <= 2000]
    ok = not rep.violations and not too_small
    detail = f"{len(covered)} groups checked, {len(rep.violations)} with unequal sides"
    if rep.violations:
        detail += ": " + "; ".join(f"{r.group} {r.detail}" for r in rep.violations)
    verdict(3, ok, detail)


def test_criterion_04_psl25(PSL25):
    sys5 = sylow_p(PSL25, 5)
    fives = [x for x in range(PSL25.order) if PSL25.orders[x] == 5]
    lambdas = {lambda_element(PSL25, sys5, x) for x in fives}
    sprs = {spr_element(PSL25, x, verify=True) for x in fives}
    O5 = o_p(PSL25, 5)
    ok = sys5.n_p == 6 and lambdas == {1} and sprs == {Fraction(1, 6)} and O5.order == 1
    verdict(4, ok, f"n_5 = {sys5.n_p}, lambda values {sorted(lambdas)}, spr_x values "
                   f"{sorted(map(str, sprs))}, |O_5| = {O5.order} over {len(fives)} elements")


@pytest.fixture(scope="module")
def thresholds(full_catalog):
    return threshold_sweep(full_catalog, verify=True)


def _fails(rep, check):
    return [r for r in rep.rows if r.check == check and r.status in ("fail", "skipped")]


def test_criterion_05_prop21(thresholds):
    bad = _fails(thresholds, "prop21")
    rows = [r for r in thresholds.rows if r.check == "prop21"]
    tight = sum(r.status == "tight" for r in rows)
    verdict(5, not bad, f"{len(rows)} p-element classes, {len(bad)} violations, {tight} tight")


def test_criterion_06_cor22(thresholds):
    bad = _fails(thresholds, "cor22")
    rows = [r for r in thresholds.rows if r.check == "cor22"]
    verdict(6, not bad, f"{len(rows)} classes outside F(G), {len(bad)} violations")


def test_criterion_07_dn_spr_bounds(thresholds):
    bad = _fails(thresholds, "dn-bound") + _fails(thresholds, "spr-bound")
    s3 = {r.check: r.status for r in thresholds.rows if r.group == "S3" and r.check.endswith("bound")}
    ok = not bad and s3 == {"dn-bound": "tight", "spr-bound": "tight"}
    tight = sorted({r.group for r in thresholds.rows if r.check.endswith("bound") and r.status == "tight"})
    verdict(7, ok, f"{len(bad)} violations; tight: {', '.join(tight)}")


def test_criterion_08_frobenius_closed_form():
    lines, ok = [], True
    for G in catalog.frobenius_catalog():
        pk, q = G.tags["p"] ** G.tags["k"], G.tags["q"]
        brute = dn_all_pairs(G)
        closed = frobenius_dn(pk, q)
        ok &= brute == closed == dn(G)
        if closed > Fraction(1, 2):
            ok &= (pk, q) == (3, 2)
        lines.append(f"({pk},{q}) dn={brute}")
    verdict(8, ok, "; ".join(lines))


def test_criterion_09_galois_k2(galois2):
    G = galois2
    parts = G.tags["parts"]
    orders = set(G.orders) - {1}
    V = parts.V
    ratios = {Fraction(len(nil_set(G, v)), G.order) for v in V.members if v}
    formula = galois_nil_ratio(2, parts.p)
    checks = {
        "order 320": G.order == 320,
        "trivial center": center(G).order == 1,
        "element orders in {2,5}": orders <= {2, 5},
        "O_2 = V": o_p(G, 2) == V,
        "Nil ratio 4/5": ratios == {formula} == {Fraction(4, 5)},
    }
    failed = [k for k, v in checks.items() if not v]
    detail = f"element orders {sorted(orders)}, Nil ratios {sorted(map(str, ratios))}"
    if failed:
        detail += "; failed: " + ", ".join(failed)
    verdict(9, not failed, detail)


def _delta_brute(G, H):
    """Distinct conjugates K with H subnormal in <H, K>, via the chain oracle."""
    Hset = frozenset(H.members)
    conjugates = {frozenset(G.conj(h, g) for h in Hset) for g in range(G.order)}
    count = 0
    for K in conjugates:
        L = span(G, list(Hset | K))
        count += subnormal_by_chain(G, Hset, L, all_subgroups(G, L))
    return count


@pytest.mark.parametrize("n", [4, 6])
def test_criterion_10_symmetric_delta(n):
    G = get(f"S{n}")
    H = G.generate([G.find("(0 1)")])
    expected = 1 + (n - 2) * (n - 3) // 2
    brute = _delta_brute(G, H)
    d = delta(G, H)
    s1 = len(s1_set(G, H))
    N = normalizer(G, H).order
    ok = brute == d == expected and s1 == d * N
    verdict(10, ok, f"S{n}: delta = {d} (brute {brute}, formula {expected}), |S^1| = {s1} = {d}*{N}")


def test_criterion_11_property_suite(full_catalog):
    checks = ["wielandt", "hypercenter", "lambda-class", "equivariance", "gustafson"]
    rep = run_checks(full_catalog, checks, verify=True)
    bad = [r for r in rep.rows if r.status in ("fail", "skipped")]
    detail = f"{len(rep.rows)} rows over {len(full_catalog)} groups, {len(bad)} violations"
    if bad:
        detail += ": " + "; ".join(f"{r.group}/{r.check}" for r in bad[:5])
    verdict(11, not bad, detail)


@pytest.mark.slow
def test_monotonicity_spot_check():
    G = galois_family(3, allow_large=True)
    p = G.tags["parts"].p
    v = G.tags["parts"].V.members[1]
    r3 = Fraction(len(nil_set(G, v, max_order=G.order)), G.order)
    r2 = Fraction(4, 5)
    ok = r3 == galois_nil_ratio(3, p) and r3 > r2
    record(f"monotonicity: {'PASS' if ok else 'FAIL'}  k=3 ratio {r3} > k=2 ratio {r2}")
    assert ok
