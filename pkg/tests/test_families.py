from fractions import Fraction

import pytest

from subnorm.families import (
    FamilySpec,
    build,
    cyclic,
    dihedral,
    frobenius,
    frobenius_dn,
    galois_family,
    parse_family,
    psl2,
    symmetric,
    zsigmondy,
)
from subnorm.fields import GaloisField, lowest_irreducible
from subnorm.group import PreconditionError, center, fitting, is_nilpotent, o_p
from subnorm.probability import dn, nil_set
from subnorm.sylow import sylow_p

from conftest import get
from oracles import dn_all_pairs


# fields

def test_gf16_modulus_is_x4_x_1():
    assert GaloisField(2, 4).modulus_code == 0b10011


def test_gf256_modulus():
    assert GaloisField(2, 8).modulus_code == 0b100011011


def test_lowest_irreducible_is_lowest():
    # every smaller monic degree-4 polynomial over GF(2) has a root or a quadratic factor
    from subnorm.fields import is_irreducible, _monic

    for code in range(3):
        assert not is_irreducible(_monic(code, 2, 4), 2)
    assert lowest_irreducible(3, 2) == [1, 0, 1]  # x^2 + 1 over GF(3)


@pytest.mark.parametrize("p,n", [(2, 2), (2, 4), (3, 2), (5, 1), (2, 3)])
def test_field_laws(p, n):
    F = GaloisField(p, n)
    F.check()
    q = F.size
    for a in range(q):
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inverse(a)) == 1
        for b in range(q):
            assert F.mul(a, b) == F.mul(b, a)
            for c in range(0, q, 3):
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


# constructors

@pytest.mark.parametrize("n,order", [(1, 1), (3, 6), (4, 24)])
def test_symmetric_orders(n, order):
    assert symmetric(n).order == order


def test_symmetric_range():
    with pytest.raises(PreconditionError):
        symmetric(9)
    with pytest.raises(PreconditionError):
        symmetric(0)


def test_cyclic_dihedral():
    assert cyclic(4).order == 4
    assert dihedral(3).order == 6 and not is_nilpotent(dihedral(3))
    assert is_nilpotent(dihedral(4))
    with pytest.raises(PreconditionError):
        dihedral(2)
    with pytest.raises(PreconditionError):
        cyclic(0)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_psl2(p):
    G = psl2(p)
    assert G.order == p * (p * p - 1) // 2 and G.degree == p + 1
    s = sylow_p(G, p)
    assert s.n_p == p + 1 and s.representative.order == p
    assert o_p(G, p).order == 1


@pytest.mark.parametrize("p", [4, 3, 17, 9])
def test_psl2_range(p):
    with pytest.raises(PreconditionError):
        psl2(p)


@pytest.mark.parametrize("p,k,q,order", [(3, 1, 2, 6), (7, 1, 3, 21), (5, 1, 2, 10), (2, 2, 3, 12), (13, 1, 3, 39)])
def test_frobenius_structure(p, k, q, order):
    G = frobenius(p, k, q)
    assert G.order == order and G.degree == p**k
    N = G.tags["kernel"]
    assert fitting(G) == N and N.order == p**k


def test_frobenius_s3():
    G = frobenius(3, 1, 2)
    assert dn(G) == Fraction(1, 2)


@pytest.mark.parametrize(
    "args,msg",
    [((3, 2, 2), "divides p\\^l - 1"), ((7, 1, 5), "does not divide"), ((6, 1, 5), "not prime"), ((7, 1, 4), "not prime")],
)
def test_frobenius_preconditions(args, msg):
    with pytest.raises(PreconditionError, match=msg):
        frobenius(*args)


def test_frobenius_closed_form_values():
    # closed form evaluated by hand
    assert frobenius_dn(7, 3) == Fraction(5, 21)
    assert frobenius_dn(5, 2) == Fraction(1, 10) + Fraction(4, 5) * Fraction(1, 4) + Fraction(1, 10)
    assert frobenius_dn(5, 2) == Fraction(2, 5)


@pytest.mark.parametrize("args", [(3, 1, 2), (5, 1, 2), (7, 1, 3), (2, 2, 3)])
def test_frobenius_dn_brute(args):
    G = frobenius(*args)
    p, k, q = args
    assert dn_all_pairs(G) == frobenius_dn(p**k, q) == dn(G)


def test_frobenius_half_only_for_s3():
    admissible = [(p, k, q) for p in (2, 3, 5, 7, 11, 13) for k in (1, 2, 3) for q in (2, 3, 5, 7)
                  if p**k * q <= 2000 and (p**k - 1) % q == 0
                  and all((p**l - 1) % q for l in range(1, k))]
    assert len(admissible) > 10
    for p, k, q in admissible:
        value = frobenius_dn(p**k, q)
        assert value <= Fraction(1, 2)
        assert (value == Fraction(1, 2)) == ((q, p**k) == (2, 3))
    for p, k, q in admissible:
        if p**k * q <= 400:
            assert dn(frobenius(p, k, q)) == frobenius_dn(p**k, q)


def _admissible_triples(limit):
    from sympy import primerange

    out = []
    for q in primerange(2, limit):
        for p in primerange(2, limit // q + 1):
            k = 1
            while p**k * q <= limit:
                if (p**k - 1) % q == 0 and all((p**l - 1) % q for l in range(1, k)):
                    out.append((p, k, q))
                k += 1
    return out


@pytest.mark.slow
def test_frobenius_closed_form_every_admissible_triple():
    triples = _admissible_triples(2000)
    assert len(triples) == 271
    for p, k, q in triples:
        assert dn(frobenius(p, k, q)) == frobenius_dn(p**k, q), (p, k, q)


def _zsig_brute(n):
    m = 2**n - 1
    for d in range(2, m + 1):
        if m % d == 0 and all(d % e for e in range(2, d)) and all((2**l - 1) % d for l in range(1, n)):
            return d


@pytest.mark.parametrize("n,expected", [(2, 3), (4, 5), (8, 17), (3, 7), (5, 31), (12, 13)])
def test_zsigmondy(n, expected):
    assert zsigmondy(n) == expected == _zsig_brute(n)


@pytest.mark.parametrize("n", [1, 6])
def test_zsigmondy_exceptions(n):
    with pytest.raises(PreconditionError):
        zsigmondy(n)


def test_galois_family_k2(galois2):
    G = galois2
    parts = G.tags["parts"]
    assert G.order == 2 ** (4 + 2) * 5 == 320 and G.degree == 16
    assert parts.p == 5
    assert center(G).order == 1
    assert o_p(G, 2) == parts.V
    # no element whose order has two distinct prime factors
    assert set(G.orders) <= {1, 2, 4, 8, 5}
    v = parts.V.members[1]
    VP = G.generate([parts.P_gen], base=parts.V)
    expected = set(parts.V.members) | (set(range(G.order)) - set(VP.members))
    assert set(nil_set(G, v)) == expected and len(expected) == 256


def test_galois_family_range():
    with pytest.raises(PreconditionError):
        galois_family(3)
    with pytest.raises(PreconditionError):
        galois_family(1)


def test_parse_and_build():
    assert parse_family("S4") == FamilySpec("symmetric", (4,))
    assert parse_family("frobenius:7,1,3") == FamilySpec("frobenius", (7, 1, 3))
    assert parse_family("psl2(5)") == FamilySpec("psl2", (5,))
    assert build(parse_family("D6")).order == 12
    with pytest.raises(PreconditionError):
        build(FamilySpec("klein", (4,)))
    with pytest.raises(PreconditionError):
        build(FamilySpec("frobenius", (7, 1)))
    with pytest.raises(PreconditionError):
        parse_family("S")
