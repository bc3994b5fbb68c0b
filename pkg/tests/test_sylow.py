import pytest

from subnorm.group import PreconditionError, normalizer
from subnorm.numtheory import p_share
from subnorm.sylow import lam, lambda_element, p_subgroups, sylow_p

from conftest import el, get
from oracles import all_subgroups, prime_power


def test_sylow_examples(S3, S4, PSL25):
    s = sylow_p(S3, 3)
    assert s.representative.order == 3 and s.n_p == 1
    s = sylow_p(S4, 2)
    assert s.representative.order == 8 and s.n_p == 3
    s = sylow_p(PSL25, 5)
    assert s.representative.order == 5 and s.n_p == 6


def test_sylow_wrong_prime(S3):
    with pytest.raises(PreconditionError, match="prime does not divide"):
        sylow_p(S3, 5)


def test_sylow_invariants(full_catalog):
    for G in full_catalog:
        for p in G.primes:
            sys = sylow_p(G, p)
            pa = p_share(G.order, p)
            assert all(S.order == pa for S in sys.conjugates)
            assert sys.n_p % p == 1
            assert (G.order // pa) % sys.n_p == 0
            assert sys.n_p == G.order // normalizer(G, sys.representative).order
            covered = 0
            for S in sys.conjugates:
                covered |= S.mask
            pelts = [x for x in range(G.order) if G.prime_base[x] in (1, p)]
            assert all(covered >> x & 1 for x in pelts)
            # pairwise-trivial intersections iff the element count is exact
            total = sum(S.order - 1 for S in sys.conjugates)
            assert total >= len(pelts) - 1
            trivial = all(S.mask & T.mask == 1 for i, S in enumerate(sys.conjugates)
                          for T in sys.conjugates[i + 1:])
            assert (total == len(pelts) - 1) == trivial


def test_conjugation_permutes_sylows(full_catalog):
    for G in full_catalog:
        for p in G.primes:
            masks = {S.mask for S in sylow_p(G, p).conjugates}
            for g in range(0, G.order, max(1, G.order // 17)):
                assert {S.conjugate(g).mask for S in sylow_p(G, p).conjugates} == masks


def test_sylows_match_exhaustive_search(full_catalog):
    for G in full_catalog:
        if G.order > 200:
            continue
        subs = all_subgroups(G)
        for p in G.primes:
            pa = p_share(G.order, p)
            brute = {S for S in subs if len(S) == pa}
            assert {frozenset(S.members) for S in sylow_p(G, p).conjugates} == brute


def test_p_subgroups_exhaustive(full_catalog):
    for G in full_catalog:
        if G.order > 200:
            continue
        subs = all_subgroups(G)
        for p in G.primes:
            brute = {S for S in subs if prime_power(len(S), p)}
            ours = [frozenset(H.members) for H in p_subgroups(G, p)]
            assert len(ours) == len(set(ours))
            assert set(ours) == brute


def test_lambda_examples(S3, S4, PSL25):
    s = sylow_p(S3, 2)
    assert lam(S3, s, S3.trivial) == s.n_p
    assert lam(S3, s, S3.generate([el(S3, "(0 1)")])) == 1
    s4 = sylow_p(S4, 2)
    assert lam(S4, s4, S4.generate([el(S4, "(0 1)")])) == 1
    assert lambda_element(S4, sylow_p(S4, 3), el(S4, "(0 1 2)")) == 1
    assert lambda_element(S4, s4, 0) == 3
    s5 = sylow_p(PSL25, 5)
    for x in range(PSL25.order):
        if PSL25.orders[x] == 5:
            assert lambda_element(PSL25, s5, x) == 1


def test_lambda_requires_p_group(S4):
    with pytest.raises(PreconditionError):
        lam(S4, sylow_p(S4, 2), S4.generate([el(S4, "(0 1 2)")]))
    with pytest.raises(PreconditionError):
        lambda_element(S4, sylow_p(S4, 2), el(S4, "(0 1 2)"))


def test_lambda_constant_on_classes(full_catalog):
    from subnorm.group import conjugacy_classes

    for G in full_catalog:
        for c in conjugacy_classes(G):
            p = G.prime_base[c[0]]
            if p > 1:
                sys = sylow_p(G, p)
                assert len({lambda_element(G, sys, y) for y in c}) == 1
