"""The built-in catalog of groups used by sweeps."""
from __future__ import annotations

from functools import lru_cache

from .families import FamilySpec, build, parse_family
from .group import Group

FROBENIUS_INSTANCES = [(3, 1, 2), (5, 1, 2), (7, 1, 3), (13, 1, 3), (2, 2, 3), (3, 2, 2)]


def _admissible(p: int, k: int, q: int) -> bool:
    return (p**k - 1) % q == 0 and all((p**l - 1) % q for l in range(1, k))


def default_specs() -> list[FamilySpec]:
    specs = [FamilySpec("symmetric", (n,)) for n in range(1, 7)]
    specs += [FamilySpec("dihedral", (n,)) for n in range(3, 13)]
    specs += [FamilySpec("cyclic", (n,)) for n in range(2, 17)]
    specs += [FamilySpec("frobenius", t) for t in FROBENIUS_INSTANCES if _admissible(*t)]
    specs += [FamilySpec("psl2", (5,)), FamilySpec("psl2", (7,)), FamilySpec("galois", (2,))]
    return specs


@lru_cache(maxsize=None)
def get(spec: FamilySpec) -> Group:
    """Build (once) the group for ``spec``."""
    return build(spec)


def default_catalog() -> list[Group]:
    return [get(s) for s in default_specs()]


def frobenius_catalog() -> list[Group]:
    return [get(FamilySpec("frobenius", t)) for t in FROBENIUS_INSTANCES if _admissible(*t)]


def lookup(name: str) -> Group:
    """Resolve a built-in name such as ``S3`` or ``frobenius:7,1,3``."""
    return get(parse_family(name))
