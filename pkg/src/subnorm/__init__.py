"""Exact nilpotence and subnormalizer probabilities in finite permutation groups."""
from .group import (
    Group,
    GroupError,
    GroupTooLarge,
    PreconditionError,
    SubgroupSet,
    closure,
    fitting,
    hypercenter,
    is_nilpotent,
    is_subnormal,
    o_p,
)
from .perm import Permutation
from .probability import dc, delta, dn, nil_set, s1_set, spr, spr_element, subnormalizer_set
from .sylow import SylowSystem, sylow_p

__version__ = "0.1.0"
