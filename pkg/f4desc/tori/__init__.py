"""Orbit tori: closed-form and solved weights, composition, Weyl matching, Sp cross-checks."""

from f4desc.tori.engine import (
    SubTorusEntry,
    TorusMatch,
    compose,
    match_to_orbit,
    orbit_tori,
    sub_tori,
    sub_torus,
    torus_of_orbit,
)
from f4desc.tori.symplectic import (
    PartitionTorus,
    SignedPermutationMatch,
    sp_compose,
    sp_match,
    sp_orbit_dim,
    sp_partition_torus,
)

__all__ = [
    "PartitionTorus",
    "SignedPermutationMatch",
    "SubTorusEntry",
    "TorusMatch",
    "compose",
    "match_to_orbit",
    "orbit_tori",
    "sp_compose",
    "sp_match",
    "sp_orbit_dim",
    "sp_partition_torus",
    "sub_tori",
    "sub_torus",
    "torus_of_orbit",
]
