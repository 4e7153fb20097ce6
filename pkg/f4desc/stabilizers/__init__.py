"""Exact stabilizer computations for F4(a3) pairs and F4(a2) characters."""

from f4desc.stabilizers.f4a2 import f4a2_act, f4a2_stab_dim
from f4desc.stabilizers.f4a3 import (
    f4a3_discriminant,
    f4a3_reduced_system,
    f4a3_stab,
    pair_a,
    pair_b,
)
from f4desc.stabilizers.schemas import F4a2Char, F4a2StabResult, Mat3J, StabResult

__all__ = [
    "F4a2Char",
    "F4a2StabResult",
    "Mat3J",
    "StabResult",
    "f4a2_act",
    "f4a2_stab_dim",
    "f4a3_discriminant",
    "f4a3_reduced_system",
    "f4a3_stab",
    "pair_a",
    "pair_b",
]
