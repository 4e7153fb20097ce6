"""Chevalley group F4(Q) in its exact adjoint realization.

Provides:
  - ``StructureConstants``: N_{α,β} with signs fixed on extraspecial pairs
  - ``unip`` / ``torus`` / ``weyl_rep``: generators as 52×52 rational matrices
  - ``commutator_formula`` / ``normal_form``: commutator expansion and collection
"""

from f4desc.chevalley.adjoint import (
    AdjointElement,
    CommutatorExpansion,
    CommutatorTerm,
    commutator_formula,
    from_normal_form,
    group_commutator,
    jacobi_defect,
    normal_form,
    torus,
    unip,
    weyl_rep,
)
from f4desc.chevalley.constants import (
    ConstantEntry,
    StructureConstants,
    string_below,
    structure_constant,
    structure_constants,
)

__all__ = [
    "AdjointElement",
    "CommutatorExpansion",
    "CommutatorTerm",
    "ConstantEntry",
    "StructureConstants",
    "commutator_formula",
    "from_normal_form",
    "group_commutator",
    "jacobi_defect",
    "normal_form",
    "string_below",
    "structure_constant",
    "structure_constants",
    "torus",
    "unip",
    "weyl_rep",
]
