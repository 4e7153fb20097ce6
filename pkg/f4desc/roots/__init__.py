"""F4 root system: roots, Cartan pairings, Weyl words and the Weyl group.

Provides:
  - ``Root`` / ``CocharWeight``: validated coefficient and exponent vectors
  - ``WeylWord`` / ``WeylGroup``: words w[i1..im] and the 1152-element group
  - ``classical_cartan``: B/C data of rank ≤ 3 used for cross-checks
"""

from f4desc.roots.classical import classical_cartan, classical_weyl_group
from f4desc.roots.system import (
    F4,
    HIGHEST_ROOT,
    CartanData,
    CocharWeight,
    Root,
    copair,
    enumerate_positive_roots,
    enumerate_roots,
    pairing,
    reflect,
)
from f4desc.roots.weyl import (
    WeylElement,
    WeylGroup,
    WeylWord,
    f4_weyl_group,
    weyl_apply,
    weyl_apply_cochar,
    weyl_enumerate,
)

__all__ = [
    "F4",
    "HIGHEST_ROOT",
    "CartanData",
    "CocharWeight",
    "Root",
    "WeylElement",
    "WeylGroup",
    "WeylWord",
    "classical_cartan",
    "classical_weyl_group",
    "copair",
    "enumerate_positive_roots",
    "enumerate_roots",
    "f4_weyl_group",
    "pairing",
    "reflect",
    "weyl_apply",
    "weyl_apply_cochar",
    "weyl_enumerate",
]
