"""Unipotent orbits of F4: diagrams, gradings, half-dimensions and closure order."""

from f4desc.orbits.catalog import (
    HASSE_COVERS,
    OrbitCatalog,
    OrbitRecord,
    closure_leq,
    get_orbit,
    half_dim,
    orbit_catalog,
    orbits_with_half_dim,
)
from f4desc.orbits.grading import Diagram, Grading, g_value, grading, levi_roots

__all__ = [
    "HASSE_COVERS",
    "Diagram",
    "Grading",
    "OrbitCatalog",
    "OrbitRecord",
    "closure_leq",
    "g_value",
    "get_orbit",
    "grading",
    "half_dim",
    "levi_roots",
    "orbit_catalog",
    "orbits_with_half_dim",
]
