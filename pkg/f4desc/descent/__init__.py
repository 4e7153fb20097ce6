"""Dimension equation, commuting-pair feasibility, descent table and composition identities."""

from f4desc.descent.dimensions import (
    DescentPair,
    DescentRow,
    DimCase,
    PairOption,
    PairReport,
    all_pair_reports,
    check_dim_equation,
    descent_pairs,
    descent_table,
    get_pair,
    pair_feasibility,
    worked_dim_cases,
)
from f4desc.descent.identities import (
    CompositionIdentity,
    CompositionReport,
    composition_identities,
    get_identity,
    verify_all,
    verify_composition,
)

__all__ = [
    "CompositionIdentity",
    "CompositionReport",
    "DescentPair",
    "DescentRow",
    "DimCase",
    "PairOption",
    "PairReport",
    "all_pair_reports",
    "check_dim_equation",
    "composition_identities",
    "descent_pairs",
    "descent_table",
    "get_identity",
    "get_pair",
    "pair_feasibility",
    "worked_dim_cases",
    "verify_all",
    "verify_composition",
]
