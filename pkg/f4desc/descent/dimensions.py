"""Dimension bookkeeping for descent constructions.

A construction integrating an automorphic representation Θ against π over a
unipotent group V produces σ(π, Θ) on the other member of a commuting pair
(H, G). It can only be nonzero when

    dim π + dim Θ = dim H + dim V + dim σ

Everything here is integer arithmetic plus catalog lookups: feasibility of a
required dim E is the question "does F4 have an orbit of that half-dimension".
"""

from __future__ import annotations

import logging
import re
from functools import lru_cache
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from f4desc.orbits.catalog import get_orbit, orbits_with_half_dim

logger = logging.getLogger("f4desc.descent.dimensions")

Direction = Literal["forward", "reverse"]


# ---------------------------------------------------------------------------
# The dimension equation
# ---------------------------------------------------------------------------


class DimCase(BaseModel):
    """One instance of the dimension equation."""

    model_config = ConfigDict(frozen=True)

    dim_pi: int = Field(ge=0)
    dim_theta: int = Field(ge=0)
    dim_h: int = Field(ge=0)
    dim_v: int = Field(ge=0)
    dim_sigma: int = Field(ge=0)
    description: str = ""

    @property
    def lhs(self) -> int:
        return self.dim_pi + self.dim_theta

    @property
    def rhs(self) -> int:
        return self.dim_h + self.dim_v + self.dim_sigma


def check_dim_equation(c: DimCase) -> bool:
    """True iff dim π + dim Θ = dim H + dim V + dim σ."""
    return c.lhs == c.rhs


def so_sp_case(n: int) -> DimCase:
    """Theta lift from SO_2n to Sp: π = n² − n, Θ = 2n², H = 2n² − n, σ = n²."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return DimCase(
        dim_pi=n * n - n,
        dim_theta=2 * n * n,
        dim_h=2 * n * n - n,
        dim_v=0,
        dim_sigma=n * n,
        description=f"SO{2 * n} cuspidal π lifted to Sp{2 * n}",
    )


def gl_descent_case(n: int) -> DimCase:
    """Descent from GL_2n to the metaplectic Sp_2n: H trivial, Θ on the ((2n)²) orbit of Sp_4n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return DimCase(
        dim_pi=0,
        dim_theta=4 * n * n - n,
        dim_h=0,
        dim_v=3 * n * n - n,
        dim_sigma=n * n,
        description=f"descent from GL{2 * n} (limit case H trivial)",
    )


def worked_dim_cases() -> list[DimCase]:
    """The worked instances of the dimension equation, all expected to hold."""
    return [
        so_sp_case(2),
        so_sp_case(3),
        DimCase(
            dim_pi=3,
            dim_theta=11,
            dim_h=8,
            dim_v=0,
            dim_sigma=6,
            description="PGL3 × G2 in E6, minimal representation",
        ),
        gl_descent_case(2),
    ]


# ---------------------------------------------------------------------------
# Commuting pairs in F4
# ---------------------------------------------------------------------------


class DescentPair(BaseModel):
    """A commuting pair (H, G) inside F4 with the admissible representation dimensions.

    Forward: π cuspidal on H, σ automorphic on G, dim E = dim H − dim π + dim σ.
    Reverse: π automorphic on H, σ cuspidal on G, dim E = dim G + dim π − dim σ.
    """

    model_config = ConfigDict(frozen=True)

    key: str
    small: str
    large: str
    dim_small: int
    dim_large: int
    forward_pi: tuple[int, ...]
    forward_sigma: tuple[int, ...]
    reverse_pi: tuple[int, ...] = ()
    reverse_sigma: tuple[int, ...] = ()
    note: str = ""

    @property
    def name(self) -> str:
        return f"{self.small}/{self.large}"


class PairOption(BaseModel):
    direction: Direction
    dim_pi: int
    dim_sigma: int
    dim_e: int
    feasible: bool
    orbits: list[str] = Field(default_factory=list)


class PairReport(BaseModel):
    pair: str
    forward: list[PairOption] = Field(default_factory=list)
    reverse: list[PairOption] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    def feasible_dims(self, direction: Direction) -> list[int]:
        options = self.forward if direction == "forward" else self.reverse
        return sorted({o.dim_e for o in options if o.feasible}, reverse=True)

    def infeasible_dims(self, direction: Direction) -> list[int]:
        options = self.forward if direction == "forward" else self.reverse
        feasible = set(self.feasible_dims(direction))
        return sorted({o.dim_e for o in options} - feasible, reverse=True)


_PAIRS: list[DescentPair] = [
    DescentPair(
        key="sl3-sl3",
        small="SL3",
        large="SL3",
        dim_small=8,
        dim_large=8,
        forward_pi=(3,),
        forward_sigma=(3, 2),
        note="symmetric pair; the reverse direction repeats the forward one",
    ),
    DescentPair(
        key="sl2xsl2-sp4",
        small="SL2×SL2",
        large="Sp4",
        dim_small=6,
        dim_large=10,
        forward_pi=(2,),
        forward_sigma=(4, 3, 2),
        reverse_pi=(2, 1),
        reverse_sigma=(4, 3),
    ),
    DescentPair(
        key="sl2-sl4",
        small="SL2",
        large="SL4",
        dim_small=3,
        dim_large=15,
        forward_pi=(1,),
        forward_sigma=(6, 5, 4, 3),
        reverse_pi=(1,),
        reverse_sigma=(6,),
    ),
    DescentPair(
        key="so3-g2",
        small="SO3",
        large="G2",
        dim_small=3,
        dim_large=14,
        forward_pi=(1,),
        forward_sigma=(6, 5, 4, 3),
        reverse_pi=(1,),
        reverse_sigma=(6, 5),
    ),
    DescentPair(
        key="sl2-sp6",
        small="SL2",
        large="Sp6",
        dim_small=3,
        dim_large=21,
        forward_pi=(1,),
        forward_sigma=(9, 8, 7, 6, 5, 3),
        reverse_pi=(1,),
        # cuspidal σ giving dim E = 15, 14, 13
        reverse_sigma=(9, 8, 7),
    ),
]


def _pair_key(text: str) -> str:
    """``"(SL2×SL2, Sp4)"`` and ``"sl2xsl2/sp4"`` both give ``"sl2xsl2-sp4"``."""
    key = text.strip().lower().replace("×", "x").replace("(", "").replace(")", "")
    return "-".join(p for p in re.split(r"[/,\s_-]+", key) if p)


@lru_cache(maxsize=1)
def descent_pairs() -> dict[str, DescentPair]:
    return {p.key: p for p in _PAIRS}


def get_pair(name: str) -> DescentPair:
    pair = descent_pairs().get(_pair_key(name))
    if pair is None:
        known = ", ".join(p.name for p in _PAIRS)
        raise ValueError(f"Unknown commuting pair {name!r}; known: {known}")
    return pair


def _option(direction: Direction, dim_pi: int, dim_sigma: int, dim_e: int) -> PairOption:
    orbits = [o.label for o in orbits_with_half_dim(dim_e)] if dim_e >= 0 else []
    return PairOption(
        direction=direction,
        dim_pi=dim_pi,
        dim_sigma=dim_sigma,
        dim_e=dim_e,
        feasible=bool(orbits),
        orbits=orbits,
    )


def pair_feasibility(pair: DescentPair | str) -> PairReport:
    """Enumerate admissible (dim π, dim σ) and flag each resulting dim E."""
    p = pair if isinstance(pair, DescentPair) else get_pair(pair)
    report = PairReport(pair=p.name)
    for pi in p.forward_pi:
        for sigma in p.forward_sigma:
            report.forward.append(_option("forward", pi, sigma, p.dim_small - pi + sigma))
    for pi in p.reverse_pi:
        for sigma in p.reverse_sigma:
            report.reverse.append(_option("reverse", pi, sigma, p.dim_large + pi - sigma))
    if p.note:
        report.notes.append(p.note)
    for direction in ("forward", "reverse"):
        dims = report.infeasible_dims(direction)
        if dims:
            report.notes.append(
                f"{direction}: no orbit of half-dimension {', '.join(map(str, dims))}"
            )
    logger.debug(
        "Pair %s: forward %s, reverse %s",
        p.name,
        report.feasible_dims("forward"),
        report.feasible_dims("reverse"),
    )
    return report


def all_pair_reports() -> list[PairReport]:
    return [pair_feasibility(p) for p in _PAIRS]


# ---------------------------------------------------------------------------
# Descent table
# ---------------------------------------------------------------------------


class DescentRow(BaseModel):
    """One candidate construction: orbit O, stabilizer orbit, and the dim E it forces."""

    orbit: str
    half_dim: int
    stabilizer: str
    tag: str
    dim_sigma: int
    dim_e: int
    feasible: bool
    orbits: list[str] = Field(default_factory=list)
    note: str = ""


# (orbit, stabilizer group, stabilizer orbit tag, dim σ, stated dim E, stated feasible, note)
_DESCENT_ROWS: list[tuple[str, str, str, int, int, bool, str]] = [
    ("C3", "A1", "(2)", 1, 22, True, ""),
    ("B3", "A1", "(3)", 1, 22, True, ""),
    ("C3(a1)", "A1", "(2)", 1, 20, True, ""),
    ("Ã2+A1", "A1", "(2)", 1, 19, True, ""),
    ("B2", "A1×A1", "(2|2)", 2, 20, True, ""),
    ("A2+Ã1", "A1", "(2)", 1, 18, True, ""),
    ("Ã2", "G2", "G2", 6, 21, True, ""),
    ("Ã2", "G2", "G2(a1)", 5, 20, True, ""),
    ("A2", "A2", "(3)", 3, 18, True, ""),
    ("A1+Ã1", "A1×A1", "(2|2)", 2, 16, False, "no unipotent orbit of dimension 32"),
    ("Ã1", "A3", "(4)", 6, 17, True, ""),
    ("A1", "C3", "(6)", 9, 17, True, ""),
    ("A1", "C3", "(42)", 8, 16, False, "no unipotent orbit of dimension 32"),
    ("A1", "C3", "(2³)", 6, 14, True, "whether an actual construction exists is open"),
]


@lru_cache(maxsize=1)
def descent_table() -> tuple[DescentRow, ...]:
    """Required dim E = ½dim O + dim σ for every candidate construction.

    Raises:
        ValueError: if a computed dim E or feasibility flag disagrees with the
            stated one.
    """
    rows = []
    for label, stab, tag, sigma, stated_e, stated_ok, note in _DESCENT_ROWS:
        record = get_orbit(label)
        dim_e = record.half_dim + sigma
        if dim_e != stated_e:
            raise ValueError(
                f"Descent row {label}∘{tag}: computed dim E {dim_e}, stated {stated_e}"
            )
        orbits = [o.label for o in orbits_with_half_dim(dim_e)]
        if bool(orbits) != stated_ok:
            raise ValueError(
                f"Descent row {label}∘{tag}: feasibility {bool(orbits)} contradicts stated {stated_ok}"
            )
        rows.append(
            DescentRow(
                orbit=record.label,
                half_dim=record.half_dim,
                stabilizer=stab,
                tag=tag,
                dim_sigma=sigma,
                dim_e=dim_e,
                feasible=bool(orbits),
                orbits=orbits,
                note=note,
            )
        )
    logger.info("Descent table built: %d rows", len(rows))
    return tuple(rows)


def descent_row(orbit: str, tag: str) -> Optional[DescentRow]:
    label = get_orbit(orbit).label
    for row in descent_table():
        if row.orbit == label and row.tag == tag.strip():
            return row
    return None
