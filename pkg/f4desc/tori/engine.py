"""One-parameter tori attached to orbits, their composition and Weyl matching.

The torus h_O(t) = h(t^r1, t^r2, t^r3, t^r4) of an orbit scales every level-n
root space by t^n. It is computed twice: by the closed form

    r1 = G(2342)    r4 = G(1232)    r2 = r1 + 2·r4 − G(1122)    r3 = (r2 + G(1242)) / 2

and by an exact solve of ⟨α, r⟩ = G(α) over all positive roots. Any
disagreement is a convention bug and raises.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field
from sympy import Matrix

from f4desc.orbits.catalog import get_orbit, orbit_catalog
from f4desc.orbits.grading import Diagram
from f4desc.roots.system import F4, CocharWeight, Root, positive_coeffs
from f4desc.roots.weyl import f4_weyl_group

logger = logging.getLogger("f4desc.tori.engine")


# ---------------------------------------------------------------------------
# Torus of an orbit
# ---------------------------------------------------------------------------


def _closed_form(d: Diagram) -> tuple[int, int, int, int]:
    r1 = d.level((2, 3, 4, 2))
    r4 = d.level((1, 2, 3, 2))
    r2 = r1 + 2 * r4 - d.level((1, 1, 2, 2))
    twice_r3 = r2 + d.level((1, 2, 4, 2))
    if twice_r3 % 2:
        raise ValueError(f"Closed-form r3 is not integral for diagram {d}")
    return (r1, r2, twice_r3 // 2, r4)


def _linear_solve(d: Diagram) -> tuple[int, int, int, int]:
    rows = [[F4.copair(c, i) for i in range(4)] for c in positive_coeffs()]
    rhs = [d.level(c) for c in positive_coeffs()]
    try:
        solution, params = Matrix(rows).gauss_jordan_solve(Matrix(rhs))
    except ValueError as exc:
        raise ValueError(f"Torus system for diagram {d} is inconsistent") from exc
    if params.shape[0]:
        raise ValueError(f"Torus system for diagram {d} is underdetermined")
    values = []
    for v in solution:
        if not v.is_integer:
            raise ValueError(f"Torus exponent {v} is not integral for diagram {d}")
        values.append(int(v))
    return tuple(values)


def torus_of_orbit(diagram: Diagram | str) -> CocharWeight:
    """Weight r with ⟨α, r⟩ = level(α) for every graded root.

    Accepts a diagram or an orbit label.

    Raises:
        ValueError: if the closed form and the linear solve disagree.
    """
    d = get_orbit(diagram).diagram if isinstance(diagram, str) else Diagram.of(diagram)
    closed = _closed_form(d)
    solved = _linear_solve(d)
    if closed != solved:
        raise ValueError(
            f"Closed form {closed} disagrees with linear solve {solved} for diagram {d}"
        )
    return CocharWeight(exponents=closed)


@lru_cache(maxsize=1)
def orbit_tori() -> dict[str, CocharWeight]:
    """Torus of every catalog orbit, keyed by label."""
    table = {rec.label: torus_of_orbit(rec.diagram) for rec in orbit_catalog()}
    logger.info("Orbit tori computed for %d orbits", len(table))
    return table


def compose(a: CocharWeight | str, b: CocharWeight | str) -> CocharWeight:
    """Product of two commuting one-parameter tori: exponents add."""
    return CocharWeight.of(a) + CocharWeight.of(b)


# ---------------------------------------------------------------------------
# Weyl matching
# ---------------------------------------------------------------------------


class TorusMatch(BaseModel):
    label: str
    witness_word: str
    weight: str
    image: str


def match_to_orbit(r: CocharWeight | str) -> Optional[TorusMatch]:
    """First Weyl element (BFS order) conjugating r onto an orbit torus, or None."""
    weight = CocharWeight.of(r)
    targets = {w.exponents: label for label, w in orbit_tori().items()}
    for element in f4_weyl_group():
        image = element.apply_cochar(weight.exponents)
        label = targets.get(image)
        if label is not None:
            logger.debug("Weight %s matches %s via %s", weight, label, element.word)
            return TorusMatch(
                label=label,
                witness_word=str(element.word),
                weight=str(weight),
                image=str(CocharWeight(exponents=image)),
            )
    return None


# ---------------------------------------------------------------------------
# Stabilizer sub-tori
# ---------------------------------------------------------------------------


class SubTorusEntry(BaseModel):
    """Torus of a stabilizer orbit, embedded in F4."""

    model_config = ConfigDict(frozen=True)

    host: str
    tag: str
    weight: CocharWeight
    char_support: list[str] = Field(default_factory=list)
    dim_v: int
    note: str = ""

    @property
    def key(self) -> tuple[str, str]:
        return (get_orbit(self.host).label, self.tag)

    def support_pairings(self) -> dict[str, int]:
        return {
            root: F4.pair(Root.of(root).coeffs, self.weight.exponents) for root in self.char_support
        }

    def centralizes_character(self) -> bool:
        """The sub-torus pairs to zero with every character-support root."""
        return not any(self.support_pairings().values())


_SUB_TORI: list[tuple[str, str, tuple[int, int, int, int], list[str], int, str]] = [
    ("C3", "(2)", (0, 1, 0, 0), ["0001", "1110", "0120"], 1, "maximal torus h(1,t,1,1)"),
    ("B3", "(3)", (0, 0, 2, 2), ["0111", "0120", "1000"], 1, "h(1,1,t²,t²)"),
    ("C3(a1)", "(2)", (0, 1, 0, 0), ["0121", "1110", "1111"], 1, ""),
    ("B2", "(2|2)", (0, 2, 1, 0), ["1110", "0122"], 2, "regular orbit of SL2×SL2"),
    ("A2+Ã1", "(2)", (2, 2, 0, 1), ["0122", "1121", "1220"], 1, ""),
    ("Ã2", "G2", (6, 10, 6, 0), ["0121", "1111"], 6, "regular orbit of G2"),
    ("Ã2", "G2(a1)", (2, 4, 2, 0), ["0121", "1111"], 5, "subregular orbit of G2"),
]


@lru_cache(maxsize=1)
def sub_tori() -> dict[tuple[str, str], SubTorusEntry]:
    entries = [
        SubTorusEntry(
            host=host,
            tag=tag,
            weight=CocharWeight(exponents=weight),
            char_support=support,
            dim_v=dim_v,
            note=note,
        )
        for host, tag, weight, support, dim_v, note in _SUB_TORI
    ]
    return {e.key: e for e in entries}


def sub_torus(host: str, tag: str) -> SubTorusEntry:
    entry = sub_tori().get((get_orbit(host).label, tag.strip()))
    if entry is None:
        known = ", ".join(f"{h}∘{t}" for h, t in sub_tori())
        raise ValueError(f"No sub-torus {tag!r} for orbit {host!r}; known: {known}")
    return entry
