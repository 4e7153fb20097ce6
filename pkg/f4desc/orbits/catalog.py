"""Catalog of the 16 unipotent orbits of F4.

Each record carries its Bala-Carter label, weighted diagram, half-dimension,
the reductive type of its stabilizer and a provenance flag per field:
``displayed`` for values read off a displayed diagram or dimension list,
``derived`` for values fixed by the parabolic assignments and validated by
recomputing root counts and dimensions.

The closure order is shipped as static Hasse covers.
"""

from __future__ import annotations

import logging
import re
import unicodedata
from functools import lru_cache
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from f4desc.orbits.grading import Diagram, Grading, grading

logger = logging.getLogger("f4desc.orbits.catalog")

Provenance = Literal["displayed", "derived"]


class OrbitRecord(BaseModel):
    """One unipotent orbit of F4."""

    model_config = ConfigDict(frozen=True)

    label: str
    alias: str
    diagram: Diagram
    half_dim: int
    stabilizer: str
    stabilizer_note: str = ""
    provenance: dict[str, Provenance] = Field(default_factory=dict)

    @property
    def dim(self) -> int:
        return 2 * self.half_dim

    @property
    def grading(self) -> Grading:
        return grading(self.diagram)

    @property
    def is_zero(self) -> bool:
        return not any(self.diagram.labels)

    def summary(self) -> dict:
        """Flat row for the catalog table: label, diagram, dims, stabilizer, level counts."""
        return {
            "label": self.label,
            "alias": self.alias,
            "diagram": str(self.diagram),
            "dim": self.dim,
            "half_dim": self.half_dim,
            "stabilizer": self.stabilizer,
            "level_counts": {str(k): v for k, v in self.grading.counts.items()},
            "provenance": dict(self.provenance),
        }


# (label, ascii alias, diagram, half-dim, stabilizer, diagram provenance, half-dim provenance, note)
_ORBITS: list[tuple[str, str, tuple[int, int, int, int], int, str, Provenance, Provenance, str]] = [
    ("0", "0", (0, 0, 0, 0), 0, "F4", "derived", "derived", ""),
    ("A1", "A1", (1, 0, 0, 0), 8, "C3", "displayed", "displayed", "Sp6"),
    ("Ã1", "A1t", (0, 0, 0, 1), 11, "A3", "derived", "displayed", ""),
    ("A1+Ã1", "A1+A1t", (0, 1, 0, 0), 14, "A1×A1", "displayed", "displayed", ""),
    ("A2", "A2", (2, 0, 0, 0), 15, "A2", "derived", "displayed", "unitary forms over quadratic extensions"),
    ("Ã2", "A2t", (0, 0, 0, 2), 15, "G2", "displayed", "displayed", ""),
    ("A2+Ã1", "A2+A1t", (0, 0, 1, 0), 17, "A1", "derived", "displayed", ""),
    ("B2", "B2", (2, 0, 0, 1), 18, "A1×A1", "displayed", "displayed", "square-class splitting"),
    ("Ã2+A1", "A2t+A1", (0, 1, 0, 1), 18, "A1", "displayed", "displayed", ""),
    ("C3(a1)", "C3a1", (1, 0, 1, 0), 19, "A1", "displayed", "displayed", ""),
    ("F4(a3)", "F4a3", (0, 2, 0, 0), 20, "finite", "derived", "displayed", "component group S4"),
    ("B3", "B3", (2, 2, 0, 0), 21, "A1", "displayed", "displayed", ""),
    ("C3", "C3", (1, 0, 1, 2), 21, "A1", "displayed", "displayed", ""),
    ("F4(a2)", "F4a2", (0, 2, 0, 2), 22, "finite", "derived", "displayed", ""),
    ("F4(a1)", "F4a1", (2, 2, 0, 2), 23, "finite", "displayed", "displayed", ""),
    ("F4", "F4", (2, 2, 2, 2), 24, "finite", "derived", "displayed", "regular orbit"),
]

# Covers a < b of the closure order.
HASSE_COVERS: list[tuple[str, str]] = [
    ("0", "A1"),
    ("A1", "Ã1"),
    ("Ã1", "A1+Ã1"),
    ("A1+Ã1", "A2"),
    ("A1+Ã1", "Ã2"),
    ("A2", "A2+Ã1"),
    ("A2+Ã1", "B2"),
    ("A2+Ã1", "Ã2+A1"),
    ("Ã2", "Ã2+A1"),
    ("B2", "C3(a1)"),
    ("Ã2+A1", "C3(a1)"),
    ("C3(a1)", "F4(a3)"),
    ("F4(a3)", "B3"),
    ("F4(a3)", "C3"),
    ("B3", "F4(a2)"),
    ("C3", "F4(a2)"),
    ("F4(a2)", "F4(a1)"),
    ("F4(a1)", "F4"),
]


def _label_key(text: str) -> str:
    """Normalized lookup key: ``Ã2+A1``, ``A2t+A1``, ``a~2 + a1`` all map to ``a2t+a1``."""
    s = unicodedata.normalize("NFC", text.strip()).casefold()
    s = re.sub(r"[\s()_]", "", s)
    s = re.sub(r"ã(\d)", r"a\1t", s)
    s = re.sub(r"a~(\d)", r"a\1t", s)
    s = re.sub(r"~a(\d)", r"a\1t", s)
    s = re.sub(r"a(\d)~", r"a\1t", s)
    if s in ("zero", "trivial"):
        return "0"
    return s


class OrbitCatalog:
    """Immutable lookup over the 16 orbit records and the closure order."""

    def __init__(self) -> None:
        self.records = [
            OrbitRecord(
                label=label,
                alias=alias,
                diagram=Diagram(labels=diagram),
                half_dim=half,
                stabilizer=stab,
                stabilizer_note=note,
                provenance={"diagram": d_prov, "half_dim": h_prov, "stabilizer": "displayed"},
            )
            for label, alias, diagram, half, stab, d_prov, h_prov, note in _ORBITS
        ]
        self._by_key: dict[str, OrbitRecord] = {}
        for rec in self.records:
            self._by_key[_label_key(rec.label)] = rec
            self._by_key[_label_key(rec.alias)] = rec
        self._above = self._transitive_closure()
        logger.info("Orbit catalog built: %d orbits, %d covers", len(self.records), len(HASSE_COVERS))

    def _transitive_closure(self) -> dict[str, set[str]]:
        up: dict[str, set[str]] = {rec.label: {rec.label} for rec in self.records}
        changed = True
        while changed:
            changed = False
            for low, high in HASSE_COVERS:
                for label, reach in up.items():
                    if low in reach and high not in reach:
                        reach.add(high)
                        changed = True
        return up

    def get(self, label: str) -> OrbitRecord:
        rec = self._by_key.get(_label_key(label))
        if rec is None:
            known = ", ".join(r.label for r in self.records)
            raise ValueError(f"Unknown orbit label {label!r}; known labels: {known}")
        return rec

    def __iter__(self):
        return iter(self.records)

    def nontrivial(self) -> list[OrbitRecord]:
        return [rec for rec in self.records if not rec.is_zero]

    def closure_leq(self, a: str, b: str) -> bool:
        """True iff orbit a lies in the closure of orbit b."""
        low, high = self.get(a).label, self.get(b).label
        return high in self._above[low]

    def with_half_dim(self, k: int) -> list[OrbitRecord]:
        if k < 0:
            raise ValueError(f"Half-dimension must be nonnegative, got {k}")
        return [rec for rec in self.records if rec.half_dim == k]

    def by_diagram(self, diagram: Diagram) -> OrbitRecord | None:
        for rec in self.records:
            if rec.diagram == diagram:
                return rec
        return None


@lru_cache(maxsize=1)
def orbit_catalog() -> OrbitCatalog:
    return OrbitCatalog()


def get_orbit(label: str) -> OrbitRecord:
    return orbit_catalog().get(label)


def half_dim(diagram: Diagram | str) -> int:
    """dim U_Δ(2) + ½|U_Δ'(1)| for a catalog diagram (or an orbit label)."""
    if isinstance(diagram, str):
        try:
            diagram = get_orbit(diagram).diagram
        except ValueError:
            diagram = Diagram.of(diagram)
    d = Diagram.of(diagram)
    if orbit_catalog().by_diagram(d) is None:
        raise ValueError(f"Diagram {d} is not a catalog diagram")
    return grading(d).half_dim


def orbits_with_half_dim(k: int) -> list[OrbitRecord]:
    """Catalog orbits with half-dimension k."""
    return orbit_catalog().with_half_dim(k)


def closure_leq(a: str, b: str) -> bool:
    return orbit_catalog().closure_leq(a, b)
