"""Root system of F4: Cartan data, roots, coroot pairings and reflections.

Roots are written as coefficient vectors (n1 n2 n3 n4) over the simple roots
α1..α4 of the Dynkin diagram

    α1 - α2 => α3 - α4

with α1, α2 long (squared length 2) and α3, α4 short (squared length 1).

Internally every hot path works on plain ``tuple[int, int, int, int]``
coefficient vectors; the pydantic :class:`Root` model is the validated
boundary type used by the public API, the CLI and the fixtures.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, field_validator

logger = logging.getLogger("f4desc.roots.system")

Coeffs = tuple[int, ...]

# ---------------------------------------------------------------------------
# Cartan data
# ---------------------------------------------------------------------------


class CartanData(BaseModel):
    """Cartan matrix plus simple-root lengths of a reduced root system.

    ``cartan[j][i]`` is the coroot pairing ⟨α_j, α_i^∨⟩, so the pairing of an
    arbitrary root Σ n_j α_j with α_i^∨ is Σ_j n_j · cartan[j][i].
    ``lengths2[i]`` is the squared length of α_i.
    """

    model_config = ConfigDict(frozen=True)

    name: str
    cartan: tuple[tuple[int, ...], ...]
    lengths2: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def copair(self, coeffs: Sequence[int], i: int) -> int:
        """⟨α, α_i^∨⟩ for the root with coefficient vector ``coeffs`` (i is 0-based)."""
        return sum(n * self.cartan[j][i] for j, n in enumerate(coeffs))

    def reflect(self, coeffs: Sequence[int], i: int) -> Coeffs:
        """s_i(α) = α − ⟨α, α_i^∨⟩ α_i."""
        k = self.copair(coeffs, i)
        out = list(coeffs)
        out[i] -= k
        return tuple(out)

    def reflect_cochar(self, weight: Sequence[int], i: int) -> Coeffs:
        """s_i(r) = r − ⟨α_i, r⟩ α_i^∨ for a cocharacter in coroot coordinates."""
        k = sum(self.cartan[i][j] * r for j, r in enumerate(weight))
        out = list(weight)
        out[i] -= k
        return tuple(out)

    def pair(self, coeffs: Sequence[int], weight: Sequence[int]) -> int:
        """⟨α, r⟩ = Σ_i r_i ⟨α, α_i^∨⟩, the exponent of t in Ad(r(t)) on e_α."""
        return sum(r * self.copair(coeffs, i) for i, r in enumerate(weight))

    def norm2(self, coeffs: Sequence[int]) -> int:
        """Squared length (α, α) in the normalization fixed by ``lengths2``."""
        total = sum(
            n * self.copair(coeffs, i) * self.lengths2[i] for i, n in enumerate(coeffs)
        )
        return total // 2

    def simple(self, i: int) -> Coeffs:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def root_closure(self) -> list[Coeffs]:
        """All roots, obtained by closing the simple roots under reflections."""
        frontier = [self.simple(i) for i in range(self.rank)]
        seen = set(frontier)
        while frontier:
            nxt: list[Coeffs] = []
            for c in frontier:
                for i in range(self.rank):
                    image = self.reflect(c, i)
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        return sorted(seen, key=canonical_key)


def canonical_key(coeffs: Sequence[int]) -> tuple:
    """Height first, then lexicographic on the coefficients."""
    return (sum(coeffs), tuple(coeffs))


F4 = CartanData(
    name="F4",
    cartan=(
        (2, -1, 0, 0),
        (-1, 2, -2, 0),
        (0, -1, 2, -1),
        (0, 0, -1, 2),
    ),
    lengths2=(2, 2, 1, 1),
)

HIGHEST_ROOT: Coeffs = (2, 3, 4, 2)

# ---------------------------------------------------------------------------
# Cached root tables
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def all_coeffs() -> tuple[Coeffs, ...]:
    """The 48 roots of F4 in canonical order (negatives first, by height)."""
    roots = tuple(F4.root_closure())
    logger.info("F4 root table built: %d roots", len(roots))
    return roots


@lru_cache(maxsize=1)
def root_index() -> dict[Coeffs, int]:
    return {c: k for k, c in enumerate(all_coeffs())}


@lru_cache(maxsize=1)
def positive_coeffs() -> tuple[Coeffs, ...]:
    return tuple(c for c in all_coeffs() if sum(c) > 0)


def is_root(coeffs: Sequence[int]) -> bool:
    return tuple(coeffs) in root_index()


def negate(coeffs: Sequence[int]) -> Coeffs:
    return tuple(-n for n in coeffs)


def add(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    return tuple(x + y for x, y in zip(a, b))


def format_coeffs(coeffs: Sequence[int]) -> str:
    """``(1,1,0,0)`` → ``"1100"``; negative roots get a leading ``-``."""
    if sum(coeffs) < 0:
        return "-" + "".join(str(-n) for n in coeffs)
    return "".join(str(n) for n in coeffs)


def parse_coeffs(text: str) -> Coeffs:
    """Parse ``"1100"``, ``"-1100"``, ``"(1100)"`` or ``"−(1100)"``."""
    cleaned = text.strip().replace("−", "-").replace("(", "").replace(")", "")
    cleaned = cleaned.replace(" ", "")
    sign = 1
    if cleaned.startswith("-"):
        sign, cleaned = -1, cleaned[1:]
    elif cleaned.startswith("+"):
        cleaned = cleaned[1:]
    if "," in cleaned:
        parts = [int(p) for p in cleaned.split(",")]
    elif cleaned.isdigit():
        parts = [int(ch) for ch in cleaned]
    else:
        raise ValueError(f"Cannot parse root {text!r}")
    if len(parts) != 4:
        raise ValueError(f"Root {text!r} must have 4 coefficients")
    return tuple(sign * n for n in parts)


# ---------------------------------------------------------------------------
# Public types
# ---------------------------------------------------------------------------


class Root(BaseModel):
    """A root of F4, identified by its coefficients over the simple roots."""

    model_config = ConfigDict(frozen=True)

    coeffs: tuple[int, int, int, int]

    @field_validator("coeffs")
    @classmethod
    def _must_be_root(cls, v: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
        if not is_root(v):
            raise ValueError(f"{v} is not a root of F4")
        return v

    @classmethod
    def of(cls, value: "Root | str | Iterable[int]") -> "Root":
        if isinstance(value, Root):
            return value
        if isinstance(value, str):
            return cls(coeffs=parse_coeffs(value))
        return cls(coeffs=tuple(value))

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    @property
    def norm2(self) -> int:
        return F4.norm2(self.coeffs)

    @property
    def is_long(self) -> bool:
        return self.norm2 == 2

    @property
    def index(self) -> int:
        return root_index()[self.coeffs]

    def __neg__(self) -> "Root":
        return Root(coeffs=negate(self.coeffs))

    def __str__(self) -> str:
        return format_coeffs(self.coeffs)

    def sort_key(self) -> tuple:
        return canonical_key(self.coeffs)


class CocharWeight(BaseModel):
    """Exponents (r1..r4) of the torus t ↦ h(t^r1, t^r2, t^r3, t^r4)."""

    model_config = ConfigDict(frozen=True)

    exponents: tuple[int, int, int, int]

    @classmethod
    def of(cls, value: "CocharWeight | str | Iterable[int]") -> "CocharWeight":
        if isinstance(value, CocharWeight):
            return value
        if isinstance(value, str):
            parts = [p for p in value.replace("(", "").replace(")", "").split(",") if p.strip()]
            try:
                return cls(exponents=tuple(int(p) for p in parts))
            except Exception as exc:
                raise ValueError(f"Cannot parse weight {value!r}: expected r1,r2,r3,r4") from exc
        return cls(exponents=tuple(value))

    def __add__(self, other: "CocharWeight") -> "CocharWeight":
        return CocharWeight(exponents=add(self.exponents, other.exponents))

    def __str__(self) -> str:
        return "(" + ",".join(str(r) for r in self.exponents) + ")"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def enumerate_positive_roots() -> list[Root]:
    """The 24 positive roots in height-then-lexicographic order."""
    return [Root(coeffs=c) for c in positive_coeffs()]


def enumerate_roots() -> list[Root]:
    return [Root(coeffs=c) for c in all_coeffs()]


def copair(alpha: Root | str, i: int) -> int:
    """⟨α, α_i^∨⟩ for a simple index i in 1..4."""
    if not 1 <= i <= 4:
        raise ValueError(f"Simple index must be in 1..4, got {i}")
    return F4.copair(Root.of(alpha).coeffs, i - 1)


def pairing(alpha: Root | str, weight: CocharWeight | str) -> int:
    return F4.pair(Root.of(alpha).coeffs, CocharWeight.of(weight).exponents)


def reflect(alpha: Root | str, i: int) -> Root:
    if not 1 <= i <= 4:
        raise ValueError(f"Simple index must be in 1..4, got {i}")
    return Root(coeffs=F4.reflect(Root.of(alpha).coeffs, i - 1))
