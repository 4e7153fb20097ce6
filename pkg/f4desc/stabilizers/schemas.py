"""Pydantic schemas for characters and stabilizer results.

Matrices are carried as ``list[list[str]]`` of exact rationals (``"3/2"``) at
the boundary and converted to sympy ``Matrix`` objects for computation.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import Matrix, Rational, eye

J3 = Matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])


def to_rational(value) -> Rational:
    r = Rational(value)
    if not r.is_Rational:
        raise ValueError(f"{value!r} is not an exact rational")
    return r


def matrix_to_text(m: Matrix) -> list[list[str]]:
    return [[str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def parse_rationals(text: str, count: int) -> list[Rational]:
    """``"1,0,0,0,1/2,3"`` → list of exact rationals of the given length."""
    parts = [p for p in text.replace(" ", ",").split(",") if p]
    if len(parts) != count:
        raise ValueError(f"Expected {count} rationals, got {len(parts)} in {text!r}")
    return [to_rational(p) for p in parts]


# ---------------------------------------------------------------------------
# Mat3J
# ---------------------------------------------------------------------------


class Mat3J(BaseModel):
    """3×3 matrix X with J3·X = Xᵗ·J3, stored by its six free entries r1..r6.

    Layout::

        ( r4  r5  r6 )
        ( r2  r3  r5 )
        ( r1  r2  r4 )
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    r: tuple[Rational, Rational, Rational, Rational, Rational, Rational]

    @field_validator("r", mode="before")
    @classmethod
    def _exact(cls, v: Iterable) -> tuple:
        values = tuple(to_rational(x) for x in v)
        if len(values) != 6:
            raise ValueError(f"Mat3J needs 6 entries, got {len(values)}")
        return values

    @classmethod
    def of(cls, values: Sequence) -> "Mat3J":
        """From the six free entries (r1..r6)."""
        return cls(r=tuple(values))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> "Mat3J":
        m = Matrix(rows).applyfunc(to_rational)
        if m.shape != (3, 3):
            raise ValueError(f"Mat3J needs a 3×3 matrix, got {m.shape}")
        if J3 * m != m.T * J3:
            raise ValueError(f"Matrix {matrix_to_text(m)} does not satisfy J3·X = Xᵗ·J3")
        return cls(r=(m[2, 0], m[1, 0], m[1, 1], m[0, 0], m[0, 1], m[0, 2]))

    @property
    def matrix(self) -> Matrix:
        r1, r2, r3, r4, r5, r6 = self.r
        return Matrix([[r4, r5, r6], [r2, r3, r5], [r1, r2, r4]])

    @classmethod
    def zero(cls) -> "Mat3J":
        return cls(r=(0, 0, 0, 0, 0, 0))


# ---------------------------------------------------------------------------
# F4a2Char
# ---------------------------------------------------------------------------


class F4a2Char(BaseModel):
    """Character data (A, γ1, γ2) with A in the constrained 4×2 shape::

        ( a1   a2 )
        ( a3   a4 )
        ( a5   a1 )
        ( a6  −a3 )
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: tuple[Rational, Rational, Rational, Rational, Rational, Rational]
    gamma: tuple[Rational, Rational]

    @field_validator("a", "gamma", mode="before")
    @classmethod
    def _exact(cls, v: Iterable) -> tuple:
        return tuple(to_rational(x) for x in v)

    @classmethod
    def of(cls, coords: Sequence) -> "F4a2Char":
        """From the eight coordinates (a1..a6, γ1, γ2)."""
        if len(coords) != 8:
            raise ValueError(f"F4a2Char needs 8 coordinates, got {len(coords)}")
        return cls(a=tuple(coords[:6]), gamma=tuple(coords[6:]))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence], gamma: Sequence) -> "F4a2Char":
        """Project a general 4×2 matrix onto the constrained shape.

        The character only sees A through the trace pairing, so the repeated
        entries are replaced by their averages.
        """
        m = Matrix(rows).applyfunc(to_rational)
        if m.shape != (4, 2):
            raise ValueError(f"F4(a2) character needs a 4×2 matrix, got {m.shape}")
        a1 = (m[0, 0] + m[2, 1]) / 2
        a3 = (m[1, 0] - m[3, 1]) / 2
        return cls(a=(a1, m[0, 1], a3, m[1, 1], m[2, 0], m[3, 0]), gamma=tuple(gamma))

    @classmethod
    def read(cls, m: Matrix, gamma: Sequence) -> "F4a2Char":
        """Read coordinates from a matrix already in the constrained shape."""
        if not has_f4a2_shape(m):
            raise ValueError(f"Matrix {matrix_to_text(m)} left the constrained shape")
        return cls(a=(m[0, 0], m[0, 1], m[1, 0], m[1, 1], m[2, 0], m[3, 0]), gamma=tuple(gamma))

    @property
    def matrix(self) -> Matrix:
        a1, a2, a3, a4, a5, a6 = self.a
        return Matrix([[a1, a2], [a3, a4], [a5, a1], [a6, -a3]])

    @property
    def coords(self) -> tuple:
        return tuple(self.a) + tuple(self.gamma)

    def is_zero(self) -> bool:
        return not any(self.coords)


def has_f4a2_shape(m: Matrix) -> bool:
    return m.shape == (4, 2) and m[2, 1] == m[0, 0] and m[3, 1] == -m[1, 0]


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------


class StabSolution(BaseModel):
    h1: list[list[str]]
    g1: list[list[str]]


class StabResult(BaseModel):
    """Solution space of a stabilizer linear system."""

    dimension: int
    basis: list[StabSolution] = Field(default_factory=list)
    unknowns: int = 13
    notes: list[str] = Field(default_factory=list)


class F4a2StabResult(BaseModel):
    dimension: int
    rank: int
    acting_dimension: int = 8
    jacobian: list[list[str]] = Field(default_factory=list)


def identity_pair() -> tuple[Matrix, Matrix]:
    """(h1, g1) = (−2·I2, I3), the line contained in every F4(a3) stabilizer."""
    return (-2 * eye(2), eye(3))

