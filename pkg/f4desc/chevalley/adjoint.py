"""Adjoint realization of the Chevalley group F4(Q).

Basis of the 52-dimensional Lie algebra: the root vectors e_α for the 48 roots
in canonical order, followed by h_1..h_4. Group elements are exact 52×52
matrices over QQ (sympy ``DomainMatrix``, sparse format throughout).

    [e_α, e_β] = N_{α,β} e_{α+β}        (α + β a root)
    [e_α, e_{−α}] = h_α                  (coroot, in the h_i basis)
    [h_i, e_β] = ⟨β, α_i^∨⟩ e_β
"""

from __future__ import annotations

import logging
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence, Union

from pydantic import BaseModel, ConfigDict
from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from f4desc.chevalley.constants import structure_constants
from f4desc.roots.system import (
    F4,
    Coeffs,
    Root,
    add,
    all_coeffs,
    canonical_key,
    format_coeffs,
    is_root,
    negate,
    positive_coeffs,
    root_index,
)

logger = logging.getLogger("f4desc.chevalley.adjoint")

DIM = 52
RANK = 4
Scalar = Union[int, Rational, str]

# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------


def to_qq(value: Scalar):
    """Exact conversion of int / sympy Rational / "p/q" text to QQ."""
    r = Rational(value)
    if not r.is_Rational:
        raise ValueError(f"{value!r} is not an exact rational")
    return QQ(int(r.p), int(r.q))


def qq_to_rational(value) -> Rational:
    return QQ.to_sympy(value)


# ---------------------------------------------------------------------------
# Lie algebra
# ---------------------------------------------------------------------------


def h_index(i: int) -> int:
    """Basis position of h_i (i in 1..4)."""
    return len(all_coeffs()) + i - 1


def coroot_coords(alpha: Coeffs) -> tuple[int, ...]:
    """h_α = Σ n_i · |α_i|²/|α|² · h_i."""
    norm = F4.norm2(alpha)
    coords = []
    for i, n in enumerate(alpha):
        num = n * F4.lengths2[i]
        if num % norm:
            raise ValueError(f"Coroot of {format_coeffs(alpha)} is not integral")
        coords.append(num // norm)
    return tuple(coords)


def bracket_basis(x: int, y: int) -> dict[int, int]:
    """[b_x, b_y] for basis indices x, y as a sparse coordinate dict."""
    roots = all_coeffs()
    n_roots = len(roots)
    if x >= n_roots and y >= n_roots:
        return {}
    if x >= n_roots:
        beta = roots[y]
        k = F4.copair(beta, x - n_roots)
        return {y: k} if k else {}
    if y >= n_roots:
        alpha = roots[x]
        k = F4.copair(alpha, y - n_roots)
        return {x: -k} if k else {}
    alpha, beta = roots[x], roots[y]
    s = add(alpha, beta)
    if not any(s):
        return {
            n_roots + i: c for i, c in enumerate(coroot_coords(alpha)) if c
        }
    if not is_root(s):
        return {}
    return {root_index()[s]: structure_constants().n(alpha, beta)}


def bracket(u: dict[int, int], v: dict[int, int]) -> dict[int, int]:
    """Bilinear extension of :func:`bracket_basis` to sparse vectors."""
    out: dict[int, int] = {}
    for x, cx in u.items():
        for y, cy in v.items():
            for z, cz in bracket_basis(x, y).items():
                out[z] = out.get(z, 0) + cx * cy * cz
    return {k: c for k, c in out.items() if c}


def jacobi_defect(x: int, y: int, z: int) -> dict[int, int]:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]] for basis indices; empty iff Jacobi holds."""
    ex, ey, ez = {x: 1}, {y: 1}, {z: 1}
    total: dict[int, int] = {}
    for term in (
        bracket(ex, bracket(ey, ez)),
        bracket(ey, bracket(ez, ex)),
        bracket(ez, bracket(ex, ey)),
    ):
        for k, c in term.items():
            total[k] = total.get(k, 0) + c
    return {k: c for k, c in total.items() if c}


@lru_cache(maxsize=None)
def ad_matrix(alpha: Coeffs) -> DomainMatrix:
    """ad(e_α) as a sparse 52×52 matrix (column j = [e_α, b_j])."""
    x = root_index()[alpha]
    dod: dict[int, dict[int, object]] = {}
    for j in range(DIM):
        for i, c in bracket_basis(x, j).items():
            dod.setdefault(i, {})[j] = QQ(c)
    return DomainMatrix.from_dod(dod, (DIM, DIM), QQ)


@lru_cache(maxsize=None)
def ad_powers(alpha: Coeffs) -> tuple[DomainMatrix, ...]:
    """(ad e_α)^k for k = 1, 2, ... up to the last nonzero power."""
    base = ad_matrix(alpha)
    powers = [base]
    while True:
        nxt = powers[-1].matmul(base)
        if nxt.is_zero_matrix:
            break
        powers.append(nxt)
        if len(powers) > 5:
            raise ValueError(f"ad e_{format_coeffs(alpha)} is not nilpotent of order ≤ 5")
    return tuple(powers)


# ---------------------------------------------------------------------------
# Group elements
# ---------------------------------------------------------------------------


class AdjointElement:
    """A group element acting on the adjoint representation."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: DomainMatrix) -> None:
        self.matrix = matrix.to_sparse()

    @classmethod
    def identity(cls) -> "AdjointElement":
        return cls(DomainMatrix.eye(DIM, QQ))

    def __mul__(self, other: "AdjointElement") -> "AdjointElement":
        return AdjointElement(self.matrix.matmul(other.matrix))

    def inverse(self) -> "AdjointElement":
        return AdjointElement(self.matrix.inv())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdjointElement):
            return NotImplemented
        return self.matrix.to_dod() == other.matrix.to_dod()

    def __hash__(self) -> int:
        return hash(tuple(sorted((i, tuple(sorted(r.items()))) for i, r in self.matrix.to_dod().items())))

    def is_identity(self) -> bool:
        return self == AdjointElement.identity()

    def entry(self, row: int, col: int):
        return self.matrix.to_dod().get(row, {}).get(col, QQ(0))

    def column(self, col: int) -> dict[int, object]:
        dod = self.matrix.to_dod()
        return {r: vals[col] for r, vals in dod.items() if col in vals}

    def det(self) -> Rational:
        return qq_to_rational(self.matrix.det())

    def conjugate(self, other: "AdjointElement") -> "AdjointElement":
        """self · other · self⁻¹."""
        return self * other * self.inverse()


def product(elements: Iterable[AdjointElement]) -> AdjointElement:
    out = AdjointElement.identity()
    for g in elements:
        out = out * g
    return out


def _coeffs_of(alpha: Root | str | Sequence[int]) -> Coeffs:
    if isinstance(alpha, tuple) and all(isinstance(n, int) for n in alpha):
        if not is_root(alpha):
            raise ValueError(f"{alpha} is not a root of F4")
        return alpha
    return Root.of(alpha).coeffs


def unip(alpha: Root | str | Sequence[int], t: Scalar) -> AdjointElement:
    """x_α(t) = exp(t · ad e_α), a finite sum since ad e_α is nilpotent."""
    a = _coeffs_of(alpha)
    tq = to_qq(t)
    matrix = DomainMatrix.eye(DIM, QQ)
    if tq == 0:
        return AdjointElement(matrix)
    for k, power in enumerate(ad_powers(a), start=1):
        coeff = tq**k / QQ(factorial(k))
        matrix = matrix.add(power.scalarmul(coeff).to_sparse())
    return AdjointElement(matrix)


def torus(*params: Scalar) -> AdjointElement:
    """h(t1, t2, t3, t4): e_α ↦ Π t_i^⟨α, α_i^∨⟩ e_α, identity on the Cartan part."""
    if len(params) != RANK:
        raise ValueError(f"torus needs {RANK} parameters, got {len(params)}")
    ts = [to_qq(t) for t in params]
    if any(t == 0 for t in ts):
        raise ValueError("torus parameters must be nonzero")
    diagonal = []
    for c in all_coeffs():
        value = QQ(1)
        for i, t in enumerate(ts):
            k = F4.copair(c, i)
            value *= t**k if k >= 0 else (QQ(1) / t) ** (-k)
        diagonal.append(value)
    diagonal.extend(QQ(1) for _ in range(RANK))
    dod = {k: {k: v} for k, v in enumerate(diagonal)}
    return AdjointElement(DomainMatrix.from_dod(dod, (DIM, DIM), QQ))


def torus_character(alpha: Root | str | Sequence[int], params: Sequence[Scalar]) -> Rational:
    """χ_α(t) = Π t_i^⟨α, α_i^∨⟩."""
    a = _coeffs_of(alpha)
    value = Rational(1)
    for i, t in enumerate(params):
        value *= Rational(t) ** F4.copair(a, i)
    return value


def weyl_rep(i: int) -> AdjointElement:
    """Representative x_{α_i}(1) x_{−α_i}(−1) x_{α_i}(1) of the simple reflection s_i."""
    if not 1 <= i <= RANK:
        raise ValueError(f"Simple index must be in 1..{RANK}, got {i}")
    a = F4.simple(i - 1)
    return unip(a, 1) * unip(negate(a), -1) * unip(a, 1)


def root_space_image(g: AdjointElement, alpha: Root | str | Sequence[int]) -> dict[str, Rational]:
    """Nonzero coordinates of g·e_α, keyed by root text or ``h1``..``h4``."""
    a = _coeffs_of(alpha)
    roots = all_coeffs()
    out = {}
    for row, value in sorted(g.column(root_index()[a]).items()):
        if value == 0:
            continue
        key = format_coeffs(roots[row]) if row < len(roots) else f"h{row - len(roots) + 1}"
        out[key] = qq_to_rational(value)
    return out


# ---------------------------------------------------------------------------
# Commutators and collection
# ---------------------------------------------------------------------------


class CommutatorTerm(BaseModel):
    model_config = ConfigDict(frozen=True)

    root: str
    coefficient: int
    degree: tuple[int, int]


class CommutatorExpansion(BaseModel):
    """x_β(s)⁻¹ x_α(r)⁻¹ x_β(s) x_α(r) = Π x_{iα+jβ}(c_ij r^i s^j), in listed order."""

    alpha: str
    beta: str
    terms: list[CommutatorTerm]

    def evaluate(self, r: Scalar, s: Scalar) -> AdjointElement:
        rq, sq = Rational(r), Rational(s)
        return product(
            unip(term.root, term.coefficient * rq ** term.degree[0] * sq ** term.degree[1])
            for term in self.terms
        )


def commutator_formula(alpha: Root | str, beta: Root | str) -> CommutatorExpansion:
    """Chevalley commutator formula for a pair of roots with α ≠ ±β."""
    a, b = Root.of(alpha).coeffs, Root.of(beta).coeffs
    if a == b or a == negate(b):
        raise ValueError("commutator_formula requires α ≠ ±β")
    table = structure_constants()
    terms: list[CommutatorTerm] = []
    s = add(a, b)
    if is_root(s):
        n_ab = table.n(a, b)
        terms.append(CommutatorTerm(root=format_coeffs(s), coefficient=-n_ab, degree=(1, 1)))
        two_a_b = add(a, s)
        if is_root(two_a_b):
            c21 = Rational(n_ab * table.n(a, s), 2)
            terms.append(CommutatorTerm(root=format_coeffs(two_a_b), coefficient=int(c21), degree=(2, 1)))
        a_two_b = add(b, s)
        if is_root(a_two_b):
            c12 = Rational(n_ab * table.n(b, s), 2)
            terms.append(CommutatorTerm(root=format_coeffs(a_two_b), coefficient=int(c12), degree=(1, 2)))
    return CommutatorExpansion(alpha=format_coeffs(a), beta=format_coeffs(b), terms=terms)


def group_commutator(g: AdjointElement, h: AdjointElement) -> AdjointElement:
    """g⁻¹ h⁻¹ g h."""
    return g.inverse() * h.inverse() * g * h


def normal_form(g: AdjointElement) -> list[tuple[Root, Rational]]:
    """Coefficients t_α with g = Π_α x_α(t_α) over the positive roots in canonical order.

    Raises:
        ValueError: if g is not in the positive unipotent subgroup.
    """
    index = root_index()
    remaining = g
    coefficients: list[tuple[Root, Rational]] = []
    for alpha in positive_coeffs():
        i = next(k for k in range(RANK) if F4.copair(alpha, k) != 0)
        value = remaining.entry(index[alpha], h_index(i + 1))
        t = -value / QQ(F4.copair(alpha, i))
        coefficients.append((Root(coeffs=alpha), qq_to_rational(t)))
        if t != 0:
            remaining = unip(alpha, qq_to_rational(-t)) * remaining
    if not remaining.is_identity():
        moved = sorted(
            (r, c) for r, row in remaining.matrix.to_dod().items() for c, v in row.items()
            if (v != 0) != (r == c) or (r == c and v != 1)
        )
        raise ValueError(
            f"Element is not in the positive unipotent subgroup; residue differs at {moved[:5]}"
        )
    return coefficients


def from_normal_form(coefficients: Sequence[tuple[Root | str, Scalar]]) -> AdjointElement:
    ordered = sorted(((Root.of(r), t) for r, t in coefficients), key=lambda p: canonical_key(p[0].coeffs))
    return product(unip(r.coeffs, t) for r, t in ordered if Rational(t) != 0)
