"""Action of M_{α1,α3} on F4(a2) characters and its infinitesimal stabilizer.

The acting group is generated by four one-parameter families:

  * SL2(α1):  g ↦ (top rows g·X, bottom rows D·g·D·Y), D = diag(1, −1)
  * x_{0010}(m):   A ↦ M·A·[[1, m], [0, 1]],  γ ↦ [[1, 0], [m, 1]]·γ
  * x_{−0010}(m):  A ↦ Mᵗ·A·[[1, 0], [m, 1]], γ ↦ [[1, m], [0, 1]]·γ
  * torus h(t1..t4): A ↦ T1·A·T2, γ1 ↦ t3⁻¹t4²γ1, γ2 ↦ t2t3⁻¹t4⁻¹γ2

with M = I4 + m·e13 − m·e24. Differentiating each family at the identity
gives eight tangent vectors (E, F, e, f, t1..t4); the stabilizer dimension
is 8 minus the rank they span at χ.
"""

from __future__ import annotations

import logging
from typing import Literal, Sequence

from sympy import Matrix, Rational, Symbol, diag, eye

from f4desc.stabilizers.schemas import F4a2Char, F4a2StabResult, matrix_to_text, to_rational

logger = logging.getLogger("f4desc.stabilizers.f4a2")

ActionKind = Literal["sl2", "x0010", "x-0010", "torus"]

_D = diag(1, -1)


def _m4(m) -> Matrix:
    out = eye(4)
    out[0, 2] = m
    out[1, 3] = -m
    return out


def _apply(kind: ActionKind, params: Sequence, a: Matrix, gamma: Matrix) -> tuple[Matrix, Matrix]:
    if kind == "sl2":
        g = Matrix(2, 2, list(params))
        if g.det() != 1:
            raise ValueError(f"SL2 element must have determinant 1, got {g.det()}")
        top = g * a[:2, :]
        bottom = _D * g * _D * a[2:, :]
        return top.col_join(bottom), gamma
    if kind == "x0010":
        (m,) = params
        return _m4(m) * a * Matrix([[1, m], [0, 1]]), Matrix([[1, 0], [m, 1]]) * gamma
    if kind == "x-0010":
        (m,) = params
        return _m4(m).T * a * Matrix([[1, 0], [m, 1]]), Matrix([[1, m], [0, 1]]) * gamma
    if kind == "torus":
        t1, t2, t3, t4 = params
        if any(t == 0 for t in params):
            raise ValueError("torus parameters must be nonzero")
        t_left = diag(t2 * t4 / (t1 * t3), t1 * t4 / t3, t3 / t1, t1 * t3 / t2)
        t_right = diag(t3 / t4**2, t2 / (t3 * t4))
        g1 = t4**2 / t3 * gamma[0]
        g2 = t2 / (t3 * t4) * gamma[1]
        return t_left * a * t_right, Matrix([g1, g2])
    raise ValueError(f"Unknown F4(a2) action {kind!r}")


def f4a2_act(kind: ActionKind, params: Sequence, chi: F4a2Char) -> F4a2Char:
    """Apply one group element to a character; the output keeps the constrained shape."""
    values = [to_rational(p) for p in params]
    a, gamma = _apply(kind, values, chi.matrix, Matrix(chi.gamma))
    return F4a2Char.read(a, list(gamma))


# ---------------------------------------------------------------------------
# Infinitesimal action
# ---------------------------------------------------------------------------

_S = Symbol("s")

# (family, parameters as functions of s, value of s at the identity)
_DIRECTIONS: list[tuple[str, ActionKind, list, int]] = [
    ("E", "sl2", [1, _S, 0, 1], 0),
    ("F", "sl2", [1, 0, _S, 1], 0),
    ("e", "x0010", [_S], 0),
    ("f", "x-0010", [_S], 0),
    ("t1", "torus", [_S, 1, 1, 1], 1),
    ("t2", "torus", [1, _S, 1, 1], 1),
    ("t3", "torus", [1, 1, _S, 1], 1),
    ("t4", "torus", [1, 1, 1, _S], 1),
]


def _coordinates(a: Matrix, gamma: Matrix) -> list:
    return [a[0, 0], a[0, 1], a[1, 0], a[1, 1], a[2, 0], a[3, 0], gamma[0], gamma[1]]


def tangent_matrix(chi: F4a2Char) -> Matrix:
    """8×8 matrix whose columns are the tangent vectors of the action at χ."""
    columns = []
    for _name, kind, params, at in _DIRECTIONS:
        a, gamma = _apply(kind, params, chi.matrix, Matrix(chi.gamma))
        coords = _coordinates(a, gamma)
        columns.append([c.diff(_S).subs(_S, at) if hasattr(c, "diff") else 0 for c in coords])
    return Matrix(columns).T


def f4a2_stab_dim(chi: F4a2Char) -> F4a2StabResult:
    """Dimension of the infinitesimal stabilizer of χ in the 8-dimensional acting algebra."""
    jac = tangent_matrix(chi)
    rank = jac.rank()
    result = F4a2StabResult(
        dimension=len(_DIRECTIONS) - rank,
        rank=rank,
        acting_dimension=len(_DIRECTIONS),
        jacobian=matrix_to_text(jac),
    )
    logger.debug("F4(a2) stabilizer of %s: dimension %d", chi.coords, result.dimension)
    return result


def example_character(a=1, b=1, c=1) -> F4a2Char:
    """A = ((1, a), (0, b), (c, 0), (0, 0)) with (γ1, γ2) = (1, 0), projected onto the shape."""
    return F4a2Char.from_matrix([[1, a], [0, b], [c, 0], [0, 0]], gamma=(1, 0))


def random_character(rng, bound: int = 9) -> F4a2Char:
    """Character with independent random integer coordinates in [−bound, bound]."""
    return F4a2Char.of([Rational(rng.randint(-bound, bound)) for _ in range(8)])
