"""Stabilizer of an F4(a3) character pair (A, B) in Mat3J × Mat3J.

The Levi acts on pairs through (h1, g1) ∈ gl2 × gl3; the infinitesimal
stabilizer is the solution space of

    g1·A + A·J3·g1ᵗ·J3 + a·A + b·B = 0
    g1·B + B·J3·g1ᵗ·J3 + c·A + d·B = 0

with h1 = [[a, b], [c, d]]: 13 unknowns, 18 scalar equations. The line
(h1, g1) = (−2t·I2, t·I3) always solves it.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from sympy import Matrix, Rational, linear_eq_to_matrix, symbols

from f4desc.stabilizers.schemas import (
    J3,
    Mat3J,
    StabResult,
    StabSolution,
    identity_pair,
    matrix_to_text,
    to_rational,
)

logger = logging.getLogger("f4desc.stabilizers.f4a3")

_G = symbols("g11 g12 g13 g21 g22 g23 g31 g32 g33")
_H = symbols("ha hb hc hd")
UNKNOWNS = _G + _H


def _unknown_matrices() -> tuple[Matrix, Matrix]:
    g1 = Matrix(3, 3, _G)
    h1 = Matrix(2, 2, _H)
    return h1, g1


def equations(A: Mat3J, B: Mat3J, h1: Matrix, g1: Matrix) -> tuple[Matrix, Matrix]:
    """Left-hand sides of the two matrix equations."""
    a, b, c, d = h1[0, 0], h1[0, 1], h1[1, 0], h1[1, 1]
    ma, mb = A.matrix, B.matrix
    twisted = J3 * g1.T * J3
    eq_a = g1 * ma + ma * twisted + a * ma + b * mb
    eq_b = g1 * mb + mb * twisted + c * ma + d * mb
    return eq_a, eq_b


def system_matrix(A: Mat3J, B: Mat3J) -> Matrix:
    """18×13 coefficient matrix of the stabilizer system."""
    h1, g1 = _unknown_matrices()
    eq_a, eq_b = equations(A, B, h1, g1)
    exprs = list(eq_a) + list(eq_b)
    coeffs, _ = linear_eq_to_matrix(exprs, UNKNOWNS)
    return coeffs


def solves(A: Mat3J, B: Mat3J, h1: Matrix, g1: Matrix) -> bool:
    eq_a, eq_b = equations(A, B, h1, g1)
    return eq_a.is_zero_matrix and eq_b.is_zero_matrix


def f4a3_stab(A: Mat3J, B: Mat3J) -> StabResult:
    """Exact kernel of the stabilizer system for the pair (A, B)."""
    kernel = system_matrix(A, B).nullspace()
    basis = []
    for v in kernel:
        g1 = Matrix(3, 3, list(v[:9]))
        h1 = Matrix(2, 2, list(v[9:]))
        basis.append(StabSolution(h1=matrix_to_text(h1), g1=matrix_to_text(g1)))
    result = StabResult(dimension=len(kernel), basis=basis)
    h1, g1 = identity_pair()
    if not solves(A, B, h1, g1):
        raise ValueError("Trivial line (−2·I2, I3) fails the stabilizer system")
    if result.dimension == 1:
        result.notes.append("only the trivial line (−2t·I2, t·I3)")
    logger.debug("F4(a3) stabilizer of A=%s B=%s has dimension %d", A.r, B.r, result.dimension)
    return result


# ---------------------------------------------------------------------------
# One-parameter families and the discriminant
# ---------------------------------------------------------------------------


def pair_a(m, n) -> Mat3J:
    """A(m, n) = [[0, m, n], [0, 0, m], [1, 0, 0]]."""
    return Mat3J.of((1, 0, 0, 0, m, n))


def pair_b(z) -> Mat3J:
    """B(z) = [[1, 0, z], [0, 1, 0], [0, 0, 1]]."""
    return Mat3J.of((0, 0, 1, 1, 0, z))


def f4a3_discriminant(m, n, z) -> Rational:
    """f(m, n, z) = −27m⁴ + 18nm²z + 4m²z³ + 4n³ + n²z²."""
    m, n, z = (to_rational(x) for x in (m, n, z))
    return -27 * m**4 + 18 * n * m**2 * z + 4 * m**2 * z**3 + 4 * n**3 + n**2 * z**2


def f4a3_reduced_system(m, n, z) -> Matrix:
    """3×3 system left after eliminating all unknowns except (c1, c2, c4)."""
    m, n, z = (to_rational(x) for x in (m, n, z))
    return Matrix(
        [
            [-(2 * n + z**2), -3 * m, -z],
            [-m * z, -n, -3 * m],
            [3 * m**2 - n * z, 2 * m * z, -2 * n],
        ]
    )


# det(reduced system) = DISCRIMINANT_FACTOR · f(m, n, z)
DISCRIMINANT_FACTOR = Rational(-1)


@lru_cache(maxsize=1)
def discriminant_factor() -> Rational:
    """Ratio det/f fixed at (1, 0, 0) and checked on a sample grid."""
    factor = f4a3_reduced_system(1, 0, 0).det() / f4a3_discriminant(1, 0, 0)
    for m in range(-2, 3):
        for n in range(-2, 3):
            for z in range(-2, 3):
                det = f4a3_reduced_system(m, n, z).det()
                if det != factor * f4a3_discriminant(m, n, z):
                    raise ValueError(f"det/f is not constant at (m, n, z) = ({m}, {n}, {z})")
    if factor != DISCRIMINANT_FACTOR:
        raise ValueError(f"det/f = {factor}, expected {DISCRIMINANT_FACTOR}")
    return factor


def example_pair_nondegenerate(beta=1) -> tuple[Mat3J, Mat3J]:
    """A = [[0,1,0],[0,0,1],[β,0,0]], B = [[1,0,0],[1,0,0],[0,1,1]]."""
    return (
        Mat3J.from_matrix([[0, 1, 0], [0, 0, 1], [beta, 0, 0]]),
        Mat3J.from_matrix([[1, 0, 0], [1, 0, 0], [0, 1, 1]]),
    )


def example_pair_split(a=1) -> tuple[Mat3J, Mat3J]:
    """A = [[0,0,1],[0,1,0],[a,0,0]], B = [[0,0,0],[1,0,0],[0,1,0]]."""
    return (
        Mat3J.from_matrix([[0, 0, 1], [0, 1, 0], [a, 0, 0]]),
        Mat3J.from_matrix([[0, 0, 0], [1, 0, 0], [0, 1, 0]]),
    )


def act_levi(g: Matrix, A: Mat3J) -> Mat3J:
    """A ↦ g·A·J3·gᵗ·J3."""
    return Mat3J.from_matrix((g * A.matrix * J3 * g.T * J3).tolist())


def recombine(h: Matrix, A: Mat3J, B: Mat3J) -> tuple[Mat3J, Mat3J]:
    """(A, B) ↦ (aA + bB, cA + dB) for h = [[a, b], [c, d]]."""
    a, b, c, d = h[0, 0], h[0, 1], h[1, 0], h[1, 1]
    return (
        Mat3J.from_matrix((a * A.matrix + b * B.matrix).tolist()),
        Mat3J.from_matrix((c * A.matrix + d * B.matrix).tolist()),
    )
