from __future__ import annotations

import random

import pytest
from sympy import Matrix, Rational, eye

from f4desc.stabilizers.f4a2 import example_character, f4a2_act, f4a2_stab_dim, random_character
from f4desc.stabilizers.f4a3 import (
    act_levi,
    discriminant_factor,
    example_pair_nondegenerate,
    example_pair_split,
    f4a3_discriminant,
    f4a3_reduced_system,
    f4a3_stab,
    pair_a,
    pair_b,
    recombine,
    solves,
    system_matrix,
)
from f4desc.stabilizers.schemas import F4a2Char, Mat3J, identity_pair, parse_rationals


def test_mat3j_layout() -> None:
    m = Mat3J.of([1, 2, 3, 4, 5, 6])
    assert m.matrix == Matrix([[4, 5, 6], [2, 3, 5], [1, 2, 4]])
    assert Mat3J.from_matrix(m.matrix.tolist()) == m


def test_mat3j_rejects_bad_input() -> None:
    with pytest.raises(ValueError):
        Mat3J.of([1, 2, 3, 4, 5])
    with pytest.raises(ValueError):
        Mat3J.from_matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]])


def test_parse_rationals() -> None:
    assert parse_rationals("1,0,1/2", 3) == [1, 0, Rational(1, 2)]
    with pytest.raises(ValueError):
        parse_rationals("1,2", 3)


def test_system_shape() -> None:
    assert system_matrix(*example_pair_split()).shape == (18, 13)


def test_trivial_line_solves_random_pairs() -> None:
    rng = random.Random(7)
    h1, g1 = identity_pair()
    for _ in range(20):
        a = Mat3J.of([rng.randint(-9, 9) for _ in range(6)])
        b = Mat3J.of([rng.randint(-9, 9) for _ in range(6)])
        assert solves(a, b, h1, g1)


def test_zero_pair_is_fixed_by_everything() -> None:
    assert f4a3_stab(Mat3J.zero(), Mat3J.zero()).dimension == 13


@pytest.mark.parametrize("pair", [example_pair_nondegenerate(), example_pair_split()])
def test_example_pairs_have_one_dimensional_stabilizer(pair) -> None:
    result = f4a3_stab(*pair)
    assert result.dimension == 1
    assert len(result.basis) == 1
    assert result.notes


def test_stabilizer_dimension_is_levi_invariant() -> None:
    g = Matrix([[1, 2, 0], [0, 1, 0], [3, 0, 1]])
    a, b = example_pair_nondegenerate()
    assert f4a3_stab(act_levi(g, a), act_levi(g, b)).dimension == 1
    assert act_levi(eye(3), a) == a


def test_discriminant_value() -> None:
    assert f4a3_discriminant(1, 0, 0) == -27
    assert f4a3_discriminant(0, 0, 0) == 0


def test_determinant_is_minus_discriminant() -> None:
    assert discriminant_factor() == -1
    for m, n, z in [(1, 2, 3), (Rational(1, 2), -1, 2), (2, 0, -1)]:
        assert f4a3_reduced_system(m, n, z).det() == -f4a3_discriminant(m, n, z)


def test_discriminant_detects_larger_stabilizer() -> None:
    assert f4a3_stab(pair_a(1, 0), pair_b(0)).dimension == 1
    assert f4a3_stab(pair_a(0, 0), pair_b(0)).dimension > 1


@pytest.mark.slow
def test_discriminant_matches_kernel_on_grid() -> None:
    for m in range(-2, 3):
        for n in range(-2, 3):
            for z in range(-2, 3):
                generic = f4a3_discriminant(m, n, z) != 0
                assert generic == (f4a3_stab(pair_a(m, n), pair_b(z)).dimension == 1), (m, n, z)


def test_f4a2_character_projection() -> None:
    chi = F4a2Char.from_matrix([[1, 2], [3, 4], [5, 7], [6, -1]], gamma=(1, 0))
    assert chi.a == (4, 2, 2, 4, 5, 6)
    assert chi.matrix[2, 1] == chi.matrix[0, 0]
    assert chi.matrix[3, 1] == -chi.matrix[1, 0]


def test_f4a2_example_has_finite_stabilizer() -> None:
    result = f4a2_stab_dim(example_character())
    assert result.dimension == 0
    assert result.rank == 8


def test_f4a2_zero_character() -> None:
    assert f4a2_stab_dim(F4a2Char.of([0] * 8)).dimension == 8


def test_f4a2_actions_keep_shape() -> None:
    chi = example_character()
    moved = f4a2_act("torus", [2, 3, Rational(1, 2), 5], chi)
    assert f4a2_stab_dim(moved).dimension == 0
    lifted = f4a2_act("sl2", [1, 2, 0, 1], chi)
    assert f4a2_stab_dim(lifted).dimension == 0


def test_f4a2_action_validation() -> None:
    chi = example_character()
    with pytest.raises(ValueError):
        f4a2_act("sl2", [1, 1, 1, 1], chi)
    with pytest.raises(ValueError):
        f4a2_act("torus", [1, 0, 1, 1], chi)


def test_random_character_is_exact() -> None:
    chi = random_character(random.Random(3))
    assert len(chi.coords) == 8
    assert all(isinstance(c, Rational) for c in chi.coords)


def test_random_characters_are_generic() -> None:
    rng = random.Random(20240601)
    dims = [f4a2_stab_dim(random_character(rng)).dimension for _ in range(100)]
    assert sum(1 for d in dims if d == 0) >= 95


@pytest.mark.parametrize(
    "h",
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[2, 1], [1, 1]],
        [[1, -3], [2, Rational(1, 2)]],
    ],
)
def test_stabilizer_invariant_under_recombination(h: list[list]) -> None:
    g = Matrix(h)
    assert g.det() != 0
    for a, b in (example_pair_nondegenerate(), example_pair_split(), (pair_a(1, 2), pair_b(0))):
        before = f4a3_stab(a, b).dimension
        assert f4a3_stab(*recombine(g, a, b)).dimension == before
