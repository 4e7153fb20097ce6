from __future__ import annotations

import itertools
import random

import pytest
from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from f4desc.chevalley.adjoint import (
    DIM,
    AdjointElement,
    commutator_formula,
    from_normal_form,
    group_commutator,
    jacobi_defect,
    normal_form,
    product,
    root_space_image,
    torus,
    torus_character,
    unip,
    weyl_rep,
)
from f4desc.chevalley.constants import string_below, structure_constant, structure_constants
from f4desc.roots.system import all_coeffs, format_coeffs, negate, positive_coeffs, reflect


def test_dimension() -> None:
    assert DIM == 52


def test_constants_are_antisymmetric() -> None:
    table = structure_constants()
    for a in all_coeffs():
        for b in all_coeffs():
            assert table.n(a, b) == -table.n(b, a)


def test_constant_magnitude_is_string_length() -> None:
    table = structure_constants()
    for a in all_coeffs():
        for b in all_coeffs():
            n = table.n(a, b)
            if n:
                assert abs(n) == string_below(a, b) + 1


def test_structure_constant_of_non_root_sum_is_zero() -> None:
    assert structure_constant("1000", "0010") == 0
    assert abs(structure_constant("1000", "0100")) == 1
    assert abs(structure_constant("0110", "0010")) == 2


def test_entries_only_list_nonzero_constants() -> None:
    entries = structure_constants().entries()
    assert entries
    assert all(e.n != 0 for e in entries)
    assert all(type(e.n) is int for e in entries)
    assert all(type(t.coefficient) is int for t in commutator_formula("0100", "0010").terms)


def test_jacobi_on_sampled_triples() -> None:
    for x, y, z in [(0, 1, 2), (5, 17, 30), (12, 23, 47), (48, 3, 44), (10, 20, 51)]:
        assert jacobi_defect(x, y, z) == {}


@pytest.mark.slow
def test_jacobi_on_every_basis_triple() -> None:
    for x, y, z in itertools.combinations(range(DIM), 3):
        assert jacobi_defect(x, y, z) == {}, (x, y, z)


def test_unip_is_additive() -> None:
    assert unip("1110", 2) * unip("1110", 3) == unip("1110", 5)
    assert unip("-0121", Rational(1, 2)) * unip("-0121", Rational(-1, 2)) == AdjointElement.identity()


def test_torus_scales_root_elements() -> None:
    params = (2, 3, Rational(1, 2), 5)
    h = torus(*params)
    for root in ["1000", "0011", "1231", "-0120"]:
        expected = unip(root, torus_character(root, params))
        assert h * unip(root, 1) * h.inverse() == expected


def test_torus_rejects_zero_parameter() -> None:
    with pytest.raises(ValueError):
        torus(1, 0, 1, 1)


def test_weyl_representative_moves_root_space() -> None:
    image = root_space_image(weyl_rep(1), "0100")
    assert list(image) == ["1100"]
    assert abs(image["1100"]) == 1


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_weyl_representative_square_is_a_sign(i: int) -> None:
    square = weyl_rep(i) * weyl_rep(i)
    entries = {
        (r, c): v for r, row in square.matrix.to_dod().items() for c, v in row.items() if v != 0
    }
    assert len(entries) == DIM
    assert all(r == c and v in (1, -1) for (r, c), v in entries.items())
    assert (square * square).is_identity()


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_weyl_representative_permutes_root_spaces(i: int) -> None:
    w = weyl_rep(i)
    for c in all_coeffs():
        image = root_space_image(w, c)
        assert list(image) == [str(reflect(format_coeffs(c), i))]
        assert abs(image[str(reflect(format_coeffs(c), i))]) == 1


def test_weyl_representatives_on_0100() -> None:
    assert list(root_space_image(weyl_rep(3), "0100")) == ["0120"]
    assert root_space_image(weyl_rep(4), "0100") == {"0100": 1}


@pytest.mark.parametrize(
    ("alpha", "beta", "expected"),
    [
        ("1110", "0010", {"1120": 2}),
        ("0110", "0010", {"0120": 2}),
        ("1100", "0010", {"1110": 1, "1120": 1}),
        ("0100", "0010", {"0110": 1, "0120": 1}),
        ("-1100", "1221", {"0121": 1, "1342": 1}),
    ],
)
def test_commutator_terms(alpha: str, beta: str, expected: dict[str, int]) -> None:
    terms = commutator_formula(alpha, beta).terms
    assert {t.root: abs(t.coefficient) for t in terms} == expected


@pytest.mark.parametrize(("alpha", "beta"), [("1000", "0100"), ("0100", "0010"), ("1110", "0010")])
def test_commutator_formula_matches_matrices(alpha: str, beta: str) -> None:
    r, s = Rational(3), Rational(-2)
    expansion = commutator_formula(alpha, beta)
    assert expansion.evaluate(r, s) == group_commutator(unip(beta, s), unip(alpha, r))


@pytest.mark.slow
def test_commutator_formula_matches_matrices_on_every_pair() -> None:
    r, s = Rational(3), Rational(-2)
    for a in all_coeffs():
        for b in all_coeffs():
            if a == b or a == negate(b):
                continue
            alpha, beta = format_coeffs(a), format_coeffs(b)
            expansion = commutator_formula(alpha, beta)
            assert expansion.evaluate(r, s) == group_commutator(unip(beta, s), unip(alpha, r)), (alpha, beta)


def test_root_elements_are_faithful_and_unipotent() -> None:
    eye = DomainMatrix.eye(DIM, QQ).to_sparse()
    for c in all_coeffs():
        u = unip(c, 1)
        assert not u.is_identity(), format_coeffs(c)
        n = u.matrix.sub(eye)
        assert n.matmul(n).matmul(n).to_Matrix().is_zero_matrix, format_coeffs(c)


def test_commuting_roots_have_trivial_commutator() -> None:
    assert commutator_formula("1000", "0010").terms == []
    assert group_commutator(unip("0010", 1), unip("1000", 1)).is_identity()


def test_commutator_rejects_opposite_roots() -> None:
    with pytest.raises(ValueError):
        commutator_formula("1100", "-1100")


def test_normal_form_recovers_coefficients() -> None:
    g = from_normal_form([("1000", 2), ("0010", -1), ("1120", Rational(1, 3))])
    coefficients = {str(root): t for root, t in normal_form(g) if t != 0}
    assert coefficients == {"1000": 2, "0010": -1, "1120": Rational(1, 3)}


def test_normal_form_rejects_torus_elements() -> None:
    with pytest.raises(ValueError):
        normal_form(torus(2, 1, 1, 1))


def test_normal_form_of_random_products() -> None:
    rng = random.Random(11)
    positives = list(positive_coeffs())
    for _ in range(4):
        roots = rng.sample(positives, 5)
        factors = [unip(c, Rational(rng.randint(-4, 4) or 1, rng.randint(1, 3))) for c in roots]
        g = product(factors)
        coefficients = normal_form(g)
        assert [r.coeffs for r, _ in coefficients] == positives
        assert from_normal_form(coefficients) == g
