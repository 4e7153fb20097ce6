from __future__ import annotations

import pytest

from f4desc.orbits.catalog import (
    HASSE_COVERS,
    closure_leq,
    get_orbit,
    half_dim,
    orbit_catalog,
    orbits_with_half_dim,
)
from f4desc.orbits.grading import Diagram, g_value, grading, levi_roots


def test_catalog_size() -> None:
    assert len(list(orbit_catalog())) == 16
    assert len(orbit_catalog().nontrivial()) == 15


@pytest.mark.parametrize(
    ("label", "expected"),
    [
        ("C3", 21),
        ("B3", 21),
        ("C3(a1)", 19),
        ("Ã2+A1", 18),
        ("B2", 18),
        ("A2+Ã1", 17),
        ("Ã2", 15),
        ("A2", 15),
        ("A1+Ã1", 14),
        ("Ã1", 11),
        ("A1", 8),
        ("F4", 24),
    ],
)
def test_half_dimensions(label: str, expected: int) -> None:
    record = get_orbit(label)
    assert record.half_dim == expected
    assert record.grading.half_dim == expected
    assert record.dim == 2 * expected


@pytest.mark.parametrize("text", ["Ã2+A1", "A2t+A1", "a~2 + a1", "Ã2 + A1"])
def test_label_aliases(text: str) -> None:
    assert get_orbit(text).label == "Ã2+A1"


def test_unknown_label() -> None:
    with pytest.raises(ValueError, match="Unknown orbit label"):
        get_orbit("E8")


def test_orbits_by_half_dimension() -> None:
    assert {r.label for r in orbits_with_half_dim(15)} == {"A2", "Ã2"}
    assert {r.label for r in orbits_with_half_dim(21)} == {"B3", "C3"}
    assert orbits_with_half_dim(16) == []
    with pytest.raises(ValueError):
        orbits_with_half_dim(-1)


def test_half_dim_from_diagram() -> None:
    assert half_dim("2001") == 18
    assert half_dim("B2") == 18
    with pytest.raises(ValueError):
        half_dim("1111")


def test_b2_grading() -> None:
    levels = grading("2001").as_text()
    assert set(levels[1]) == {"0001", "0011", "0111", "0121"}
    assert set(levels[6]) == {"2342"}
    assert sorted(levels) == [1, 2, 3, 4, 6]


def test_a2_a1t_unipotent_radical() -> None:
    g = get_orbit("A2+Ã1").grading
    assert len(g.at_least(2)) == 14
    assert len(g.level(2)) == 9


def test_a1t_grading_levels() -> None:
    g = get_orbit("Ã1").grading
    assert sorted(g.counts) == [1, 2]
    assert {str(r) for r in g.level(1)} == {
        "0001", "0011", "0111", "1111", "0121", "1121", "1221", "1231",
    }
    assert {str(r) for r in g.level(2)} == {"0122", "1122", "1222", "1232", "1242", "1342", "2342"}
    assert g.half_dim == 11


def test_gradings_are_additive() -> None:
    for record in orbit_catalog().nontrivial():
        assert record.grading.is_additive(), record.label


def test_g_value_needs_positive_root() -> None:
    assert g_value("2001", "2342") == 6
    with pytest.raises(ValueError):
        g_value("2001", "-1000")


def test_diagram_labels_validated() -> None:
    with pytest.raises(ValueError):
        Diagram.of("3000")
    with pytest.raises(ValueError):
        Diagram.of("20")


def test_levi_roots() -> None:
    assert levi_roots("2222") == []
    # Levi of the A1 parabolic is of type C3
    assert len(levi_roots("1000")) == 9
    assert Diagram.of("1012").delta == (2,)


def test_closure_order() -> None:
    assert closure_leq("0", "F4")
    assert closure_leq("A2", "F4(a3)")
    assert closure_leq("Ã2", "C3(a1)")
    assert closure_leq("B2", "B2")
    assert not closure_leq("F4", "A1")
    assert not closure_leq("A2", "Ã2")
    assert not closure_leq("B3", "C3")


def test_covers_increase_dimension() -> None:
    for low, high in HASSE_COVERS:
        assert get_orbit(low).half_dim < get_orbit(high).half_dim
