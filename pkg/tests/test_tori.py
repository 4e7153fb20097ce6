from __future__ import annotations

import pytest

from f4desc.orbits.catalog import orbit_catalog
from f4desc.roots.system import CocharWeight, enumerate_positive_roots, pairing
from f4desc.roots.weyl import weyl_apply_cochar
from f4desc.tori.engine import compose, match_to_orbit, orbit_tori, sub_tori, sub_torus, torus_of_orbit
from f4desc.tori.symplectic import (
    SP4_GL2_REGULAR,
    parse_partition,
    sp_compose,
    sp_match,
    sp_orbit_dim,
    sp_partition_torus,
    symplectic_partitions,
)

ORBIT_TORI = {
    "A1": (2, 3, 2, 1),
    "Ã1": (2, 4, 3, 2),
    "A1+Ã1": (3, 6, 4, 2),
    "A2": (4, 6, 4, 2),
    "Ã2": (4, 8, 6, 4),
    "A2+Ã1": (4, 8, 6, 3),
    "B2": (6, 10, 7, 4),
    "Ã2+A1": (5, 10, 7, 4),
    "C3(a1)": (6, 11, 8, 4),
    "F4(a3)": (6, 12, 8, 4),
    "B3": (10, 18, 12, 6),
    "C3": (10, 19, 14, 8),
    "F4(a2)": (10, 20, 14, 8),
    "F4(a1)": (14, 26, 18, 10),
    "F4": (22, 42, 30, 16),
}


@pytest.mark.parametrize(("label", "expected"), sorted(ORBIT_TORI.items()))
def test_orbit_torus(label: str, expected: tuple[int, int, int, int]) -> None:
    assert torus_of_orbit(label).exponents == expected


def test_torus_pairs_to_level() -> None:
    for record in orbit_catalog():
        weight = torus_of_orbit(record.label)
        for root in enumerate_positive_roots():
            assert pairing(root, weight) == record.diagram.level(root)


def test_orbit_tori_cover_catalog() -> None:
    tori = orbit_tori()
    assert len(tori) == 16
    assert tori["0"].exponents == (0, 0, 0, 0)


def test_compose_adds_exponents() -> None:
    assert compose("10,19,14,8", "0,1,0,0").exponents == (10, 20, 14, 8)


def test_match_without_conjugation() -> None:
    match = match_to_orbit(compose(torus_of_orbit("C3"), sub_torus("C3", "(2)").weight))
    assert match is not None
    assert match.label == "F4(a2)"
    assert match.witness_word == "w[]"


def test_match_recovers_conjugated_torus() -> None:
    moved = weyl_apply_cochar("w[1234]", torus_of_orbit("B2"))
    match = match_to_orbit(moved)
    assert match is not None
    assert match.label == "B2"
    image = weyl_apply_cochar(match.witness_word, moved)
    assert image == torus_of_orbit("B2")


def test_match_fails_for_non_orbit_weight() -> None:
    assert match_to_orbit(CocharWeight.of("100,0,0,0")) is None


def test_sub_tori_centralize_character() -> None:
    for entry in sub_tori().values():
        assert entry.centralizes_character(), entry.key


def test_unknown_sub_torus() -> None:
    with pytest.raises(ValueError, match="No sub-torus"):
        sub_torus("C3", "(3)")


@pytest.mark.parametrize(
    ("size", "partition", "exponents", "dim"),
    [
        (4, "4", (3, 1, -1, -3), 8),
        (4, "22", (1, 1, -1, -1), 6),
        (4, "211", (1, 0, 0, -1), 4),
        (4, "1111", (0, 0, 0, 0), 0),
        (6, "6", (5, 3, 1, -1, -3, -5), 18),
        (6, "222", (1, 1, 1, -1, -1, -1), 12),
    ],
)
def test_symplectic_partition_tori(size: int, partition: str, exponents: tuple, dim: int) -> None:
    assert sp_partition_torus(size, partition).exponents == exponents
    assert sp_orbit_dim(size, partition) == dim


def test_symplectic_partitions_of_four() -> None:
    assert symplectic_partitions(4) == [(4,), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_parse_partition() -> None:
    assert parse_partition("4,2") == (4, 2)
    assert parse_partition("(211)") == (2, 1, 1)
    assert parse_partition([1, 2, 1]) == (2, 1, 1)


@pytest.mark.parametrize(("size", "partition"), [(4, "31"), (4, "3"), (5, "5"), (6, "321")])
def test_non_symplectic_partitions_rejected(size: int, partition: str) -> None:
    with pytest.raises(ValueError):
        sp_partition_torus(size, partition)


def test_sp4_composition_lands_on_22() -> None:
    composite = sp_compose(sp_partition_torus(4, "211").exponents, SP4_GL2_REGULAR)
    assert composite == (1, 1, -1, -1)
    match = sp_match(composite)
    assert match is not None
    assert match.partition == (2, 2)


def test_sp_match_rejects_non_symplectic_torus() -> None:
    with pytest.raises(ValueError):
        sp_match((1, 2, 3, 4))
