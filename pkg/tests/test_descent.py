from __future__ import annotations

import pytest

from f4desc.descent.dimensions import (
    DimCase,
    all_pair_reports,
    check_dim_equation,
    descent_row,
    descent_table,
    get_pair,
    gl_descent_case,
    pair_feasibility,
    so_sp_case,
    worked_dim_cases,
)
from f4desc.descent.identities import composition_identities, get_identity, verify_all, verify_composition


# ── dimension equation ────────────────────────────────────────────────────


def test_worked_cases_balance() -> None:
    cases = worked_dim_cases()
    assert len(cases) == 4
    assert all(check_dim_equation(c) for c in cases)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_families_balance_for_every_rank(n: int) -> None:
    assert check_dim_equation(so_sp_case(n))
    assert check_dim_equation(gl_descent_case(n))


def test_unbalanced_case_detected() -> None:
    case = DimCase(dim_pi=3, dim_theta=11, dim_h=8, dim_v=0, dim_sigma=5)
    assert case.lhs == 14
    assert case.rhs == 13
    assert not check_dim_equation(case)


def test_negative_dimensions_rejected() -> None:
    with pytest.raises(ValueError):
        DimCase(dim_pi=-1, dim_theta=0, dim_h=0, dim_v=0, dim_sigma=0)
    with pytest.raises(ValueError):
        so_sp_case(0)


# ── commuting pairs ───────────────────────────────────────────────────────


@pytest.mark.parametrize(
    ("pair", "forward", "reverse", "reverse_infeasible"),
    [
        ("SL3/SL3", [8], [], []),
        ("SL2xSL2/Sp4", [8], [8], [9, 7]),
        ("SL2/SL4", [8], [], [10]),
        ("SO3/G2", [8], [], [10, 9]),
        ("SL2/Sp6", [11, 8], [15, 14], [13]),
    ],
)
def test_pair_feasibility(pair: str, forward: list[int], reverse: list[int], reverse_infeasible: list[int]) -> None:
    report = pair_feasibility(pair)
    assert report.feasible_dims("forward") == forward
    assert report.feasible_dims("reverse") == reverse
    assert report.infeasible_dims("reverse") == reverse_infeasible


def test_sl2_sp6_reverse_lands_on_a2_orbits() -> None:
    report = pair_feasibility("SL2/Sp6")
    by_dim = {o.dim_e: o.orbits for o in report.reverse}
    assert set(by_dim[15]) == {"A2", "Ã2"}
    assert by_dim[14] == ["A1+Ã1"]
    assert by_dim[13] == []


@pytest.mark.parametrize("name", ["(SL2×SL2, Sp4)", "sl2xsl2/sp4", "SL2xSL2 / Sp4"])
def test_pair_name_normalization(name: str) -> None:
    assert get_pair(name).key == "sl2xsl2-sp4"


def test_unknown_pair() -> None:
    with pytest.raises(ValueError, match="Unknown commuting pair"):
        get_pair("SL5/E6")


def test_all_pairs_reported() -> None:
    assert [r.pair for r in all_pair_reports()] == [
        "SL3/SL3",
        "SL2×SL2/Sp4",
        "SL2/SL4",
        "SO3/G2",
        "SL2/Sp6",
    ]


# ── descent table ─────────────────────────────────────────────────────────


def test_descent_table_rejections() -> None:
    rows = descent_table()
    assert len(rows) == 14
    assert [(r.orbit, r.tag) for r in rows if not r.feasible] == [("A1+Ã1", "(2|2)"), ("A1", "(42)")]


def test_descent_rows_satisfy_half_dim_sum() -> None:
    for row in descent_table():
        assert row.dim_e == row.half_dim + row.dim_sigma


@pytest.mark.parametrize(
    ("orbit", "tag", "dim_e", "orbits"),
    [
        ("C3", "(2)", 22, ["F4(a2)"]),
        ("Ã2", "G2", 21, ["B3", "C3"]),
        ("A1", "(6)", 17, ["A2+Ã1"]),
        ("A1", "(2³)", 14, ["A1+Ã1"]),
    ],
)
def test_descent_row_lookup(orbit: str, tag: str, dim_e: int, orbits: list[str]) -> None:
    row = descent_row(orbit, tag)
    assert row is not None
    assert row.dim_e == dim_e
    assert sorted(row.orbits) == sorted(orbits)


def test_missing_descent_row() -> None:
    assert descent_row("F4", "(2)") is None


# ── composition identities ────────────────────────────────────────────────


@pytest.mark.parametrize(
    ("name", "leading"),
    [
        ("c3-2", "F4(a2)"),
        ("b3-3", "F4(a2)"),
        ("c3a1-2", "F4(a3)"),
        ("b2-2x2", "F4(a3)"),
        ("a2a1t-2", "F4(a3)"),
        ("a2t-g2", "F4(a2)"),
        ("a2t-g2a1", "F4(a3)"),
    ],
)
def test_f4_identities_verify(name: str, leading: str) -> None:
    report = verify_composition(name)
    assert report.is_valid, report.errors
    assert report.matched == leading
    assert report.witness is not None


def test_balanced_identity_has_no_warnings() -> None:
    report = verify_composition("c3-2")
    assert report.half_dim_gap == 0
    assert report.warnings == []
    assert report.composite == "(10,20,14,8)"


def test_sp4_identity_needs_no_conjugation() -> None:
    report = verify_composition("sp4-21sq-2")
    assert report.is_valid
    assert report.matched == "(22)"
    assert "no conjugation needed" in report.notes
    assert report.half_dim_gap == 0


def test_sp6_identity_matches_42() -> None:
    report = verify_composition("sp6-2cubed-3")
    assert report.is_valid
    assert report.matched == "(42)"
    assert report.composite == str((3, 1, -1, 1, -1, -3))


def test_unchecked_identity_is_only_reported() -> None:
    report = verify_composition("sp4-21sq-2-degenerate")
    assert report.is_valid
    assert report.matched is None
    assert "stored as data only; not machine-verified" in report.warnings


def test_identity_lookup() -> None:
    assert get_identity("c3-2").leading == "F4(a2)"
    assert get_identity("c3-2").equation() == "C3 ∘ (2) = F4(a2)"
    with pytest.raises(ValueError):
        get_identity("e8-1")


def test_verify_all_covers_registry() -> None:
    reports = verify_all()
    assert [r.name for r in reports] == list(composition_identities())
    assert all(r.is_valid for r in reports)
