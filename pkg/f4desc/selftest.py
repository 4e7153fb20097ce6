"""Acceptance suite: every printed number and every property check, in one run.

Each check returns a ``CheckResult``; a check that raises is recorded as a
failure with the exception text, never propagated. Randomized checks draw from
``random.Random(settings.random_seed)`` so runs are reproducible.
"""

from __future__ import annotations

import logging
import random
import time
from typing import Callable, Optional

from pydantic import BaseModel, Field
from sympy import Rational

from f4desc.chevalley.adjoint import DIM, commutator_formula, jacobi_defect, torus, unip
from f4desc.chevalley.constants import string_below, structure_constants
from f4desc.config import settings
from f4desc.descent.dimensions import (
    check_dim_equation,
    descent_table,
    pair_feasibility,
    worked_dim_cases,
)
from f4desc.descent.identities import verify_composition
from f4desc.exchange.loader import list_fixtures, replay_fixture
from f4desc.orbits.catalog import get_orbit, orbit_catalog
from f4desc.roots.classical import classical_weyl_group, positive_root_count
from f4desc.roots.system import all_coeffs, format_coeffs
from f4desc.roots.weyl import f4_weyl_group
from f4desc.stabilizers.f4a2 import example_character, f4a2_stab_dim, random_character
from f4desc.stabilizers.f4a3 import (
    discriminant_factor,
    example_pair_nondegenerate,
    example_pair_split,
    f4a3_discriminant,
    f4a3_stab,
    pair_a,
    pair_b,
    solves,
)
from f4desc.stabilizers.schemas import Mat3J, identity_pair
from f4desc.tori.engine import torus_of_orbit
from f4desc.tori.symplectic import sp_partition_torus

logger = logging.getLogger("f4desc.selftest")


class CheckResult(BaseModel):
    criterion: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


class SelftestReport(BaseModel):
    is_valid: bool = True
    seed: int
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


# ── Reference values ──────────────────────────────────────────────────────

EXPECTED_TORI: dict[str, tuple[int, int, int, int]] = {
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

EXPECTED_HALF_DIMS: dict[str, int] = {
    "C3": 21,
    "B3": 21,
    "C3(a1)": 19,
    "Ã2+A1": 18,
    "B2": 18,
    "A2+Ã1": 17,
    "Ã2": 15,
    "A2": 15,
    "A1+Ã1": 14,
    "Ã1": 11,
    "A1": 8,
}

# (orbit, level, roots) with exact set equality
EXPECTED_LEVELS: list[tuple[str, int, set[str]]] = [
    ("B2", 1, {"0001", "0011", "0111", "0121"}),
    ("B2", 2, {"1000", "1100", "1110", "1120", "1220", "0122"}),
    ("B2", 3, {"1111", "1121", "1221", "1231"}),
    ("B2", 4, {"1122", "1222", "1232", "1242", "1342"}),
    ("B2", 6, {"2342"}),
    ("B3", 2, {"1000", "0100", "0110", "0120", "0111", "0121", "0122"}),
    ("F4(a1)", 2, {"1000", "0100", "0110", "0120", "0001", "0011"}),
    ("Ã2+A1", 2, {"0111", "1111", "0121", "1121", "1220"}),
    ("C3(a1)", 1, {"1000", "0010", "1100", "0110", "0011", "0111"}),
    ("C3(a1)", 2, {"1110", "0120", "1111", "0121", "0122"}),
    ("F4(a2)", 2, {"0100", "1100", "0110", "1110", "0120", "1120", "0001", "0011"}),
    (
        "F4(a3)",
        2,
        {"0100", "1100", "0110", "1110", "0120", "0111", "1120", "1111", "0121", "1121", "0122", "1122"},
    ),
    ("A2+Ã1", 2, {"0120", "1120", "0121", "1220", "1121", "0122", "1221", "1122", "1222"}),
    ("Ã1", 1, {"0001", "0011", "0111", "1111", "0121", "1121", "1221", "1231"}),
    ("Ã1", 2, {"0122", "1122", "1222", "1232", "1242", "1342", "2342"}),
    ("A1+Ã1", 2, {"1220", "1221", "1222", "1231", "1232", "1242"}),
]

F4_IDENTITIES = ["c3-2", "b3-3", "c3a1-2", "b2-2x2", "a2a1t-2", "a2t-g2", "a2t-g2a1"]

# (α, β) → {root: |coefficient|}
COMMUTATOR_FIXTURES: list[tuple[str, str, dict[str, int]]] = [
    ("1110", "0010", {"1120": 2}),
    ("0110", "0010", {"0120": 2}),
    ("1100", "0010", {"1110": 1, "1120": 1}),
    ("0100", "0010", {"0110": 1, "0120": 1}),
    ("-1100", "1221", {"0121": 1, "1342": 1}),
]

EXPECTED_PAIRS: dict[str, tuple[list[int], list[int], list[int]]] = {
    # pair: (forward feasible, reverse feasible, reverse infeasible)
    "SL3/SL3": ([8], [], []),
    "SL2xSL2/Sp4": ([8], [8], [9, 7]),
    "SL2/SL4": ([8], [], [10]),
    "SO3/G2": ([8], [], [10, 9]),
    "SL2/Sp6": ([11, 8], [15, 14], [13]),
}

SP_TORI: list[tuple[int, str, tuple[int, ...]]] = [
    (4, "4", (3, 1, -1, -3)),
    (4, "22", (1, 1, -1, -1)),
    (4, "211", (1, 0, 0, -1)),
]


# ── Checks ────────────────────────────────────────────────────────────────


def _check_tori(_rng: random.Random) -> str:
    for label, expected in EXPECTED_TORI.items():
        got = torus_of_orbit(label).exponents
        if got != expected:
            raise AssertionError(f"torus of {label} is {got}, expected {expected}")
    return f"{len(EXPECTED_TORI)} tori, closed form = linear solve"


def _check_dimensions(_rng: random.Random) -> str:
    for label, expected in EXPECTED_HALF_DIMS.items():
        if get_orbit(label).half_dim != expected:
            raise AssertionError(f"half-dim of {label} is {get_orbit(label).half_dim}, expected {expected}")
    for record in orbit_catalog().nontrivial():
        if record.grading.half_dim != record.half_dim:
            raise AssertionError(f"grading half-dim of {record.label} is {record.grading.half_dim}")
    return f"{len(orbit_catalog().nontrivial())} orbits"


def _check_gradings(_rng: random.Random) -> str:
    for label, level, expected in EXPECTED_LEVELS:
        got = {str(r) for r in get_orbit(label).grading.level(level)}
        if got != expected:
            raise AssertionError(f"{label} level {level}: {sorted(got ^ expected)} differ")
    a2a1 = get_orbit("A2+Ã1").grading
    if len(a2a1.at_least(2)) != 14:
        raise AssertionError(f"dim U(2) of A2+Ã1 is {len(a2a1.at_least(2))}")
    return f"{len(EXPECTED_LEVELS)} level sets"


def _check_identities(_rng: random.Random) -> str:
    for name in F4_IDENTITIES:
        report = verify_composition(name)
        if not report.is_valid or report.witness is None:
            raise AssertionError(f"{name}: {'; '.join(report.errors) or 'no witness'}")
    return f"{len(F4_IDENTITIES)} identities over {len(f4_weyl_group())} Weyl elements"


def _check_chevalley(rng: random.Random) -> str:
    order = len(f4_weyl_group())
    if order != 1152:
        raise AssertionError(f"Weyl group has {order} elements")
    table = structure_constants()
    roots = all_coeffs()
    for a in roots:
        for b in roots:
            n = table.n(a, b)
            if n and abs(n) != string_below(a, b) + 1:
                raise AssertionError(f"|N({format_coeffs(a)}, {format_coeffs(b)})| = {abs(n)}")
    for _ in range(settings.jacobi_samples):
        x, y, z = (rng.randrange(DIM) for _ in range(3))
        defect = jacobi_defect(x, y, z)
        if defect:
            raise AssertionError(f"Jacobi fails on basis triple ({x}, {y}, {z}): {defect}")
    t = 2
    checked = 0
    for record in orbit_catalog().nontrivial():
        r = torus_of_orbit(record.label).exponents
        h = torus(*(Rational(t) ** k for k in r))
        h_inv = h.inverse()
        for level, level_roots in record.grading.levels.items():
            if level < 1:
                continue
            for root in level_roots:
                if h * unip(root.coeffs, 1) * h_inv != unip(root.coeffs, Rational(t) ** level):
                    raise AssertionError(f"h_{record.label} scales {root} by a wrong power")
                checked += 1
    return f"|W|=1152, {settings.jacobi_samples} Jacobi triples, {checked} torus eigenvalues"


def _check_commutators(_rng: random.Random) -> str:
    for alpha, beta, expected in COMMUTATOR_FIXTURES:
        got = {t.root: abs(t.coefficient) for t in commutator_formula(alpha, beta).terms}
        if got != expected:
            raise AssertionError(f"[x_{alpha}, x_{beta}] gives {got}, expected {expected}")
    return f"{len(COMMUTATOR_FIXTURES)} relations"


def _check_stabilizers(rng: random.Random) -> str:
    h1, g1 = identity_pair()
    for _ in range(settings.generic_samples):
        a = Mat3J.of([rng.randint(-9, 9) for _ in range(6)])
        b = Mat3J.of([rng.randint(-9, 9) for _ in range(6)])
        if not solves(a, b, h1, g1):
            raise AssertionError(f"trivial line fails for A={a.r} B={b.r}")
    for name, (a, b) in (
        ("nondegenerate", example_pair_nondegenerate()),
        ("split", example_pair_split()),
    ):
        dim = f4a3_stab(a, b).dimension
        if dim != 1:
            raise AssertionError(f"{name} example pair has stabilizer dimension {dim}")
    for m in range(-2, 3):
        for n in range(-2, 3):
            for z in range(-2, 3):
                dim = f4a3_stab(pair_a(m, n), pair_b(z)).dimension
                if (f4a3_discriminant(m, n, z) != 0) != (dim == 1):
                    raise AssertionError(f"discriminant and kernel disagree at ({m}, {n}, {z})")
    if f4a3_discriminant(1, 0, 0) != -27:
        raise AssertionError("f(1, 0, 0) ≠ −27")
    discriminant_factor()
    if f4a2_stab_dim(example_character()).dimension != 0:
        raise AssertionError("F4(a2) example character has a positive-dimensional stabilizer")
    samples = settings.generic_samples
    generic = sum(1 for _ in range(samples) if f4a2_stab_dim(random_character(rng)).dimension == 0)
    if generic * 100 < 95 * samples:
        raise AssertionError(f"only {generic}/{samples} random F4(a2) characters have a finite stabilizer")
    return f"{samples} random pairs, 125-point grid, {generic}/{samples} generic F4(a2) characters"


def _check_dim_equations(_rng: random.Random) -> str:
    for case in worked_dim_cases():
        if not check_dim_equation(case):
            raise AssertionError(f"dimension equation fails: {case.description}")
    for pair, (forward, reverse, infeasible) in EXPECTED_PAIRS.items():
        report = pair_feasibility(pair)
        if report.feasible_dims("forward") != forward:
            raise AssertionError(f"{pair} forward: {report.feasible_dims('forward')}")
        if report.feasible_dims("reverse") != reverse:
            raise AssertionError(f"{pair} reverse: {report.feasible_dims('reverse')}")
        if report.infeasible_dims("reverse") != infeasible:
            raise AssertionError(f"{pair} reverse infeasible: {report.infeasible_dims('reverse')}")
    rejected = [(r.orbit, r.tag) for r in descent_table() if not r.feasible]
    if rejected != [("A1+Ã1", "(2|2)"), ("A1", "(42)")]:
        raise AssertionError(f"descent table rejects {rejected}")
    return f"{len(worked_dim_cases())} cases, {len(EXPECTED_PAIRS)} pairs, {len(descent_table())} rows"


def _check_symplectic(_rng: random.Random) -> str:
    for size, partition, expected in SP_TORI:
        got = sp_partition_torus(size, partition).exponents
        if got != expected:
            raise AssertionError(f"Sp{size} torus of ({partition}) is {got}")
    sp4 = verify_composition("sp4-21sq-2")
    if not sp4.is_valid or "no conjugation needed" not in sp4.notes:
        raise AssertionError(f"(21²)∘(2): {sp4.errors or sp4.notes}")
    sp6 = verify_composition("sp6-2cubed-3")
    if not sp6.is_valid or sp6.composite != str((3, 1, -1, 1, -1, -3)):
        raise AssertionError(f"(2³)∘(3): {sp6.errors or sp6.composite}")
    if len(classical_weyl_group("C", 3)) != 48 or positive_root_count("C", 3) != 9:
        raise AssertionError("C3 Weyl group or positive roots wrong")
    return "Sp4 and Sp6 tori, C3 Weyl order 48"


def _check_exchange(_rng: random.Random) -> str:
    names = list_fixtures()
    for name in names:
        result = replay_fixture(name)
        if not result.completed:
            raise AssertionError(f"{name}: {result.diagnostic}")
    return f"{len(names)} fixtures replayed"


CHECKS: list[tuple[int, str, Callable[[random.Random], str]]] = [
    (1, "torus table", _check_tori),
    (2, "dimension table", _check_dimensions),
    (3, "gradings", _check_gradings),
    (4, "composition identities", _check_identities),
    (5, "chevalley engine", _check_chevalley),
    (6, "commutator relations", _check_commutators),
    (7, "stabilizers", _check_stabilizers),
    (8, "dimension equations", _check_dim_equations),
    (9, "symplectic cross-checks", _check_symplectic),
    (10, "exchange fixtures", _check_exchange),
]


def run_selftest(only: Optional[list[int]] = None, seed: Optional[int] = None) -> SelftestReport:
    """Run the acceptance checks (all, or the listed criterion numbers)."""
    seed = settings.random_seed if seed is None else seed
    report = SelftestReport(seed=seed)
    for criterion, name, check in CHECKS:
        if only and criterion not in only:
            continue
        rng = random.Random(seed + criterion)
        started = time.perf_counter()
        try:
            detail = check(rng)
            passed = True
        except AssertionError as exc:
            detail, passed = str(exc), False
        except Exception as exc:
            logger.exception("Check %d (%s) raised", criterion, name)
            detail, passed = f"{type(exc).__name__}: {exc}", False
        elapsed = round(time.perf_counter() - started, 3)
        report.checks.append(
            CheckResult(criterion=criterion, name=name, passed=passed, detail=detail, seconds=elapsed)
        )
        logger.info("Check %d %s: %s (%.3fs)", criterion, name, "ok" if passed else "FAILED", elapsed)
        if not passed:
            report.is_valid = False
    return report
