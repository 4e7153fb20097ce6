"""Registry of composition identities O_G(E) ∘ O_H = Σ O_i + Σ CT and their torus check.

Only the leading orbit of each right-hand side is machine-verified: the torus
of the host orbit times the embedded torus of the stabilizer orbit must be
Weyl-conjugate to the torus of the leading orbit. Remaining summands come from
Fourier expansions and are stored as data.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from f4desc.descent.dimensions import descent_row
from f4desc.orbits.catalog import get_orbit
from f4desc.tori.engine import compose, match_to_orbit, sub_torus, torus_of_orbit
from f4desc.tori.symplectic import (
    SP4_GL2_REGULAR,
    SP6_SO3_REGULAR,
    parse_partition,
    sp_compose,
    sp_match,
    sp_orbit_dim,
    sp_partition_torus,
)

logger = logging.getLogger("f4desc.descent.identities")

Ambient = Literal["F4", "Sp4", "Sp6"]


class CompositionIdentity(BaseModel):
    """host ∘ tag = rhs, with rhs[0] the leading orbit."""

    model_config = ConfigDict(frozen=True)

    name: str
    group: Ambient = "F4"
    host: str
    tag: str
    rhs: tuple[str, ...]
    checked: bool = True
    # Sp identities only: embedded stabilizer torus and dim σ
    sub_exponents: tuple[int, ...] = ()
    dim_sigma: Optional[int] = None
    note: str = ""

    @property
    def leading(self) -> str:
        return self.rhs[0]

    def equation(self) -> str:
        return f"{self.host} ∘ {self.tag} = {' + '.join(self.rhs)}"


class CompositionReport(BaseModel):
    """Outcome of verifying one identity."""

    name: str
    equation: str
    is_valid: bool = True
    composite: str = ""
    matched: Optional[str] = None
    witness: Optional[str] = None
    half_dim_host: int = 0
    dim_sigma: int = 0
    half_dim_leading: int = 0
    half_dim_gap: int = 0
    errors: list[str] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    def fail(self, message: str) -> None:
        self.is_valid = False
        self.errors.append(message)


_IDENTITIES: list[CompositionIdentity] = [
    CompositionIdentity(name="c3-2", host="C3", tag="(2)", rhs=("F4(a2)",)),
    CompositionIdentity(name="b3-3", host="B3", tag="(3)", rhs=("F4(a2)",)),
    CompositionIdentity(name="c3a1-2", host="C3(a1)", tag="(2)", rhs=("F4(a3)",)),
    CompositionIdentity(name="b2-2x2", host="B2", tag="(2|2)", rhs=("F4(a3)",)),
    CompositionIdentity(
        name="a2a1t-2",
        host="A2+Ã1",
        tag="(2)",
        rhs=("F4(a3)", "B3", "C3", "F4(a2)", "F4(a1)", "F4", "CT_{F4,P(α1,α2,α3)}"),
        note="every orbit above F4(a3) contributes, plus a constant term",
    ),
    CompositionIdentity(
        name="a2t-g2",
        host="Ã2",
        tag="G2",
        rhs=("F4(a2)", "F4(a1)", "F4", "CT_{F4,P(α2,α3,α4)}[(6)_Sp6]"),
        note="Whittaker coefficient of the descent to G2",
    ),
    CompositionIdentity(name="a2t-g2a1", host="Ã2", tag="G2(a1)", rhs=("F4(a3)",)),
    CompositionIdentity(
        name="sp4-21sq-2",
        group="Sp4",
        host="(211)",
        tag="(2)",
        rhs=("(22)",),
        sub_exponents=SP4_GL2_REGULAR,
        dim_sigma=1,
    ),
    CompositionIdentity(
        name="sp4-21sq-2-degenerate",
        group="Sp4",
        host="(211)",
        tag="(2)",
        rhs=("(4)", "CT_{Sp4,P}[(2)_GL2]"),
        checked=False,
        sub_exponents=SP4_GL2_REGULAR,
        dim_sigma=1,
        note="holds only on the closed condition βγ = −ε²; the torus predicts the generic (2²)",
    ),
    CompositionIdentity(
        name="sp6-2cubed-3",
        group="Sp6",
        host="(222)",
        tag="(3)",
        rhs=("(42)", "(6)", "CT_{Sp6,P}[(4)_Sp4]"),
        sub_exponents=SP6_SO3_REGULAR,
        dim_sigma=1,
        note="(42) and (6) summed over square classes",
    ),
]


@lru_cache(maxsize=1)
def composition_identities() -> dict[str, CompositionIdentity]:
    return {i.name: i for i in _IDENTITIES}


def get_identity(name: str) -> CompositionIdentity:
    identity = composition_identities().get(name.strip().lower())
    if identity is None:
        known = ", ".join(composition_identities())
        raise ValueError(f"Unknown composition identity {name!r}; known: {known}")
    return identity


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def _verify_f4(identity: CompositionIdentity, report: CompositionReport) -> None:
    entry = sub_torus(identity.host, identity.tag)
    host = get_orbit(identity.host)
    leading = get_orbit(identity.leading)

    composite = compose(torus_of_orbit(host.label), entry.weight)
    report.composite = str(composite)
    match = match_to_orbit(composite)
    if match is None:
        report.fail(f"composite torus {composite} is not conjugate to any orbit torus")
    else:
        report.matched = match.label
        report.witness = match.witness_word
        if match.label != leading.label:
            report.fail(f"composite torus matches {match.label}, expected {leading.label}")

    if not entry.centralizes_character():
        report.fail(f"sub-torus pairs nontrivially with the character: {entry.support_pairings()}")

    if host.grading.half_dim != host.half_dim:
        report.fail(
            f"dim U(O_G) from the grading is {host.grading.half_dim}, catalog says {host.half_dim}"
        )
    row = descent_row(host.label, identity.tag)
    if row is None:
        report.fail(f"no descent-table row for {host.label}∘{identity.tag}")
    elif row.dim_sigma != entry.dim_v:
        report.fail(f"dim V(O_H) = {entry.dim_v} but the descent table has dim σ = {row.dim_sigma}")

    report.half_dim_host = host.half_dim
    report.dim_sigma = entry.dim_v
    report.half_dim_leading = leading.half_dim


def _verify_sp(identity: CompositionIdentity, report: CompositionReport) -> None:
    size = int(identity.group[2:])
    host = sp_partition_torus(size, identity.host)
    leading = parse_partition(identity.leading)

    composite = sp_compose(host.exponents, identity.sub_exponents)
    report.composite = str(composite)
    match = sp_match(composite)
    if match is None:
        report.fail(f"composite torus {composite} matches no partition torus of {identity.group}")
    else:
        report.matched = "(" + "".join(map(str, match.partition)) + ")"
        report.witness = f"perm={match.permutation} signs={match.signs}"
        if match.partition != leading:
            report.fail(f"composite torus matches {match.partition}, expected {leading}")
        elif match.permutation == tuple(range(size // 2)) and all(s == 1 for s in match.signs):
            report.notes.append("no conjugation needed")

    report.half_dim_host = sp_orbit_dim(size, host.partition) // 2
    report.dim_sigma = identity.dim_sigma or 0
    report.half_dim_leading = sp_orbit_dim(size, leading) // 2


def verify_composition(identity: CompositionIdentity | str) -> CompositionReport:
    """Recompute the composite torus, match it, and check the dimension bookkeeping.

    Passes iff the composite is Weyl-conjugate to the torus of the leading
    right-hand-side orbit. The gap ½dim(leading) − (½dim(host) + dim σ) is
    reported as a warning when nonzero.
    """
    ident = identity if isinstance(identity, CompositionIdentity) else get_identity(identity)
    report = CompositionReport(name=ident.name, equation=ident.equation())
    if ident.note:
        report.notes.append(ident.note)
    if not ident.checked:
        report.warnings.append("stored as data only; not machine-verified")
        return report

    if ident.group == "F4":
        _verify_f4(ident, report)
    else:
        _verify_sp(ident, report)

    report.half_dim_gap = report.half_dim_leading - (report.half_dim_host + report.dim_sigma)
    if report.half_dim_gap:
        report.warnings.append(
            f"half-dimensions unbalanced: {report.half_dim_host} + {report.dim_sigma}"
            f" vs {report.half_dim_leading} (gap {report.half_dim_gap})"
        )
    logger.debug("Identity %s: valid=%s match=%s", ident.name, report.is_valid, report.matched)
    return report


def verify_all() -> list[CompositionReport]:
    return [verify_composition(i) for i in _IDENTITIES]
