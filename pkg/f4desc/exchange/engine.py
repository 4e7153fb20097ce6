"""The root-exchange move on integration data.

Exchanging β for γ (β compact, α = β + γ in the character support) is allowed
when [x_β(r), x_γ(t)] = x_α(c·rt)·u′ with c ≠ 0 and u′ in the integrated
group, and when x_γ normalizes U. The move turns the compact integral over β
into a full adelic one and starts a compact integral over γ.
"""

from __future__ import annotations

import logging
from typing import Iterable, Iterator, Sequence

from f4desc.chevalley.constants import structure_constant
from f4desc.exchange.schemas import (
    ExchangeDatum,
    ExchangeReport,
    ExchangeStep,
    Extra,
    ReplayResult,
)
from f4desc.roots.system import Root, add, is_root

logger = logging.getLogger("f4desc.exchange.engine")

ASSUMED_INVARIANCE = "integrand left invariant under x_γ(δ), δ ∈ F"


def _combinations(a: Root, b: Root) -> Iterator[tuple[int, int, Root]]:
    """Roots i·a + j·b with i, j ≥ 1."""
    for i in range(1, 4):
        for j in range(1, 4):
            coeffs = tuple(i * x + j * y for x, y in zip(a.coeffs, b.coeffs))
            if is_root(coeffs):
                yield i, j, Root(coeffs=coeffs)


def _commutator_conditions(
    d: ExchangeDatum,
    alpha: Root,
    integrated: Root,
    incoming: Root,
    report: ExchangeReport,
) -> None:
    """Conditions (i)-(iv) with ``integrated`` leaving and ``incoming`` entering."""
    report.check(
        "sum",
        add(integrated.coeffs, incoming.coeffs) == alpha.coeffs,
        f"{integrated} + {incoming} ≠ {alpha}",
    )

    n = structure_constant(integrated, incoming)
    if bool(n) != is_root(add(integrated.coeffs, incoming.coeffs)):
        raise ValueError(
            f"N({integrated}, {incoming}) = {n} disagrees with the root system on whether the sum is a root"
        )
    report.coefficient = abs(n)
    report.check("constant", n != 0, f"N({integrated}, {incoming}) = 0")

    allowed = (set(d.universe) | d.compact_roots()) - {integrated}
    for i, j, root in _combinations(integrated, incoming):
        if (i, j) == (1, 1):
            continue
        report.higher_terms.append(f"{i}·{integrated}+{j}·{incoming} = {root}")
        report.check(
            f"higher {i},{j}",
            root in allowed,
            f"commutator term {root} = {i}·{integrated}+{j}·{incoming} is not integrated",
        )

    allowed.add(incoming)
    missing = sorted(
        {
            str(root)
            for delta in d.universe
            for _i, _j, root in _combinations(incoming, delta)
            if root not in allowed
        }
    )
    report.check(
        "normalizes",
        not missing,
        f"x_{incoming} does not normalize U: {', '.join(missing)}",
    )


def validate_exchange(d: ExchangeDatum, alpha, beta, gamma) -> ExchangeReport:
    """Check that β (compact) may be exchanged for γ against α in the character support."""
    alpha, beta, gamma = Root.of(alpha), Root.of(beta), Root.of(gamma)
    report = ExchangeReport(step=f"exchange {alpha} {beta} {gamma}")
    extra = d.extra(beta)
    report.check(
        "beta_compact",
        extra is not None and extra.mode == "compact",
        f"{beta} is not a compact integrated root",
    )
    report.check("alpha_support", alpha in d.support(), f"{alpha} is not in the character support")
    report.check(
        "gamma_new",
        gamma not in d.universe and d.extra(gamma) is None,
        f"{gamma} is already integrated",
    )
    _commutator_conditions(d, alpha, beta, gamma, report)
    report.assumed.append(ASSUMED_INVARIANCE)
    return report


def apply_exchange(d: ExchangeDatum, alpha, beta, gamma) -> ExchangeDatum:
    """β becomes full adelic, γ is added as compact; U and the character are unchanged.

    Raises:
        ValueError: with the failed conditions when the exchange is invalid.
    """
    report = validate_exchange(d, alpha, beta, gamma)
    if not report.is_valid:
        raise ValueError(f"Invalid {report.step}: {'; '.join(report.errors)}")
    beta, gamma = Root.of(beta), Root.of(gamma)
    extras = [Extra(root=e.root, mode="full_adelic") if e.root == beta else e for e in d.extras]
    extras.append(Extra(root=gamma, mode="compact"))
    return ExchangeDatum(
        name=d.name, universe=d.universe, characters=d.characters, extras=tuple(extras)
    )


def validate_reverse(d: ExchangeDatum, alpha, beta, gamma) -> ExchangeReport:
    """Check that a previous exchange of β for γ can be undone."""
    alpha, beta, gamma = Root.of(alpha), Root.of(beta), Root.of(gamma)
    report = ExchangeReport(step=f"reverse {alpha} {beta} {gamma}")
    b, g = d.extra(beta), d.extra(gamma)
    report.check(
        "beta_full", b is not None and b.mode == "full_adelic", f"{beta} is not full adelic"
    )
    report.check("gamma_compact", g is not None and g.mode == "compact", f"{gamma} is not compact")
    report.check("alpha_support", alpha in d.support(), f"{alpha} is not in the character support")
    _commutator_conditions(d, alpha, gamma, beta, report)
    report.assumed.append(ASSUMED_INVARIANCE)
    return report


def reverse_exchange(d: ExchangeDatum, alpha, beta, gamma) -> ExchangeDatum:
    report = validate_reverse(d, alpha, beta, gamma)
    if not report.is_valid:
        raise ValueError(f"Invalid {report.step}: {'; '.join(report.errors)}")
    beta, gamma = Root.of(beta), Root.of(gamma)
    extras = tuple(
        Extra(root=beta, mode="compact") if e.root == beta else e
        for e in d.extras
        if e.root != gamma
    )
    return ExchangeDatum(name=d.name, universe=d.universe, characters=d.characters, extras=extras)


# ---------------------------------------------------------------------------
# Expansion
# ---------------------------------------------------------------------------


def validate_expand(d: ExchangeDatum, root) -> ExchangeReport:
    """Adding ρ to U keeps it a group normalized by x_ρ."""
    rho = Root.of(root)
    report = ExchangeReport(step=f"expand {rho}")
    report.check(
        "root_new",
        rho not in d.universe and d.extra(rho) is None,
        f"{rho} is already integrated",
    )
    allowed = set(d.universe) | d.compact_roots() | {rho}
    missing = sorted(
        {str(r) for delta in d.universe for _i, _j, r in _combinations(rho, delta) if r not in allowed}
    )
    report.check("normalizes", not missing, f"x_{rho} does not normalize U: {', '.join(missing)}")
    return report


def expand(d: ExchangeDatum, root) -> ExchangeDatum:
    report = validate_expand(d, root)
    if not report.is_valid:
        raise ValueError(f"Invalid {report.step}: {'; '.join(report.errors)}")
    return ExchangeDatum(
        name=d.name,
        universe=d.universe | {Root.of(root)},
        characters=d.characters,
        extras=d.extras,
    )


# ---------------------------------------------------------------------------
# Replay
# ---------------------------------------------------------------------------


def _parse_steps(steps: Iterable[ExchangeStep | str]) -> list[ExchangeStep]:
    return [s if isinstance(s, ExchangeStep) else ExchangeStep.parse(s) for s in steps]


def replay(d: ExchangeDatum, steps: Sequence[ExchangeStep | str]) -> ReplayResult:
    """Apply steps in order, stopping at the first failure."""
    current = d
    reports: list[ExchangeReport] = []
    for k, step in enumerate(_parse_steps(steps)):
        if step.kind == "expand":
            report = validate_expand(current, step.root)
        else:
            report = validate_exchange(current, step.alpha, step.beta, step.gamma)
        reports.append(report)
        if not report.is_valid:
            logger.debug("Replay of %s stopped at step %d: %s", d.name, k + 1, report.errors)
            return ReplayResult(
                fixture=d.name,
                completed=False,
                steps_applied=k,
                reports=reports,
                final=current,
                diagnostic=f"step {k + 1} ({step}) failed: {'; '.join(report.errors)}",
            )
        if step.kind == "expand":
            current = expand(current, step.root)
        else:
            current = apply_exchange(current, step.alpha, step.beta, step.gamma)
        logger.debug("Replay of %s: step %d (%s) applied", d.name, k + 1, step)
    return ReplayResult(
        fixture=d.name,
        completed=True,
        steps_applied=len(reports),
        reports=reports,
        final=current,
    )
