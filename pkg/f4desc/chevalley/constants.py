"""Chevalley structure constants of F4.

Signs are fixed by declaring N_{α,β} = +(p+1) on every extraspecial pair, where
for each non-simple positive root ξ the extraspecial pair (α, β) is the
special pair α + β = ξ with α first in canonical root order. All remaining
constants follow from the standard relations of a Chevalley basis:

  * N_{α,β} = −N_{β,α} and N_{−α,−β} = −N_{α,β};
  * if α + β + γ = 0 then N_{α,β}/|γ|² = N_{β,γ}/|α|² = N_{γ,α}/|β|²;
  * if α + β + γ + δ = 0 with no opposite pair then
    N_{α,β}N_{γ,δ}/|α+β|² + N_{β,γ}N_{α,δ}/|β+γ|² + N_{γ,α}N_{β,δ}/|γ+α|² = 0.

Constants for positive pairs are filled in by increasing height of ξ, so every
mixed-sign constant needed on the right-hand side is already known.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from pydantic import BaseModel, ConfigDict
from sympy import Rational

from f4desc.roots.system import (
    F4,
    Coeffs,
    Root,
    add,
    format_coeffs,
    is_root,
    negate,
    positive_coeffs,
    root_index,
)

logger = logging.getLogger("f4desc.chevalley.constants")


def string_below(alpha: Coeffs, beta: Coeffs) -> int:
    """Largest p ≥ 0 with β − pα a root."""
    p = 0
    current = beta
    while True:
        current = tuple(b - a for a, b in zip(alpha, current))
        if not is_root(current):
            return p
        p += 1


class ConstantEntry(BaseModel):
    """One row of the structure-constant table."""

    model_config = ConfigDict(frozen=True)

    alpha: str
    beta: str
    total: str
    n: int
    extraspecial: bool = False


class StructureConstants:
    """Table N_{α,β} for all roots α, β with α + β a root."""

    def __init__(self) -> None:
        self._positive: dict[tuple[Coeffs, Coeffs], int] = {}
        self.extraspecial: dict[Coeffs, tuple[Coeffs, Coeffs]] = {}
        self._build()
        logger.info(
            "Structure constants built: %d positive pairs, %d extraspecial",
            len(self._positive),
            len(self.extraspecial),
        )

    # ── construction ──────────────────────────────────────────────────────

    def _build(self) -> None:
        positives = positive_coeffs()
        order = {c: k for k, c in enumerate(positives)}
        for xi in positives:
            pairs = [
                (a, b)
                for a in positives
                for b in positives
                if order[a] < order[b] and add(a, b) == xi
            ]
            if not pairs:
                continue
            alpha, beta = min(pairs, key=lambda pair: order[pair[0]])
            self.extraspecial[xi] = (alpha, beta)
            n_ab = string_below(alpha, beta) + 1
            self._set(alpha, beta, n_ab)
            for gamma, delta in pairs:
                if (gamma, delta) == (alpha, beta):
                    continue
                self._set(gamma, delta, self._from_extraspecial(xi, alpha, beta, gamma, delta, n_ab))

    def _set(self, a: Coeffs, b: Coeffs, value: int) -> None:
        self._positive[(a, b)] = value
        self._positive[(b, a)] = -value

    def _from_extraspecial(
        self,
        xi: Coeffs,
        alpha: Coeffs,
        beta: Coeffs,
        gamma: Coeffs,
        delta: Coeffs,
        n_ab: int,
    ) -> int:
        # Four-term relation applied to (γ, δ, −α, −β).
        d_minus_a = add(delta, negate(alpha))
        g_minus_a = add(gamma, negate(alpha))
        total = Rational(0)
        if is_root(d_minus_a):
            total += Rational(
                self.n(delta, negate(alpha)) * self.n(gamma, negate(beta)),
                F4.norm2(d_minus_a),
            )
        if is_root(g_minus_a):
            total += Rational(
                self.n(negate(alpha), gamma) * self.n(delta, negate(beta)),
                F4.norm2(g_minus_a),
            )
        value = Rational(F4.norm2(xi), n_ab) * total
        if value.q != 1:
            raise ValueError(
                f"Non-integral structure constant for {format_coeffs(gamma)}, {format_coeffs(delta)}"
            )
        return int(value)

    # ── lookup ────────────────────────────────────────────────────────────

    def n(self, a: Coeffs, b: Coeffs) -> int:
        """N_{a,b}; zero when a + b is not a root."""
        s = add(a, b)
        if not any(s) or not is_root(s):
            return 0
        ha, hb = sum(a), sum(b)
        if ha > 0 and hb > 0:
            return self._positive[(a, b)]
        if ha < 0 and hb < 0:
            return -self._positive[(negate(a), negate(b))]
        if ha < 0 < hb:
            return -self.n(b, a)
        c = negate(s)
        if sum(s) > 0:
            # c < 0 and b < 0: N_{a,b} = |c|²/|a|² · N_{b,c}
            value = Rational(F4.norm2(c), F4.norm2(a)) * self.n(b, c)
        else:
            # c > 0 and a > 0: N_{a,b} = |c|²/|b|² · N_{c,a}
            value = Rational(F4.norm2(c), F4.norm2(b)) * self.n(c, a)
        return int(value)

    def entries(self) -> list[ConstantEntry]:
        """All nonzero N_{α,β}, α and β over the 48 roots in canonical order."""
        index = root_index()
        roots = sorted(index, key=index.__getitem__)
        out = []
        for a in roots:
            for b in roots:
                value = self.n(a, b)
                if value:
                    s = add(a, b)
                    out.append(
                        ConstantEntry(
                            alpha=format_coeffs(a),
                            beta=format_coeffs(b),
                            total=format_coeffs(s),
                            n=value,
                            extraspecial=self.extraspecial.get(s) == (a, b),
                        )
                    )
        return out


@lru_cache(maxsize=1)
def structure_constants() -> StructureConstants:
    return StructureConstants()


def structure_constant(alpha: Root | str, beta: Root | str) -> int:
    """N_{α,β} for two roots (0 when α + β is not a root)."""
    return structure_constants().n(Root.of(alpha).coeffs, Root.of(beta).coeffs)
