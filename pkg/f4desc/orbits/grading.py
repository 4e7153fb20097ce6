"""Gradings of the positive roots induced by weighted Dynkin diagrams."""

from __future__ import annotations

from typing import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator

from f4desc.roots.system import Coeffs, Root, add, format_coeffs, is_root, positive_coeffs


class Diagram(BaseModel):
    """Labels (ε1..ε4) ∈ {0,1,2}⁴ on the nodes α1 - α2 => α3 - α4."""

    model_config = ConfigDict(frozen=True)

    labels: tuple[int, int, int, int]

    @field_validator("labels")
    @classmethod
    def _labels_in_range(cls, v: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
        if any(e not in (0, 1, 2) for e in v):
            raise ValueError(f"Diagram labels must lie in {{0,1,2}}, got {v}")
        return v

    @classmethod
    def of(cls, value: "Diagram | str | Iterable[int]") -> "Diagram":
        if isinstance(value, Diagram):
            return value
        if isinstance(value, str):
            digits = [ch for ch in value if ch.isdigit()]
            if len(digits) != 4:
                raise ValueError(f"Cannot parse diagram {value!r}; expected four labels")
            return cls(labels=tuple(int(d) for d in digits))
        return cls(labels=tuple(value))

    @property
    def delta(self) -> tuple[int, ...]:
        """1-based indices of the zero-labelled simple roots (the Levi of P_Δ)."""
        return tuple(i + 1 for i, e in enumerate(self.labels) if e == 0)

    def level(self, alpha: Root | Sequence[int]) -> int:
        """G(α) = Σ εᵢnᵢ."""
        coeffs = alpha.coeffs if isinstance(alpha, Root) else alpha
        return sum(e * n for e, n in zip(self.labels, coeffs))

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.labels) + ")"


class Grading(BaseModel):
    """Roots of U_Δ grouped by level."""

    diagram: Diagram
    levels: dict[int, list[Root]] = Field(default_factory=dict)

    def level(self, n: int) -> list[Root]:
        """U_Δ'(n)."""
        return list(self.levels.get(n, []))

    def at_least(self, n: int) -> list[Root]:
        """Roots of U_Δ(n), all levels ≥ n, in canonical order."""
        out = [r for k, roots in self.levels.items() if k >= n for r in roots]
        return sorted(out, key=Root.sort_key)

    @property
    def roots(self) -> list[Root]:
        return self.at_least(1)

    @property
    def counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in sorted(self.levels.items())}

    @property
    def half_dim(self) -> int:
        """dim U_Δ(2) + ½|U_Δ'(1)|."""
        level1 = len(self.level(1))
        if level1 % 2:
            raise ValueError(f"Odd level-1 count {level1} for diagram {self.diagram}")
        return len(self.at_least(2)) + level1 // 2

    def is_additive(self) -> bool:
        """level(α+β) = level(α)+level(β) whenever α+β is a root in U_Δ."""
        members = {r.coeffs for r in self.roots}
        for a in members:
            for b in members:
                s = add(a, b)
                if is_root(s) and s in members:
                    if self.diagram.level(s) != self.diagram.level(a) + self.diagram.level(b):
                        return False
        return True

    def as_text(self) -> dict[int, list[str]]:
        return {k: [str(r) for r in v] for k, v in sorted(self.levels.items())}


def g_value(diagram: Diagram | str | Iterable[int], alpha: Root | str) -> int:
    """G_O(α) = Σ εᵢnᵢ for a positive root α."""
    root = Root.of(alpha)
    if not root.is_positive:
        raise ValueError(f"g_value needs a positive root, got {format_coeffs(root.coeffs)}")
    return Diagram.of(diagram).level(root)


def grading(diagram: Diagram | str | Iterable[int]) -> Grading:
    """Partition U_Δ (positive roots of positive level) by level."""
    d = Diagram.of(diagram)
    levels: dict[int, list[Root]] = {}
    for c in positive_coeffs():
        n = d.level(c)
        if n > 0:
            levels.setdefault(n, []).append(Root(coeffs=c))
    return Grading(diagram=d, levels=dict(sorted(levels.items())))


def levi_roots(diagram: Diagram | str | Iterable[int]) -> list[Coeffs]:
    """Positive roots of level 0, the positive roots of the Levi factor M_Δ."""
    d = Diagram.of(diagram)
    return [c for c in positive_coeffs() if d.level(c) == 0]

