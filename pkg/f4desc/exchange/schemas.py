"""Pydantic models for integration data, steps and reports of the root-exchange move."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from f4desc.roots.system import Root, add, format_coeffs, is_root

Mode = Literal["compact", "full_adelic"]


class CharEntry(BaseModel):
    """A root on which the character is nontrivial; ``tag`` is a symbolic nonzero marker."""

    model_config = ConfigDict(frozen=True)

    root: Root
    tag: str = "ψ"

    @field_validator("root", mode="before")
    @classmethod
    def _root(cls, v):
        return Root.of(v)


class Extra(BaseModel):
    """A root integrated outside U: over F\\A (compact) or over all of A (full_adelic)."""

    model_config = ConfigDict(frozen=True)

    root: Root
    mode: Mode = "compact"

    @field_validator("root", mode="before")
    @classmethod
    def _root(cls, v):
        return Root.of(v)


class ExchangeDatum(BaseModel):
    """Unipotent group U (as a root set), character support and integrated extras.

    Invariants: every root appears once across U and the extras; the
    character support lies in U or the extras; the sum of two U roots, when
    it is a root, lies in U or the extras.
    """

    model_config = ConfigDict(frozen=True)

    name: str = ""
    universe: frozenset[Root]
    characters: tuple[CharEntry, ...] = ()
    extras: tuple[Extra, ...] = ()

    @field_validator("universe", mode="before")
    @classmethod
    def _roots(cls, v):
        return frozenset(Root.of(r) for r in v)

    @model_validator(mode="after")
    def _check(self) -> "ExchangeDatum":
        extra_roots = [e.root for e in self.extras]
        if len(set(extra_roots)) != len(extra_roots):
            raise ValueError(f"Duplicate extras in {self.name or 'datum'}")
        clash = self.universe.intersection(extra_roots)
        if clash:
            raise ValueError(f"Roots both in U and extras: {sorted(str(r) for r in clash)}")
        known = self.universe.union(extra_roots)
        for entry in self.characters:
            if entry.root not in known:
                raise ValueError(f"Character root {entry.root} is neither in U nor integrated")
        coeffs = {r.coeffs for r in known}
        for a in self.universe:
            for b in self.universe:
                s = add(a.coeffs, b.coeffs)
                if is_root(s) and s not in coeffs:
                    raise ValueError(f"U is not closed: {a} + {b} = {format_coeffs(s)} is missing")
        return self

    # ── lookups ───────────────────────────────────────────────────────────

    def extra(self, root: Root) -> Optional[Extra]:
        for e in self.extras:
            if e.root == root:
                return e
        return None

    def compact_roots(self) -> set[Root]:
        return {e.root for e in self.extras if e.mode == "compact"}

    def support(self) -> set[Root]:
        return {c.root for c in self.characters}

    @property
    def root_count(self) -> int:
        return len(self.universe) + len(self.extras)

    def summary(self) -> dict:
        return {
            "name": self.name,
            "universe": [str(r) for r in sorted(self.universe, key=Root.sort_key)],
            "characters": [f"{c.root}:{c.tag}" for c in self.characters],
            "extras": [f"{e.root}:{e.mode}" for e in self.extras],
        }


class ExchangeStep(BaseModel):
    """``exchange <alpha> <beta> <gamma>`` or ``expand <root>``."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["exchange", "expand"]
    alpha: Optional[Root] = None
    beta: Optional[Root] = None
    gamma: Optional[Root] = None
    root: Optional[Root] = None

    @classmethod
    def parse(cls, line: str) -> "ExchangeStep":
        parts = line.split()
        if not parts:
            raise ValueError("Empty exchange step")
        kind, args = parts[0].lower(), parts[1:]
        if kind == "exchange" and len(args) == 3:
            alpha, beta, gamma = (Root.of(a) for a in args)
            return cls(kind="exchange", alpha=alpha, beta=beta, gamma=gamma)
        if kind == "expand" and len(args) == 1:
            return cls(kind="expand", root=Root.of(args[0]))
        raise ValueError(f"Malformed step {line!r}: expected 'exchange α β γ' or 'expand ρ'")

    def __str__(self) -> str:
        if self.kind == "expand":
            return f"expand {self.root}"
        return f"exchange {self.alpha} {self.beta} {self.gamma}"


class ExchangeReport(BaseModel):
    """Checked conditions of one step; failures are listed, never raised."""

    step: str
    is_valid: bool = True
    conditions: dict[str, bool] = Field(default_factory=dict)
    coefficient: Optional[int] = None
    higher_terms: list[str] = Field(default_factory=list)
    assumed: list[str] = Field(default_factory=list)
    errors: list[str] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)

    def check(self, name: str, ok: bool, message: str) -> None:
        self.conditions[name] = ok
        if not ok:
            self.is_valid = False
            self.errors.append(message)


class ReplayResult(BaseModel):
    fixture: str
    completed: bool
    steps_applied: int
    reports: list[ExchangeReport] = Field(default_factory=list)
    final: ExchangeDatum
    diagnostic: str = ""
