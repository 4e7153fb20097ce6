"""Weyl group of F4: words, root and cocharacter actions, full enumeration.

A word w[i1 i2 ... im] denotes the product s_{i1} s_{i2} ... s_{im}; acting on a
root or cocharacter the rightmost reflection is applied first.

The group is enumerated once by breadth-first closure under left
multiplication by the simple reflections. Elements are identified by the
permutation they induce on the 48 roots, never by their word, so every
element keeps the first (shortest, then BFS-ordered) word that reached it.
"""

from __future__ import annotations

import logging
import re
from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from pydantic import BaseModel, ConfigDict, field_validator

from f4desc.roots.system import (
    F4,
    CartanData,
    CocharWeight,
    Coeffs,
    Root,
    all_coeffs,
    root_index,
)

logger = logging.getLogger("f4desc.roots.weyl")

_WORD_RE = re.compile(r"^\s*(?:w\s*)?\[?\s*([1-4\s,]*)\s*\]?\s*$")


class WeylWord(BaseModel):
    """Sequence of simple-reflection indices, printed as ``w[234]``."""

    model_config = ConfigDict(frozen=True)

    letters: tuple[int, ...] = ()

    @field_validator("letters")
    @classmethod
    def _indices_in_range(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        for i in v:
            if not 1 <= i <= 4:
                raise ValueError(f"Weyl word letter {i} out of range 1..4")
        return v

    @classmethod
    def parse(cls, text: str) -> "WeylWord":
        match = _WORD_RE.match(text)
        if not match:
            raise ValueError(f"Cannot parse Weyl word {text!r}; expected e.g. w[234]")
        digits = [ch for ch in match.group(1) if ch.isdigit()]
        return cls(letters=tuple(int(d) for d in digits))

    @classmethod
    def of(cls, value: "WeylWord | str | Iterable[int]") -> "WeylWord":
        if isinstance(value, WeylWord):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(letters=tuple(value))

    def reversed(self) -> "WeylWord":
        return WeylWord(letters=tuple(reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "w[" + "".join(str(i) for i in self.letters) + "]"


# ---------------------------------------------------------------------------
# Actions
# ---------------------------------------------------------------------------


def apply_word(cartan: CartanData, letters: Sequence[int], coeffs: Sequence[int]) -> Coeffs:
    out = tuple(coeffs)
    for i in reversed(letters):
        out = cartan.reflect(out, i - 1)
    return out


def apply_word_cochar(cartan: CartanData, letters: Sequence[int], weight: Sequence[int]) -> Coeffs:
    out = tuple(weight)
    for i in reversed(letters):
        out = cartan.reflect_cochar(out, i - 1)
    return out


def weyl_apply(word: WeylWord | str, alpha: Root | str) -> Root:
    """Apply w[i1..im] to a root."""
    w = WeylWord.of(word)
    return Root(coeffs=apply_word(F4, w.letters, Root.of(alpha).coeffs))


def weyl_apply_cochar(word: WeylWord | str, weight: CocharWeight | str) -> CocharWeight:
    """Dual action on cocharacters; preserves ⟨w·α, w·r⟩ = ⟨α, r⟩."""
    w = WeylWord.of(word)
    return CocharWeight(
        exponents=apply_word_cochar(F4, w.letters, CocharWeight.of(weight).exponents)
    )


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


class WeylElement(BaseModel):
    """One group element: its permutation of the root table and a witness word."""

    model_config = ConfigDict(frozen=True)

    perm: tuple[int, ...]
    word: WeylWord

    def apply_cochar(self, weight: Sequence[int]) -> Coeffs:
        return apply_word_cochar(F4, self.word.letters, weight)


class WeylGroup:
    """Finite Weyl group of a root system, enumerated by BFS over root permutations."""

    def __init__(self, cartan: CartanData, roots: Sequence[Coeffs]) -> None:
        self.cartan = cartan
        self.roots = tuple(roots)
        self._index = {c: k for k, c in enumerate(self.roots)}
        self._simple_perms = [
            tuple(self._index[cartan.reflect(c, i)] for c in self.roots)
            for i in range(cartan.rank)
        ]
        self.elements = self._enumerate()
        self._by_perm = {e.perm: e for e in self.elements}
        logger.info("%s Weyl group enumerated: %d elements", cartan.name, len(self.elements))

    def _enumerate(self) -> list[WeylElement]:
        identity = tuple(range(len(self.roots)))
        found = {identity: WeylElement(perm=identity, word=WeylWord())}
        order = [identity]
        queue = deque([identity])
        while queue:
            perm = queue.popleft()
            word = found[perm].word.letters
            for i, s in enumerate(self._simple_perms, start=1):
                new = tuple(s[k] for k in perm)
                if new not in found:
                    found[new] = WeylElement(perm=new, word=WeylWord(letters=(i,) + word))
                    order.append(new)
                    queue.append(new)
        return [found[p] for p in order]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    def __contains__(self, perm: tuple[int, ...]) -> bool:
        return perm in self._by_perm

    def element_of(self, word: WeylWord | Sequence[int]) -> WeylElement:
        letters = word.letters if isinstance(word, WeylWord) else tuple(word)
        perm = tuple(
            self._index[apply_word(self.cartan, letters, c)] for c in self.roots
        )
        return self._by_perm[perm]

    @staticmethod
    def compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        """Permutation of a∘b (b first)."""
        return tuple(a[k] for k in b)

    @staticmethod
    def inverse(a: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * len(a)
        for k, image in enumerate(a):
            out[image] = k
        return tuple(out)

    def longest(self) -> WeylElement:
        """The unique element sending every positive root to a negative root."""
        positive = [k for k, c in enumerate(self.roots) if sum(c) > 0]
        for e in self.elements:
            if all(sum(self.roots[e.perm[k]]) < 0 for k in positive):
                return e
        raise ValueError("No longest element found; root table is inconsistent")


@lru_cache(maxsize=1)
def f4_weyl_group() -> WeylGroup:
    return WeylGroup(F4, all_coeffs())


def weyl_enumerate() -> list[WeylElement]:
    """All 1152 elements of W(F4), identity first, in deterministic BFS order."""
    return list(f4_weyl_group().elements)


def root_permutation(word: WeylWord | str) -> tuple[int, ...]:
    w = WeylWord.of(word)
    index = root_index()
    return tuple(index[apply_word(F4, w.letters, c)] for c in all_coeffs())
