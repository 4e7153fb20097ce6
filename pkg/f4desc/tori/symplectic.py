"""Partition tori of symplectic groups and their signed-permutation matching.

A unipotent orbit of Sp_{2m} is a partition of 2m whose odd parts occur with
even multiplicity. Its torus is diag(t^x1, ..., t^x2m) where the exponents are
the union of the strings (p−1, p−3, ..., 1−p) over the parts p, sorted
descending.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from typing import Iterable, Optional, Sequence

from pydantic import BaseModel, Field

logger = logging.getLogger("f4desc.tori.symplectic")

# Embedded tori of stabilizer orbits, as exponent lists in the ambient group.
SP4_GL2_REGULAR = (0, 1, -1, 0)
SP6_SO3_REGULAR = (2, 0, -2, 2, 0, -2)


class PartitionTorus(BaseModel):
    size: int
    partition: tuple[int, ...]
    exponents: tuple[int, ...]

    @property
    def half(self) -> tuple[int, ...]:
        return self.exponents[: self.size // 2]


class SignedPermutationMatch(BaseModel):
    partition: tuple[int, ...]
    permutation: tuple[int, ...]
    signs: tuple[int, ...]
    image: tuple[int, ...] = Field(default_factory=tuple)


def parse_partition(text: str | Iterable[int]) -> tuple[int, ...]:
    """``"2,1,1"`` or ``"211"`` to a descending tuple."""
    if isinstance(text, str):
        cleaned = text.replace("(", "").replace(")", "").replace(" ", "")
        parts = cleaned.split(",") if "," in cleaned else list(cleaned)
        try:
            values = [int(p) for p in parts if p]
        except ValueError as exc:
            raise ValueError(f"Cannot parse partition {text!r}") from exc
    else:
        values = list(text)
    return tuple(sorted(values, reverse=True))


def validate_symplectic(size: int, partition: Sequence[int]) -> None:
    if size <= 0 or size % 2:
        raise ValueError(f"Symplectic size must be even and positive, got {size}")
    if any(p <= 0 for p in partition):
        raise ValueError(f"Partition parts must be positive, got {tuple(partition)}")
    if sum(partition) != size:
        raise ValueError(f"Partition {tuple(partition)} does not sum to {size}")
    for part, mult in Counter(partition).items():
        if part % 2 and mult % 2:
            raise ValueError(
                f"Partition {tuple(partition)} is not symplectic: odd part {part} has multiplicity {mult}"
            )


def sp_partition_torus(size: int, partition: str | Iterable[int]) -> PartitionTorus:
    """Torus h_λ(t) of the Sp_{size} orbit with partition λ."""
    parts = parse_partition(partition)
    validate_symplectic(size, parts)
    exps = [e for p in parts for e in range(p - 1, -p, -2)]
    return PartitionTorus(size=size, partition=parts, exponents=tuple(sorted(exps, reverse=True)))


def symplectic_partitions(size: int) -> list[tuple[int, ...]]:
    """All symplectic partitions of ``size``, largest first."""
    out: list[tuple[int, ...]] = []

    def _rec(remaining: int, cap: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for p in range(min(cap, remaining), 0, -1):
            _rec(remaining - p, p, prefix + (p,))

    _rec(size, size, ())
    valid = []
    for parts in out:
        try:
            validate_symplectic(size, parts)
        except ValueError:
            continue
        valid.append(parts)
    return valid


def sp_orbit_dim(size: int, partition: str | Iterable[int]) -> int:
    """dim O_λ = 2m² + m − ½Σ(λ*_i)² − ½#{odd parts} for Sp_{2m}."""
    parts = parse_partition(partition)
    validate_symplectic(size, parts)
    m = size // 2
    dual = [sum(1 for p in parts if p > i) for i in range(parts[0])]
    odd = sum(1 for p in parts if p % 2)
    return 2 * m * m + m - (sum(c * c for c in dual) + odd) // 2


def sp_compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if len(a) != len(b):
        raise ValueError(f"Exponent lists of different sizes: {len(a)} and {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def is_symplectic_torus(exponents: Sequence[int]) -> bool:
    """diag(t^x) lies in Sp iff x_i = −x_{2m+1−i}."""
    n = len(exponents)
    return n % 2 == 0 and all(exponents[i] == -exponents[n - 1 - i] for i in range(n))


def signed_permutations(m: int) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The Weyl group of C_m as (permutation, signs) pairs, identity first."""
    for perm in itertools.permutations(range(m)):
        for signs in itertools.product((1, -1), repeat=m):
            yield perm, signs


def sp_match(exponents: Sequence[int]) -> Optional[SignedPermutationMatch]:
    """Find a signed permutation carrying the torus onto some partition torus."""
    exps = tuple(exponents)
    if not is_symplectic_torus(exps):
        raise ValueError(f"Exponents {exps} do not define a torus of Sp{len(exps)}")
    size = len(exps)
    m = size // 2
    half = exps[:m]
    targets = {sp_partition_torus(size, p).half: p for p in symplectic_partitions(size)}
    for perm, signs in signed_permutations(m):
        image = tuple(signs[k] * half[perm[k]] for k in range(m))
        if image in targets:
            logger.debug("Sp%d torus %s matches %s", size, exps, targets[image])
            return SignedPermutationMatch(
                partition=targets[image], permutation=perm, signs=signs, image=image
            )
    return None
