"""Small classical root systems (types B and C, rank ≤ 3) for cross-checks.

The Cartan data is computed from explicit simple roots in the ε-basis, so the
same closure and Weyl enumeration code that builds F4 can be checked against
known answers: n² positive roots and a Weyl group of order 2ⁿ·n!.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Literal

from f4desc.roots.system import CartanData
from f4desc.roots.weyl import WeylGroup

ClassicalType = Literal["B", "C"]


def _simple_roots(kind: ClassicalType, n: int) -> list[tuple[int, ...]]:
    roots = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        roots.append(tuple(v))
    last = [0] * n
    last[n - 1] = 1 if kind == "B" else 2
    roots.append(tuple(last))
    return roots


def _dot(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    return sum(x * y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def classical_cartan(kind: ClassicalType, n: int) -> CartanData:
    """Cartan data of B_n or C_n for 2 ≤ n ≤ 3."""
    if kind not in ("B", "C"):
        raise ValueError(f"Unsupported classical type {kind!r}")
    if not 2 <= n <= 3:
        raise ValueError(f"Rank {n} outside the supported range 2..3")
    simple = _simple_roots(kind, n)
    cartan = tuple(
        tuple(2 * _dot(simple[j], simple[i]) // _dot(simple[i], simple[i]) for i in range(n))
        for j in range(n)
    )
    # Rescale so the shortest simple root has squared length 1.
    norms = [_dot(a, a) for a in simple]
    shortest = min(norms)
    return CartanData(
        name=f"{kind}{n}",
        cartan=cartan,
        lengths2=tuple(x // shortest for x in norms),
    )


@lru_cache(maxsize=None)
def classical_weyl_group(kind: ClassicalType, n: int) -> WeylGroup:
    cartan = classical_cartan(kind, n)
    return WeylGroup(cartan, cartan.root_closure())


def positive_root_count(kind: ClassicalType, n: int) -> int:
    return sum(1 for c in classical_cartan(kind, n).root_closure() if sum(c) > 0)
