"""Closed-form corona counts and their rational generating functions.

Side length 0 is accepted throughout; those values are the polynomial
formulas extended to 0 and carry ``algebraic=True``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class CountBreakdown:
    parts: tuple[int, int, int, int]
    sizes: tuple[int, int, int, int]
    algebraic: bool = False

    def __post_init__(self):
        if len(self.parts) != 4 or len(self.sizes) != 4:
            raise ValueError("a breakdown has exactly four parts")
        if list(self.sizes) != list(range(self.sizes[0], self.sizes[0] + 4)):
            raise ValueError(f"sizes must be consecutive: {self.sizes}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def by_size(self) -> dict[int, int]:
        return dict(zip(self.sizes, self.parts))


def _nonneg(*sides: int) -> None:
    for s in sides:
        if not isinstance(s, int):
            raise TypeError("side lengths must be integers")
        if s < 0:
            raise ValueError(f"side length {s} is negative")


def _sizes(perimeter: int) -> tuple[int, int, int, int]:
    return tuple(perimeter + k for k in (3, 4, 5, 6))


def gen_hexagon_counts(n1: int, n2: int, n3: int) -> CountBreakdown:
    _nonneg(n1, n2, n3)
    s = n1 + n2 + n3 + 3
    p = (n1 + 1) * (n2 + 1) * (n3 + 1)
    return CountBreakdown(
        (2, s * s, 2 * p * s, p * p),
        _sizes(2 * (n1 + n2 + n3)),
        algebraic=0 in (n1, n2, n3),
    )


def gen_diamond_counts(n1: int, n2: int) -> CountBreakdown:
    _nonneg(n1, n2)
    s = n1 + n2 + 3
    p = (n1 + 1) * (n2 + 1)
    return CountBreakdown(
        (2, s * s, 2 * p * s, p * p),
        _sizes(2 * (n1 + n2)),
        algebraic=0 in (n1, n2),
    )


def hexagon_counts(n: int) -> CountBreakdown:
    _nonneg(n)
    m = n + 1
    return CountBreakdown((2, 9 * m**2, 6 * m**4, m**6), _sizes(6 * n), algebraic=n == 0)


def diamond_counts(n: int) -> CountBreakdown:
    _nonneg(n)
    m = n + 1
    return CountBreakdown((2, (2 * n + 3) ** 2, 2 * m**2 * (2 * n + 3), m**4), _sizes(4 * n), algebraic=n == 0)


def hexagon_total(n: int) -> int:
    """Expanded polynomial form of the hexagon total."""
    return n**6 + 6 * n**5 + 21 * n**4 + 44 * n**3 + 60 * n**2 + 48 * n + 18


def diamond_total(n: int) -> int:
    return n**4 + 8 * n**3 + 24 * n**2 + 32 * n + 18


def gen_hexagon_total(n1: int, n2: int, n3: int) -> int:
    return ((n1 + 1) * (n2 + 1) * (n3 + 1) + (n1 + n2 + n3 + 3)) ** 2 + 2


def gen_diamond_total(n1: int, n2: int) -> int:
    return ((n1 + 1) * (n2 + 1) + (n1 + n2 + 3)) ** 2 + 2


def counts_for(kind: str, sides: tuple[int, ...]) -> CountBreakdown:
    table = {
        "hexagon": hexagon_counts,
        "diamond": diamond_counts,
        "gen-hexagon": gen_hexagon_counts,
        "gen-diamond": gen_diamond_counts,
    }
    return table[kind](*sides)


# Numerators in ascending powers of x; denominators are (1 - x)^power.
HEXAGON_GF = ((18, 72, 290, 220, 114, 4, 2), 7)
DIAMOND_GF = ((18, -7, 23, -13, 3), 5)


def rational_series(numerator: tuple[int, ...], power: int, count: int) -> list[int]:
    """First `count` coefficients of ``numerator(x) / (1 - x)^power``.

    Uses ``(1 - x)^-p = sum_k C(k + p - 1, p - 1) x^k``.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    binom = [comb(k + power - 1, power - 1) for k in range(count)]
    return [
        sum(numerator[i] * binom[k - i] for i in range(min(k, len(numerator) - 1) + 1))
        for k in range(count)
    ]


def hexagon_gf_series(count: int) -> list[int]:
    return rational_series(*HEXAGON_GF, count)


def diamond_gf_series(count: int) -> list[int]:
    return rational_series(*DIAMOND_GF, count)
