import itertools

import pytest
import sympy

from coronas.closedform import (
    DIAMOND_GF,
    HEXAGON_GF,
    CountBreakdown,
    diamond_counts,
    diamond_gf_series,
    diamond_total,
    gen_diamond_counts,
    gen_diamond_total,
    gen_hexagon_counts,
    gen_hexagon_total,
    hexagon_counts,
    hexagon_gf_series,
    hexagon_total,
    rational_series,
)


def test_hexagon_counts_examples():
    b = hexagon_counts(0)
    assert b.parts == (2, 9, 6, 1) and b.total == 18 and b.algebraic
    assert hexagon_counts(1).total == 198
    assert hexagon_counts(1).sizes == (9, 10, 11, 12)
    assert not hexagon_counts(1).algebraic


def test_diamond_counts_examples():
    assert diamond_counts(0).parts == (2, 9, 6, 1)
    assert diamond_counts(0).total == 18
    assert diamond_counts(2).total == 258
    for n in range(8):
        assert diamond_counts(n).parts[3] == (n + 1) ** 4


@pytest.mark.parametrize("n", range(0, 30))
def test_totals_equal_expanded_polynomials(n):
    assert hexagon_counts(n).total == hexagon_total(n)
    assert diamond_counts(n).total == diamond_total(n)


@pytest.mark.parametrize("n", range(0, 11))
def test_generalized_specialize(n):
    assert gen_hexagon_counts(n, n, n) == hexagon_counts(n)
    assert gen_diamond_counts(n, n) == diamond_counts(n)


def test_generalized_examples():
    assert gen_hexagon_counts(1, 2, 3).total == 1091 == gen_hexagon_total(1, 2, 3)
    assert gen_hexagon_counts(1, 2, 3).parts == (2, 81, 432, 576)
    assert gen_diamond_counts(1, 2).total == 146 == gen_diamond_total(1, 2)


def test_generalized_symmetry():
    for sides in itertools.product(range(0, 4), repeat=3):
        ref = gen_hexagon_counts(*sides)
        for perm in itertools.permutations(sides):
            assert gen_hexagon_counts(*perm) == ref
        assert ref.total == gen_hexagon_total(*sides)
    for a, b in itertools.product(range(0, 6), repeat=2):
        assert gen_diamond_counts(a, b) == gen_diamond_counts(b, a)
        assert gen_diamond_counts(a, b).total == gen_diamond_total(a, b)


def test_perfect_square_structure():
    for sides in itertools.product(range(0, 4), repeat=3):
        b = gen_hexagon_counts(*sides)
        assert b.parts[2] ** 2 == 4 * b.parts[1] * b.parts[3]
    for n in range(10):
        b = hexagon_counts(n)
        assert b.parts[2] ** 2 == 4 * b.parts[1] * b.parts[3]


def test_rejects_negative_sides():
    with pytest.raises(ValueError):
        hexagon_counts(-1)
    with pytest.raises(ValueError):
        gen_diamond_counts(2, -1)


def test_breakdown_validates_sizes():
    with pytest.raises(ValueError):
        CountBreakdown((1, 1, 1, 1), (3, 4, 6, 7))


def test_gf_examples():
    h = hexagon_gf_series(2)
    assert h == [18, 18 * 7 + 72] == [18, 198]
    d = diamond_gf_series(2)
    assert d == [18, 18 * 5 - 7] == [18, 83]


def test_gf_matches_closed_form():
    assert hexagon_gf_series(21) == [hexagon_counts(n).total for n in range(21)]
    assert diamond_gf_series(21) == [diamond_counts(n).total for n in range(21)]


def test_gf_against_sympy_series():
    x = sympy.symbols("x")
    for (num, power), series in [(HEXAGON_GF, hexagon_gf_series), (DIAMOND_GF, diamond_gf_series)]:
        expr = sum(c * x**i for i, c in enumerate(num)) / (1 - x) ** power
        poly = sympy.Poly(sympy.series(expr, x, 0, 12).removeO(), x)
        expected = [int(poly.coeff_monomial(x**k)) for k in range(12)]
        assert series(12) == expected


def test_rational_series_rejects_empty():
    with pytest.raises(ValueError):
        rational_series((1,), 1, 0)
    assert rational_series((1,), 1, 4) == [1, 1, 1, 1]
