"""Weighted transfer matrices between corner states and their traces.

A corona is a closed walk through corner states: consecutive corners are
joined by one of the ``n + 1`` side states, and the weight ``x^r`` of each
transition records the lozenges it adds. The trace of the product around the
region is therefore the corona generating polynomial by lozenge count.

Concordance with the displayed exponents (``n`` is the side length)::

    x^{2+n-2} = x^n       x^{3+n-2} = x^{n+1}     x^{4+n-2} = x^{n+2}
    x^{2+n-1} = x^{n+1}   x^{3+n-1} = x^{n+2}

Entries carrying the factor ``n - 1`` count the ``L_i`` side states; the
others go through a ``Q`` or ``K`` side state.
"""

from __future__ import annotations

from .lattice import Shape
from .polyalg import PolyMatrix, Polynomial, mat_mul, mat_pow, mat_trace

HEXAGON_STATES = ("A", "B", "C", "D", "E")
# corner-1 (60 degree) diamond states; G and H are not used
DIAMOND_ACUTE_STATES = ("A", "B", "C", "D", "E", "F", "I", "J")
DIAMOND_OBTUSE_STATES = ("U", "V", "W", "X", "Y")


def _check(n: int, algebraic: bool) -> None:
    if not isinstance(n, int):
        raise TypeError("side length must be an integer")
    if n < (0 if algebraic else 1):
        raise ValueError(f"side length {n} out of range" + ("" if algebraic else " (use algebraic=True for n=0)"))


def _mono(coeff: int, exponent: int) -> Polynomial:
    return Polynomial.monomial(coeff, exponent)


def hexagon_matrix(n: int, algebraic: bool = False) -> PolyMatrix:
    """The 5x5 matrix from corner states A..E to the next corner's A..E.

    With ``algebraic=True`` n = 0 is accepted; the result is then only a
    polynomial identity, not a count.
    """
    _check(n, algebraic)
    m = n - 1
    top = [0, _mono(1, n + 1), 0, _mono(1, n), 0]
    bottom = [_mono(1, n + 1), _mono(m, n + 2), _mono(1, n + 2), _mono(m, n + 1), _mono(1, n + 1)]
    return PolyMatrix.from_rows([top, top, top, bottom, bottom])


def diamond_matrices(n1: int, n2: int | None = None, algebraic: bool = False) -> tuple[PolyMatrix, PolyMatrix]:
    """``(R, T)``: acute corner to obtuse corner along a side of length `n1`,
    then obtuse to the next acute corner along a side of length `n2`.

    `n2` defaults to `n1` (the rhombus case).
    """
    if n2 is None:
        n2 = n1
    _check(n1, algebraic)
    _check(n2, algebraic)

    a = n1
    full = [_mono(a - 1, a + 1), _mono(1, a + 1), _mono(1, a + 1), _mono(a - 1, a + 2), _mono(1, a + 2)]
    thin = [_mono(1, a), 0, 0, _mono(1, a + 1), 0]
    r = PolyMatrix.from_rows([full] * 3 + [thin] * 5)

    b = n2
    wide = [_mono(b - 1, b + 2), _mono(1, b + 1), _mono(1, b + 2), _mono(b - 1, b + 2),
            _mono(1, b + 2), _mono(1, b + 2), _mono(b - 1, b + 3), _mono(1, b + 3)]
    narrow = [_mono(1, b + 1), 0, 0, _mono(1, b + 1), 0, 0, _mono(1, b + 2), 0]
    t = PolyMatrix.from_rows([wide] * 2 + [narrow] * 3)
    return r, t


def hexagon_trace(n: int, algebraic: bool = False) -> Polynomial:
    return mat_trace(mat_pow(hexagon_matrix(n, algebraic), 6))


def gen_hexagon_trace(n1: int, n2: int, n3: int, algebraic: bool = False) -> Polynomial:
    p = mat_mul(mat_mul(hexagon_matrix(n1, algebraic), hexagon_matrix(n2, algebraic)),
                hexagon_matrix(n3, algebraic))
    return mat_trace(mat_mul(p, p))


def gen_diamond_trace(n1: int, n2: int, algebraic: bool = False) -> Polynomial:
    r, t = diamond_matrices(n1, n2, algebraic)
    rt = mat_mul(r, t)
    return mat_trace(mat_mul(rt, rt))


def diamond_trace(n: int, algebraic: bool = False) -> Polynomial:
    return gen_diamond_trace(n, n, algebraic)


def trace_polynomial(shape: Shape, algebraic: bool = False) -> Polynomial:
    """Corona polynomial of `shape`; coefficient of ``x^k`` counts k-lozenge coronas."""
    if shape.kind == "hexagon":
        return hexagon_trace(shape.sides[0], algebraic)
    if shape.kind == "diamond":
        return diamond_trace(shape.sides[0], algebraic)
    if shape.kind == "gen-hexagon":
        return gen_hexagon_trace(*shape.sides, algebraic=algebraic)
    return gen_diamond_trace(*shape.sides, algebraic=algebraic)
