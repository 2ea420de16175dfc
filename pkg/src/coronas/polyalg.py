"""Sparse univariate integer polynomials in ``x`` and dense matrices of them."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence, Union

Scalar = int


class Polynomial:
    """Immutable polynomial stored as ``{exponent: coefficient}`` without zeros."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, int], None] = None):
        clean = {}
        for k, c in (terms or {}).items():
            if k < 0:
                raise ValueError(f"negative exponent {k}")
            if c:
                clean[int(k)] = int(c)
        self._terms = clean

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> Polynomial:
        return cls({exponent: coeff})

    @classmethod
    def promote(cls, value: Union[Polynomial, int]) -> Polynomial:
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, int):
            return cls({0: value})
        raise TypeError(f"cannot promote {type(value).__name__} to Polynomial")

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Highest exponent; -1 for the zero polynomial."""
        return max(self._terms, default=-1)

    def __call__(self, value: int) -> int:
        return sum(c * value**k for k, c in self._terms.items())

    def __add__(self, other) -> Polynomial:
        other = Polynomial.promote(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-Polynomial.promote(other))

    def __rsub__(self, other) -> Polynomial:
        return Polynomial.promote(other) - self

    def __mul__(self, other) -> Polynomial:
        other = Polynomial.promote(other)
        out: dict[int, int] = {}
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power")
        out = Polynomial({0: 1})
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.promote(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def format(self, ascending: bool = False) -> str:
        """Render as e.g. ``2*x^9 + 36*x^10``."""
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, reverse=not ascending):
            c = self._terms[k]
            if k == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "x" if k == 1 else f"x^{k}"
            else:
                body = f"{abs(c)}*x" if k == 1 else f"{abs(c)}*x^{k}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()!r})"


ZERO = Polynomial()
ONE = Polynomial({0: 1})
X = Polynomial({1: 1})


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


class PolyMatrix:
    """Dense row-major matrix with `Polynomial` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Polynomial.promote(e) for e in entries)
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> PolyMatrix:
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise ValueError("ragged rows")
        return cls(len(rows), widths.pop(), [e for r in rows for e in r])

    @classmethod
    def identity(cls, size: int) -> PolyMatrix:
        return cls(size, size, [ONE if i == j else ZERO for i in range(size) for j in range(size)])

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Polynomial, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Polynomial, ...]:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[Polynomial]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(e.format() for e in self.row(i)) for i in range(self.rows))
        return f"PolyMatrix({self.rows}x{self.cols}: {body})"


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    out = []
    cols = [b.column(j) for j in range(b.cols)]
    for i in range(a.rows):
        row = a.row(i)
        for col in cols:
            acc = ZERO
            for p, q in zip(row, col):
                if not p.is_zero() and not q.is_zero():
                    acc = acc + p * q
            out.append(acc)
    return PolyMatrix(a.rows, b.cols, out)


def mat_pow(a: PolyMatrix, e: int) -> PolyMatrix:
    if a.rows != a.cols:
        raise ValueError(f"power of non-square matrix {a.shape}")
    if e < 0:
        raise ValueError("negative power")
    out = PolyMatrix.identity(a.rows)
    for _ in range(e):
        out = mat_mul(out, a)
    return out


def mat_trace(a: PolyMatrix) -> Polynomial:
    if a.rows != a.cols:
        raise ValueError(f"trace of non-square matrix {a.shape}")
    acc = ZERO
    for i in range(a.rows):
        acc = acc + a[i, i]
    return acc
