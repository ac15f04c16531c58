"""Exact determinants and minors over Z and over Z[t, t^-1]."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence, TypeVar

from .laurent import ONE, ZERO, LaurentPoly, format_poly, parse_poly

__all__ = [
    "IntMatrix",
    "LaurentMatrix",
    "det_int",
    "det_laurent",
    "det_bareiss",
    "det_cofactor",
    "minors",
    "parse_int_matrix",
    "parse_laurent_matrix",
    "format_matrix",
]

R = TypeVar("R")

# det_laurent switches to fraction-free elimination above this size.
COFACTOR_MAX_SIZE = 4


def _square_rows(entries, convert) -> tuple[tuple, ...]:
    rows = tuple(tuple(convert(x) for x in row) for row in entries)
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows but a row of length {len(row)}")
    return rows


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", _square_rows(self.entries, int))

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)) if self.entries else ())

    def __neg__(self):
        return IntMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        cols = list(zip(*other.entries))
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries)
        )

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(c * x for x in row) for row in self.entries))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def block_diagonal(cls, a: "IntMatrix", b: "IntMatrix") -> "IntMatrix":
        n, m = a.size, b.size
        rows = [list(r) + [0] * m for r in a.entries]
        rows += [[0] * n + list(r) for r in b.entries]
        return cls(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class LaurentMatrix:
    entries: tuple[tuple[LaurentPoly, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", _square_rows(self.entries, LaurentPoly.coerce))

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(tuple(zip(*self.entries)) if self.entries else ())

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_int(cls, m: IntMatrix) -> "LaurentMatrix":
        return cls(m.entries)


def det_cofactor(rows: Sequence[Sequence[R]], zero: R, one: R) -> R:
    """Determinant by Laplace expansion along the first row (n! terms)."""
    n = len(rows)
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = zero
    for j in range(n):
        a = rows[0][j]
        if a == zero:
            continue
        sub = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = a * det_cofactor(sub, zero, one)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_bareiss(
    rows: Sequence[Sequence[R]],
    zero: R,
    one: R,
    exact_div: Callable[[R, R], R],
) -> R:
    """Fraction-free Gaussian elimination over an integral domain.

    ``exact_div(a, b)`` must return a / b and raise if b does not divide a;
    every division performed here is exact in theory, so a raise is a bug.
    """
    m = [list(row) for row in rows]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k] == zero:
            for i in range(k + 1, n):
                if m[i][k] != zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(pivot * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = zero
        prev = pivot
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def _int_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"non-exact division {a} / {b}")
    return q


def det_int(m: IntMatrix) -> int:
    return det_bareiss(m.entries, 0, 1, _int_div)


def det_laurent(m: LaurentMatrix, method: str = "auto") -> LaurentPoly:
    """Determinant over Z[t, t^-1].

    ``method`` is "auto" (cofactor up to 4x4, elimination above),
    "cofactor" or "bareiss".
    """
    if method == "auto":
        method = "cofactor" if m.size <= COFACTOR_MAX_SIZE else "bareiss"
    if method == "cofactor":
        return det_cofactor(m.entries, ZERO, ONE)
    if method == "bareiss":
        return det_bareiss(m.entries, ZERO, ONE, LaurentPoly.exact_div)
    raise ValueError(f"unknown method {method!r}")


def minors(m: LaurentMatrix, k: int) -> list[LaurentPoly]:
    """All k x k minors, row subsets outer and column subsets inner, both lexicographic."""
    if not 1 <= k <= m.size:
        raise ValueError(f"minor size k={k} out of range 1..{m.size}")
    out = []
    idx = range(m.size)
    for rs in combinations(idx, k):
        for cs in combinations(idx, k):
            sub = LaurentMatrix(tuple(tuple(m.entries[i][j] for j in cs) for i in rs))
            out.append(det_laurent(sub))
    return out


# -- text format: rows split by ';', entries by ',' ---------------------------


def _split(text: str) -> list[list[str]]:
    s = text.strip()
    if not s:
        return []
    return [[e.strip() for e in row.split(",")] for row in s.split(";")]


def parse_int_matrix(text: str) -> IntMatrix:
    try:
        rows = [[int(e) for e in row] for row in _split(text)]
    except ValueError as exc:
        raise ValueError(f"malformed integer matrix {text!r}: {exc}") from None
    return IntMatrix(rows)


def parse_laurent_matrix(text: str) -> LaurentMatrix:
    return LaurentMatrix([[parse_poly(e) for e in row] for row in _split(text)])


def format_matrix(m: IntMatrix | LaurentMatrix) -> str:
    fmt = format_poly if isinstance(m, LaurentMatrix) else str
    return ";".join(",".join(fmt(x) for x in row) for row in m.entries)
