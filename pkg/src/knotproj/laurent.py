"""Exact arithmetic in the Laurent polynomial ring Z[t, t^-1].

Polynomials are stored densely: an integer ``offset`` (the lowest exponent
carrying a nonzero coefficient) and a tuple of Python ints, lowest exponent
first.  Values are immutable and always trimmed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "AlexanderClass",
    "ZERO",
    "ONE",
    "T",
    "lp_add",
    "lp_mul",
    "lp_eval",
    "lp_is_unit",
    "lp_canonicalize",
    "lp_invert_variable",
    "parse_poly",
    "format_poly",
]


@dataclass(frozen=True)
class LaurentPoly:
    offset: int = 0
    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "offset", 0)
            object.__setattr__(self, "coefficients", ())
        else:
            object.__setattr__(self, "offset", int(self.offset) + lo)
            object.__setattr__(self, "coefficients", coeffs[lo:hi])

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls(0, (c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> "LaurentPoly":
        return cls(k, (c,))

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "LaurentPoly":
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(k, 0) for k in range(lo, hi + 1)))

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        if isinstance(x, str):
            return parse_poly(x)
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int | None:
        """Highest exponent, or None for the zero polynomial."""
        if self.is_zero():
            return None
        return self.offset + len(self.coefficients) - 1

    def to_dict(self) -> dict[int, int]:
        return {self.offset + i: c for i, c in enumerate(self.coefficients) if c}

    def coefficient(self, k: int) -> int:
        i = k - self.offset
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.offset + k, self.coefficients)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return lp_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.offset, tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return lp_add(self, -other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return lp_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not lp_is_unit(self):
                raise ValueError("only units have negative powers in Z[t, t^-1]")
            return lp_invert_unit(self) ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Divide by ``other``, raising ArithmeticError if the quotient is not in the ring."""
        q, r = _divmod_exact(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{format_poly(other)} does not divide {format_poly(self)}")
        return q

    def __call__(self, x):
        return lp_eval(self, x)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly(0, (1,))
T = LaurentPoly(1, (1,))


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    lo = min(a.offset, b.offset)
    hi = max(a.degree, b.degree)
    out = [0] * (hi - lo + 1)
    for i, c in enumerate(a.coefficients):
        out[a.offset - lo + i] += c
    for i, c in enumerate(b.coefficients):
        out[b.offset - lo + i] += c
    return LaurentPoly(lo, tuple(out))


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.is_zero() or b.is_zero():
        return ZERO
    out = [0] * (len(a.coefficients) + len(b.coefficients) - 1)
    for i, x in enumerate(a.coefficients):
        if x:
            for j, y in enumerate(b.coefficients):
                out[i + j] += x * y
    return LaurentPoly(a.offset + b.offset, tuple(out))


def lp_eval(p: LaurentPoly, x: int) -> Fraction:
    """Evaluate ``p`` at a nonzero integer, exactly.

    Returns a :class:`fractions.Fraction`; it has denominator 1 whenever the
    value is an integer (always the case for ``offset >= 0`` or ``x = ±1``).
    """
    if x == 0:
        raise ZeroDivisionError("t is invertible in Z[t, t^-1]; cannot evaluate at 0")
    acc = 0
    for c in reversed(p.coefficients):
        acc = acc * x + c
    if p.offset >= 0:
        return Fraction(acc * x**p.offset)
    return Fraction(acc, x ** (-p.offset))


def lp_is_unit(p: LaurentPoly) -> bool:
    return len(p.coefficients) == 1 and abs(p.coefficients[0]) == 1


def lp_invert_unit(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(-p.offset, p.coefficients)


def lp_invert_variable(p: LaurentPoly) -> LaurentPoly:
    """Substitute t -> t^-1."""
    if p.is_zero():
        return p
    return LaurentPoly(-p.degree, tuple(reversed(p.coefficients)))


def _divmod_exact(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    # Long division from the top; the quotient is exact only if every step divides.
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO, ZERO
    lead = b.coefficients[-1]
    rem = list(a.coefficients)
    nb = len(b.coefficients)
    if len(rem) < nb:
        return ZERO, a
    q = [0] * (len(rem) - nb + 1)
    for i in range(len(q) - 1, -1, -1):
        c = rem[i + nb - 1]
        if c == 0:
            continue
        if c % lead:
            return ZERO, a
        f = c // lead
        q[i] = f
        for j, bc in enumerate(b.coefficients):
            rem[i + j] -= f * bc
    return LaurentPoly(a.offset - b.offset, tuple(q)), LaurentPoly(a.offset, tuple(rem))


@dataclass(frozen=True)
class AlexanderClass:
    """A Laurent polynomial modulo units ±t^k, held by its normal form.

    The normal form has lowest exponent 0 and a positive leading (top-degree)
    coefficient, so t - 1 and t^2 - 3t + 1 are their own representatives.
    """

    canonical: LaurentPoly

    def is_unit(self) -> bool:
        return lp_is_unit(self.canonical)

    def is_zero(self) -> bool:
        return self.canonical.is_zero()

    def __str__(self):
        return format_poly(self.canonical)


def lp_canonicalize(p: LaurentPoly) -> AlexanderClass:
    if p.is_zero():
        return AlexanderClass(ZERO)
    coeffs = p.coefficients
    if coeffs[-1] < 0:
        coeffs = tuple(-c for c in coeffs)
    return AlexanderClass(LaurentPoly(0, coeffs))


# -- text format --------------------------------------------------------------

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)\s*(?:\*?\s*(?P<t1>t)(?:\s*\^\s*(?P<e1>[+-]?\d+))?)?
        | (?P<t2>t)(?:\s*\^\s*(?P<e2>[+-]?\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse ``t^2 - 3*t + 1``-style text; accepts ``t^-1`` and parentheses-free sums."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not first and not m.group("sign")):
            raise ValueError(f"malformed polynomial {text!r} at position {pos}")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            c = int(m.group("coef"))
            if m.group("t1"):
                k = int(m.group("e1")) if m.group("e1") is not None else 1
            else:
                k = 0
        else:
            c = 1
            k = int(m.group("e2")) if m.group("e2") is not None else 1
        terms[k] = terms.get(k, 0) + sign * c
        pos = m.end()
    return LaurentPoly.from_dict(terms)


def _format_term(c: int, k: int) -> str:
    a = abs(c)
    if k == 0:
        return str(a)
    var = "t" if k == 1 else f"t^{k}"
    return var if a == 1 else f"{a}*{var}"


def format_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, p.offset - 1, -1):
        c = p.coefficient(k)
        if not c:
            continue
        body = _format_term(c, k)
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


def poly_sum(items: Iterable[LaurentPoly]) -> LaurentPoly:
    acc = ZERO
    for p in items:
        acc = lp_add(acc, p)
    return acc
