"""Seifert matrices of odd-dimensional knots and their Alexander invariants.

Convention: a Seifert matrix ``A`` of a (2q-1)-knot presents the middle
homology of the infinite cyclic cover by ``t*A + (-1)^q * A^T`` and is valid
when ``A + (-1)^q * A^T`` is unimodular.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .exact_matrix import IntMatrix, LaurentMatrix, det_int, det_laurent
from .laurent import AlexanderClass, LaurentPoly, format_poly, lp_canonicalize

__all__ = [
    "SeifertError",
    "NonUnimodular",
    "OddSizeSkew",
    "ParityMismatch",
    "SeifertMatrix",
    "Verdict",
    "KnottednessCertificate",
    "validate_seifert",
    "presentation_matrix",
    "alexander_polynomial",
    "alexander_class",
    "knottedness_certificate",
    "reverse",
    "mirror",
    "connected_sum",
    "random_valid_seifert",
]


class SeifertError(ValueError):
    pass


class NonUnimodular(SeifertError):
    def __init__(self, determinant: int, q: int):
        self.determinant = determinant
        self.q = q
        super().__init__(f"det(A + (-1)^{q} A^T) = {determinant}, expected +1 or -1")


class OddSizeSkew(SeifertError):
    def __init__(self, size: int, q: int):
        self.size = size
        self.q = q
        super().__init__(f"q={q} is odd, so A - A^T is skew and needs even size; got {size}")


class ParityMismatch(SeifertError):
    pass


def _sign(q: int) -> int:
    return -1 if q % 2 else 1


@dataclass(frozen=True)
class SeifertMatrix:
    """A validated Seifert matrix; build it with :func:`validate_seifert`."""

    A: IntMatrix
    q: int

    @property
    def n(self) -> int:
        """Dimension of the knot, 2q - 1."""
        return 2 * self.q - 1

    @property
    def size(self) -> int:
        return self.A.size


def validate_seifert(A: IntMatrix | list, q: int) -> SeifertMatrix:
    if not isinstance(A, IntMatrix):
        A = IntMatrix(A)
    if q < 1:
        raise SeifertError(f"q must be a positive integer, got {q}")
    if q % 2 and A.size % 2:
        raise OddSizeSkew(A.size, q)
    d = det_int(A + A.transpose().scale(_sign(q)))
    if abs(d) != 1:
        raise NonUnimodular(d, q)
    return SeifertMatrix(A, q)


def presentation_matrix(S: SeifertMatrix) -> LaurentMatrix:
    s = _sign(S.q)
    n = S.size
    A = S.A.entries
    return LaurentMatrix(
        tuple(
            tuple(LaurentPoly(0, (s * A[j][i], A[i][j])) for j in range(n))
            for i in range(n)
        )
    )


def alexander_polynomial(S: SeifertMatrix) -> LaurentPoly:
    """det(t*A + (-1)^q A^T), before normalising away units."""
    return det_laurent(presentation_matrix(S))


def alexander_class(S: SeifertMatrix) -> AlexanderClass:
    return lp_canonicalize(alexander_polynomial(S))


class Verdict(str, enum.Enum):
    TRULY_KNOTTED = "TrulyKnotted"
    NOT_DISTINGUISHED = "NotDistinguished"


@dataclass(frozen=True)
class KnottednessCertificate:
    verdict: Verdict
    evidence: AlexanderClass
    narrative: str

    def __post_init__(self):
        nontrivial = not self.evidence.is_zero() and not self.evidence.is_unit()
        if nontrivial != (self.verdict is Verdict.TRULY_KNOTTED):
            raise ValueError("verdict must be TrulyKnotted exactly when the evidence is a nonzero non-unit")

    @property
    def knotted(self) -> bool:
        return self.verdict is Verdict.TRULY_KNOTTED


def certificate_from_class(cls: AlexanderClass, source: str) -> KnottednessCertificate:
    shown = format_poly(cls.canonical)
    if cls.is_zero():
        return KnottednessCertificate(
            Verdict.NOT_DISTINGUISHED, cls, f"{source} has zero order ideal; no certificate"
        )
    if cls.is_unit():
        return KnottednessCertificate(
            Verdict.NOT_DISTINGUISHED,
            cls,
            f"{source} is generated by a unit ({shown}); the module is trivial and proves nothing",
        )
    return KnottednessCertificate(
        Verdict.TRULY_KNOTTED,
        cls,
        f"{source} = Lambda/({shown}) is a nontrivial module, so the knot bounds no ball",
    )


def knottedness_certificate(S: SeifertMatrix) -> KnottednessCertificate:
    return certificate_from_class(alexander_class(S), f"H_{S.q}(X_K) order ideal")


def reverse(S: SeifertMatrix) -> SeifertMatrix:
    """-K: transpose."""
    return SeifertMatrix(S.A.transpose(), S.q)


def mirror(S: SeifertMatrix) -> SeifertMatrix:
    """K*: negated transpose."""
    return SeifertMatrix(-S.A.transpose(), S.q)


def connected_sum(S1: SeifertMatrix, S2: SeifertMatrix) -> SeifertMatrix:
    if S1.q != S2.q:
        raise ParityMismatch(f"cannot add Seifert matrices with q={S1.q} and q={S2.q}")
    return SeifertMatrix(IntMatrix.block_diagonal(S1.A, S2.A), S1.q)


def random_valid_seifert(rng, size: int, q: int = 3, bound: int = 3) -> SeifertMatrix:
    """Random valid Seifert matrix for odd ``q``: symmetric noise plus the upper half of J.

    ``A - A^T`` is then the standard symplectic form, so unimodularity holds by
    construction.  ``rng`` is a :class:`random.Random`.
    """
    if q % 2 == 0 or size % 2:
        raise ValueError("generator covers odd q and even size only")
    A = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            A[i][j] = A[j][i] = rng.randint(-bound, bound)
    for k in range(0, size, 2):
        A[k][k + 1] += 1
    return validate_seifert(IntMatrix(A), q)
