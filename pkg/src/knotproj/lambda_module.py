"""Finitely presented Z[t, t^-1]-modules given by square presentation matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .exact_matrix import LaurentMatrix, det_laurent, minors, parse_laurent_matrix
from .laurent import ONE, AlexanderClass, LaurentPoly, lp_canonicalize, lp_is_unit

__all__ = [
    "ModulePresentation",
    "NotCyclicScope",
    "is_trivial",
    "cyclic_class",
    "same_cyclic_module",
    "fitting_generators",
]


class NotCyclicScope(ValueError):
    pass


@dataclass(frozen=True)
class ModulePresentation:
    """Module with one generator per column and one relation per row.

    The 0x0 presentation is the zero module.
    """

    P: LaurentMatrix = LaurentMatrix()

    @property
    def size(self) -> int:
        return self.P.size

    @classmethod
    def cyclic(cls, relation: LaurentPoly | str | int) -> "ModulePresentation":
        """Lambda / (relation)."""
        return cls(LaurentMatrix(((LaurentPoly.coerce(relation),),)))

    @classmethod
    def parse(cls, text: str) -> "ModulePresentation":
        return cls(parse_laurent_matrix(text))


def order(M: ModulePresentation) -> LaurentPoly:
    return det_laurent(M.P)


def is_trivial(M: ModulePresentation) -> bool:
    return lp_is_unit(order(M))


def cyclic_class(M: ModulePresentation) -> AlexanderClass:
    return lp_canonicalize(order(M))


def same_cyclic_module(M1: ModulePresentation, M2: ModulePresentation) -> bool:
    # Over cyclic presentations the order ideal decides isomorphism; nothing larger is attempted.
    for M in (M1, M2):
        if M.size > 1:
            raise NotCyclicScope(
                f"isomorphism is only decided for 0x0 and 1x1 presentations, got {M.size}x{M.size}"
            )
    return cyclic_class(M1) == cyclic_class(M2)


def fitting_generators(M: ModulePresentation, i: int) -> list[LaurentPoly]:
    if not 0 <= i <= M.size:
        raise IndexError(f"Fitting index {i} out of range 0..{M.size}")
    if i == M.size:
        return [ONE]
    return minors(M.P, M.size - i)
