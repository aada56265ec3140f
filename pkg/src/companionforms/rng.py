"""Reproducible random draws, portable across implementations.

The generator is a 64-bit linear congruential generator

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64

seeded with ``state = seed mod 2^64``. ``below(k)`` advances once and
returns ``(state >> 11) % k``. Draws:

* rational: numerator ``below(19) - 9``; denominator ``d = below(18) - 9``,
  bumped to ``d + 1`` when ``d >= 0`` (uniform over ``[-9, 9] \\ {0}``);
* GF(p) element: ``below(p)``.

Matrices are drawn row-major, vectors top to bottom.
"""

from __future__ import annotations

from fractions import Fraction

from .companion import CoeffVector
from .field import FieldElement, FieldSpec
from .matrix import Matrix

_MUL = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class LCG64:
    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (_MUL * self.state + _INC) & _MASK
        return self.state

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("k must be positive")
        return (self.next_u64() >> 11) % k

    def element(self, field: FieldSpec) -> FieldElement:
        if field.is_finite:
            return FieldElement(field, self.below(field.modulus))
        num = self.below(19) - 9
        den = self.below(18) - 9
        if den >= 0:
            den += 1
        return FieldElement(field, Fraction(num, den))

    def nonzero_element(self, field: FieldSpec) -> FieldElement:
        while True:
            x = self.element(field)
            if not x.is_zero():
                return x

    def elements(self, field: FieldSpec, count: int) -> list[FieldElement]:
        return [self.element(field) for _ in range(count)]

    def matrix(self, field: FieldSpec, rows: int, cols: int) -> Matrix:
        return Matrix(field, [self.elements(field, cols) for _ in range(rows)])

    def coeffs(self, field: FieldSpec, n: int) -> CoeffVector:
        return CoeffVector(field, self.elements(field, n))
