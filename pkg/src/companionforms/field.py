"""Exact scalar arithmetic over the rationals and over prime fields GF(p).

A :class:`FieldSpec` names the field; a :class:`FieldElement` is an immutable
value in canonical form (reduced fraction, or residue in ``[0, p)``), so
equality is structural.

>>> F = GF(5)
>>> F(3) + F(4)
GF(5)(2)
>>> Q.parse("-3/6")
Q(-1/2)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import gmpy2

from .errors import DivisionByZero, FieldMismatch, ParseError

RATIONALS = "Q"
PRIME_FIELD = "GF"

_RATIONAL_RE = re.compile(r"^([+-]?)(\d+)(?:/(\d+))?$")
_INTEGER_RE = re.compile(r"^[+-]?\d+$")

Scalar = Union["FieldElement", int, Fraction]


@dataclass(frozen=True)
class FieldSpec:
    """A field: ``kind`` is ``"Q"`` or ``"GF"``; ``modulus`` is set only for GF."""

    kind: str
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise ValueError("the rationals take no modulus")
        elif self.kind == PRIME_FIELD:
            m = self.modulus
            if not isinstance(m, int) or m < 2 or not gmpy2.is_prime(m):
                raise ValueError(f"GF modulus must be prime, got {m!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    # -- construction -------------------------------------------------
    @classmethod
    def from_tag(cls, tag: str) -> FieldSpec:
        """Parse ``"Q"`` or ``"GF:p"``."""
        tag = tag.strip()
        if tag == "Q":
            return cls(RATIONALS)
        if tag.startswith("GF:"):
            digits = tag[3:]
            if not digits.isdigit():
                raise ParseError(f"bad field tag {tag!r}")
            try:
                return cls(PRIME_FIELD, int(digits))
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        raise ParseError(f"bad field tag {tag!r}; expected 'Q' or 'GF:p'")

    @property
    def tag(self) -> str:
        return "Q" if self.kind == RATIONALS else f"GF:{self.modulus}"

    @property
    def is_finite(self) -> bool:
        return self.kind == PRIME_FIELD

    def __str__(self) -> str:
        return self.tag

    def __repr__(self) -> str:
        return "Q" if self.kind == RATIONALS else f"GF({self.modulus})"

    # -- raw canonical values -----------------------------------------
    # Matrices store raw canonical values (int residues or Fractions) and
    # only wrap them as FieldElement on access; these helpers are the
    # single place canonical form is enforced.
    def canon(self, raw: int | Fraction) -> int | Fraction:
        if self.kind == RATIONALS:
            return raw if type(raw) is Fraction else Fraction(raw)
        if isinstance(raw, Fraction):
            if raw.denominator == 1:
                return raw.numerator % self.modulus
            if raw.denominator % self.modulus == 0:
                raise DivisionByZero(f"{raw} has no image in {self!r}")
            return raw.numerator * pow(raw.denominator, -1, self.modulus) % self.modulus
        return raw % self.modulus

    def raw_inv(self, raw: int | Fraction) -> int | Fraction:
        if raw == 0:
            raise DivisionByZero("inverse of zero")
        if self.kind == RATIONALS:
            return 1 / raw
        return pow(raw, -1, self.modulus)

    def coerce(self, x: Scalar | str) -> int | Fraction:
        """Raw canonical value of ``x`` in this field."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch(f"{x!r} is not in {self!r}")
            return x.value
        if isinstance(x, str):
            return self.parse(x).value
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise TypeError(f"cannot interpret {x!r} as an element of {self!r}")
        return self.canon(x)

    # -- elements -----------------------------------------------------
    def __call__(self, x: Scalar | str) -> FieldElement:
        return FieldElement(self, self.coerce(x))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, self.canon(0))

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, self.canon(1))

    def elements(self) -> list[FieldElement]:
        """All elements of a finite field, in residue order."""
        if not self.is_finite:
            raise ValueError("the rationals are infinite")
        return [FieldElement(self, v) for v in range(self.modulus)]

    def parse(self, text: str) -> FieldElement:
        """Parse an element literal.

        Rationals accept ``[sign]int[/int]``; prime fields accept a signed
        integer literal, reduced modulo ``p``.
        """
        s = text.strip().replace("−", "-")
        if self.kind == RATIONALS:
            m = _RATIONAL_RE.match(s)
            if m is None:
                raise ParseError(f"malformed rational {text!r}")
            sign, num, den = m.groups()
            num_i = int(num)
            den_i = int(den) if den is not None else 1
            if den_i == 0:
                raise DivisionByZero(f"zero denominator in {text!r}")
            value = Fraction(-num_i if sign == "-" else num_i, den_i)
            return FieldElement(self, value)
        if _INTEGER_RE.match(s) is None:
            raise ParseError(f"malformed element of {self!r}: {text!r}")
        return FieldElement(self, int(s) % self.modulus)


Q = FieldSpec(RATIONALS)


def GF(p: int) -> FieldSpec:
    return FieldSpec(PRIME_FIELD, p)


class FieldElement:
    """Immutable element of a :class:`FieldSpec`.

    Arithmetic with plain ``int``/``Fraction`` operands coerces them into
    the field; arithmetic across two different fields raises
    :class:`FieldMismatch`. Equality holds only between elements.
    """

    __slots__ = ("field", "value")

    field: FieldSpec
    value: int | Fraction

    def __init__(self, field: FieldSpec, value: int | Fraction) -> None:
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.canon(value))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other) -> int | Fraction:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.canon(other)
        return NotImplemented

    def _wrap(self, raw) -> FieldElement:
        return FieldElement(self.field, raw)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value * self.field.raw_inv(o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(o * self.field.raw_inv(self.value))

    def __neg__(self) -> FieldElement:
        return self._wrap(-self.value)

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            return self.inverse() ** (-k)
        if self.field.is_finite:
            return self._wrap(pow(self.value, k, self.field.modulus))
        return self._wrap(self.value**k)

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.raw_inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"


# Function forms of the field operations, for callers that prefer them.


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    return a * b


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def field_parse(text: str, field: FieldSpec) -> FieldElement:
    return field.parse(text)


def render(x: FieldElement) -> str:
    """Canonical text form, inverse of :meth:`FieldSpec.parse`."""
    return str(x.value)
