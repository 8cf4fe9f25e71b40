"""Exact ground fields: the rationals and prime fields.

Field elements are the native elements of sympy's ``QQ`` and ``GF(p)``
domains. ``Field`` wraps the domain with parsing and canonical formatting
so reports are identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ

from .exceptions import FieldError, FieldMismatchError

Scalar = Any
ScalarLike = Union[int, str, Fraction, Rational, Any]


@lru_cache(maxsize=None)
def _domain(characteristic: int):
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class Field:
    """A ground field k, either Q (characteristic 0) or F_p."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise FieldError(f"F_p needs a prime, got {self.characteristic}")

    @classmethod
    def parse(cls, descriptor: str) -> "Field":
        """Parse a field descriptor: ``"Q"`` or ``"Fp:<prime>"``."""
        text = descriptor.strip()
        if text == "Q":
            return cls(0)
        if text.startswith("Fp:"):
            try:
                p = int(text[3:])
            except ValueError as e:
                raise FieldError(f"Invalid prime in field descriptor {descriptor!r}") from e
            return cls(p)
        raise FieldError(f"Unknown field descriptor {descriptor!r}")

    @property
    def domain(self):
        return _domain(self.characteristic)

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    def __call__(self, value: ScalarLike) -> Scalar:
        return self.element(value)

    def element(self, value: ScalarLike) -> Scalar:
        """Convert an int, a fraction string, a Fraction or a sympy Rational."""
        K = self.domain
        if isinstance(value, K.dtype):
            return value
        if isinstance(value, bool):
            raise FieldError(f"Cannot use a boolean as a field element: {value!r}")
        if isinstance(value, int):
            return K.convert(value)
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise FieldError(f"Invalid field element {value!r}") from e
        if isinstance(value, Fraction):
            return self._fraction(value.numerator, value.denominator)
        if isinstance(value, Rational):
            return self._fraction(int(value.p), int(value.q))
        try:
            return K.convert(value)
        except Exception as e:
            raise FieldError(f"Cannot convert {value!r} into {self.name}") from e

    def _fraction(self, numerator: int, denominator: int) -> Scalar:
        K = self.domain
        if self.characteristic == 0:
            return K(numerator, denominator)
        den = K.convert(denominator)
        if not den:
            raise FieldError(f"Denominator {denominator} vanishes in {self.name}")
        return K.convert(numerator) / den

    def format(self, value: Scalar) -> str:
        """Canonical text: reduced fractions over Q, representatives in [0, p) over F_p."""
        return str(self.domain.to_sympy(value))

    def to_fraction(self, value: Scalar) -> Fraction:
        r = self.domain.to_sympy(value)
        return Fraction(int(r.p), int(r.q))

    def elements(self):
        """Iterate the elements of a finite field."""
        if not self.is_finite:
            raise FieldError("Q is infinite")
        return (self.domain.convert(v) for v in range(self.characteristic))

    def require_same(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatchError(f"Field mismatch: {self.name} vs {other.name}")

    def __str__(self) -> str:
        return self.name


RATIONALS = Field(0)
