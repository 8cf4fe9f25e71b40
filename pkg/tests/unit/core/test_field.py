"""Unit tests for exact ground fields."""

from fractions import Fraction

import pytest
from sympy import Rational

from smashcalc.core import Field, RATIONALS
from smashcalc.core.exceptions import FieldError, FieldMismatchError


class TestFieldParsing:
    """Test field descriptors."""

    def test_parse_rationals(self):
        """Test that "Q" gives characteristic zero."""
        F = Field.parse("Q")
        assert F.characteristic == 0
        assert F.name == "Q"
        assert not F.is_finite

    def test_parse_prime_field(self):
        """Test that "Fp:5" gives F_5."""
        F = Field.parse(" Fp:5 ")
        assert F.characteristic == 5
        assert F.name == "Fp:5"
        assert F.is_finite

    @pytest.mark.parametrize("descriptor", ["R", "Fp:x", "Fp:4", "GF(3)"])
    def test_parse_rejects_bad_descriptors(self, descriptor):
        """Test that unknown descriptors and non-primes are rejected."""
        with pytest.raises(FieldError):
            Field.parse(descriptor)


class TestFieldElements:
    """Test conversion and formatting of field elements."""

    def test_rational_inputs_agree(self):
        """Test that ints, strings, Fractions and sympy Rationals convert alike."""
        F = RATIONALS
        assert F.element("1/2") == F.element(Fraction(1, 2)) == F.element(Rational(1, 2))
        assert F.format(F.element("2/4")) == "1/2"
        assert F.format(F.element(-3)) == "-3"

    def test_prime_field_fractions(self):
        """Test that 1/2 in F_5 is 3 and formats in [0, p)."""
        F = Field(5)
        half = F.element("1/2")
        assert F.format(half) == "3"
        assert F.format(F.element(-1)) == "4"
        assert half * F.element(2) == F.one

    def test_vanishing_denominator(self):
        """Test that 1/5 has no meaning in F_5."""
        with pytest.raises(FieldError):
            Field(5).element("1/5")

    def test_booleans_rejected(self):
        """Test that booleans are not accepted as scalars."""
        with pytest.raises(FieldError):
            RATIONALS.element(True)

    def test_finite_field_elements(self):
        """Test enumeration of a prime field."""
        F = Field(3)
        assert [F.format(x) for x in F.elements()] == ["0", "1", "2"]
        with pytest.raises(FieldError):
            list(RATIONALS.elements())

    def test_require_same(self):
        """Test that mixing fields raises."""
        RATIONALS.require_same(Field(0))
        with pytest.raises(FieldMismatchError):
            RATIONALS.require_same(Field(2))
