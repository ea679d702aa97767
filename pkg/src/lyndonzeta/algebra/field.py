"""Coefficient fields for the exact algebra layer.

A field object knows its zero and one and how to coerce plain numbers into
its elements. Elements themselves carry the arithmetic through the usual
Python operators, so the field methods below are thin wrappers.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class Field:
    """Base interface shared by ``QQ`` and the rational-function fields."""

    name = "field"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, value):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("zero has no inverse")
        return self.one() / a

    def eq(self, a, b):
        return a == b

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "QQ"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, Rational)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


def fraction_to_str(value) -> str:
    """Render a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(value))
