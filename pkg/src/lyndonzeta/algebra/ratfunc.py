"""Rational functions over QQ in one variable, kept in canonical form."""

from __future__ import annotations

import json
from fractions import Fraction

from .field import QQ, Field
from .polynomial import Polynomial, format_poly, poly_gcd


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


class RationalFunction:
    """Quotient ``num/den`` of polynomials over QQ.

    The representation is canonical: gcd(num, den) = 1 and den is monic,
    with zero stored as 0/1. Two rational functions are equal exactly when
    their representations coincide.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str | None = None):
        if not isinstance(num, Polynomial):
            num = Polynomial([num], QQ, var or "z")
        if den is None:
            den = Polynomial([1], QQ, num.var)
        elif not isinstance(den, Polynomial):
            den = Polynomial([den], QQ, num.var)
        if var is not None:
            num, den = num.with_var(var), den.with_var(var)
        elif den.var != num.var:
            den = den.with_var(num.var)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num = num
            self.den = Polynomial([1], QQ, num.var)
            return
        if den.degree > 0 and num.degree >= 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lc = den.lc
        if lc != 1:
            num, den = num / lc, den / lc
        self.num = num
        self.den = den

    @classmethod
    def _trusted(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        # caller guarantees canonical form
        f = cls.__new__(cls)
        f.num = num
        f.den = den
        return f

    @classmethod
    def constant(cls, c, var: str = "z") -> "RationalFunction":
        return cls._trusted(Polynomial([c], QQ, var), Polynomial([1], QQ, var))

    @classmethod
    def variable(cls, var: str = "z") -> "RationalFunction":
        return cls._trusted(Polynomial([0, 1], QQ, var), Polynomial([1], QQ, var))

    @property
    def var(self) -> str:
        return self.num.var

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def equals_cross(self, other: "RationalFunction") -> bool:
        """Equality by cross-multiplication, independent of canonical form."""
        return self.num * other.den == other.num * self.den

    def _lift(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial) and other.field == QQ:
            return RationalFunction(other.with_var(self.var))
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(Fraction(other), self.var)
        raise TypeError(f"cannot combine RationalFunction with {type(other).__name__}")

    # -- field arithmetic -------------------------------------------------

    def __neg__(self):
        return RationalFunction._trusted(-self.num, self.den)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        if other.den.degree == 0:
            return RationalFunction._trusted(self.num + other.num * self.den, self.den)
        if self.den.degree == 0:
            return RationalFunction._trusted(self.num * other.den + other.num, other.den)
        g = poly_gcd(self.den, other.den)
        if g.degree == 0:
            return RationalFunction(self.num * other.den + other.num * self.den,
                                    self.den * other.den)
        d1, d2 = self.den // g, other.den // g
        return RationalFunction(self.num * d2 + other.num * d1, self.den * d2)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RationalFunction.constant(0, self.var)
            return RationalFunction._trusted(self.num * Fraction(other), self.den)
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        if not self.num or not other.num:
            return RationalFunction.constant(0, self.var)
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d) if d.degree > 0 and a.degree > 0 else None
        g2 = poly_gcd(c, b) if b.degree > 0 and c.degree > 0 else None
        if g1 is not None and g1.degree > 0:
            a, d = a // g1, d // g1
        if g2 is not None and g2.degree > 0:
            c, b = c // g2, b // g2
        num, den = a * c, b * d
        lc = den.lc
        if lc != 1:
            num, den = num / lc, den / lc
        return RationalFunction._trusted(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        num, den = self.den, self.num
        lc = den.lc
        return RationalFunction._trusted(num / lc, den / lc)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return RationalFunction._trusted(self.num / Fraction(other), self.den)
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction._trusted(self.num ** e, self.den ** e)

    # -- evaluation and calculus -----------------------------------------

    def __call__(self, point):
        return rf_eval(self, point)

    def compose(self, inner: "RationalFunction") -> "RationalFunction":
        """Substitute ``inner`` for the variable."""
        return rf_eval(self, inner)

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def with_var(self, var: str) -> "RationalFunction":
        return RationalFunction._trusted(self.num.with_var(var), self.den.with_var(var))

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data, var: str = "z") -> "RationalFunction":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(Polynomial.from_json(data["num"], QQ, var),
                   Polynomial.from_json(data["den"], QQ, var))

    def __str__(self):
        return format_rf(self)

    def __repr__(self):
        return f"RationalFunction({self})"


def rf_reduce(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Canonical reduced form of ``num/den``."""
    return RationalFunction(num, den)


def rf_eval(f: RationalFunction, point):
    """Exact value ``num(point)/den(point)``.

    ``point`` may be a rational number or another rational function (which
    gives composition). Raises PoleError when the denominator vanishes.
    """
    if isinstance(point, int):
        point = Fraction(point)
    d = f.den(point)
    if not d:
        raise PoleError(f"{point} is a pole of {f}")
    n = f.num(point)
    return n / d


def _power_of_linear(den: Polynomial):
    """If ``den == (v - c)^m`` return (c, m), else None."""
    m = den.degree
    if m < 1:
        return None
    c = -den.coeffs[m - 1] / m
    lin = Polynomial([-c, 1], QQ, den.var)
    return (c, m) if lin ** m == den else None


def format_rf(f: RationalFunction) -> str:
    """Readable text such as ``-2z/(z - 1)^2``."""
    v = f.var
    num = format_poly(f.num.coeffs, v)
    if f.den.degree == 0:
        return num
    if len([c for c in f.num.coeffs if c]) > 1:
        num = f"({num})"
    lin = _power_of_linear(f.den)
    if lin is not None:
        c, m = lin
        base = v if c == 0 else f"({v} {'-' if c > 0 else '+'} {abs(c)})"
        den = base if m == 1 else f"{base}^{m}"
    else:
        den = f"({format_poly(f.den.coeffs, v)})"
    return f"{num}/{den}"


class FunctionField(Field):
    """The field QQ(var) of rational functions in one symbol."""

    def __init__(self, var: str = "z"):
        self.var = var
        self.name = f"QQ({var})"

    def zero(self):
        return RationalFunction.constant(0, self.var)

    def one(self):
        return RationalFunction.constant(1, self.var)

    def gen(self) -> RationalFunction:
        return RationalFunction.variable(self.var)

    def coerce(self, value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return RationalFunction(value.with_var(self.var))
        if isinstance(value, (int, Fraction, str)):
            return RationalFunction.constant(Fraction(value), self.var)
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.var == self.var

    def __hash__(self):
        return hash(("QQ(var)", self.var))
