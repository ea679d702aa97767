"""Dense univariate polynomials over an exact field."""

from __future__ import annotations

import json
from fractions import Fraction

from .field import QQ, Field, fraction_to_str


class Polynomial:
    """Immutable dense polynomial, coefficients in ascending degree.

    Trailing zeros are trimmed, so the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "field", "var")

    def __init__(self, coeffs=(), field: Field = QQ, var: str = "x"):
        cs = [field.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field
        self.var = var

    @classmethod
    def _trusted(cls, coeffs, field, var):
        # coeffs already coerced; only trims
        p = cls.__new__(cls)
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        p.coeffs = tuple(cs)
        p.field = field
        p.var = var
        return p

    @classmethod
    def constant(cls, c, field: Field = QQ, var: str = "x") -> "Polynomial":
        return cls([c], field, var)

    @classmethod
    def monomial(cls, degree: int, c=1, field: Field = QQ, var: str = "x") -> "Polynomial":
        return cls([0] * degree + [c], field, var)

    @classmethod
    def gen(cls, field: Field = QQ, var: str = "x") -> "Polynomial":
        return cls([0, 1], field, var)

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            return self.field.zero()
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Polynomial.constant(other, self.field, self.var).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other], self.field, self.var)

    # -- ring arithmetic --------------------------------------------------

    def __neg__(self):
        return Polynomial._trusted([-c for c in self.coeffs], self.field, self.var)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            if _is_series(other):
                return NotImplemented
            try:
                other = self._lift(other)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._trusted(out, self.field, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = self._lift(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if _is_series(other):
                return NotImplemented
            try:
                c = self.field.coerce(other)
            except TypeError:
                return NotImplemented
            return Polynomial._trusted([x * c for x in self.coeffs], self.field, self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._trusted((), self.field, self.var)
        zero = self.field.zero()
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Polynomial._trusted(out, self.field, self.var)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, scalar):
        if isinstance(scalar, Polynomial):
            if scalar.degree != 0:
                raise TypeError("polynomial division by a non-constant; use divmod")
            scalar = scalar.coeffs[0]
        inv = self.field.one() / scalar
        return self * inv

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1, self.field, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Polynomial._trusted((), self.field, self.var), self
        inv_lc = self.field.one() / other.lc
        quot = [self.field.zero()] * (len(rem) - db)
        bc = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c * inv_lc
            quot[i - db] = q
            for j in range(db + 1):
                rem[i - db + j] = rem[i - db + j] - q * bc[j]
        return (Polynomial._trusted(quot, self.field, self.var),
                Polynomial._trusted(rem[:db], self.field, self.var))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- calculus and evaluation -----------------------------------------

    def __call__(self, point):
        """Horner evaluation; ``point`` may be a scalar or anything that
        supports ring arithmetic with the coefficients (e.g. another
        polynomial or a rational function)."""
        result = self.field.zero()
        for c in reversed(self.coeffs):
            result = result * point + c
        return result

    def derivative(self) -> "Polynomial":
        return Polynomial._trusted([c * i for i, c in enumerate(self.coeffs) if i],
                                   self.field, self.var)

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self / self.lc

    def reversed(self, degree: int | None = None) -> "Polynomial":
        """Return ``x^degree * p(1/x)``; ``degree`` defaults to ``self.degree``."""
        if degree is None:
            degree = self.degree
        if degree < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        cs = list(self.coeffs) + [self.field.zero()] * (degree + 1 - len(self.coeffs))
        return Polynomial._trusted(cs[::-1], self.field, self.var)

    def with_var(self, var: str) -> "Polynomial":
        return Polynomial._trusted(self.coeffs, self.field, var)

    # -- presentation -----------------------------------------------------

    def to_json(self) -> list:
        return [_coeff_to_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data, field: Field = QQ, var: str = "x") -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls([Fraction(c) for c in data], field, var)

    def __str__(self):
        return format_poly(self.coeffs, self.var)

    def __repr__(self):
        return f"Polynomial({self}, var={self.var!r})"


def _is_series(obj) -> bool:
    return type(obj).__name__ == "PowerSeries"


def _coeff_to_json(c):
    if isinstance(c, (int, Fraction)):
        return fraction_to_str(c)
    if hasattr(c, "to_json"):
        return c.to_json()
    return str(c)


def _coeff_str(c) -> tuple[str, bool]:
    # (text, is_atomic) -- atomic text needs no parentheses in a product
    if isinstance(c, (int, Fraction)):
        return str(c), True
    s = str(c)
    return s, False


def format_poly(coeffs, var: str) -> str:
    """Human-readable form, highest degree first: ``z^2 + 4z + 1``."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        text, atomic = _coeff_str(c)
        neg = atomic and text.startswith("-")
        if neg:
            text = text[1:]
        if i == 0:
            body = text if atomic else f"({text})"
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if atomic and text == "1":
                body = mono
            elif atomic:
                body = f"{text}{mono}" if "/" not in text else f"({text}){mono}"
            else:
                body = f"({text}){mono}"
        terms.append(("-" if neg else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm; ``gcd(0, 0) = 0``."""
    a, b = a.monic(), b.monic()
    while b:
        a, b = b, (a % b).monic()
    return a


class PolynomialRing(Field):
    """Ring of polynomials over ``base`` in ``var``.

    Only the ring operations are available; ``inv`` works for nonzero
    constants. Lets power series carry symbolic polynomial coefficients.
    """

    def __init__(self, base: Field = QQ, var: str = "x"):
        self.base = base
        self.var = var
        self.name = f"{base.name}[{var}]"

    def zero(self):
        return Polynomial((), self.base, self.var)

    def one(self):
        return Polynomial([1], self.base, self.var)

    def gen(self) -> Polynomial:
        return Polynomial([0, 1], self.base, self.var)

    def coerce(self, value):
        if isinstance(value, Polynomial):
            return value
        return Polynomial([value], self.base, self.var)

    def inv(self, a):
        if a.degree != 0:
            raise ZeroDivisionError("only nonzero constants are units")
        return Polynomial([self.base.one() / a.lc], self.base, self.var)

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing) and other.base == self.base
                and other.var == self.var)

    def __hash__(self):
        return hash(("poly", self.base, self.var))
