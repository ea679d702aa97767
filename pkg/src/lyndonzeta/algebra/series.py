"""Truncated formal power series with a fixed, explicit order."""

from __future__ import annotations

from fractions import Fraction

from .field import QQ, Field


class NonInvertibleError(ZeroDivisionError):
    """Constant term of a series is not a unit."""


class PowerSeries:
    """``c_0 + c_1 t + ... + c_{order-1} t^{order-1} + O(t^order)``."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field: Field = QQ):
        self.coeffs = tuple(field.coerce(c) for c in coeffs)
        self.field = field

    @classmethod
    def _trusted(cls, coeffs, field):
        s = cls.__new__(cls)
        s.coeffs = tuple(coeffs)
        s.field = field
        return s

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries._trusted(self.coeffs[:order], self.field)

    def __neg__(self):
        return PowerSeries._trusted([-c for c in self.coeffs], self.field)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries._trusted([self.coeffs[i] + other.coeffs[i] for i in range(n)],
                                    self.field)

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "PowerSeries":
        return PowerSeries._trusted([x * c for x in self.coeffs], self.field)

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by ``t^k`` keeping the order fixed."""
        zero = self.field.zero()
        return PowerSeries._trusted(([zero] * k + list(self.coeffs))[: self.order], self.field)

    def egf_values(self) -> list:
        """Coefficients rescaled by ``n!``, i.e. the exponential-generating values."""
        out, fact = [], 1
        for n, c in enumerate(self.coeffs):
            if n:
                fact *= n
            out.append(c * fact)
        return out


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    zero = a.field.zero()
    out = []
    for i in range(n):
        acc = zero
        for j in range(i + 1):
            x = ac[j]
            if x:
                y = bc[i - j]
                if y:
                    acc = acc + x * y
        out.append(acc)
    return PowerSeries._trusted(out, a.field)


def ps_inverse(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse to the same order.

    Uses the triangular recurrence ``b_n = -(1/a_0) * sum_{j=1..n} a_j b_{n-j}``.
    """
    if not a.coeffs:
        return a
    a0 = a.coeffs[0]
    if not a0:
        raise NonInvertibleError("constant term is zero; series has no inverse")
    inv0 = a.field.one() / a0
    ac = a.coeffs
    b = [inv0]
    zero = a.field.zero()
    for n in range(1, a.order):
        acc = zero
        for j in range(1, n + 1):
            x = ac[j]
            if x:
                acc = acc + x * b[n - j]
        b.append(-(acc * inv0))
    return PowerSeries._trusted(b, a.field)


def ps_exp_poly(x, order: int, field: Field = QQ) -> PowerSeries:
    """Series of ``e^{t x}``: coefficient of ``t^i`` is ``x^i / i!``.

    ``x`` may be a number or a symbolic element (polynomial, rational
    function) that supports multiplication and division by integers.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if order == 0:
        return PowerSeries._trusted((), field)
    x = field.coerce(x) if isinstance(x, (int, Fraction, str)) else x
    out = [field.one()]
    for i in range(1, order):
        out.append(out[-1] * x / i)
    return PowerSeries._trusted(out, field)


def exp_series(order: int, field: Field = QQ, scale=1) -> PowerSeries:
    """Coefficients of ``e^t`` (times a constant ``scale``)."""
    out, fact = [], 1
    for i in range(order):
        if i:
            fact *= i
        out.append(field.coerce(Fraction(1, fact)) * scale if scale != 1
                   else field.coerce(Fraction(1, fact)))
    return PowerSeries._trusted(out, field)


def taylor_coeffs(f, order: int) -> PowerSeries:
    """Taylor coefficients at 0 of a rational function over QQ.

    Exact division of series: ``num * ps_inverse(den)``.
    """
    from .ratfunc import PoleError

    den = PowerSeries(list(f.den.coeffs[:order]) + [0] * max(0, order - len(f.den.coeffs)))
    num = PowerSeries(list(f.num.coeffs[:order]) + [0] * max(0, order - len(f.num.coeffs)))
    if order and not den.coeffs[0]:
        raise PoleError("0 is a pole; no Taylor expansion at the origin")
    return ps_mul(num, ps_inverse(den))
