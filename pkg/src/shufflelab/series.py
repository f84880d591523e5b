"""Truncated formal power series in one variable.

A series is a fixed-order truncation sum(c_n * u^n, n = 0..order).  The
coefficients c_n may be Fractions or RationalPoly values (polynomials in
marker variables), mixed freely; every operation is exact and discards
nothing at or below the truncation order.

exp and log use the standard derivative recurrences

    f = exp(a):  n*f_n = sum_{k=1..n} k*a_k*f_{n-k},   a_0 = 0
    l = log(a):  l_n = (n*a_n - sum_{k=1..n-1} k*l_k*a_{n-k}) / n,  a_0 = 1

which stay inside the coefficient ring except for division by integers.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import RationalPoly, as_fraction


def _is_zero(value) -> bool:
    return value == 0


def _is_one(value) -> bool:
    return value == 1


class TruncatedSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        data = list(coeffs) if coeffs is not None else []
        data = data[: order + 1]
        data += [Fraction(0)] * (order + 1 - len(data))
        self.coeffs = data

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, [Fraction(1)])

    @classmethod
    def term(cls, order: int, n: int, coeff) -> "TruncatedSeries":
        """The single-term series coeff * u^n (zero if n exceeds the order)."""
        s = cls(order)
        if 0 <= n <= order:
            s.coeffs[n] = coeff
        return s

    def coefficient(self, n: int):
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient u^{n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def extract(self, n: int, monomial=None) -> Fraction:
        """Fraction coefficient of u^n times the given marker monomial."""
        c = self.coefficient(n)
        mono = monomial or {}
        if isinstance(c, RationalPoly):
            return c.coefficient(mono)
        if any(e for e in dict(mono).values()):
            return Fraction(0)
        return as_fraction(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            return False
        return all((a - b) == 0 for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RationalPoly)):
            other = TruncatedSeries(self.order, [other])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries(
            order, [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)]
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RationalPoly)):
            other = TruncatedSeries(self.order, [other])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, scalar) -> "TruncatedSeries":
        return TruncatedSeries(self.order, [c * scalar for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalPoly)):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if _is_zero(a):
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if _is_zero(b):
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(order, out)

    __rmul__ = __mul__

    def shift(self, m: int) -> "TruncatedSeries":
        """Multiply by u^m."""
        if m < 0:
            raise ValueError("negative shifts are not defined")
        return TruncatedSeries(self.order, [Fraction(0)] * m + self.coeffs)

    def exp(self) -> "TruncatedSeries":
        if not _is_zero(self.coeffs[0]):
            raise ValueError("exp needs a zero constant term")
        n_max = self.order
        out = [Fraction(0)] * (n_max + 1)
        out[0] = Fraction(1)
        for n in range(1, n_max + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if _is_zero(a):
                    continue
                acc = acc + (a * out[n - k]) * k
            out[n] = acc * Fraction(1, n)
        return TruncatedSeries(n_max, out)

    def log(self) -> "TruncatedSeries":
        if not _is_one(self.coeffs[0]):
            raise ValueError("log needs constant term 1")
        n_max = self.order
        out = [Fraction(0)] * (n_max + 1)
        for n in range(1, n_max + 1):
            acc = self.coeffs[n] * n
            for k in range(1, n):
                a = self.coeffs[n - k]
                if _is_zero(a) or _is_zero(out[k]):
                    continue
                acc = acc - (out[k] * a) * k
            out[n] = acc * Fraction(1, n)
        return TruncatedSeries(n_max, out)

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if isinstance(c0, RationalPoly):
            c0 = c0.as_constant()
        c0 = as_fraction(c0)
        if not c0:
            raise ValueError("inverse needs an invertible constant term")
        inv0 = Fraction(1) / c0
        n_max = self.order
        out = [Fraction(0)] * (n_max + 1)
        out[0] = inv0
        for n in range(1, n_max + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if _is_zero(a):
                    continue
                acc = acc + a * out[n - k]
            out[n] = -inv0 * acc
        return TruncatedSeries(n_max, out)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int):
            raise ValueError("series powers must be integers")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def substitute(self, assignment: dict) -> "TruncatedSeries":
        """Substitute marker variables in every coefficient."""
        out = []
        for c in self.coeffs:
            if isinstance(c, RationalPoly):
                out.append(c.substitute(assignment))
            else:
                out.append(c)
        return TruncatedSeries(self.order, out)

    def __repr__(self) -> str:
        body = " + ".join(
            f"({c})u^{n}" for n, c in enumerate(self.coeffs) if not _is_zero(c)
        )
        return f"TruncatedSeries[{body or '0'} + O(u^{self.order + 1})]"


def geometric_series(order: int, degree: int, coeff) -> TruncatedSeries:
    """1/(1 - coeff*u^degree) truncated at the given order."""
    if degree <= 0:
        raise ValueError("degree must be positive")
    s = TruncatedSeries(order)
    power = Fraction(1)
    for j in range(0, order // degree + 1):
        s.coeffs[j * degree] = power
        power = power * coeff
    return s
