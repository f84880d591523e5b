"""Sparse multivariate polynomials over the rationals.

Monomials are canonical tuples of (variable, exponent) pairs sorted by
variable name; coefficients are `fractions.Fraction`.  All arithmetic is
exact.  Scalars (ints, Fractions) coerce automatically, so code written
against a generic ring of values works unchanged on Fractions and on
these polynomials.
"""

from __future__ import annotations

from fractions import Fraction


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions, and 'p/q' strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def fraction_str(value) -> str:
    """Serialize as 'num/den' with the denominator always spelled out."""
    f = as_fraction(value)
    return f"{f.numerator}/{f.denominator}"


def _mono_mul(a: tuple, b: tuple) -> tuple:
    merged = dict(a)
    for var, exp in b:
        merged[var] = merged.get(var, 0) + exp
    return tuple(sorted((v, e) for v, e in merged.items() if e))


def _mono_canonical(mono) -> tuple:
    if isinstance(mono, dict):
        items = mono.items()
    else:
        items = mono
    return tuple(sorted((v, int(e)) for v, e in items if e))


class RationalPoly:
    """A polynomial in named variables with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[tuple, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = as_fraction(coeff)
                if coeff:
                    key = _mono_canonical(mono)
                    total = clean.get(key, Fraction(0)) + coeff
                    if total:
                        clean[key] = total
                    elif key in clean:
                        del clean[key]
        self.terms = clean

    @classmethod
    def const(cls, value) -> "RationalPoly":
        return cls({(): as_fraction(value)})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "RationalPoly":
        if exp < 0:
            raise ValueError("negative exponents are not supported")
        if exp == 0:
            return cls.const(1)
        return cls({((name, exp),): Fraction(1)})

    @classmethod
    def coerce(cls, value) -> "RationalPoly":
        if isinstance(value, RationalPoly):
            return value
        return cls.const(value)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            other = as_fraction(other)
            if not other:
                return not self.terms
            return self.terms == {(): other}
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPoly.const(other)
        if not isinstance(other, RationalPoly):
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            total = out.get(mono, Fraction(0)) + coeff
            if total:
                out[mono] = total
            elif mono in out:
                del out[mono]
        result = RationalPoly.__new__(RationalPoly)
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self):
        result = RationalPoly.__new__(RationalPoly)
        result.terms = {m: -c for m, c in self.terms.items()}
        return result

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPoly.const(other)
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            scalar = as_fraction(other)
            result = RationalPoly.__new__(RationalPoly)
            if not scalar:
                result.terms = {}
            else:
                result.terms = {m: c * scalar for m, c in self.terms.items()}
            return result
        if not isinstance(other, RationalPoly):
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = _mono_mul(m1, m2)
                total = out.get(key, Fraction(0)) + c1 * c2
                if total:
                    out[key] = total
                elif key in out:
                    del out[key]
        result = RationalPoly.__new__(RationalPoly)
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = RationalPoly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def coefficient(self, mono) -> Fraction:
        """Coefficient of the given monomial ({} or {} -> constant term)."""
        return self.terms.get(_mono_canonical(mono), Fraction(0))

    def constant(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def as_constant(self) -> Fraction:
        """The value of a constant polynomial; error if any variable survives."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) != {()}:
            raise ValueError(f"polynomial is not constant: {self!r}")
        return self.terms[()]

    def variables(self) -> set:
        return {v for mono in self.terms for v, _ in mono}

    def substitute(self, assignment: dict) -> "RationalPoly":
        """Replace variables by Fractions or polynomials; partial maps allowed."""
        total = RationalPoly.const(0)
        for mono, coeff in self.terms.items():
            factor = RationalPoly.const(coeff)
            for var, exp in mono:
                if var in assignment:
                    value = RationalPoly.coerce(assignment[var])
                else:
                    value = RationalPoly.var(var)
                factor = factor * value ** exp
            total = total + factor
        return total

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (sum(e for _, e in m), m)):
            coeff = self.terms[mono]
            body = "*".join(f"{v}^{e}" if e > 1 else v for v, e in mono)
            if body:
                parts.append(f"{coeff}*{body}" if coeff != 1 else body)
            else:
                parts.append(str(coeff))
        return " + ".join(parts)
