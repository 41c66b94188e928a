"""Skew rational functions num/den with a central denominator den in F[Y]."""

from __future__ import annotations

import math

from .errors import DivisionByZero, ZeroInverse
from .skew import SkewPolynomial, central_right_multiple, section
from .ypoly import YPolynomial, YRational


def _normalize(num: SkewPolynomial, den: YPolynomial):
    F = num.field
    r = F.r
    if not den.coeffs:
        raise DivisionByZero("zero denominator")
    if not den.is_central():
        raise ValueError("denominator must have coefficients in F")
    if not num.coeffs:
        return num, YPolynomial(F, [1])
    # powers of Y in den go to the valuation of num
    if den.val:
        num = num.shift(-r * den.val)
        den = YPolynomial(F, den.coeffs)
    den = den.monic() if den.lead() != 1 else den
    if den.degree() > 0:
        # largest central factor shared by den and every section of num
        secs = [section(num, j) for j in range(r)]
        G = den
        for s in secs:
            if s.coeffs:
                G = G.gcd(YPolynomial(F, s.coeffs))
            if G.degree() <= 0:
                break
        if G.degree() > 0:
            H = G
            for k in range(1, r):
                H = H.gcd(G.theta(k))
                if H.degree() <= 0:
                    break
            if H.degree() > 0:
                secs = [s.exact_div(H) if s.coeffs else s for s in secs]
                num = SkewPolynomial.from_sections(F, secs)
                den = den.exact_div(H)
    return num, den


class SkewRationalFunction:
    """A fraction num * den^{-1}; den is central so the side does not matter.

    Equality is decided by cross-multiplication.  Instances are mutable-free
    but deliberately unhashable since equal values may differ in form.
    """

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num: SkewPolynomial, den: YPolynomial | None = None, _normal=False):
        if den is None:
            den = YPolynomial(num.field, [1])
        if not _normal:
            num, den = _normalize(num, den)
        self.num, self.den = num, den

    @property
    def field(self):
        return self.num.field

    @classmethod
    def coerce(cls, value, field=None):
        if isinstance(value, SkewRationalFunction):
            return value
        if isinstance(value, SkewPolynomial):
            return cls(value)
        if isinstance(value, YPolynomial):
            return cls(SkewPolynomial.from_central(value))
        if isinstance(value, YRational):
            num, den = value.central_form()
            return cls(SkewPolynomial.from_central(num), den)
        if isinstance(value, int) and field is not None:
            return cls(SkewPolynomial.constant(field, field.from_int(value)))
        raise TypeError(f"cannot interpret {value!r} as a skew rational function")

    def is_zero(self):
        return not self.num.coeffs

    def __bool__(self):
        return bool(self.num.coeffs)

    def is_polynomial(self):
        return self.den.is_constant()

    def _other(self, other):
        try:
            return SkewRationalFunction.coerce(other, self.field)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else frac_add(self, o)

    def __radd__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else frac_add(o, self)

    def __neg__(self):
        return SkewRationalFunction(-self.num, self.den, _normal=True)

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else frac_add(self, -o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else frac_add(o, -self)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else frac_mul(self, o)

    def __rmul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else frac_mul(o, self)

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else frac_mul(self, frac_inverse(o))

    def __pow__(self, e):
        base = self if e >= 0 else frac_inverse(self)
        e = abs(e)
        result = SkewRationalFunction(SkewPolynomial.one(self.field))
        while e:
            if e & 1:
                result = frac_mul(result, base)
            base = frac_mul(base, base)
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        lhs = self.num * SkewPolynomial.from_central(o.den)
        rhs = o.num * SkewPolynomial.from_central(self.den)
        return lhs == rhs

    def degree(self):
        return frac_degree(self)

    def __repr__(self):
        from .parsing import format_fraction

        return f"SkewRationalFunction({format_fraction(self)})"

    def __str__(self):
        from .parsing import format_fraction

        return format_fraction(self)


def frac_add(f1, f2):
    if f1.den == f2.den:
        return SkewRationalFunction(f1.num + f2.num, f1.den)
    D1 = SkewPolynomial.from_central(f1.den)
    D2 = SkewPolynomial.from_central(f2.den)
    return SkewRationalFunction(f1.num * D2 + f2.num * D1, f1.den * f2.den)


def frac_mul(f1, f2):
    return SkewRationalFunction(f1.num * f2.num, f1.den * f2.den)


def frac_inverse(f):
    if not f.num.coeffs:
        raise ZeroInverse("inverse of zero")
    v = f.num.val
    f0 = f.num.shift(-v)
    g, N = central_right_multiple(f0)
    # f^{-1} = den * X^{-v} f0^{-1} = (X^{-v} g den) / N, den central
    num = SkewPolynomial.monomial(f.field, 1, -v) * g * SkewPolynomial.from_central(f.den)
    return SkewRationalFunction(num, N)


def frac_degree(f):
    if not f.num.coeffs:
        return -math.inf
    return f.num.degree() - f.field.r * f.den.degree()


def frac_section(f, j: int) -> YRational:
    """sec_j(num)/den as a rational function of Y over K."""
    return YRational(section(f.num, j), f.den)


def central_fraction(R: YRational) -> SkewRationalFunction:
    """Embed a rational function of Y into the skew fractions (Y = X^r)."""
    num, den = R.central_form()
    return SkewRationalFunction(SkewPolynomial.from_central(num), den)
