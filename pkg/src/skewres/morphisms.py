"""The morphisms gamma_C, the derivations d_C and the canonical divided powers."""

from __future__ import annotations

from .errors import CharacteristicDividesR, ZeroC
from .field import binomial_fraction
from .rational import SkewRationalFunction, central_fraction, frac_add, frac_mul
from .skew import SkewPolynomial, twisted_norm, twisted_trace
from .ypoly import YPolynomial, YRational


def _rational(C):
    if isinstance(C, YRational):
        return C
    if isinstance(C, YPolynomial):
        return YRational(C)
    raise TypeError("C must be a YPolynomial or a YRational")


def _weighted(f: SkewPolynomial, weight):
    """sum_i a_i W(i) X^i, W(i) a rational function of Y, as a fraction."""
    F = f.field
    total = SkewRationalFunction(SkewPolynomial.zero(F))
    groups = {}
    for i, a in f.terms().items():
        w = weight(i)
        if not w:
            continue
        num, den = w.central_form()
        term = SkewPolynomial.from_central(num.scale(a)).shift(i)
        key = den
        if key in groups:
            groups[key] = groups[key] + term
        else:
            groups[key] = term
    for den, num in groups.items():
        total = frac_add(total, SkewRationalFunction(num, den))
    return total


def _as_fraction(f):
    return SkewRationalFunction.coerce(f)


def apply_morphism(C, f):
    """gamma_C(f) = sum a_i N_i(C) X^i, extended to fractions."""
    Cr = _rational(C)
    if not Cr:
        raise ZeroC("gamma_C needs C != 0")
    f = _as_fraction(f)
    cache = {}

    def weight(i):
        if i not in cache:
            cache[i] = _rational(twisted_norm(Cr, i))
        return cache[i]

    num = _weighted(f.num, weight)
    if f.den.is_constant():
        return num
    # gamma_C(D(Y)) = D(N_r(C) Y); invert it as a central fraction
    Z = _rational(twisted_norm(Cr, f.field.r)) * YRational(YPolynomial.monomial(f.field, 1, 1))
    gD = _compose(f.den, Z)
    return frac_mul(num, central_fraction(gD.inverse()))


def _compose(P: YPolynomial, Z: YRational) -> YRational:
    """P(Z) for P in K[Y] with nonnegative valuation."""
    acc = YRational(YPolynomial(P.field, []))
    for c in reversed(P.dense()):
        acc = acc * Z + YRational(YPolynomial(P.field, [c]))
    return acc


def apply_derivation(C, f):
    """d_C(f) = sum a_i Tr_i(C) X^i; quotient rule on fractions."""
    Cr = _rational(C)
    f = _as_fraction(f)
    F = f.field

    def weight(i):
        return _rational(twisted_trace(Cr, i))

    dnum = _weighted(f.num, weight)
    if f.den.is_constant():
        return dnum
    # d(D) = Tr_r(C) Y D'(Y) for central D
    D = YRational(f.den)
    dD = _rational(twisted_trace(Cr, F.r)) * YRational(YPolynomial.monomial(F, 1, 1)) * YRational(f.den.derivative())
    Dinv = central_fraction(D.inverse())
    first = frac_mul(dnum, Dinv)
    second = frac_mul(SkewRationalFunction(f.num), central_fraction(-(dD / (D * D))))
    return frac_add(first, second)


def _check_pr(F):
    if F.r % F.p == 0:
        raise CharacteristicDividesR(f"p = {F.p} divides r = {F.r}")


def _divided_power_poly(f: SkewPolynomial, n: int) -> SkewPolynomial:
    F = f.field
    r, p = F.r, F.p
    terms = {}
    for i, a in f.terms().items():
        c = binomial_fraction(i, r, n, p)
        if c:
            terms[i - r * n] = F.mul(a, c)
    return SkewPolynomial.from_dict(F, terms)


def hasse_inverse_powers(D: YPolynomial, n_max: int):
    """E_n = H_n(1/D) for n = 0..n_max, H_n the Hasse derivatives in Y."""
    F = D.field
    H = [_hasse(D, a) for a in range(n_max + 1)]
    Dr = YRational(D)
    E = [Dr.inverse()]
    for n in range(1, n_max + 1):
        acc = YRational(YPolynomial(F, []))
        for a in range(1, n + 1):
            if H[a]:
                acc = acc + YRational(H[a]) * E[n - a]
        E.append(-(acc / Dr))
    return E


def _hasse(P: YPolynomial, n: int) -> YPolynomial:
    from math import comb

    F = P.field
    terms = {}
    for k, c in P.terms().items():
        b = comb(k, n) % F.p if k >= 0 else binomial_fraction(k * F.r, F.r, n, F.p)
        if b:
            terms[k - n] = F.mul(c, b)
    return YPolynomial.from_dict(F, terms)


def canonical_divided_power(f, n: int):
    """The n-th divided power of the canonical derivation r^{-1} X^{1-r} d/dX."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if isinstance(f, SkewPolynomial):
        _check_pr(f.field)
        return _divided_power_poly(f, n)
    f = _as_fraction(f)
    F = f.field
    _check_pr(F)
    if f.den.is_constant():
        return SkewRationalFunction(_divided_power_poly(f.num, n), f.den)
    E = hasse_inverse_powers(f.den, n)
    total = SkewRationalFunction(SkewPolynomial.zero(F))
    for a in range(n + 1):
        da = _divided_power_poly(f.num, a)
        if da:
            total = frac_add(total, frac_mul(SkewRationalFunction(da), central_fraction(E[n - a])))
    return total


def canonical_derivation(f):
    return canonical_divided_power(f, 1)
