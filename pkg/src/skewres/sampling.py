"""Seeded random generators for the check suites and tests."""

from __future__ import annotations

import random

from .rational import SkewRationalFunction
from .skew import SkewPolynomial
from .ypoly import YPolynomial, YRational


def rng(seed):
    return random.Random(seed)


def element(R, F, nonzero=False):
    lo = 1 if nonzero else 0
    return R.randrange(lo, F.order)


def base_element(R, F, nonzero=False):
    return R.randrange(1 if nonzero else 0, F.p)


def skew_poly(R, F, max_deg=6, nonzero=False, min_deg=0):
    while True:
        d = R.randint(min_deg, max_deg)
        coeffs = [element(R, F) for _ in range(d + 1)]
        coeffs[-1] = element(R, F, nonzero=True)
        if R.random() < 0.1 and not nonzero:
            return SkewPolynomial(F)
        return SkewPolynomial(F, coeffs)


def laurent_poly(R, F, max_deg=5, max_neg=3):
    v = -R.randint(0, max_neg)
    return skew_poly(R, F, max_deg, nonzero=True).shift(v)


def y_poly(R, F, max_deg=3, central=False, nonzero=True):
    d = R.randint(0, max_deg)
    pick = base_element if central else element
    coeffs = [pick(R, F) for _ in range(d + 1)]
    if nonzero:
        coeffs[-1] = pick(R, F, nonzero=True)
    return YPolynomial(F, coeffs)


def y_rational(R, F, central=False):
    num = y_poly(R, F, 2, central)
    den = y_poly(R, F, 2, True)
    return YRational(num, den)


def split_denominator(R, F, max_order=3, max_points=3, simple=False, allow_zero=True):
    """A product of (Y - z)^e with z in F, possibly times Y^e."""
    D = YPolynomial(F, [1])
    pts = list(range(0 if allow_zero else 1, F.p))
    R.shuffle(pts)
    for z in pts[: R.randint(0, max_points)]:
        e = 1 if simple and z else R.randint(1, max_order)
        D = D * YPolynomial(F, [F.neg(z), 1]) ** e
    return D


def split_fraction(R, F, max_order=3, simple=False, max_deg=6):
    """Random fraction whose denominator splits over F."""
    num = laurent_poly(R, F, max_deg, max_neg=2)
    D = split_denominator(R, F, max_order, simple=simple)
    return SkewRationalFunction(num, D)


def fraction(R, F):
    """Random fraction; the denominator need not split."""
    num = laurent_poly(R, F, 5, 2)
    D = y_poly(R, F, 3, central=True)
    return SkewRationalFunction(num, D)
