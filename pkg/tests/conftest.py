"""Shared fixtures and independent reference implementations.

The oracles below are written straight from the definitions (no kernels,
no tables beyond Field.mul/add/frob) so they can check the library code.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from skewres import GF4, GF25, GF343, SkewPolynomial, YPolynomial, get_field


@pytest.fixture(scope="session")
def F25():
    return get_field(GF25)


@pytest.fixture(scope="session")
def F343():
    return get_field(GF343)


@pytest.fixture(scope="session")
def F4():
    return get_field(GF4)


@pytest.fixture(scope="session", params=["GF25", "GF343"])
def desk(request):
    return get_field({"GF25": GF25, "GF343": GF343}[request.param])


@pytest.fixture(scope="session", params=["GF25", "GF343", "GF4"])
def anyfield(request):
    return get_field({"GF25": GF25, "GF343": GF343, "GF4": GF4}[request.param])


def naive_mul(f, g):
    """Product from X^i a = theta^i(a) X^i, term by term."""
    F = f.field
    out = {}
    for i, a in f.terms().items():
        for k, b in g.terms().items():
            c = F.mul(a, F.frob(b, i % F.r))
            out[i + k] = F.add(out.get(i + k, 0), c)
    return SkewPolynomial.from_dict(F, out)


def orbit_norm(F, a, n):
    """a theta(a) ... theta^{n-1}(a) for an element of K, n >= 0."""
    acc = 1
    for k in range(n):
        acc = F.mul(acc, F.frob(a, k))
    return acc


def binom_frac_mod(i, r, n, p):
    """binom(i/r, n) with exact rationals, then reduced mod p."""
    x = Fraction(i, r)
    acc = Fraction(1)
    for k in range(n):
        acc *= (x - k) / (k + 1)
    return acc.numerator * pow(acc.denominator, -1, p) % p


def poly_eval(F, coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def simple_pole_residue(F, num: YPolynomial, den: YPolynomial, z):
    """num(z) / den'(z) when z is a simple root of den."""
    return F.div(num(z), den.derivative()(z))
