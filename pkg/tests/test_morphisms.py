import pytest

from skewres import SkewPolynomial, SkewRationalFunction, YPolynomial, YRational
from skewres import apply_derivation, apply_morphism, canonical_divided_power, sampling, twisted_norm, twisted_trace
from skewres.errors import CharacteristicDividesR, ZeroC
from skewres.morphisms import canonical_derivation, hasse_inverse_powers

from conftest import binom_frac_mod


def frac(f):
    return SkewRationalFunction.coerce(f)


def test_morphism_examples(desk):
    F = desk
    R = sampling.rng(1)
    X = SkewPolynomial.X(F)
    Y = SkewPolynomial.X(F, F.r)
    for _ in range(10):
        C = sampling.y_poly(R, F, 2)
        CX = SkewPolynomial.from_central(C) * X
        assert apply_morphism(C, X) == frac(CX)
        Nr = SkewPolynomial.from_central(twisted_norm(C, F.r))
        assert apply_morphism(C, Y) == frac(Nr * Y)
        f = sampling.laurent_poly(R, F)
        assert apply_morphism(YPolynomial(F, [1]), f) == frac(f)
    with pytest.raises(ZeroC):
        apply_morphism(YPolynomial(F, []), X)


def test_morphism_on_fractions(desk):
    F = desk
    R = sampling.rng(2)
    for _ in range(10):
        C = sampling.y_poly(R, F, 1)
        f, g = sampling.split_fraction(R, F, 2), sampling.split_fraction(R, F, 2)
        assert apply_morphism(C, f * g) == apply_morphism(C, f) * apply_morphism(C, g)
        assert apply_morphism(C, f + g) == apply_morphism(C, f) + apply_morphism(C, g)


def test_derivation_examples(F25):
    F = F25
    R = sampling.rng(3)
    X = SkewPolynomial.X(F)
    for _ in range(10):
        C = sampling.y_poly(R, F, 2)
        a = sampling.element(R, F)
        assert not apply_derivation(C, SkewPolynomial.constant(F, a))
        assert apply_derivation(C, X) == frac(SkewPolynomial.from_central(C) * X)
        want = -(SkewPolynomial.from_central(C.theta(-1)) * SkewPolynomial.X(F, -1))
        assert apply_derivation(C, SkewPolynomial.X(F, -1)) == frac(want)
        Tr = SkewPolynomial.from_central(twisted_trace(C, F.r))
        assert apply_derivation(C, SkewPolynomial.X(F, F.r)) == frac(Tr * SkewPolynomial.X(F, F.r))


def test_derivation_leibniz_on_fractions(desk):
    F = desk
    R = sampling.rng(4)
    for _ in range(10):
        C = sampling.y_poly(R, F, 1)
        f, g = sampling.split_fraction(R, F, 2), sampling.split_fraction(R, F, 2)
        assert apply_derivation(C, f * g) == apply_derivation(C, f) * g + f * apply_derivation(C, g)


def test_canonical_examples(F25):
    F = F25
    assert canonical_derivation(SkewPolynomial.X(F, F.r)) == SkewPolynomial.one(F)
    assert canonical_derivation(SkewPolynomial.X(F, 3)) == SkewPolynomial(F, [4], 1)
    for n in range(1, 6):
        assert not canonical_divided_power(SkewPolynomial.one(F), n)
    f = SkewPolynomial(F, [1, 2, 3])
    assert canonical_divided_power(f, 0) == f
    with pytest.raises(ValueError):
        canonical_divided_power(f, -1)


def test_divided_power_coefficients(desk):
    F = desk
    for i in range(-6, 12):
        for n in range(8):
            got = canonical_divided_power(SkewPolynomial.X(F, i), n)
            c = binom_frac_mod(i, F.r, n, F.p)
            assert got == SkewPolynomial.from_dict(F, {i - F.r * n: c} if c else {})


def test_canonical_on_fraction_matches_quotient_rule(desk):
    # d(n/D) computed by Leibniz with Hasse derivatives, against n' D^{-1} + n (1/D)'
    F = desk
    R = sampling.rng(5)
    for _ in range(10):
        f = sampling.split_fraction(R, F, 2)
        inv_den = SkewRationalFunction(SkewPolynomial.one(F), f.den)
        d_inv = canonical_derivation(inv_den)
        want = frac(canonical_derivation(f.num)) * inv_den + frac(f.num) * d_inv
        assert canonical_derivation(f) == want


def test_hasse_inverse_powers(F25):
    F = F25
    D = YPolynomial(F, [F.neg(2), 1])
    E = hasse_inverse_powers(D, 4)
    # H_n(1/(Y - 2)) = (-1)^n / (Y - 2)^(n + 1)
    for n, e in enumerate(E):
        sign = 1 if n % 2 == 0 else F.neg(1)
        assert e == YRational(YPolynomial(F, [sign]), D ** (n + 1))


def test_refuses_when_p_divides_r(F4):
    with pytest.raises(CharacteristicDividesR):
        canonical_divided_power(SkewPolynomial.X(F4), 1)
    with pytest.raises(CharacteristicDividesR):
        canonical_divided_power(SkewRationalFunction(SkewPolynomial.X(F4), YPolynomial(F4, [1, 1])), 1)
