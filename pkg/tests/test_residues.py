import pytest

from skewres import INF, ZERO, SkewPolynomial, section, SkewRationalFunction, YPolynomial, YRational, sampling
from skewres import bridge_check, chvar_check, gamma_star, is_gamma_regular, quotient_morphism_exists
from skewres import residue_sum, sres, sres_infinity, sres_zero, zeta_root_check
from skewres.errors import (
    CharacteristicDividesR,
    NonCentralCoefficient,
    NotRegular,
    SimplePoleRequired,
    UnsplitDenominator,
    ZeroPoint,
)
from skewres.residues import default_method, gamma_Z, pole_support
from skewres.taylor import QuotientElement

from conftest import simple_pole_residue


def lin(F, z):
    return YPolynomial(F, [F.neg(z), 1])


def frac(num, den):
    return SkewRationalFunction(num, den)


def worked_example(F):
    return frac(SkewPolynomial.X(F), lin(F, 1) * lin(F, 2))


def test_simple_residues(desk):
    F = desk
    for z in range(1, F.p):
        rec = sres(frac(SkewPolynomial.one(F), lin(F, z)), z)
        assert rec.partial == (1,) + (0,) * (F.r - 1)
        assert rec.full == QuotientElement.one(F, z, 1)
        rec = sres(frac(SkewPolynomial.X(F), lin(F, z)), z)
        assert rec.partial == (0, 1) + (0,) * (F.r - 2)


def test_worked_example(F25):
    F = F25
    f = worked_example(F)
    assert sres(f, 1).partial == (0, 4)
    assert sres(f, 1, "hensel").partial == (0, 4)
    assert bridge_check(f, 1, 1) == (4, 4, True)
    assert residue_sum(f, 1) == (0, {1: 4, 2: 1, ZERO: 0, INF: 0})
    assert list(residue_sum(f, 1)[1]) == [1, 2, ZERO, INF]


def test_infinity_and_zero(desk):
    F = desk
    for z in range(1, F.p):
        inv = frac(SkewPolynomial.one(F), lin(F, z))
        assert sres_infinity(inv, 0) == F.neg(1)
        assert all(sres_zero(inv, j) == 0 for j in range(F.r))
        assert sres_infinity(frac(SkewPolynomial.X(F), lin(F, z)), 1) == F.neg(1)
        assert residue_sum(inv, 0) == (0, {z: 1, ZERO: 0, INF: F.neg(1)})


def test_residue_sum_of_polynomials(desk):
    F = desk
    R = sampling.rng(1)
    for _ in range(10):
        f = sampling.laurent_poly(R, F)
        for j in range(F.r):
            total, br = residue_sum(f, j)
            assert total == 0 and set(br) <= {ZERO, INF}
    assert residue_sum(SkewPolynomial.zero(F), 0) == (0, {})


def test_simple_pole_residue_oracle(desk):
    # at a simple pole, the partial residue is sec_j(num)(z) / den'(z)
    F = desk
    R = sampling.rng(2)
    for _ in range(30):
        f = sampling.split_fraction(R, F, 1, simple=True)
        for z, k in pole_support(f).items():
            assert k == 1
            rec = sres(f, z)
            for j in range(F.r):
                S = section(f.num, j)
                assert rec.partial[j] == simple_pole_residue(F, S, f.den, z)


def test_methods_agree_on_simple_poles(desk):
    F = desk
    R = sampling.rng(3)
    for _ in range(30):
        f = sampling.split_fraction(R, F, 1, simple=True)
        for z in pole_support(f):
            assert sres(f, z, "canonical") == sres(f, z, "hensel")


def test_reconstruction(desk):
    F = desk
    R = sampling.rng(4)
    for _ in range(20):
        f = sampling.split_fraction(R, F, 3)
        for z in range(1, F.p):
            rec = sres(f, z)
            assert rec.rebuild_full(F) == rec.full


def test_errors(F25, F4):
    F = F25
    f = worked_example(F)
    with pytest.raises(ZeroPoint):
        sres(f, 0)
    g = frac(SkewPolynomial.X(F), lin(F, 1) ** 2)
    with pytest.raises(SimplePoleRequired):
        residue_sum(g, 1)
    with pytest.raises(SimplePoleRequired):
        bridge_check(g, 1, 1)
    assert residue_sum(g, 0)[0] == 0
    with pytest.raises(UnsplitDenominator):
        residue_sum(frac(SkewPolynomial.one(F), YPolynomial(F, [2, 0, 1])), 0)
    with pytest.raises(CharacteristicDividesR):
        sres(frac(SkewPolynomial.one(F4), lin(F4, 1)), 1, "canonical")
    assert default_method(F4) == "hensel" and default_method(F) == "canonical"


def test_zeta_root_examples(F25):
    F = F25
    for zeta in range(1, F.order):
        z = F.pow(zeta, F.r)
        if not F.in_base(z):
            continue
        f = frac(SkewPolynomial.X(F), lin(F, z))
        assert zeta_root_check(f, 1, zeta).equal
        assert zeta_root_check(f, 0, zeta) == (0, 0, True)
    with pytest.raises(ZeroPoint):
        zeta_root_check(worked_example(F), 0, 0)


def test_gamma_regularity(F25):
    F = F25
    c = YPolynomial(F, [2])
    for z in range(1, F.p):
        assert is_gamma_regular(c, z)
        assert gamma_star(c, z) == F.mul(F.pow(2, F.r), z)
    Y = YPolynomial(F, [0, 1])
    assert gamma_Z(Y) == YRational(YPolynomial(F, [0] * (F.r + 1) + [1]))
    assert gamma_star(Y, 2) == F.pow(2, F.r + 1)
    C = lin(F, 3)
    assert not is_gamma_regular(C, 3)
    with pytest.raises(NotRegular):
        gamma_star(C, 3)


def test_chvar_examples(desk):
    F = desk
    for c in range(1, F.p):
        for z in range(1, F.p):
            C = YPolynomial(F, [c])
            w = F.mul(F.pow(c, F.r), z)
            f = frac(SkewPolynomial.one(F), lin(F, w))
            cmp = chvar_check(C, z, f)
            assert cmp.equal and cmp.lhs.partial[0] == 1
    R = sampling.rng(5)
    one = YPolynomial(F, [1])
    for _ in range(10):
        f = sampling.split_fraction(R, F, 3)
        z = sampling.base_element(R, F, nonzero=True)
        assert chvar_check(one, z, f).equal


def test_chvar_with_Y(F25):
    F = F25
    Y = YPolynomial(F, [0, 1])
    for z in range(1, F.p):
        if not gamma_Z(Y).derivative()(z):
            continue
        w = gamma_star(Y, z)
        f = frac(SkewPolynomial(F, [1, F.gen()]), lin(F, w))
        assert chvar_check(Y, z, f, "simple-pole").equal
        assert chvar_check(Y, z, f, "canonical").equal


def test_chvar_refusals(F25):
    F = F25
    f = worked_example(F)
    with pytest.raises(NonCentralCoefficient):
        chvar_check(YPolynomial(F, [F.gen()]), 1, f, "canonical")
    with pytest.raises(SimplePoleRequired):
        chvar_check(YPolynomial(F, [1]), 1, frac(SkewPolynomial.X(F), lin(F, 1) ** 2), "simple-pole")
    with pytest.raises(ValueError):
        chvar_check(YPolynomial(F, [1]), 1, f, "bogus")


def test_chvar_ramified_point(F343):
    # C = 1 + Y gives Z = (1 + Y)^3 Y over GF(7), ramified where dZ/dY = (1 + Y)^2 (1 + 4Y) vanishes
    F = F343
    C = YPolynomial(F, [1, 1])
    dZ = gamma_Z(C).derivative()
    bad = [z for z in range(1, F.p) if C(z) and not dZ(z)]
    assert bad
    with pytest.raises(NotRegular):
        chvar_check(C, bad[0], worked_example(F))


def test_chvar_noncentral_simple_pole(desk):
    F = desk
    R = sampling.rng(6)
    n = 0
    while n < 20:
        C = sampling.y_poly(R, F, 1)
        z = sampling.base_element(R, F, nonzero=True)
        if not C(z) or not gamma_Z(C).derivative()(z):
            continue
        f = sampling.split_fraction(R, F, 1, simple=True)
        assert chvar_check(C, z, f, "simple-pole").equal
        n += 1


def test_quotient_morphism(F25):
    F = F25
    assert quotient_morphism_exists(2, 2, F) == (True, 1)
    assert quotient_morphism_exists(3, 1, F) == (True, F.gen())
    for z1 in range(1, F.p):
        for z2 in range(1, F.p):
            ok, c = quotient_morphism_exists(z1, z2, F)
            assert ok and F.norm(c) == F.div(z1, z2)
    with pytest.raises(ZeroPoint):
        quotient_morphism_exists(0, 1, F)
