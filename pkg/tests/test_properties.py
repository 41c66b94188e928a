"""Ring axioms and structural invariants as hypothesis properties."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from skewres import GF4, GF25, GF343, SkewPolynomial, SkewRationalFunction, YPolynomial, get_field
from skewres import apply_morphism, euclid, expand_canonical, frac_inverse, left_divide, right_divide, section
from skewres.skew import central_right_multiple

from conftest import naive_mul

FIELDS = [get_field(GF25), get_field(GF343), get_field(GF4)]
settings.register_profile("skewres", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("skewres")

fields = st.sampled_from(FIELDS)


@st.composite
def polys(draw, F, max_len=6, nonzero=False, laurent=True):
    coeffs = draw(st.lists(st.integers(0, F.order - 1), min_size=1 if nonzero else 0, max_size=max_len))
    if nonzero and not any(coeffs):
        coeffs[-1] = 1
    val = draw(st.integers(-3, 3)) if laurent else 0
    return SkewPolynomial(F, coeffs, val)


@st.composite
def field_and(draw, n, **kw):
    F = draw(fields)
    return F, [draw(polys(F, **kw)) for _ in range(n)]


@given(field_and(3))
def test_associative(data):
    _, (a, b, c) = data
    assert (a * b) * c == a * (b * c)


@given(field_and(3))
def test_distributive(data):
    _, (a, b, c) = data
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(field_and(2))
def test_product_matches_definition(data):
    _, (a, b) = data
    assert a * b == naive_mul(a, b)


@given(field_and(1))
def test_identities(data):
    F, (a,) = data
    one = SkewPolynomial.one(F)
    assert a * one == one * a == a
    assert a + SkewPolynomial.zero(F) == a
    assert a - a == SkewPolynomial.zero(F)


@given(field_and(1))
def test_theta_has_order_r(data):
    F, (a,) = data
    assert a.theta(F.r) == a
    assert a.theta(1).theta(-1) == a


@given(st.data())
def test_division(data):
    F = data.draw(fields)
    A = data.draw(polys(F, 9, laurent=False))
    B = data.draw(polys(F, 5, nonzero=True, laurent=False))
    Q, R = right_divide(A, B)
    assert Q * B + R == A and R.degree() < B.degree()
    Q, R = left_divide(A, B)
    assert B * Q + R == A and R.degree() < B.degree()


@given(st.data())
def test_gcd_bezout(data):
    F = data.draw(fields)
    f = data.draw(polys(F, 5, nonzero=True, laurent=False))
    g = data.draw(polys(F, 5, nonzero=True, laurent=False))
    d, u, v = euclid("rgcd", f, g)
    assert u * f + v * g == d
    d, u, v = euclid("lgcd", f, g)
    assert f * u + g * v == d


@given(st.data())
def test_central_multiple(data):
    F = data.draw(fields)
    f = data.draw(polys(F, 5, nonzero=True, laurent=False))
    g, N = central_right_multiple(f)
    NN = SkewPolynomial.from_central(N)
    assert f * g == NN == g * f and N.is_central()
    a = data.draw(st.integers(0, F.order - 1))
    c = SkewPolynomial.constant(F, a)
    assert NN * c == c * NN


@given(field_and(1), st.integers(-5, 5))
def test_sections(data, j):
    F, (f,) = data
    assert SkewPolynomial.from_sections(F, [section(f, i) for i in range(F.r)]) == f
    assert section(f, j - F.r) == section(f, j).shift(1)


@given(st.data())
def test_fraction_field(data):
    F = data.draw(fields)
    num = data.draw(polys(F, 4, nonzero=True))
    den = YPolynomial(F, data.draw(st.lists(st.integers(0, F.p - 1), min_size=1, max_size=3)) + [1])
    f = SkewRationalFunction(num, den)
    inv = frac_inverse(f)
    assert f * inv == 1 == inv * f


@given(st.data())
def test_morphism_multiplicative(data):
    F = data.draw(fields)
    f = data.draw(polys(F, 4))
    g = data.draw(polys(F, 4))
    C = YPolynomial(F, data.draw(st.lists(st.integers(0, F.order - 1), min_size=1, max_size=2)) + [1])
    assert apply_morphism(C, f * g) == apply_morphism(C, f) * apply_morphism(C, g)


@given(st.data())
def test_canonical_taylor_multiplicative(data):
    F = data.draw(st.sampled_from(FIELDS[:2]))
    f = data.draw(polys(F, 5))
    g = data.draw(polys(F, 5))
    z = data.draw(st.integers(1, F.p - 1))
    a, b = expand_canonical(f, z, 5), expand_canonical(g, z, 5)
    assert (a * b).same_to(expand_canonical(f * g, z, 5))
