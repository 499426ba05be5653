import cmath
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dedekindsums import (
    CycVec,
    SingularityError,
    TruncSeries,
    ValidationError,
    as_rational,
    bernoulli2,
    binom_series,
    cyc_convolve,
    format_rational,
    frac,
    sawtooth,
    series_inv,
    series_mul,
    unit_fraction_vector,
)
from dedekindsums.exactcore import roots_of_unity

rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x) < 10**6)


@pytest.mark.parametrize(
    "x, want",
    [(F(0), F(0)), (F(1, 2), F(0)), (F(1, 3), F(-1, 6)), (F(-1, 3), F(1, 6)), (F(7), F(0))],
)
def test_sawtooth_values(x, want):
    assert sawtooth(x) == want


@pytest.mark.parametrize("x, want", [(F(7, 3), F(1, 3)), (F(-1, 4), F(3, 4)), (F(5), F(0))])
def test_frac_values(x, want):
    assert frac(x) == want


@pytest.mark.parametrize("x, want", [(F(0), F(1, 6)), (F(1, 2), F(-1, 12)), (F(3, 2), F(-1, 12))])
def test_bernoulli2_values(x, want):
    assert bernoulli2(x) == want


def test_sawtooth_periodic_and_odd():
    rng = random.Random(3)
    for _ in range(1000):
        x = F(rng.randint(-10**4, 10**4), rng.randint(2, 500))
        if x.denominator == 1:
            continue
        assert sawtooth(x + 1) == sawtooth(x)
        assert sawtooth(-x) == -sawtooth(x)


@given(rationals)
def test_bernoulli2_symmetries(x):
    assert bernoulli2(x) == bernoulli2(x + 1) == bernoulli2(1 - x)


@given(rationals)
def test_frac_in_unit_interval(x):
    f = frac(x)
    assert 0 <= f < 1 and (x - f).denominator == 1


def test_rational_text_roundtrip():
    for text in ["3", "-1/18", "0", "22/7"]:
        assert format_rational(as_rational(text)) == text
    assert as_rational("4/6") == F(2, 3)
    assert format_rational(F(-6, 3)) == "-2"
    with pytest.raises(ValidationError):
        as_rational("0.5")
    with pytest.raises(ValidationError):
        as_rational("1/0")


def test_unit_fraction_vector_m2():
    v = unit_fraction_vector(1, 2)
    assert v.coeffs == (F(0), F(-1, 2))
    assert v.value_at_one() == F(-1, 2)
    assert abs(v.evaluate(-1) - 0.5) < 1e-15


def test_unit_fraction_vector_spot_a3_m4():
    v = unit_fraction_vector(3, 4)
    assert abs(v.evaluate(1j) - 1 / (1 - 1j**3)) < 1e-12


def test_unit_fraction_vector_all_roots():
    from math import gcd

    for m in range(1, 51):
        roots = roots_of_unity(m)
        for a in range(-m, 2 * m):
            if gcd(a, m) != 1:
                continue
            v = unit_fraction_vector(a, m)
            assert v.value_at_one() == F(-(m - 1), 2)
            for lam in roots[1:]:
                assert abs(v.evaluate(lam) - 1 / (1 - lam**a)) < 1e-10


def test_unit_fraction_vector_rejects_common_factor():
    with pytest.raises(ValidationError):
        unit_fraction_vector(2, 4)


def _random_vec(rng, m):
    return CycVec(m, tuple(F(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(m)))


def test_convolution_identity_and_delta():
    rng = random.Random(0)
    u = _random_vec(rng, 7)
    assert cyc_convolve(u, CycVec.delta(0, 7)) == u
    assert cyc_convolve(CycVec.delta(1, 2), CycVec.delta(1, 2)) == CycVec.delta(0, 2)


def test_convolution_modulus_mismatch():
    with pytest.raises(ValidationError):
        cyc_convolve(CycVec.delta(0, 3), CycVec.delta(0, 4))


def test_convolution_evaluations_multiply():
    rng = random.Random(1)
    for m in range(1, 13):
        u, v = _random_vec(rng, m), _random_vec(rng, m)
        w = cyc_convolve(u, v)
        for lam in roots_of_unity(m):
            assert abs(w.evaluate(lam) - u.evaluate(lam) * v.evaluate(lam)) < 1e-10


def test_convolution_commutative_associative():
    rng = random.Random(2)
    for _ in range(40):
        m = rng.randint(1, 20)
        u, v, w = (_random_vec(rng, m) for _ in range(3))
        assert u @ v == v @ u
        assert (u @ v) @ w == u @ (v @ w)


def test_binom_series():
    assert binom_series(2, 3).coeffs == (1, 2, 1, 0)
    assert binom_series(-1, 2).coeffs == (1, -1, 1)
    assert binom_series(-3, 3).coeffs == (1, -3, 6, -10)


def test_series_inv_examples():
    assert series_inv(TruncSeries((1, 1, 0))).coeffs == (1, -1, 1)
    with pytest.raises(SingularityError):
        series_inv(TruncSeries((0, 1)))


@settings(max_examples=60)
@given(st.lists(st.fractions(max_denominator=50).filter(lambda x: abs(x) < 50), min_size=1, max_size=7))
def test_series_times_inverse_is_one(coeffs):
    if coeffs[0] == 0:
        coeffs[0] = F(1)
    a = TruncSeries(tuple(coeffs))
    prod = series_mul(a, series_inv(a))
    assert prod.coeffs == (1,) + (0,) * a.order
