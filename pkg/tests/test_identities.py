import math
import random
from fractions import Fraction as F

import pytest

from conftest import root_sum
from dedekindsums import ValidationError
from dedekindsums.exactcore import sawtooth
from dedekindsums.identities import (
    Law,
    dedekind_residual,
    evaluate_law,
    general_residual,
    gessel_dedekind_residual,
    gessel_lhs,
    gessel_residual,
    knuth_expansion_residual,
    raddedsum_residual,
    rademacher_residual,
    zagier_residual,
)


def test_dedekind_reciprocity_small():
    for b in range(1, 40):
        for a in range(1, 40):
            if math.gcd(a, b) == 1:
                assert dedekind_residual(a, b) == 0


def test_dedekind_residual_rejects():
    with pytest.raises(ValidationError):
        dedekind_residual(4, 6)
    with pytest.raises(ValidationError):
        dedekind_residual(-1, 3)


def test_rademacher_random():
    rng = random.Random(17)
    for _ in range(300):
        a, b = rng.randint(1, 30), rng.randint(1, 30)
        if math.gcd(a, b) != 1:
            continue
        x = F(rng.randint(-50, 50), rng.randint(1, 20))
        y = F(rng.randint(-50, 50), rng.randint(1, 20))
        if x.denominator == 1 and y.denominator == 1:
            continue
        assert rademacher_residual(a, b, x, y) == 0


def test_rademacher_requires_a_nonintegral_shift():
    with pytest.raises(ValidationError):
        rademacher_residual(2, 3, 1, 0)


def test_gessel_inside_range():
    for p in range(1, 13):
        for q in range(1, 13):
            if math.gcd(p, q) == 1:
                for n in range(1, p + q + 1):
                    assert gessel_residual(p, q, n) == 0
                assert gessel_dedekind_residual(p, q) == 0


@pytest.mark.parametrize("n", [0, 6])
def test_gessel_outside_range_frozen(n):
    # root-of-unity evaluation of the left side confirms the exact values
    lhs = root_sum(n, [3, 1], 2) + root_sum(n, [2, 1], 3)
    assert abs(float(gessel_lhs(2, 3, n)) - lhs.real) < 1e-10
    assert gessel_residual(2, 3, n) == 1


def test_general_reciprocity():
    for parts in [(1, 2), (2, 3, 5), (3, 4, 5, 7), (1, 1, 2)]:
        for n in range(1, sum(parts)):
            assert general_residual(parts, n) == 0


def test_general_outside_range_frozen():
    assert general_residual((2, 3), 5) == -1


def _q(n):
    # d = 1 closed form for parts (2, 3)
    return F(n, 6) + F(5, 12)


def test_general_frozen_by_oracle():
    lhs = _q(-5) + root_sum(5, [3], 2).real + root_sum(5, [2], 3).real
    assert abs(lhs - (-1)) < 1e-10


def test_zagier_reciprocity():
    for parts in [(1,), (1, 1), (2, 3), (2, 3, 5), (3, 4, 5, 7), (1, 2, 3, 5, 7)]:
        assert zagier_residual(parts) == 0


def test_knuth_expansion_always_vanishes():
    for b in range(1, 30):
        for a in range(-b, 2 * b):
            if math.gcd(a, b) == 1:
                for n in range(-20, 2 * b + 1):
                    assert knuth_expansion_residual(a, b, n) == 0


def test_printed_expansion_misses_a_sawtooth_term():
    for b in range(1, 25):
        for a in range(1, b + 3):
            if math.gcd(a, b) != 1:
                continue
            a_inv = pow(a, -1, b) if b > 1 else 0
            for n in range(-20, 2 * b + 1):
                assert raddedsum_residual(a, b, n) == -sawtooth(F(a_inv * n, b)) / 2
    assert raddedsum_residual(2, 3, 1) == F(-1, 12)
    assert raddedsum_residual(5, 7, 13) == F(-1, 28)
    assert raddedsum_residual(2, 3, 3) == 0


def test_evaluate_law_and_json():
    rep = evaluate_law(Law.GESSEL, p=2, q=3, n=6)
    assert not rep.hypothesis and not rep.holds
    doc = rep.to_json()
    assert doc == {"law": "gessel", "args": {"p": 2, "q": 3, "n": 6}, "residual": "1",
                   "holds": False, "hypothesis": False}
    rep = evaluate_law(Law.RADEMACHER, a=2, b=3, x=F(1, 2), y=0)
    assert rep.holds and rep.to_json()["args"]["x"] == "1/2"
    rep = evaluate_law(Law.GENERAL, parts=[2, 3], n=2)
    assert rep.holds and rep.hypothesis


def test_rademacher_when_ay_plus_bx_is_integral():
    # boundary cases where the B2 argument lands on an integer
    checked = 0
    for a in range(1, 7):
        for b in range(1, 7):
            if math.gcd(a, b) != 1:
                continue
            for den in range(2, 7):
                for p in range(-den, 2 * den):
                    y = F(p, den)
                    for m in range(-3, 4):
                        x = (m - a * y) / b
                        if x.denominator == 1 and y.denominator == 1:
                            continue
                        assert rademacher_residual(a, b, x, y) == 0
                        checked += 1
    assert checked > 500
