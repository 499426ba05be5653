import math
import random

import pytest

from dedekindsums import ValidationError
from dedekindsums import cone2d as c2


def test_bruteforce_frozen_example():
    pts = c2.enumerate_bruteforce(c2.Cone2((1, 0), (1, 2)), 2)
    assert pts == {(0, 0), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)}


def test_unimodular_cone_is_one_term():
    terms = c2.decompose(c2.Cone2((1, 0), (0, 1)))
    assert len(terms) == 1 and terms[0].sign == 1
    assert c2.series_verify(terms, c2.Cone2((1, 0), (0, 1)), 6)


@pytest.mark.parametrize("u, w", [((1, 0), (1, 2)), ((3, 1), (1, 4)), ((2, 1), (1, 3)), ((-3, 4), (5, 1))])
def test_examples_verify(u, w):
    cone = c2.Cone2(u, w)
    terms = c2.decompose(cone)
    assert all(abs(c2.det(t.b1, t.b2)) == 1 for t in terms)
    assert len(terms) <= 4 * (1 + math.log2(c2.cone_index(cone)))
    assert c2.series_verify(terms, cone, 10)


def test_dropping_a_term_breaks_verification():
    cone = c2.Cone2((3, 1), (1, 4))
    terms = c2.decompose(cone)
    assert len(terms) > 1
    for i in range(len(terms)):
        assert not c2.series_verify(terms[:i] + terms[i + 1:], cone, 8)


def test_flipping_a_sign_breaks_verification():
    cone = c2.Cone2((2, 1), (1, 3))
    terms = c2.decompose(cone)
    t = terms[-1]
    bad = terms[:-1] + [c2.SignedConeTerm(-t.sign, t.apex, t.b1, t.b2)]
    assert not c2.series_verify(bad, cone, 8)


def test_fibonacci_cones_stay_logarithmic():
    fib = [1, 1]
    while len(fib) < 20:
        fib.append(fib[-1] + fib[-2])
    for k in range(1, 15):
        cone = c2.Cone2((1, 0), (fib[k], fib[k + 1]))
        terms = c2.decompose(cone)
        index = c2.cone_index(cone)
        assert len(terms) <= 4 * (1 + math.log2(index))
        assert c2.series_verify(terms, cone, 8)


def test_random_cones():
    rng = random.Random(123)
    for _ in range(50):
        cone = c2.random_cone(rng, 2000)
        terms = c2.decompose(cone)
        assert c2.series_verify(terms, cone, 8, c2.generic_direction(cone, terms, rng))


def test_result_independent_of_direction():
    rng = random.Random(0)
    cone = c2.Cone2((7, -2), (1, 5))
    terms = c2.decompose(cone)
    for _ in range(5):
        xi = c2.generic_direction(cone, terms, rng)
        assert c2.series_verify(terms, cone, 7, xi)


def test_invalid_cones():
    with pytest.raises(ValidationError):
        c2.Cone2((1, 2), (2, 4))
    with pytest.raises(ValidationError):
        c2.Cone2((2, 2), (1, 0))
    with pytest.raises(ValidationError):
        c2.SignedConeTerm(1, (0, 0), (2, 0), (0, 1))


def test_term_text_and_json():
    t = c2.SignedConeTerm(-1, (0, 0), (1, 0), (1, 1))
    assert str(t) == "- x^(0,0) / (1 - x^(1,0)) (1 - x^(1,1))"
    assert t.to_json() == {"sign": -1, "apex": [0, 0], "b1": [1, 0], "b2": [1, 1]}
