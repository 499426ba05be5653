"""Classical Dedekind sums and Dedekind-Rademacher sums."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import kernels
from .errors import ValidationError
from .exactcore import as_rational, sawtooth


def _check_modulus(b: int) -> None:
    if b < 1:
        raise ValidationError(f"b must be a positive integer, got {b}")


def dedekind_naive(a: int, b: int) -> Fraction:
    """s(a, b) by summing ((ka/b))((k/b)) over k mod b; O(b).

    Works for any a, coprime to b or not.
    """
    _check_modulus(b)
    return Fraction(kernels.dedekind_numerator(a, b), 4 * b * b)


def dedekind_fast(a: int, b: int) -> Fraction:
    """s(a, b) for gcd(a, b) = 1 in O(log b) steps.

    Alternates a -> a mod b with the reciprocity law
    s(a, b) = -1/4 + (a/b + 1/(ab) + b/a)/12 - s(b, a), Euclid style.
    """
    _check_modulus(b)
    if gcd(a, b) != 1:
        raise ValidationError(f"dedekind_fast needs gcd(a, b) = 1, got gcd({a}, {b}) = {gcd(a, b)}")
    # integer num/den, reduced once per step; Fraction.__add__ is ~2x slower here
    num, den = 0, 1
    sign = 1
    a %= b
    while b > 1 and a > 1:
        # -1/4 + (a^2 + b^2 + 1) / (12ab)
        t_num = 4 * (a * a + b * b + 1) - 12 * a * b
        t_den = 48 * a * b
        num = num * t_den + sign * t_num * den
        den *= t_den
        g = gcd(num, den)
        num //= g
        den //= g
        a, b = b % a, a
        sign = -sign
    if b > 1 and a == 1:
        t_num, t_den = (b - 1) * (b - 2), 12 * b
        num = num * t_den + sign * t_num * den
        den *= t_den
    return Fraction(num, den)


def rademacher_sum(a: int, b: int, x=0, y=0) -> Fraction:
    """s(a, b; x, y) = sum_{k mod b} (((k+y)a/b + x)) (((k+y)/b)).

    x and y may be arbitrary rationals; no pre-reduction is needed.
    """
    _check_modulus(b)
    x = as_rational(x)
    y = as_rational(y)
    total = Fraction(0)
    for k in range(b):
        t = (k + y) / b
        total += sawtooth(t * a + x) * sawtooth(t)
    return total


def knuth_sum(a: int, b: int, n: int) -> Fraction:
    """s(a, b; n/b, 0) = sum_{k mod b} (((ka + n)/b)) ((k/b))."""
    _check_modulus(b)
    # both sawtooth arguments are multiples of 1/b: ((r/b)) = (2(r mod b) - b)/(2b) off multiples
    total = 0
    for k in range(1, b):
        r = (k * a + n) % b
        if r:
            total += (2 * r - b) * (2 * k - b)
    return Fraction(total, 4 * b * b)
