"""Fourier-Dedekind sums and Zagier's higher-dimensional Dedekind sums.

Every sum over nontrivial roots of unity is evaluated exactly in the group
algebra Q[Z/a0]: build the vector representing the summand, read off the
average over *all* a0-th roots (orthogonality picks a single coefficient),
then subtract the lam = 1 contribution, which is known in closed form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .errors import ValidationError
from .exactcore import CycVec, convolve_all, unit_fraction_vector


def _validate(parts: Sequence[int], a0: int) -> tuple:
    if a0 < 1:
        raise ValidationError(f"modulus must be a positive integer, got {a0}")
    for a in parts:
        if gcd(a, a0) != 1:
            raise ValidationError(f"part {a} is not coprime to modulus {a0}")
    # convolution is commutative: a canonical key lets the cache share work
    return tuple(sorted(a % a0 for a in parts))


@lru_cache(maxsize=8192)
def _fourier_vector(key: tuple, a0: int) -> CycVec:
    return convolve_all((unit_fraction_vector(a, a0) for a in key), a0)


def fourier_vector(parts: Sequence[int], a0: int) -> CycVec:
    """Vector representing 1 / prod_i (1 - lam^{a_i}) on nontrivial a0-th roots."""
    return _fourier_vector(_validate(parts, a0), a0)


def fourier_dedekind(n: int, parts: Sequence[int], a0: int) -> Fraction:
    """sigma_n(a_1..a_d; a0) = (1/a0) sum_{lam^a0 = 1 != lam} lam^n / prod(1 - lam^{a_i}).

    Requires gcd(a_i, a0) = 1. Periodic in n with period a0.
    """
    key = _validate(parts, a0)
    g = _fourier_vector(key, a0)
    at_one = Fraction(-(a0 - 1), 2) ** len(key)
    return g[-n] - at_one / a0


def fourier_table(parts: Sequence[int], a0: int) -> tuple:
    """(sigma_0, sigma_{-1}, ..., sigma_{-(a0-1)}) for the given parts and modulus."""
    key = _validate(parts, a0)
    g = _fourier_vector(key, a0)
    at_one = Fraction(-(a0 - 1), 2) ** len(key) / a0
    # sigma_{-r} reads coefficient r
    return tuple(c - at_one for c in g.coeffs)


def zagier_sum(a0: int, parts: Sequence[int]) -> Fraction:
    """s(a0; a_1..a_d) = (1/a0) sum_{lam != 1} prod (lam^{a_j} + 1)/(lam^{a_j} - 1).

    Each factor equals 1 - 2/(1 - lam^a); its vector takes the value a0 at
    lam = 1, so the trivial root contributes a0^(d-1).
    """
    key = _validate(parts, a0)
    one = CycVec.delta(0, a0)
    h = convolve_all((one - unit_fraction_vector(a, a0).scale(2) for a in key), a0)
    return h[0] - Fraction(a0) ** (len(key) - 1)


def dedekind_via_zagier(a: int, b: int) -> Fraction:
    """s(a, b) = -s(b; a, 1) / 4 (cotangent form of the classical sum)."""
    if b < 1:
        raise ValidationError(f"b must be a positive integer, got {b}")
    if gcd(a, b) != 1:
        raise ValidationError(f"gcd({a}, {b}) != 1")
    return -zagier_sum(b, [a, 1]) / 4
