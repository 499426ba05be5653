"""Exact arithmetic substrate.

Rationals are :class:`fractions.Fraction` (always canonical: lowest terms,
positive denominator). On top of that this module provides the sawtooth and
periodized Bernoulli functions, vectors in the rational group algebra of
Z/m (``CycVec``), and truncated rational power series (``TruncSeries``).
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd, lcm
from typing import Iterable, Sequence

from . import kernels
from .errors import SingularityError, ValidationError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Decimal strings are rejected on purpose; every value in this package is
    exchanged in exact ``p/q`` form.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        m = _RATIONAL_RE.match(x.replace("−", "-"))
        if not m:
            raise ValidationError(f"not a rational in p/q form: {x!r}")
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ValidationError(f"zero denominator: {x!r}")
        return Fraction(int(m.group(1)), den)
    raise ValidationError(f"cannot interpret {x!r} as a rational")


def format_rational(x) -> str:
    """``"p/q"`` text form; integers print without ``/1``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def frac(x) -> Fraction:
    """Fractional part x - floor(x), in [0, 1)."""
    x = Fraction(x)
    return x - floor(x)


def sawtooth(x) -> Fraction:
    """((x)): frac(x) - 1/2 off the integers, 0 on them."""
    f = frac(x)
    if f == 0:
        return Fraction(0)
    return f - Fraction(1, 2)


def bernoulli2(x) -> Fraction:
    """Periodized second Bernoulli polynomial {x}^2 - {x} + 1/6."""
    f = frac(x)
    return f * f - f + Fraction(1, 6)


# ---------------------------------------------------------------------------
# group algebra of Z/m


@dataclass(frozen=True)
class CycVec:
    """An element sum_j coeffs[j] * [j] of Q[Z/m].

    Read as a function on m-th roots of unity via ``lam -> sum_j coeffs[j] lam^j``;
    the product in the algebra (cyclic convolution) is pointwise multiplication
    of those functions.
    """

    modulus: int
    coeffs: tuple

    def __post_init__(self):
        if self.modulus < 1:
            raise ValidationError(f"modulus must be positive, got {self.modulus}")
        if len(self.coeffs) != self.modulus:
            raise ValidationError(
                f"expected {self.modulus} coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def delta(cls, index: int, modulus: int) -> "CycVec":
        c = [Fraction(0)] * modulus
        c[index % modulus] = Fraction(1)
        return cls(modulus, tuple(c))

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j % self.modulus]

    def __add__(self, other: "CycVec") -> "CycVec":
        _same_modulus(self, other)
        return CycVec(self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycVec") -> "CycVec":
        _same_modulus(self, other)
        return CycVec(self.modulus, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "CycVec":
        c = Fraction(c)
        return CycVec(self.modulus, tuple(c * a for a in self.coeffs))

    def __matmul__(self, other: "CycVec") -> "CycVec":
        return cyc_convolve(self, other)

    def value_at_one(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    def evaluate(self, lam: complex) -> complex:
        """Floating-point evaluation at a root of unity; test oracle only."""
        return sum(complex(c) * lam**j for j, c in enumerate(self.coeffs))


def _same_modulus(u: CycVec, v: CycVec) -> None:
    if u.modulus != v.modulus:
        raise ValidationError(f"modulus mismatch: {u.modulus} vs {v.modulus}")


def roots_of_unity(m: int) -> list:
    return [cmath.exp(2j * cmath.pi * k / m) for k in range(m)]


def unit_fraction_vector(a: int, m: int) -> CycVec:
    """Representative of 1/(1 - lam^a) on the nontrivial m-th roots of unity.

    Built from sum_k k mu^k = m/(mu - 1) for mu^m = 1, mu != 1: the vector has
    -k/m at position k*a mod m. Its value at lam = 1 is -(m-1)/2.
    """
    if m < 1:
        raise ValidationError(f"modulus must be positive, got {m}")
    if gcd(a, m) != 1:
        raise ValidationError(f"gcd({a}, {m}) != 1")
    c = [Fraction(0)] * m
    for k in range(m):
        c[(k * a) % m] = Fraction(-k, m)
    return CycVec(m, tuple(c))


def _clear_denominators(coeffs: Sequence[Fraction]) -> tuple[list, int]:
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def cyc_convolve(u: CycVec, v: CycVec) -> CycVec:
    """Exact product in Q[Z/m].

    Denominators are cleared so the O(m^2) loop runs on integers (compiled
    when available).
    """
    _same_modulus(u, v)
    iu, du = _clear_denominators(u.coeffs)
    iv, dv = _clear_denominators(v.coeffs)
    den = du * dv
    out = kernels.cyclic_convolve(iu, iv)
    return CycVec(u.modulus, tuple(Fraction(x, den) for x in out))


def convolve_all(vectors: Iterable[CycVec], modulus: int) -> CycVec:
    """Product of any number of vectors; the empty product is the unit delta_0."""
    acc = CycVec.delta(0, modulus)
    for v in vectors:
        acc = cyc_convolve(acc, v)
    return acc


# ---------------------------------------------------------------------------
# truncated power series in a local variable t


@dataclass(frozen=True)
class TruncSeries:
    """sum_{k <= order} coeffs[k] t^k, exact up to its order."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValidationError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def truncate(self, order: int) -> "TruncSeries":
        c = list(self.coeffs[: order + 1])
        c += [Fraction(0)] * (order + 1 - len(c))
        return TruncSeries(tuple(c))

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        c = Fraction(other)
        return TruncSeries(tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Product truncated to the smaller of the two orders."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    return TruncSeries(
        tuple(sum((ac[i] * bc[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1))
    )


def series_inv(a: TruncSeries) -> TruncSeries:
    c0 = a.coeffs[0]
    if c0 == 0:
        raise SingularityError("series with zero constant term has no inverse")
    out = [1 / c0]
    for k in range(1, a.order + 1):
        s = sum((a.coeffs[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out.append(-s / c0)
    return TruncSeries(tuple(out))


def binom_series(n: int, order: int) -> TruncSeries:
    """(1 + t)^n to the given order; n may be negative."""
    out = [Fraction(1)]
    for k in range(1, order + 1):
        out.append(out[-1] * (n - k + 1) / k)
    return TruncSeries(tuple(out))
