"""Residuals (left side minus right side) of the reciprocity laws.

Each function returns an exact Fraction that vanishes when the law holds, so a
failure carries its size. ``ResidualReport`` wraps one evaluation for the
verification suites and the JSON output.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .dedekind import dedekind_fast, dedekind_naive, knuth_sum, rademacher_sum
from .errors import ValidationError
from .exactcore import as_rational, bernoulli2, format_rational, frac, sawtooth
from .fouriersums import fourier_dedekind
from .partition import as_parts, q_value


class Law(enum.Enum):
    DEDEKIND = "dedekind"
    RADEMACHER = "rademacher"
    GESSEL = "gessel"
    GENERAL = "general"
    ZAGIER = "zagier"
    RADDEDSUM = "raddedsum"
    KNUTH = "knuth"


@dataclass(frozen=True)
class ResidualReport:
    law: Law
    args: dict
    residual: Fraction
    # False when the inputs lie outside the law's stated range
    hypothesis: bool = True

    @property
    def holds(self) -> bool:
        return self.residual == 0

    def to_json(self) -> dict:
        return {
            "law": self.law.value,
            "args": {k: _jsonable(v) for k, v in self.args.items()},
            "residual": format_rational(self.residual),
            "holds": self.holds,
            "hypothesis": self.hypothesis,
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    return v


def _require_coprime(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise ValidationError(f"arguments must be positive, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise ValidationError(f"gcd({a}, {b}) != 1")


def _require_modulus_coprime(a: int, b: int) -> None:
    if b < 1:
        raise ValidationError(f"b must be positive, got {b}")
    if gcd(a, b) != 1:
        raise ValidationError(f"gcd({a}, {b}) != 1")


def dedekind_rhs(a: int, b: int) -> Fraction:
    return Fraction(-1, 4) + Fraction(a * a + 1 + b * b, 12 * a * b)


def dedekind_residual(a: int, b: int) -> Fraction:
    """s(a,b) + s(b,a) - (-1/4 + (a/b + 1/(ab) + b/a)/12).

    Uses the direct sums; the fast algorithm is built on this very law.
    """
    _require_coprime(a, b)
    return dedekind_naive(a, b) + dedekind_naive(b, a) - dedekind_rhs(a, b)


def rademacher_rhs(a: int, b: int, x, y) -> Fraction:
    return sawtooth(x) * sawtooth(y) + (
        Fraction(a, b) * bernoulli2(y)
        + Fraction(1, a * b) * bernoulli2(a * y + b * x)
        + Fraction(b, a) * bernoulli2(x)
    ) / 2


def rademacher_residual(a: int, b: int, x, y) -> Fraction:
    _require_coprime(a, b)
    x, y = as_rational(x), as_rational(y)
    if x.denominator == 1 and y.denominator == 1:
        raise ValidationError("x and y are both integers; use dedekind_residual")
    return rademacher_sum(a, b, x, y) + rademacher_sum(b, a, y, x) - rademacher_rhs(a, b, x, y)


def gessel_rhs(p: int, q: int, n: int) -> Fraction:
    return (
        Fraction(-n * n, 2 * p * q)
        + Fraction(n, 2) * Fraction(q + p + 1, p * q)
        - Fraction(q + p + p * q, 4 * p * q)
        - Fraction(p * p + 1 + q * q, 12 * p * q)
    )


def gessel_lhs(p: int, q: int, n: int) -> Fraction:
    return fourier_dedekind(n, [q, 1], p) + fourier_dedekind(n, [p, 1], q)


def gessel_residual(p: int, q: int, n: int) -> Fraction:
    """Gessel's identity; vanishes for 1 <= n <= p + q."""
    _require_coprime(p, q)
    return gessel_lhs(p, q, n) - gessel_rhs(p, q, n)


def gessel_dedekind_residual(p: int, q: int) -> Fraction:
    """Gessel's identity at n = p, rewritten through classical Dedekind sums.

    At n = p the two Fourier-Dedekind terms reduce to
    -s(q,p) - s(p,q) + 1/2 - 1/(4p) - 1/(4q) - (q-1)/(2q),
    so the residual vanishes exactly when Dedekind reciprocity does.
    """
    _require_coprime(p, q)
    lhs = (
        -dedekind_fast(q, p)
        - dedekind_fast(p, q)
        + Fraction(1, 2)
        - Fraction(1, 4 * p)
        - Fraction(1, 4 * q)
        - Fraction(q - 1, 2 * q)
    )
    return lhs - gessel_rhs(p, q, p)


def general_residual(parts, n: int) -> Fraction:
    """sum_j sigma_n(parts without a_j; a_j) + q(parts, -n); vanishes for 0 < n < sum(parts)."""
    parts = as_parts(parts)
    total = q_value(parts, -n)
    for j, a in enumerate(parts.parts):
        total += fourier_dedekind(n, parts.others(j), a)
    return total


def zagier_residual(parts) -> Fraction:
    """sum_j sigma_0(parts without a_j; a_j) - 1 + q(parts, 0); always zero."""
    parts = as_parts(parts)
    total = q_value(parts, 0) - 1
    for j, a in enumerate(parts.parts):
        total += fourier_dedekind(0, parts.others(j), a)
    return total


def raddedsum_rhs(a: int, b: int, n: int) -> Fraction:
    return (
        -fourier_dedekind(-n, [a, 1], b)
        - frac(Fraction(n, b)) / 2
        + Fraction(1, 4)
        - Fraction(1, 4 * b)
    )


def raddedsum_residual(a: int, b: int, n: int) -> Fraction:
    """s(a, b; n/b, 0) minus ``raddedsum_rhs``.

    Vanishes when b | n. Otherwise it equals -((a' n / b)) / 2 with
    a a' = 1 mod b: that right-hand side lacks this sawtooth term. See
    ``knuth_expansion_residual`` for the complete expansion.
    """
    _require_modulus_coprime(a, b)
    return knuth_sum(a, b, n) - raddedsum_rhs(a, b, n)


def knuth_expansion_rhs(a: int, b: int, n: int) -> Fraction:
    """-sigma_{-n}(a, 1; b) - ((n/b))/2 - ((a'n/b))/2 + [b | n]/4 - 1/(4b), a a' = 1 mod b."""
    a_inv = pow(a, -1, b) if b > 1 else 0
    return (
        -fourier_dedekind(-n, [a, 1], b)
        - sawtooth(Fraction(n, b)) / 2
        - sawtooth(Fraction(a_inv * n, b)) / 2
        + (Fraction(1, 4) if n % b == 0 else 0)
        - Fraction(1, 4 * b)
    )


def knuth_expansion_residual(a: int, b: int, n: int) -> Fraction:
    """s(a, b; n/b, 0) against its complete finite Fourier expansion; always zero."""
    _require_modulus_coprime(a, b)
    return knuth_sum(a, b, n) - knuth_expansion_rhs(a, b, n)


def report(law: Law, residual: Fraction, hypothesis: bool = True, **args) -> ResidualReport:
    return ResidualReport(law, dict(args), residual, hypothesis)


def evaluate_law(law: Law, **args) -> ResidualReport:
    """Evaluate one law by name and flag whether its hypotheses hold."""
    if law is Law.DEDEKIND:
        return report(law, dedekind_residual(args["a"], args["b"]), **args)
    if law is Law.RADEMACHER:
        return report(law, rademacher_residual(args["a"], args["b"], args["x"], args["y"]), **args)
    if law is Law.GESSEL:
        p, q, n = args["p"], args["q"], args["n"]
        return report(law, gessel_residual(p, q, n), 1 <= n <= p + q, **args)
    if law is Law.GENERAL:
        parts, n = as_parts(args["parts"]), args["n"]
        return report(law, general_residual(parts, n), 0 < n < sum(parts.parts),
                      parts=list(parts.parts), n=n)
    if law is Law.ZAGIER:
        parts = as_parts(args["parts"])
        return report(law, zagier_residual(parts), parts=list(parts.parts))
    if law is Law.RADDEDSUM:
        return report(law, raddedsum_residual(args["a"], args["b"], args["n"]), **args)
    if law is Law.KNUTH:
        return report(law, knuth_expansion_residual(args["a"], args["b"], args["n"]), **args)
    raise ValidationError(f"unknown law {law!r}")
