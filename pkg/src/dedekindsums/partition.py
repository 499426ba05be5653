"""Coin-exchange counting: brute force and the Fourier-Dedekind formula.

``partition_count`` is the dynamic-programming oracle. The formula side
splits the count into a polynomial part q (read off the Laurent expansion of
the generating function at z = 1) plus one periodic Fourier-Dedekind term per
part. Nothing on the formula side touches the DP.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, gcd, lcm
from typing import Iterable, Sequence

from . import kernels
from .errors import InternalInconsistencyError, ValidationError
from .exactcore import TruncSeries, binom_series, format_rational, series_inv, series_mul
from .fouriersums import fourier_dedekind, fourier_table


@dataclass(frozen=True)
class PartsTuple:
    """Pairwise-coprime positive parts (a_0, ..., a_d).

    Repeated 1s are allowed since gcd(1, 1) = 1.
    """

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValidationError("need at least one part")
        for a in parts:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise ValidationError(f"parts must be positive integers, got {a!r}")
        for a, b in combinations(parts, 2):
            if gcd(a, b) != 1:
                raise ValidationError(f"parts {a} and {b} are not coprime")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "PartsTuple":
        try:
            return cls(tuple(int(s) for s in text.split(",") if s.strip()))
        except ValueError as exc:
            raise ValidationError(f"bad parts list {text!r}: {exc}") from None

    @property
    def d(self) -> int:
        return len(self.parts) - 1

    def others(self, j: int) -> tuple:
        return self.parts[:j] + self.parts[j + 1 :]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


def as_parts(parts) -> PartsTuple:
    return parts if isinstance(parts, PartsTuple) else PartsTuple(tuple(parts))


def partition_count(parts, n: int) -> int:
    """#{k >= 0 : sum k_j a_j = n}; 0 for negative n."""
    parts = as_parts(parts)
    if n < 0:
        return 0
    return kernels.partition_table(parts.parts, n)[n]


def interior_count(parts, n: int) -> int:
    """Representations with every k_j >= 1."""
    parts = as_parts(parts)
    return partition_count(parts, n - sum(parts.parts))


# ---------------------------------------------------------------------------
# polynomial part


def _h_series(a: int, order: int) -> TruncSeries:
    # (1 - (1+t)^a) = -a t H_a(t)
    return TruncSeries(tuple(Fraction(comb(a, k + 1), a) for k in range(order + 1)))


def q_value(parts, n: int) -> Fraction:
    """q(a_0..a_d, n) = sum_{k=1}^{d+1} (-1)^k B_k.

    B_k is the coefficient of (z-1)^{-k} in z^{-n} / prod(1 - z^{a_i}). With
    z = 1 + t every factor is -1/(a t) times 1/H_a(t), so
    f = (-1)^{d+1} / prod(a) * t^{-(d+1)} * F(t) with F analytic, and
    B_k = (-1)^{d+1} / prod(a) * [t^{d+1-k}] F.
    """
    parts = as_parts(parts)
    d = parts.d
    order = d
    F = binom_series(-n, order)
    prod_a = 1
    for a in parts.parts:
        F = series_mul(F, series_inv(_h_series(a, order)))
        prod_a *= a
    scale = Fraction((-1) ** (d + 1), prod_a)
    total = Fraction(0)
    for k in range(1, d + 2):
        total += (-1) ** k * scale * F.coeffs[d + 1 - k]
    return total


def _interpolate(xs: Sequence[int], ys: Sequence[Fraction]) -> list:
    """Monomial coefficients (low to high) of the interpolating polynomial."""
    # Newton divided differences, then expand
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * p for s, p in zip(shifted, poly)]
        poly[0] += coef[i]
    return poly


def eval_poly(coeffs: Sequence[Fraction], n) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


@lru_cache(maxsize=None)
def _q_polynomial(parts: PartsTuple) -> tuple:
    d = parts.d
    xs = list(range(d + 1))
    poly = _interpolate(xs, [q_value(parts, x) for x in xs])
    for x in range(-1, -d - 2, -1):
        if eval_poly(poly, x) != q_value(parts, x):
            raise InternalInconsistencyError(f"q is not a degree-{d} polynomial for {parts}")
    return tuple(poly)


def q_polynomial(parts) -> list:
    """Coefficients of n^0..n^d of q(parts, n)."""
    return list(_q_polynomial(as_parts(parts)))


# ---------------------------------------------------------------------------
# quasipolynomial


@dataclass(frozen=True)
class QuasiPolynomial:
    """p(n) = sum_k poly_coeffs[k] n^k + sum_j periodic_tables[j][n mod a_j].

    ``periodic_tables[j][r]`` is sigma_{-r}(parts without a_j; a_j). Evaluation
    runs in integer arithmetic over the common denominator.
    """

    parts: tuple
    poly_coeffs: tuple
    periodic_tables: tuple

    def __post_init__(self):
        values = list(self.poly_coeffs) + [c for t in self.periodic_tables for c in t]
        den = lcm(*(Fraction(v).denominator for v in values))
        object.__setattr__(self, "_den", den)
        object.__setattr__(
            self, "_ipoly", tuple(int(c * den) for c in self.poly_coeffs)
        )
        object.__setattr__(
            self,
            "_itables",
            tuple((len(t), tuple(int(c * den) for c in t)) for t in self.periodic_tables),
        )

    def numerator_at(self, n: int) -> tuple:
        """(N, D) with value N/D, unreduced; cheap integrality test."""
        acc = 0
        for c in reversed(self._ipoly):
            acc = acc * n + c
        for m, table in self._itables:
            acc += table[n % m]
        return acc, self._den

    def evaluate(self, n: int) -> Fraction:
        num, den = self.numerator_at(n)
        return Fraction(num, den)

    def to_json(self) -> dict:
        return {
            "parts": list(self.parts),
            "poly": [format_rational(c) for c in self.poly_coeffs],
            "tables": [
                {"modulus": m, "values": [format_rational(c) for c in t]}
                for m, t in zip(self.parts, self.periodic_tables)
            ],
        }


@lru_cache(maxsize=None)
def _emit(parts: PartsTuple) -> QuasiPolynomial:
    tables = tuple(fourier_table(parts.others(j), a) for j, a in enumerate(parts.parts))
    return QuasiPolynomial(parts.parts, _q_polynomial(parts), tables)


def emit_quasipolynomial(parts) -> QuasiPolynomial:
    """Polynomial part plus the periodic Fourier-Dedekind tables, one per part.

    Tables for modulus 1 are the single value 0.
    """
    return _emit(as_parts(parts))


def _integral(num: int, den: int, what: str) -> Fraction:
    q, r = divmod(num, den)
    if r or q < 0:
        raise InternalInconsistencyError(f"{what} evaluated to {Fraction(num, den)}")
    return Fraction(q)


def partition_formula(parts, n: int) -> Fraction:
    """q(parts, n) + sum_j sigma_{-n}(parts without a_j; a_j); must equal the count."""
    parts = as_parts(parts)
    if n < 0:
        raise ValidationError(f"n must be nonnegative, got {n}")
    num, den = _emit(parts).numerator_at(n)
    return _integral(num, den, f"partition formula at n={n} for {parts}")


def interior_formula(parts, n: int) -> Fraction:
    """(-1)^d (q(parts, -n) + sum_j sigma_n(parts without a_j; a_j)).

    The bracket is the quasipolynomial evaluated at -n, which is Ehrhart-Macdonald
    reciprocity spelled out.
    """
    parts = as_parts(parts)
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}")
    num, den = _emit(parts).numerator_at(-n)
    if parts.d % 2:
        num = -num
    return _integral(num, den, f"interior formula at n={n} for {parts}")


def partition_formula_direct(parts, n: int) -> Fraction:
    """Uncached evaluation straight from q_value and fourier_dedekind (no integrality check)."""
    parts = as_parts(parts)
    return q_value(parts, n) + sum(
        (fourier_dedekind(-n, parts.others(j), a) for j, a in enumerate(parts.parts)),
        Fraction(0),
    )


def coprime_tuples(
    max_part: int, max_len: int, min_len: int = 1, max_product: int | None = None
) -> Iterable[PartsTuple]:
    """All pairwise-coprime strictly increasing tuples with entries in 1..max_part."""

    def extend(start, cur, p):
        if len(cur) >= min_len:
            yield PartsTuple(tuple(cur))
        if len(cur) == max_len:
            return
        for a in range(start, max_part + 1):
            if max_product is not None and p * a > max_product:
                break
            if all(gcd(a, b) == 1 for b in cur):
                yield from extend(a + 1, cur + [a], p * a)

    yield from extend(1, [], 1)
