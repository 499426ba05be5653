"""Signed unimodular decomposition of plane cones (Barvinok, dimension 2).

The decomposition is done on the dual cone, where Barvinok's replacement step
is exact modulo lower-dimensional cones. Dualizing back turns those into cones
containing a line, whose generating functions vanish as rational functions,
so the primal identity

    f(K, x) = sum_i eps_i x^{a_i} / ((1 - x^{b_i1}) (1 - x^{b_i2}))

is exact. ``series_verify`` checks it coefficient by coefficient.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ValidationError

Vec = tuple  # (x, y) integer pair


def det(u: Vec, w: Vec) -> int:
    return u[0] * w[1] - u[1] * w[0]


def dot(u: Vec, w: Vec) -> int:
    return u[0] * w[0] + u[1] * w[1]


def _primitive(v: Vec) -> Vec:
    g = gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


@dataclass(frozen=True)
class Cone2:
    """Closed cone spanned by two primitive, independent integer vectors."""

    u: Vec
    w: Vec

    def __post_init__(self):
        u, w = tuple(self.u), tuple(self.w)
        for v in (u, w):
            if len(v) != 2 or not all(isinstance(c, int) for c in v):
                raise ValidationError(f"generator must be an integer pair, got {v!r}")
            if gcd(*v) != 1:
                raise ValidationError(f"generator {v} is not primitive")
        if det(u, w) == 0:
            raise ValidationError(f"generators {u} and {w} are linearly dependent")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "w", w)

    def contains(self, m: Vec) -> bool:
        # m = alpha u + beta w; Cramer's rule
        D = det(self.u, self.w)
        alpha = Fraction(det(m, self.w), D)
        beta = Fraction(det(self.u, m), D)
        return alpha >= 0 and beta >= 0


@dataclass(frozen=True)
class SignedConeTerm:
    sign: int
    apex: Vec
    b1: Vec
    b2: Vec

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValidationError(f"sign must be +1 or -1, got {self.sign}")
        if abs(det(self.b1, self.b2)) != 1:
            raise ValidationError(f"denominators {self.b1}, {self.b2} are not a lattice basis")

    def __str__(self):
        s = "+" if self.sign > 0 else "-"
        a, b1, b2 = self.apex, self.b1, self.b2
        return (
            f"{s} x^({a[0]},{a[1]}) / (1 - x^({b1[0]},{b1[1]})) (1 - x^({b2[0]},{b2[1]}))"
        )

    def to_json(self) -> dict:
        return {"sign": self.sign, "apex": list(self.apex), "b1": list(self.b1), "b2": list(self.b2)}


def cone_index(c: Cone2) -> int:
    """|det(u, w)|: the number of lattice points in the half-open fundamental parallelogram."""
    d = abs(det(c.u, c.w))
    if d == 0:
        raise ValidationError("dependent generators")
    return d


def _short_vector(r1: Vec, r2: Vec) -> tuple:
    """A nonzero z in Z^2 with small coordinates in the basis (r1, r2).

    The coordinates of z are adj(R) z / det(R); Lagrange-reduce the lattice
    adj(R) Z^2 and take its shortest vector, which bounds every coordinate by
    about 1.07 / sqrt(index) < 1.
    """
    D = det(r1, r2)
    # adj(R) rows for R = [r1 r2] (columns): coordinates numerators
    # lam1 * D = det(z, r2), lam2 * D = det(r1, z)
    def coords(z):
        return (det(z, r2), det(r1, z))

    # basis of Z^2 tracked alongside its image
    e = [(1, 0), (0, 1)]
    img = [coords(z) for z in e]

    def norm2(v):
        return v[0] * v[0] + v[1] * v[1]

    while True:
        if norm2(img[0]) > norm2(img[1]):
            e.reverse()
            img.reverse()
        n0 = norm2(img[0])
        mu = Fraction(dot(img[0], img[1]), n0)
        k = round(mu)
        if k == 0:
            break
        e[1] = (e[1][0] - k * e[0][0], e[1][1] - k * e[0][1])
        img[1] = (img[1][0] - k * img[0][0], img[1][1] - k * img[0][1])
        if norm2(img[1]) >= n0:
            break
    if norm2(img[1]) < norm2(img[0]):
        e.reverse()
        img.reverse()
    return e[0], img[0], D


def _decompose_signed(r1: Vec, r2: Vec, sign: int, out: list) -> None:
    D = det(r1, r2)
    if abs(D) == 1:
        out.append((sign, r1, r2))
        return
    z, (l1, l2), D = _short_vector(r1, r2)
    # l_i / D are the coordinates of z; all-nonpositive means -z is interior-ish
    if (l1 <= 0 and l2 <= 0) if D > 0 else (l1 >= 0 and l2 >= 0):
        z, l1, l2 = (-z[0], -z[1]), -l1, -l2
    s1 = 1 if l1 * D > 0 else -1
    s2 = 1 if l2 * D > 0 else -1
    if l1:
        _decompose_signed(z, r2, sign * s1, out)
    if l2:
        _decompose_signed(r1, z, sign * s2, out)


def _dual_cone(c: Cone2) -> tuple:
    # p is normal to w and positive on u; r normal to u and positive on w
    p = (-c.w[1], c.w[0])
    if dot(p, c.u) < 0:
        p = (-p[0], -p[1])
    r = (-c.u[1], c.u[0])
    if dot(r, c.w) < 0:
        r = (-r[0], -r[1])
    return _primitive(p), _primitive(r)


def _dual_basis(c1: Vec, c2: Vec) -> tuple:
    # g_i with <c_i, g_j> = delta_ij; integral since det = +-1
    D = det(c1, c2)
    g1 = (c2[1] * D, -c2[0] * D)
    g2 = (-c1[1] * D, c1[0] * D)
    return g1, g2


def decompose(c: Cone2) -> list:
    """Signed unimodular terms whose sum is the generating function of ``c``."""
    if cone_index(c) == 1:
        return [SignedConeTerm(1, (0, 0), c.u, c.w)]
    p, r = _dual_cone(c)
    pieces: list = []
    _decompose_signed(p, r, 1, pieces)
    return [SignedConeTerm(s, (0, 0), *_dual_basis(c1, c2)) for s, c1, c2 in pieces]


def enumerate_bruteforce(c: Cone2, N: int) -> set:
    """Lattice points of the closed cone with max-norm at most N."""
    return {
        (x, y)
        for x in range(-N, N + 1)
        for y in range(-N, N + 1)
        if c.contains((x, y))
    }


def generic_direction(c: Cone2, terms, rng: random.Random | None = None) -> Vec:
    """An integer vector positive on both generators and nonzero on every denominator."""
    rng = rng or random.Random(0)
    p, r = _dual_cone(c)
    vecs = [b for t in terms for b in (t.b1, t.b2)]
    while True:
        # interior of the dual cone
        s, t = rng.randint(1, 10**6), rng.randint(1, 10**6)
        xi = (s * p[0] + t * r[0], s * p[1] + t * r[1])
        if dot(xi, c.u) > 0 and dot(xi, c.w) > 0 and all(dot(xi, b) != 0 for b in vecs):
            return xi


def _oriented(term: SignedConeTerm, xi: Vec) -> tuple:
    """Rewrite a term so both denominators expand as geometric series along xi.

    1/(1 - x^b) = -x^{-b} / (1 - x^{-b}) when <xi, b> < 0.
    """
    sign, apex, gens = term.sign, term.apex, []
    for b in (term.b1, term.b2):
        if dot(xi, b) < 0:
            sign = -sign
            apex = (apex[0] - b[0], apex[1] - b[1])
            b = (-b[0], -b[1])
        gens.append(b)
    return sign, apex, gens[0], gens[1]


def series_coefficients(terms, xi: Vec, N: int) -> dict:
    """Coefficients of the summed Laurent expansions on the box |m|_inf <= N."""
    coeffs: dict = {}
    for term in terms:
        sign, apex, b1, b2 = _oriented(term, xi)
        D = det(b1, b2)  # +-1
        for x in range(-N, N + 1):
            for y in range(-N, N + 1):
                m = (x - apex[0], y - apex[1])
                if det(m, b2) * D >= 0 and det(b1, m) * D >= 0:
                    coeffs[(x, y)] = coeffs.get((x, y), 0) + sign
    return {m: v for m, v in coeffs.items() if v}


def series_verify(terms, c: Cone2, N: int, xi: Vec | None = None) -> bool:
    """True iff the signed terms expand to exactly the cone's 0/1 indicator on the box."""
    if xi is None:
        xi = generic_direction(c, terms)
    got = series_coefficients(terms, xi, N)
    want = enumerate_bruteforce(c, N)
    return all(v == 1 for v in got.values()) and set(got) == want


def random_cone(rng: random.Random, max_index: int, coord: int = 100) -> Cone2:
    """Random cone with primitive generators and index at most ``max_index``."""
    while True:
        u = (rng.randint(-coord, coord), rng.randint(-coord, coord))
        w = (rng.randint(-coord, coord), rng.randint(-coord, coord))
        if u == (0, 0) or w == (0, 0):
            continue
        u, w = _primitive(u), _primitive(w)
        if 0 < abs(det(u, w)) <= max_index:
            return Cone2(u, w)
