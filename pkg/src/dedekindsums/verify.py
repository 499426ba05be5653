"""Exhaustive and randomized verification sweeps.

Every suite is deterministic for a given ``(max, seed)`` and returns a
:class:`SuiteResult`. Only instances inside a law's hypotheses are swept, so
any recorded failure is a genuine counterexample (or a bug).
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from fractions import Fraction
from math import gcd, prod

from . import cone2d as c2
from . import kernels
from .dedekind import dedekind_fast, dedekind_naive
from .errors import InternalInconsistencyError
from .exactcore import format_rational
from .fouriersums import zagier_sum
from .identities import (
    Law,
    dedekind_residual,
    general_residual,
    gessel_dedekind_residual,
    gessel_residual,
    knuth_expansion_residual,
    raddedsum_residual,
    rademacher_residual,
    report,
    zagier_residual,
)
from .partition import (
    coprime_tuples,
    emit_quasipolynomial,
    interior_formula,
    partition_formula,
)

MAX_FAILURES_KEPT = 25

DEFAULT_MAX = {
    "dedekind": 200,
    "rademacher": 60,
    "gessel": 40,
    "general": 15,
    "zagier": 15,
    "raddedsum": 60,
    "knuth": 60,
    "main": 30,
    "ehrhart": 30,
    "quasipoly": 200,
    "cone2d": 10_000,
}

SUITES = tuple(DEFAULT_MAX)


@dataclass
class SuiteResult:
    suite: str
    seed: int
    params: dict
    checked: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, item) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_FAILURES_KEPT:
            self.failures.append(item)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "params": self.params,
            "checked": self.checked,
            "failure_count": self.failure_count,
            "failures": [f.to_json() if hasattr(f, "to_json") else f for f in self.failures],
            "passed": self.passed,
        }

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.suite}: checked={self.checked} failures={self.failure_count} "
            f"seed={self.seed} {params}"
        )


def _check(result: SuiteResult, rep) -> None:
    result.checked += 1
    if not rep.holds:
        result.fail(rep)


def _coprime_pairs(lo: int, hi: int, ordered: bool = True):
    for b in range(lo, hi + 1):
        for a in range(lo, b if ordered else hi + 1):
            if gcd(a, b) == 1:
                yield a, b


def suite_dedekind(max_: int, seed: int) -> SuiteResult:
    res = SuiteResult("dedekind", seed, {"max": max_})
    pairs = list(_coprime_pairs(1, max_))
    for a, b in pairs:
        _check(res, report(Law.DEDEKIND, dedekind_residual(a, b), a=a, b=b))
        diff = dedekind_fast(a, b) - dedekind_naive(a, b)
        res.checked += 1
        if diff:
            res.fail({"check": "fast_vs_naive", "a": a, "b": b, "difference": format_rational(diff)})
    # Gessel at n = p collapses to Dedekind reciprocity
    for p, q in pairs:
        r = gessel_dedekind_residual(p, q)
        _check(res, report(Law.GESSEL, r, p=p, q=q, n=p))
    return res


def random_rademacher_instance(rng: random.Random, max_ab: int, max_den: int = 20):
    while True:
        a, b = rng.randint(1, max_ab), rng.randint(1, max_ab)
        if gcd(a, b) != 1:
            continue
        x = Fraction(rng.randrange(0, max_den * 2), rng.randint(1, max_den))
        y = Fraction(rng.randrange(0, max_den * 2), rng.randint(1, max_den))
        if x.denominator == 1 and y.denominator == 1:
            continue
        return a, b, x, y


def suite_rademacher(max_: int, seed: int, count: int = 1000) -> SuiteResult:
    res = SuiteResult("rademacher", seed, {"max": max_, "count": count})
    rng = random.Random(seed)
    for _ in range(count):
        a, b, x, y = random_rademacher_instance(rng, max_)
        _check(res, report(Law.RADEMACHER, rademacher_residual(a, b, x, y), a=a, b=b, x=x, y=y))
    return res


def suite_gessel(max_: int, seed: int) -> SuiteResult:
    res = SuiteResult("gessel", seed, {"max": max_})
    for p, q in _coprime_pairs(1, max_, ordered=False):
        for n in range(1, p + q + 1):
            _check(res, report(Law.GESSEL, gessel_residual(p, q, n), p=p, q=q, n=n))
    return res


def suite_general(max_: int, seed: int, max_len: int = 4) -> SuiteResult:
    res = SuiteResult("general", seed, {"max": max_, "max_len": max_len})
    for parts in coprime_tuples(max_, max_len):
        for n in range(1, sum(parts.parts)):
            r = general_residual(parts, n)
            _check(res, report(Law.GENERAL, r, parts=list(parts.parts), n=n))
    return res


def suite_zagier(max_: int, seed: int, max_len: int = 5) -> SuiteResult:
    res = SuiteResult("zagier", seed, {"max": max_, "max_len": max_len})
    for parts in coprime_tuples(max_, max_len):
        _check(res, report(Law.ZAGIER, zagier_residual(parts), parts=list(parts.parts)))
    # odd-dimensional sums vanish identically
    for a0 in range(1, max_ + 1):
        units = [a for a in range(1, max_ + 1) if gcd(a, a0) == 1]
        for d in (1, 3):
            for parts in combinations_with_replacement(units, d):
                v = zagier_sum(a0, parts)
                res.checked += 1
                if v:
                    res.fail({"check": "odd_zagier", "a0": a0, "parts": list(parts),
                              "value": format_rational(v)})
    return res


def suite_raddedsum(max_: int, seed: int) -> SuiteResult:
    res = SuiteResult("raddedsum", seed, {"max": max_})
    for a, b in _coprime_pairs(1, max_, ordered=False):
        for n in range(-20, 2 * b + 1):
            _check(res, report(Law.RADDEDSUM, raddedsum_residual(a, b, n), a=a, b=b, n=n))
    return res


def suite_knuth(max_: int, seed: int) -> SuiteResult:
    res = SuiteResult("knuth", seed, {"max": max_})
    for a, b in _coprime_pairs(1, max_, ordered=False):
        for n in range(-20, 2 * b + 1):
            _check(res, report(Law.KNUTH, knuth_expansion_residual(a, b, n), a=a, b=b, n=n))
    return res


def _formula_sweep(name: str, max_: int, seed: int, n_max: int, interior: bool) -> SuiteResult:
    res = SuiteResult(name, seed, {"max": max_, "max_len": 4, "n_max": n_max})
    for parts in coprime_tuples(max_, 4):
        counts = kernels.partition_table(parts.parts, n_max)
        shift = sum(parts.parts) if interior else 0
        for n in range(1 if interior else 0, n_max + 1):
            want = counts[n - shift] if n - shift >= 0 else 0
            try:
                got = interior_formula(parts, n) if interior else partition_formula(parts, n)
            except InternalInconsistencyError as exc:
                got = str(exc)
            res.checked += 1
            if got != want:
                res.fail({"parts": list(parts.parts), "n": n,
                          "formula": got if isinstance(got, str) else format_rational(got),
                          "count": want})
    return res


def suite_main(max_: int, seed: int, n_max: int = 500) -> SuiteResult:
    return _formula_sweep("main", max_, seed, n_max, interior=False)


def suite_ehrhart(max_: int, seed: int, n_max: int = 500) -> SuiteResult:
    return _formula_sweep("ehrhart", max_, seed, n_max, interior=True)


def suite_quasipoly(max_: int, seed: int) -> SuiteResult:
    """Quasipolynomial vs DP for every coprime tuple with product <= max_, n up to 10x product."""
    res = SuiteResult("quasipoly", seed, {"max_product": max_})
    for parts in coprime_tuples(max_, max_len=max_, max_product=max_):
        P = prod(parts.parts)
        qp = emit_quasipolynomial(parts)
        counts = kernels.partition_table(parts.parts, 10 * P)
        for n, want in enumerate(counts):
            res.checked += 1
            got = qp.evaluate(n)
            if got != want:
                res.fail({"parts": list(parts.parts), "n": n, "quasi": format_rational(got),
                          "count": want})
    return res


def suite_cone2d(max_: int, seed: int, count: int = 200, N: int = 8) -> SuiteResult:
    res = SuiteResult("cone2d", seed, {"max_index": max_, "count": count, "N": N})
    rng = random.Random(seed)
    for _ in range(count):
        cone = c2.random_cone(rng, max_)
        terms = c2.decompose(cone)
        index = c2.cone_index(cone)
        bound = 4 * (1 + math.log2(index))
        ok = (
            c2.series_verify(terms, cone, N, c2.generic_direction(cone, terms, rng))
            and all(abs(c2.det(t.b1, t.b2)) == 1 for t in terms)
            and len(terms) <= bound
        )
        res.checked += 1
        if not ok:
            res.fail({"u": list(cone.u), "w": list(cone.w), "index": index, "terms": len(terms)})
    return res


_RUNNERS = {
    "dedekind": suite_dedekind,
    "rademacher": suite_rademacher,
    "gessel": suite_gessel,
    "general": suite_general,
    "zagier": suite_zagier,
    "raddedsum": suite_raddedsum,
    "knuth": suite_knuth,
    "main": suite_main,
    "ehrhart": suite_ehrhart,
    "quasipoly": suite_quasipoly,
    "cone2d": suite_cone2d,
}


def run_suite(name: str, max_: int | None = None, seed: int = 0) -> SuiteResult:
    """Run one suite; ``max_`` defaults to the suite's own size parameter."""
    if max_ is None:
        max_ = DEFAULT_MAX[name]
    start = time.perf_counter()
    res = _RUNNERS[name](max_, seed)
    res.elapsed = time.perf_counter() - start
    return res


def run_all(max_: int | None = None, seed: int = 0) -> list:
    return [run_suite(name, max_, seed) for name in SUITES]
