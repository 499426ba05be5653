"""Command-line front end.

Exit codes: 0 success, 1 a nonzero residual / failed suite, 2 invalid input.
Rationals are printed as ``p/q``; ``--json`` switches to one JSON document.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import bench, cone2d, kernels, verify
from .dedekind import dedekind_fast, dedekind_naive, knuth_sum, rademacher_sum
from .errors import InternalInconsistencyError, ValidationError
from .exactcore import as_rational, format_rational
from .fouriersums import fourier_dedekind, zagier_sum
from .partition import (
    PartsTuple,
    emit_quasipolynomial,
    interior_count,
    interior_formula,
    partition_count,
    partition_formula,
    q_value,
)

_PAIR_RE = re.compile(r"^-\d+,-?\d+$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _int_list(text: str) -> list:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _pair(text: str) -> tuple:
    v = _int_list(text.strip())
    if len(v) != 2:
        raise argparse.ArgumentTypeError(f"expected x,y got {text!r}")
    return tuple(v)


def _parts(text: str) -> PartsTuple:
    try:
        return PartsTuple.parse(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON document")
    common.add_argument("--out", metavar="PATH", help="also write the JSON document to PATH")

    p = _Parser(prog="dedekindsums", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("dedekind", parents=[common], help="classical Dedekind sum s(a, b)")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.add_argument("--naive", action="store_true", help="O(b) direct summation")

    s = sub.add_parser("rademacher", parents=[common], help="Dedekind-Rademacher sum s(a, b; x, y)")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.add_argument("--x", type=_rational, default=Fraction(0))
    s.add_argument("--y", type=_rational, default=Fraction(0))

    s = sub.add_parser("knuth", parents=[common], help="s(a, b; n/b, 0)")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.add_argument("n", type=int)

    s = sub.add_parser("fourier", parents=[common], help="Fourier-Dedekind sum sigma_n(parts; mod)")
    s.add_argument("n", type=int)
    s.add_argument("--mod", type=int, required=True)
    s.add_argument("--parts", type=_int_list, default=[])

    s = sub.add_parser("zagier", parents=[common], help="Zagier sum s(a0; a1, ..., ad)")
    s.add_argument("a0", type=int)
    s.add_argument("parts", type=int, nargs="*")

    s = sub.add_parser("partition", parents=[common], help="coin-exchange count")
    s.add_argument("--parts", type=_parts, required=True)
    s.add_argument("n", type=int)
    s.add_argument("--method", choices=["dp", "formula"], default="dp")
    s.add_argument("--interior", action="store_true", help="count with every k_j >= 1")

    s = sub.add_parser("quasipoly", parents=[common], help="quasipolynomial of the count")
    s.add_argument("--parts", type=_parts, required=True)

    s = sub.add_parser("q", parents=[common], help="polynomial part q(parts, n)")
    s.add_argument("--parts", type=_parts, required=True)
    s.add_argument("n", type=int)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=list(verify.SUITES) + ["all"])
    s.add_argument("--max", type=int, default=None, dest="max_")
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("cone2d", parents=[common], help="signed unimodular decomposition of a plane cone")
    s.add_argument("--gen", type=_pair, nargs=2, required=True, metavar="X,Y")
    s.add_argument("--truncate", type=int, default=None, metavar="N",
                   help="check the terms against enumeration on the box |m| <= N")

    s = sub.add_parser("bench", parents=[common], help="timings")
    s.add_argument("target", choices=["dedekind", "kernels"])
    s.add_argument("--bits", type=int, default=64)
    s.add_argument("--samples", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    return p


def _protect_negative_pairs(argv: list) -> list:
    # argparse reads "-3,4" as an option; a leading space keeps it positional
    return [" " + a if _PAIR_RE.match(a) else a for a in argv]


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)


def _value(args, name: str, inputs: dict, value) -> int:
    _emit(args, {"command": name, "args": inputs, "value": format_rational(value)},
          format_rational(value))
    return 0


def _cmd_dedekind(args):
    f = dedekind_naive if args.naive else dedekind_fast
    return _value(args, "dedekind", {"a": args.a, "b": args.b, "naive": args.naive},
                  f(args.a, args.b))


def _cmd_rademacher(args):
    v = rademacher_sum(args.a, args.b, args.x, args.y)
    return _value(args, "rademacher", {"a": args.a, "b": args.b, "x": format_rational(args.x),
                                       "y": format_rational(args.y)}, v)


def _cmd_knuth(args):
    return _value(args, "knuth", {"a": args.a, "b": args.b, "n": args.n},
                  knuth_sum(args.a, args.b, args.n))


def _cmd_fourier(args):
    return _value(args, "fourier", {"n": args.n, "mod": args.mod, "parts": args.parts},
                  fourier_dedekind(args.n, args.parts, args.mod))


def _cmd_zagier(args):
    return _value(args, "zagier", {"a0": args.a0, "parts": args.parts},
                  zagier_sum(args.a0, args.parts))


def _cmd_partition(args):
    parts, n = args.parts, args.n
    if args.method == "dp":
        v = interior_count(parts, n) if args.interior else partition_count(parts, n)
    else:
        v = interior_formula(parts, n) if args.interior else partition_formula(parts, n)
    return _value(args, "partition", {"parts": list(parts.parts), "n": n, "method": args.method,
                                      "interior": args.interior}, v)


def _cmd_q(args):
    return _value(args, "q", {"parts": list(args.parts.parts), "n": args.n},
                  q_value(args.parts, args.n))


def _cmd_quasipoly(args):
    qp = emit_quasipolynomial(args.parts)
    lines = ["poly: " + " ".join(format_rational(c) for c in qp.poly_coeffs)]
    for m, table in zip(qp.parts, qp.periodic_tables):
        lines.append(f"mod {m}: " + " ".join(format_rational(c) for c in table))
    _emit(args, {"command": "quasipoly", **qp.to_json()}, "\n".join(lines))
    return 0


def _cmd_verify(args):
    names = verify.SUITES if args.suite == "all" else (args.suite,)
    results = []
    for name in names:
        r = verify.run_suite(name, args.max_, args.seed)
        results.append(r)
        print(f"{name}: {r.elapsed:.2f}s", file=sys.stderr)
    passed = all(r.passed for r in results)
    lines = [r.summary() for r in results]
    for r in results:
        for f in r.failures[:5]:
            lines.append("  " + json.dumps(f.to_json() if hasattr(f, "to_json") else f))
    total_fail = sum(r.failure_count for r in results)
    lines.append(f"{len(results)} suite(s), {total_fail} failure(s), seed={args.seed}")
    _emit(args, {"command": "verify", "seed": args.seed, "passed": passed,
                 "suites": [r.to_json() for r in results]}, "\n".join(lines))
    return 0 if passed else 1


def _cmd_cone2d(args):
    cone = cone2d.Cone2(*args.gen)
    terms = cone2d.decompose(cone)
    payload = {"command": "cone2d", "u": list(cone.u), "w": list(cone.w),
               "index": cone2d.cone_index(cone), "terms": [t.to_json() for t in terms]}
    lines = [str(t) for t in terms]
    ok = True
    if args.truncate is not None:
        ok = cone2d.series_verify(terms, cone, args.truncate)
        payload["verified"] = ok
        lines.append(f"series check on |m| <= {args.truncate}: {'ok' if ok else 'MISMATCH'}")
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def _cmd_bench(args):
    if args.target == "dedekind":
        res = bench.bench_dedekind(args.bits, args.samples, args.seed)
    else:
        res = bench.bench_kernels(seed=args.seed)
    _emit(args, {"command": "bench", **res}, bench.format_report(res))
    return 0


_COMMANDS = {
    "dedekind": _cmd_dedekind,
    "rademacher": _cmd_rademacher,
    "knuth": _cmd_knuth,
    "fourier": _cmd_fourier,
    "zagier": _cmd_zagier,
    "partition": _cmd_partition,
    "q": _cmd_q,
    "quasipoly": _cmd_quasipoly,
    "verify": _cmd_verify,
    "cone2d": _cmd_cone2d,
    "bench": _cmd_bench,
}


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_protect_negative_pairs(argv))
    except UsageError as exc:
        print(str(exc), file=sys.stderr, end="")
        return 2
    try:
        return _COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
