"""Timing helpers behind ``dedekindsums bench``."""

from __future__ import annotations

import random
import time
from math import gcd

from . import kernels
from .dedekind import dedekind_fast, dedekind_naive


def random_coprime_pair(rng: random.Random, bits: int) -> tuple:
    while True:
        a = rng.getrandbits(bits) | (1 << (bits - 1))
        b = rng.getrandbits(bits) | (1 << (bits - 1))
        if gcd(a, b) == 1:
            return a, b


def _time(fn, *args) -> float:
    t = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t


def bench_dedekind(bits: int, samples: int = 20, seed: int = 0) -> dict:
    """Per-call timings (ms) of the Euclidean algorithm; direct summation too when bits <= 24."""
    rng = random.Random(seed)
    pairs = [random_coprime_pair(rng, bits) for _ in range(samples)]
    fast = [_time(dedekind_fast, a, b) * 1e3 for a, b in pairs]
    out = {
        "target": "dedekind",
        "bits": bits,
        "samples": samples,
        "seed": seed,
        "backend": kernels.BACKEND,
        "fast_mean_ms": sum(fast) / len(fast),
        "fast_max_ms": max(fast),
    }
    if bits <= 24:
        naive = [_time(dedekind_naive, a, b) * 1e3 for a, b in pairs]
        out["naive_mean_ms"] = sum(naive) / len(naive)
        out["naive_max_ms"] = max(naive)
    return out


def _kernel_workloads(rng: random.Random) -> dict:
    m = 1500
    u = [rng.randint(-m, m) for _ in range(m)]
    v = [rng.randint(-m, m) for _ in range(m)]
    return {
        "cyclic_convolve(m=1500)": ("cyclic_convolve", (u, v)),
        "dedekind_numerator(b=10^6)": ("dedekind_numerator", (123457, 1_000_003)),
        "partition_table(3,5,7,11; n=2*10^5)": ("partition_table", ((3, 5, 7, 11), 200_000)),
    }


def bench_kernels(seed: int = 0, repeat: int = 3) -> dict:
    """Best-of-``repeat`` timings of each raw kernel on every available backend."""
    rng = random.Random(seed)
    rows = []
    for label, (fname, args) in _kernel_workloads(rng).items():
        row = {"kernel": label}
        results = {}
        for backend in kernels.available_backends():
            fn = getattr(kernels.backend_module(backend), fname)
            row[f"{backend}_ms"] = min(_time(fn, *args) for _ in range(repeat)) * 1e3
            results[backend] = fn(*args)
        if len(results) == 2:
            row["speedup"] = row["python_ms"] / row["cython_ms"]
            row["agree"] = results["python"] == results["cython"]
        rows.append(row)
    return {"target": "kernels", "backends": kernels.available_backends(), "seed": seed,
            "rows": rows}


def format_report(res: dict) -> str:
    if res["target"] == "dedekind":
        lines = [f"dedekind_fast  {res['bits']}-bit x{res['samples']}: "
                 f"mean {res['fast_mean_ms']:.3f} ms, max {res['fast_max_ms']:.3f} ms"]
        if "naive_mean_ms" in res:
            lines.append(f"dedekind_naive {res['bits']}-bit x{res['samples']}: "
                         f"mean {res['naive_mean_ms']:.3f} ms, max {res['naive_max_ms']:.3f} ms "
                         f"[{res['backend']} kernel]")
        return "\n".join(lines)
    lines = []
    for row in res["rows"]:
        cells = [f"{row['kernel']:<38}"]
        for b in res["backends"]:
            cells.append(f"{b} {row[b + '_ms']:9.2f} ms")
        if "speedup" in row:
            cells.append(f"x{row['speedup']:.1f}")
            cells.append("agree" if row["agree"] else "MISMATCH")
        lines.append("  ".join(cells))
    return "\n".join(lines)
