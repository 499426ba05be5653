"""Pure-Python integer kernels.

Reference implementations of the hot loops. The compiled module
``_ckernels`` exposes the same three functions with the same semantics,
restricted to values that fit in a signed 64-bit word; ``kernels`` decides
which one runs.
"""


def cyclic_convolve(u, v):
    """Cyclic convolution of two equal-length integer sequences."""
    m = len(u)
    out = [0] * m
    for i, ui in enumerate(u):
        if not ui:
            continue
        k = i
        for vj in v:
            if vj:
                out[k] += ui * vj
            k += 1
            if k == m:
                k = 0
    return out


def dedekind_numerator(a, b):
    """Return N such that s(a, b) = N / (4 b^2), by direct summation over k mod b.

    Uses ((r/b)) = (2r - b) / (2b) for 0 < r < b and 0 for r = 0.
    """
    a %= b
    total = 0
    r = 0
    for k in range(1, b):
        r += a
        if r >= b:
            r -= b
        if r:
            total += (2 * r - b) * (2 * k - b)
    return total


def partition_table(parts, n):
    """Counts of representations of 0..n as nonnegative combinations of ``parts``."""
    counts = [0] * (n + 1)
    counts[0] = 1
    for a in parts:
        for k in range(a, n + 1):
            counts[k] += counts[k - a]
    return counts
