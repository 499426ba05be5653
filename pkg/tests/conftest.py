import cmath
import random
import sys

import pytest

from dedekindsums import kernels


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return kernels.backend_module(request.param)


@pytest.fixture
def rng():
    return random.Random(20240611)


def root_sum(n, parts, a0):
    """(1/a0) sum over nontrivial a0-th roots of lam^n / prod(1 - lam^a), in floating point."""
    total = 0j
    for k in range(1, a0):
        lam = cmath.exp(2j * cmath.pi * k / a0)
        term = lam**n
        for a in parts:
            term /= 1 - lam**a
        total += term
    return total / a0


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
