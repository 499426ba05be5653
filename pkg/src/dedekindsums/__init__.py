"""Exact Dedekind-type sums, the coin-exchange formula built from them, and
checkers for the associated reciprocity laws."""

from .errors import (
    DedekindSumsError,
    InternalInconsistencyError,
    SingularityError,
    ValidationError,
)
from .exactcore import (
    CycVec,
    TruncSeries,
    as_rational,
    bernoulli2,
    binom_series,
    cyc_convolve,
    format_rational,
    frac,
    sawtooth,
    series_inv,
    series_mul,
    unit_fraction_vector,
)
from .dedekind import dedekind_fast, dedekind_naive, knuth_sum, rademacher_sum
from .fouriersums import dedekind_via_zagier, fourier_dedekind, zagier_sum
from .partition import (
    PartsTuple,
    QuasiPolynomial,
    emit_quasipolynomial,
    interior_count,
    interior_formula,
    partition_count,
    partition_formula,
    q_polynomial,
    q_value,
)
from .kernels import BACKEND

__version__ = "0.1.0"
