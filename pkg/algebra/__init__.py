from .combinatorics import (
    Partition,
    enumerate_partitions,
    partition_count,
    lagrange_number,
    bernoulli,
    lambda_g_constant,
    zeta_at_negative,
    multinomial,
    harmonic_number,
    binomial,
)
from .jet_polynomial import Grading, JetMonomial, JetPolynomial
from .pole_series import PoleSeries, derivatives_of_simple_pole, derivatives_table
from .truncated_series import TruncatedSeries, series_alphabet, paired_alphabet

__all__ = [
    # combinatorial kernel
    "Partition",
    "enumerate_partitions",
    "partition_count",
    "lagrange_number",
    "bernoulli",
    "lambda_g_constant",
    "zeta_at_negative",
    "multinomial",
    "harmonic_number",
    "binomial",

    # jet algebra
    "Grading",
    "JetMonomial",
    "JetPolynomial",

    # pole series
    "PoleSeries",
    "derivatives_of_simple_pole",
    "derivatives_table",

    # truncated series
    "TruncatedSeries",
    "series_alphabet",
    "paired_alphabet",
]
