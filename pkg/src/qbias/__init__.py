"""Exact q-series and partition counting for parity bias in partitions."""

from .builders import (
    SeriesId,
    SeriesKind,
    double_series,
    full_series,
    identity_check,
    inner_series,
    prefactor,
    prefactor_direct,
    rearranged_double_series,
)
from .partitions import (
    BiasQuery,
    CapExceeded,
    RestrictedCountTable,
    bias_count,
    bias_counts,
    bias_oracle,
    parity_bias,
    restricted_count,
    restricted_count_oracle,
    restricted_gf,
)
from .proof_check import ProofDecomposition, coefficient_formula, regrouped_formula, verify_proof
from .report import ReportRow, VerificationReport
from .series import (
    INFINITE,
    NonUnitConstantTerm,
    PochhammerSpec,
    TruncatedSeries,
    pochhammer,
    series_add,
    series_const,
    series_inverse,
    series_mul,
)

__version__ = "0.1.0"
