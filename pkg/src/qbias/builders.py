"""Builders for the parity-bias q-series and the rearrangement identity.

inner_series(s, m)     sum_{k>=1} q^k (1 - q^k) / (q^s; q^m)_k
double_series(m)       sum_{j>=0} sum_{k>=1} q^(3j+k) (1 - q^k) / ((q^m;q^m)_j (q^m;q^m)_(j+k))
rearranged(m)          sum_{j>=0} q^(3j) / (q^m;q^m)_j^2 * inner_series((j+1) m, m)
full_series(m)         (q, q^2; q^m)_inf / (q; q)_inf * double_series(m)

Cutoffs: the k-th inner term starts at q^k and the (j, k) double term at
q^(3j+k), so terms with k > N (resp. 3j + k > N) cannot touch coefficients
up to q^N and are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .report import ReportRow, VerificationReport, timed
from .series import (
    PochhammerSpec,
    TruncatedSeries,
    pochhammer,
    series_const,
    series_inverse,
    series_mul,
)


def _check_modulus(m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")


def inner_series(s: int, m: int, order: int) -> TruncatedSeries:
    if s < 1 or m < 1:
        raise ValueError(f"need s >= 1 and m >= 1, got s={s}, m={m}")
    acc = [0] * (order + 1)
    # gf holds 1/(q^s; q^m)_k, grown one factor per k
    gf = [1] + [0] * order
    for k in range(1, order + 1):
        part = s + (k - 1) * m
        for t in range(part, order + 1):
            gf[t] += gf[t - part]
        # q^k * gf - q^(2k) * gf
        for t in range(k, order + 1):
            acc[t] += gf[t - k]
        for t in range(2 * k, order + 1):
            acc[t] -= gf[t - 2 * k]
    return TruncatedSeries(tuple(acc), order)


def _reciprocal_pochhammers(m: int, count: int, order: int) -> list[TruncatedSeries]:
    """[1/(q^m; q^m)_i for i in 0..count], each via series_inverse."""
    return [
        series_inverse(pochhammer(PochhammerSpec(m, m, i), order)) for i in range(count + 1)
    ]


def double_series(m: int, order: int) -> TruncatedSeries:
    _check_modulus(m)
    recips = _reciprocal_pochhammers(m, order, order)
    acc = [0] * (order + 1)
    for j in range(order // 3 + 1):
        for k in range(1, order - 3 * j + 1):
            shift = 3 * j + k
            rem = order - shift
            term = series_mul(recips[j].truncate(rem), recips[j + k].truncate(rem))
            if k <= rem:
                term = term.times_one_minus(k)
            for t, c in enumerate(term.coeffs):
                acc[shift + t] += c
    return TruncatedSeries(tuple(acc), order)


def rearranged_double_series(m: int, order: int) -> TruncatedSeries:
    _check_modulus(m)
    acc = [0] * (order + 1)
    recip = series_const(1, order)
    for j in range(order // 3 + 1):
        if j > 0:
            recip = recip.divide_one_minus(j * m)
        rem = order - 3 * j
        outer = recip.truncate(rem)
        term = series_mul(series_mul(outer, outer), inner_series((j + 1) * m, m, rem))
        for t, c in enumerate(term.coeffs):
            acc[3 * j + t] += c
    return TruncatedSeries(tuple(acc), order)


def prefactor(m: int, order: int) -> TruncatedSeries:
    """(q; q^m)_inf (q^2; q^m)_inf / (q; q)_inf via Pochhammer products."""
    _check_modulus(m)
    num = series_mul(
        pochhammer(PochhammerSpec(1, m), order), pochhammer(PochhammerSpec(2, m), order)
    )
    return series_mul(num, series_inverse(pochhammer(PochhammerSpec(1, 1), order)))


def prefactor_direct(m: int, order: int) -> TruncatedSeries:
    """Same prefactor as partitions into parts not congruent to 1 or 2 mod m."""
    _check_modulus(m)
    excluded = {1 % m, 2 % m}
    f = series_const(1, order)
    for d in range(1, order + 1):
        if d % m not in excluded:
            f = f.divide_one_minus(d)
    return f


def full_series(m: int, order: int) -> TruncatedSeries:
    return series_mul(prefactor(m, order), double_series(m, order))


def identity_check(m: int, order: int) -> VerificationReport:
    """Compare double_series and rearranged_double_series coefficient by coefficient."""
    report = VerificationReport("rearrangement", {"m": m, "N": order})
    with timed(report):
        lhs = double_series(m, order)
        rhs = rearranged_double_series(m, order)
        report.rows = [
            ReportRow(n, a == b, {"double": a, "rearranged": b})
            for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs))
        ]
    return report


class SeriesKind(str, Enum):
    INNER = "inner"
    DOUBLE = "double"
    FULL = "full"


@dataclass(frozen=True)
class SeriesId:
    kind: SeriesKind
    order: int
    m: int
    s: int | None = None

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        if self.kind is SeriesKind.INNER:
            if self.s is None or self.s < 1 or self.m < 1:
                raise ValueError("inner series needs s >= 1 and m >= 1")
        else:
            _check_modulus(self.m)

    def build(self) -> TruncatedSeries:
        if self.kind is SeriesKind.INNER:
            return inner_series(self.s, self.m, self.order)
        if self.kind is SeriesKind.DOUBLE:
            return double_series(self.m, self.order)
        return full_series(self.m, self.order)
