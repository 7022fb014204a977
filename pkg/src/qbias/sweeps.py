"""Grid sweeps behind ``qbias verify``.

Each sweep returns a :class:`VerificationReport` with one row per
coefficient index n, aggregated over the parameter grid. Jobs can fan out
over worker processes (``QBIAS_THREADS``); rows are always assembled in
grid order so output does not depend on scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

from .builders import double_series, full_series, identity_check, inner_series
from .partitions import (
    DEFAULT_ENUMERATION_CAP,
    BiasQuery,
    bias_counts,
    bias_oracle,
)
from .proof_check import verify_proof
from .report import ReportRow, VerificationReport, timed

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "QBIAS_THREADS"


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None


def parallel_map(fn: Callable[[T], R], jobs: Sequence[T]) -> list[R]:
    workers = min(worker_count(), len(jobs))
    if workers <= 1:
        return [fn(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def _fmt_range(values: Iterable[int]) -> str:
    v = list(values)
    if not v:
        return ""
    if v == list(range(v[0], v[-1] + 1)):
        return f"{v[0]}..{v[-1]}" if len(v) > 1 else str(v[0])
    return ",".join(map(str, v))


def _nonnegativity_rows(
    labels: Sequence[str], series: Sequence[Sequence[int]], order: int
) -> list[ReportRow]:
    rows = []
    for n in range(order + 1):
        coeffs = [c[n] for c in series]
        lo = min(coeffs)
        where = labels[coeffs.index(lo)]
        zeros = sum(1 for c in coeffs if c == 0)
        rows.append(ReportRow(n, lo >= 0, {"min": lo, "at": where, "zeros": zeros}))
    return rows


def _inner_job(args: tuple[int, int, int]) -> tuple[int, ...]:
    s, m, order = args
    return inner_series(s, m, order).coeffs


def _double_job(args: tuple[int, int]) -> tuple[int, ...]:
    m, order = args
    return double_series(m, order).coeffs


def _full_job(args: tuple[int, int]) -> tuple[int, ...]:
    m, order = args
    return full_series(m, order).coeffs


def _identity_job(args: tuple[int, int]) -> VerificationReport:
    return identity_check(*args)


def _proof_job(args: tuple[int, int, int]) -> VerificationReport:
    return verify_proof(*args)


def sweep_inner(s_values: Sequence[int], m_values: Sequence[int], order: int) -> VerificationReport:
    """Nonnegativity of inner_series(s, m) over a grid."""
    report = VerificationReport(
        "inner-nonnegativity", {"s": _fmt_range(s_values), "m": _fmt_range(m_values), "N": order}
    )
    with timed(report):
        grid = [(s, m) for s in s_values for m in m_values]
        series = parallel_map(_inner_job, [(s, m, order) for s, m in grid])
        report.rows = _nonnegativity_rows([f"s={s},m={m}" for s, m in grid], series, order)
    return report


def sweep_double(m_values: Sequence[int], order: int) -> VerificationReport:
    report = VerificationReport("double-nonnegativity", {"m": _fmt_range(m_values), "N": order})
    with timed(report):
        series = parallel_map(_double_job, [(m, order) for m in m_values])
        report.rows = _nonnegativity_rows([f"m={m}" for m in m_values], series, order)
    return report


def sweep_full(m_values: Sequence[int], order: int) -> VerificationReport:
    report = VerificationReport("full-nonnegativity", {"m": _fmt_range(m_values), "N": order})
    with timed(report):
        series = parallel_map(_full_job, [(m, order) for m in m_values])
        report.rows = _nonnegativity_rows([f"m={m}" for m in m_values], series, order)
    return report


def _merge_rows(labels: Sequence[str], reports: Sequence[VerificationReport]) -> list[ReportRow]:
    # row n passes iff it passes in every sub-report
    rows = []
    for n in range(len(reports[0].rows)):
        bad = [lab for lab, rep in zip(labels, reports) if not rep.rows[n].passed]
        witness = {"checked": len(reports)}
        if bad:
            witness["failed"] = ";".join(bad)
        rows.append(ReportRow(n, not bad, witness))
    return rows


def sweep_rearrangement(m_values: Sequence[int], order: int) -> VerificationReport:
    report = VerificationReport("rearrangement", {"m": _fmt_range(m_values), "N": order})
    with timed(report):
        subs = parallel_map(_identity_job, [(m, order) for m in m_values])
        report.rows = _merge_rows([f"m={m}" for m in m_values], subs)
    return report


def sweep_proof(s_values: Sequence[int], m_values: Sequence[int], order: int) -> VerificationReport:
    report = VerificationReport(
        "proof", {"s": _fmt_range(s_values), "m": _fmt_range(m_values), "N": order}
    )
    with timed(report):
        grid = [(s, m) for s in s_values for m in m_values]
        subs = parallel_map(_proof_job, [(s, m, order) for s, m in grid])
        report.rows = _merge_rows([f"s={s},m={m}" for s, m in grid], subs)
    return report


def sweep_parity(order: int, oracle_cap: int = DEFAULT_ENUMERATION_CAP) -> VerificationReport:
    """p_o(n) >= p_e(n) for n <= order, n != 2.

    n = 2 is reported under ``excluded``. For n up to ``oracle_cap`` the DP
    counts must also agree with brute-force enumeration.
    """
    report = VerificationReport("parity-bias", {"a": 1, "b": 2, "m": 2, "N": order})
    with timed(report):
        odd = bias_counts(1, 2, 2, order)
        even = bias_counts(2, 1, 2, order)
        for n in range(order + 1):
            witness: dict = {"p_o": odd[n], "p_e": even[n], "diff": odd[n] - even[n]}
            ok = odd[n] >= even[n]
            if n <= oracle_cap:
                agree = (
                    bias_oracle(BiasQuery(1, 2, 2, n), oracle_cap) == odd[n]
                    and bias_oracle(BiasQuery(2, 1, 2, n), oracle_cap) == even[n]
                )
                witness["oracle"] = "agree" if agree else "DISAGREE"
                ok = ok and agree
            row = ReportRow(n, ok, witness)
            if n == 2:
                report.excluded.append(row)
            else:
                report.rows.append(row)
    return report


def _bias_pair_job(args: tuple[int, int, int, int]) -> tuple[list[int], list[int]]:
    a, b, m, order = args
    return bias_counts(a, b, m, order), bias_counts(b, a, m, order)


def sweep_bias(m_values: Sequence[int], order: int) -> VerificationReport:
    """p_{a,b,m}(n) >= p_{b,a,m}(n) for every 1 <= a < b <= m over the m grid."""
    report = VerificationReport("residue-bias", {"m": _fmt_range(m_values), "N": order})
    with timed(report):
        triples = [(a, b, m) for m in m_values for a in range(1, m + 1) for b in range(a + 1, m + 1)]
        results = parallel_map(_bias_pair_job, [(a, b, m, order) for a, b, m in triples])
        for n in range(order + 1):
            diffs = [fwd[n] - back[n] for fwd, back in results]
            lo = min(diffs)
            a, b, m = triples[diffs.index(lo)]
            report.rows.append(
                ReportRow(n, lo >= 0, {"min_diff": lo, "at": f"a={a},b={b},m={m}", "pairs": len(triples)})
            )
    return report
