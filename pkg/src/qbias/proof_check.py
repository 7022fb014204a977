"""Step-by-step check of the counting argument for inner-series nonnegativity.

The q^n coefficient of sum_{k>=1} q^k (1 - q^k) / (q^s; q^m)_k is

    sum_{k>=1} P(k, n - k) - P(k, n - 2k)

with P(k, x) = P_{s,m,k}(x). Moving each subtracted term with index k to
index 2k regroups the sum as

    sum_{k odd} P(k, n - k) + sum_{k even} (P(k, n - k) - P(k/2, n - k))

and every even bracket is >= 0 because P(k, x) is nondecreasing in k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .builders import inner_series
from .partitions import RestrictedCountTable, restricted_table
from .report import ReportRow, VerificationReport, timed


def _table(s: int, m: int, n: int) -> RestrictedCountTable:
    # every term needs k <= n and arguments <= n
    return restricted_table(s, m, max(n, 0), max(n, 0))


def coefficient_formula(s: int, m: int, n: int, table: RestrictedCountTable | None = None) -> int:
    if s < 1 or m < 1:
        raise ValueError(f"need s >= 1 and m >= 1, got s={s}, m={m}")
    if n < 0:
        raise ValueError("n must be >= 0")
    P = table if table is not None else _table(s, m, n)
    # for k > n both arguments are negative
    return sum(P(k, n - k) - P(k, n - 2 * k) for k in range(1, n + 1))


@dataclass(frozen=True)
class ProofDecomposition:
    s: int
    m: int
    n: int
    odd_terms: tuple[tuple[int, int], ...]
    even_terms: tuple[tuple[int, int], ...]
    total: int

    def __post_init__(self) -> None:
        parts = sum(v for _, v in self.odd_terms) + sum(v for _, v in self.even_terms)
        if parts != self.total:
            raise ValueError(f"total {self.total} != sum of terms {parts}")

    @property
    def even_terms_nonnegative(self) -> bool:
        return all(v >= 0 for _, v in self.even_terms)


def regrouped_formula(
    s: int, m: int, n: int, table: RestrictedCountTable | None = None
) -> ProofDecomposition:
    if s < 1 or m < 1:
        raise ValueError(f"need s >= 1 and m >= 1, got s={s}, m={m}")
    if n < 0:
        raise ValueError("n must be >= 0")
    P = table if table is not None else _table(s, m, n)
    odd, even = [], []
    for k in range(1, n + 1):
        if k % 2:
            odd.append((k, P(k, n - k)))
        else:
            even.append((k, P(k, n - k) - P(k // 2, n - k)))
    total = sum(v for _, v in odd) + sum(v for _, v in even)
    return ProofDecomposition(s, m, n, tuple(odd), tuple(even), total)


def verify_proof(s: int, m: int, max_n: int) -> VerificationReport:
    """Check each step of the argument for every n <= max_n.

    Per row: ``series`` (formula equals the expanded coefficient),
    ``regroup`` (regrouped total equals the formula), ``even_nonneg``
    (each even bracket >= 0) and ``monotone`` (P(k/2, n-k) <= P(k, n-k)
    for every even k used).
    """
    report = VerificationReport("proof", {"s": s, "m": m, "N": max_n})
    with timed(report):
        series = inner_series(s, m, max_n)
        P = _table(s, m, max_n)
        rows = []
        for n in range(max_n + 1):
            formula = coefficient_formula(s, m, n, P)
            dec = regrouped_formula(s, m, n, P)
            checks = {
                "series": formula == series[n],
                "regroup": dec.total == formula,
                "even_nonneg": dec.even_terms_nonnegative,
                "monotone": all(
                    P(k // 2, n - k) <= P(k, n - k) for k in range(2, n + 1, 2)
                ),
            }
            witness = {"coeff": formula, **{k: ("ok" if v else "FAIL") for k, v in checks.items()}}
            rows.append(ReportRow(n, all(checks.values()), witness))
        report.rows = rows
    return report
