"""Partition counting: restricted counts P_{s,m,k}(n) and bias counts p_{a,b,m}(n).

The dynamic-programming routes live here together with brute-force
enumeration oracles used to cross-check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy.utilities.iterables import partitions as _sympy_partitions

from .series import PochhammerSpec, TruncatedSeries, pochhammer, series_inverse

DEFAULT_ENUMERATION_CAP = 40

# p(n) < 2**63 for n <= 400, so int64 tables are exact up to there.
_INT64_SAFE_N = 400


class CapExceeded(ValueError):
    """Raised when an enumeration oracle is asked for n beyond its cap."""


def _check_progression(s: int, m: int, k: int) -> None:
    if s < 1 or m < 1 or k < 0:
        raise ValueError(f"need s >= 1, m >= 1, k >= 0; got s={s}, m={m}, k={k}")


def restricted_count(s: int, m: int, k: int, n: int) -> int:
    """Number of partitions of n into parts from {s, s+m, ..., s+m(k-1)}."""
    _check_progression(s, m, k)
    if n < 0:
        return 0
    ways = [1] + [0] * n
    for i in range(k):
        part = s + i * m
        for t in range(part, n + 1):
            ways[t] += ways[t - part]
    return ways[n]


def restricted_gf(s: int, m: int, k: int, order: int) -> TruncatedSeries:
    """Generating function 1/(q^s; q^m)_k of :func:`restricted_count`."""
    _check_progression(s, m, k)
    return series_inverse(pochhammer(PochhammerSpec(s, m, k), order))


@dataclass(frozen=True)
class RestrictedCountTable:
    """Values P_{s,m,k}(n) for 0 <= k <= max_k and 0 <= n <= max_n.

    Lookups outside the stored n-range follow the usual conventions:
    0 for negative n; any n > max_n is an error.
    """

    s: int
    m: int
    max_k: int
    max_n: int
    values: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, s: int, m: int, max_k: int, max_n: int) -> RestrictedCountTable:
        _check_progression(s, m, max_k)
        row = [1] + [0] * max_n
        rows = [tuple(row)]
        for i in range(max_k):
            part = s + i * m
            for t in range(part, max_n + 1):
                row[t] += row[t - part]
            rows.append(tuple(row))
        return cls(s, m, max_k, max_n, tuple(rows))

    def __call__(self, k: int, n: int) -> int:
        if n < 0:
            return 0
        if not 0 <= k <= self.max_k or n > self.max_n:
            raise IndexError(f"P({k}, {n}) outside table {self.max_k}x{self.max_n}")
        return self.values[k][n]


@lru_cache(maxsize=256)
def restricted_table(s: int, m: int, max_k: int, max_n: int) -> RestrictedCountTable:
    return RestrictedCountTable.build(s, m, max_k, max_n)


@dataclass(frozen=True)
class BiasQuery:
    a: int
    b: int
    m: int
    n: int

    def __post_init__(self) -> None:
        validate_residues(self.a, self.b, self.m)
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")

    def swapped(self) -> BiasQuery:
        return BiasQuery(self.b, self.a, self.m, self.n)


def validate_residues(a: int, b: int, m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if not (1 <= a <= m and 1 <= b <= m) or a == b:
        raise ValueError(f"residues must be distinct and in 1..{m}, got a={a}, b={b}")


def _part_weight(part: int, a: int, b: int, m: int) -> int:
    r = part % m
    if r == a % m:
        return 1
    if r == b % m:
        return -1
    return 0


@lru_cache(maxsize=128)
def _difference_table(a: int, b: int, m: int, max_n: int) -> np.ndarray:
    # table[t, max_n + d]: partitions of t with (#parts = a) - (#parts = b) == d
    dtype = np.int64 if max_n <= _INT64_SAFE_N else object
    width = 2 * max_n + 1
    table = np.zeros((max_n + 1, width), dtype=dtype)
    table[0, max_n] = 1
    for part in range(1, max_n + 1):
        w = _part_weight(part, a, b, m)
        for t in range(part, max_n + 1):
            prev = table[t - part]
            if w == 0:
                table[t] += prev
            elif w == 1:
                table[t, 1:] += prev[:-1]
            else:
                table[t, :-1] += prev[1:]
    table.flags.writeable = False
    return table


def bias_distribution(a: int, b: int, m: int, max_n: int) -> np.ndarray:
    """Counts of partitions by size and signed residue-count difference.

    Entry ``[n, max_n + d]`` is the number of partitions of n whose count of
    parts congruent to a mod m exceeds the count congruent to b mod m by d.
    The difference never leaves -max_n..max_n since a partition of n has at
    most n parts.
    """
    validate_residues(a, b, m)
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    return _difference_table(a, b, m, max_n)


def bias_counts(a: int, b: int, m: int, max_n: int) -> list[int]:
    """[p_{a,b,m}(0), ..., p_{a,b,m}(max_n)] from one DP pass."""
    table = bias_distribution(a, b, m, max_n)
    return [int(x) for x in table[:, max_n + 1 :].sum(axis=1)]


def tie_counts(a: int, b: int, m: int, max_n: int) -> list[int]:
    """Partitions with equally many parts congruent to a and to b."""
    table = bias_distribution(a, b, m, max_n)
    return [int(x) for x in table[:, max_n]]


def bias_count(query: BiasQuery) -> int:
    """p_{a,b,m}(n): partitions of n with strictly more a-parts than b-parts."""
    return bias_counts(query.a, query.b, query.m, query.n)[query.n]


def parity_bias(n: int) -> tuple[int, int]:
    """(p_o(n), p_e(n)): more odd parts vs more even parts."""
    return bias_count(BiasQuery(1, 2, 2, n)), bias_count(BiasQuery(2, 1, 2, n))


# --- brute-force oracles -------------------------------------------------


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Every partition of n as a tuple of (part, multiplicity) pairs."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    # sympy reuses one dict between yields, so snapshot each
    return tuple(tuple(sorted(p.items())) for p in _sympy_partitions(n))


def bias_oracle(query: BiasQuery, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    if query.n > cap:
        raise CapExceeded(f"n={query.n} exceeds enumeration cap {cap}")
    a, b, m = query.a % query.m, query.b % query.m, query.m
    total = 0
    for p in enumerate_partitions(query.n):
        na = sum(mult for part, mult in p if part % m == a)
        nb = sum(mult for part, mult in p if part % m == b)
        if na > nb:
            total += 1
    return total


def restricted_count_oracle(
    s: int, m: int, k: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> int:
    """P_{s,m,k}(n) by filtering the full list of partitions of n."""
    _check_progression(s, m, k)
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    allowed = {s + i * m for i in range(k)}
    return sum(1 for p in enumerate_partitions(n) if all(part in allowed for part, _ in p))


def partition_numbers(order: int) -> list[int]:
    """p(0..order) read off 1/(q; q)_inf."""
    return list(series_inverse(pochhammer(PochhammerSpec(1, 1), order)).coeffs)
