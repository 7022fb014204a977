"""Truncated formal power series in q with exact integer coefficients.

A :class:`TruncatedSeries` stores the coefficients of q^0 .. q^N. Anything
above q^N is unknown, so every binary operation truncates to the smaller of
the two orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "INFINITE",
    "NonUnitConstantTerm",
    "PochhammerSpec",
    "TruncatedSeries",
    "pochhammer",
    "series_add",
    "series_const",
    "series_inverse",
    "series_mul",
]

# Below this many coefficients schoolbook multiplication beats packing.
_KRONECKER_THRESHOLD = 24

INFINITE = None


class NonUnitConstantTerm(ValueError):
    """Raised when inverting a series whose constant term is not +1 or -1."""


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: Optional[int] = None) -> TruncatedSeries:
        """Build a series from a coefficient list.

        With ``order`` given the list is truncated or zero-padded to fit,
        otherwise the order is ``len(coeffs) - 1``.
        """
        c = [int(x) for x in coeffs]
        if order is None:
            order = len(c) - 1
        if len(c) > order + 1:
            c = c[: order + 1]
        else:
            c.extend([0] * (order + 1 - len(c)))
        return cls(tuple(c), order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> TruncatedSeries:
        c = [0] * (order + 1)
        if 0 <= exponent <= order:
            c[exponent] = coeff
        return cls(tuple(c), order)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient q^{n} outside truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, -other)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError("cannot raise truncation order")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def shift(self, d: int) -> TruncatedSeries:
        """Multiply by q^d (d >= 0), keeping the order."""
        if d < 0:
            raise ValueError("shift must be nonnegative")
        if d > self.order:
            return series_const(0, self.order)
        return TruncatedSeries((0,) * d + self.coeffs[: self.order + 1 - d], self.order)

    def divide_one_minus(self, d: int) -> TruncatedSeries:
        """Multiply by 1/(1 - q^d), d >= 1, as a strided running sum."""
        if d < 1:
            raise ValueError("d must be >= 1")
        c = list(self.coeffs)
        for t in range(d, self.order + 1):
            c[t] += c[t - d]
        return TruncatedSeries(tuple(c), self.order)

    def times_one_minus(self, d: int) -> TruncatedSeries:
        """Multiply by (1 - q^d), d >= 1."""
        if d < 1:
            raise ValueError("d must be >= 1")
        c = list(self.coeffs)
        for t in range(self.order, d - 1, -1):
            c[t] -= c[t - d]
        return TruncatedSeries(tuple(c), self.order)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)


def series_const(c: int, order: int) -> TruncatedSeries:
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return TruncatedSeries((int(c),) + (0,) * order, order)


def series_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = min(f.order, g.order)
    return TruncatedSeries(tuple(a + b for a, b in zip(f.coeffs[: n + 1], g.coeffs)), n)


def _mul_schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j in range(min(len(b), n + 1 - i)):
            out[i + j] += x * b[j]
    return out


def _pack(coeffs: Sequence[int], bits: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc << bits) + c
    return acc


def _unpack(value: int, bits: int, count: int) -> list[int]:
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(count):
        digit = value & mask
        value >>= bits
        if digit >= half:
            digit -= 1 << bits
            value += 1
        out.append(digit)
    return out


def _mul_kronecker(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    # Evaluate both polynomials at 2**bits, multiply as big ints, read digits
    # back as signed values. bits must exceed the largest |product coeff|.
    bound = min(len(a), len(b)) * max(map(abs, a)) * max(map(abs, b))
    if bound == 0:
        return [0] * (n + 1)
    bits = bound.bit_length() + 2
    return _unpack(_pack(a, bits) * _pack(b, bits), bits, n + 1)


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller order."""
    n = min(f.order, g.order)
    a, b = f.coeffs[: n + 1], g.coeffs[: n + 1]
    if n + 1 < _KRONECKER_THRESHOLD:
        out = _mul_schoolbook(a, b, n)
    else:
        out = _mul_kronecker(a, b, n)
    return TruncatedSeries(tuple(out), n)


def series_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of ``f``; the constant term must be a unit."""
    f0 = f.coeffs[0]
    if f0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {f0} is not a unit in Z")
    c = f.coeffs
    g = [f0]  # 1/f0 == f0 for units
    for t in range(1, f.order + 1):
        acc = 0
        for i in range(1, t + 1):
            if c[i]:
                acc += c[i] * g[t - i]
        g.append(-acc * f0)
    return TruncatedSeries(tuple(g), f.order)


@dataclass(frozen=True)
class PochhammerSpec:
    """The product (q^s; q^m)_length, where ``length=INFINITE`` is allowed."""

    s: int
    m: int
    length: Optional[int] = INFINITE

    def __post_init__(self) -> None:
        if self.s < 1 or self.m < 1:
            raise ValueError(f"need s >= 1 and m >= 1, got s={self.s}, m={self.m}")
        if self.length is not INFINITE and self.length < 0:
            raise ValueError(f"length must be >= 0, got {self.length}")

    @property
    def is_infinite(self) -> bool:
        return self.length is INFINITE

    def factor_exponents(self, order: int) -> list[int]:
        """Exponents e of the factors (1 - q^e) that matter below q^(order+1)."""
        if self.is_infinite:
            return list(range(self.s, order + 1, self.m))
        return [self.s + i * self.m for i in range(self.length)]


def pochhammer(spec: PochhammerSpec, order: int) -> TruncatedSeries:
    f = series_const(1, order)
    for e in spec.factor_exponents(order):
        if e > order:
            # (1 - q^e) is 1 modulo q^(order+1); so is every later factor
            break
        f = f.times_one_minus(e)
    return f
