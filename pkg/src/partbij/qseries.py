"""Exact truncated power series in q.

All arithmetic is on Python integers, so nothing overflows. Series carry a
degree cap ``D`` and only coefficients ``c_0 .. c_D`` are kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import InvalidInput

__all__ = [
    "TruncatedSeries",
    "GaussianPolynomial",
    "gaussian",
    "inv_pochhammer",
    "nk_series",
    "nk_count",
    "partition_counts",
    "c_family_series",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_D`` of a formal power series, truncated at ``D``."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise InvalidInput("a truncated series needs at least c_0")

    @classmethod
    def from_list(cls, coeffs: Iterable[int], cap: int | None = None) -> "TruncatedSeries":
        coeffs = list(coeffs)
        if cap is not None:
            coeffs = (coeffs + [0] * (cap + 1))[: cap + 1]
        return cls(tuple(coeffs))

    @classmethod
    def one(cls, cap: int) -> "TruncatedSeries":
        return cls.from_list([1], cap)

    @property
    def degree_cap(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.degree_cap:
            raise IndexError(f"coefficient {n} is beyond the cap {self.degree_cap}")
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def truncate(self, cap: int) -> "TruncatedSeries":
        return TruncatedSeries.from_list(self.coefficients, cap)

    def _common(self, other: "TruncatedSeries") -> int:
        return min(self.degree_cap, other.degree_cap)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cap = self._common(other)
        return TruncatedSeries(tuple(self.coefficients[i] + other.coefficients[i] for i in range(cap + 1)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cap = self._common(other)
        a, b = self.coefficients, other.coefficients
        out = [0] * (cap + 1)
        for i in range(cap + 1):
            ai = a[i]
            if ai:
                for j in range(cap + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(tuple(out))


@dataclass(frozen=True)
class GaussianPolynomial:
    """The q-binomial coefficient counting partitions in an ``M x N`` box."""

    M: int
    N: int
    coefficients: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n] if 0 <= n < len(self.coefficients) else 0

    def as_series(self, cap: int) -> TruncatedSeries:
        return TruncatedSeries.from_list(self.coefficients, cap)


@lru_cache(maxsize=None)
def _qbinom(a: int, b: int) -> tuple[int, ...]:
    # [a over b] = [a-1 over b] + q^(a-b) [a-1 over b-1]
    if b < 0 or b > a:
        return (0,)
    if b == 0 or b == a:
        return (1,)
    left = _qbinom(a - 1, b)
    right = _qbinom(a - 1, b - 1)
    shift = a - b
    out = [0] * (b * (a - b) + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + shift] += c
    return tuple(out)


def gaussian(M: int, N: int) -> GaussianPolynomial:
    """Coefficients of ``[M+N over M]`` via the q-Pascal rule."""
    if M < 0 or N < 0:
        raise InvalidInput("box sides must be non-negative")
    return GaussianPolynomial(M, N, _qbinom(M + N, M))


def inv_pochhammer(a_exponent: int, n_terms: int | None, cap: int) -> TruncatedSeries:
    """Expansion of ``1 / prod_{i < n_terms} (1 - q^(a + i))`` up to ``q^cap``.

    ``n_terms=None`` means the infinite product; factors whose exponent
    exceeds ``cap`` cannot affect kept coefficients and are skipped.
    """
    if a_exponent < 1:
        raise InvalidInput("a_exponent must be at least 1")
    if cap < 0:
        raise InvalidInput("cap must be non-negative")
    if n_terms is not None and n_terms < 0:
        raise InvalidInput("n_terms must be non-negative")
    c = [0] * (cap + 1)
    c[0] = 1
    last = cap if n_terms is None else min(cap, a_exponent + n_terms - 1)
    for e in range(a_exponent, last + 1):
        for i in range(e, cap + 1):
            c[i] += c[i - e]
    return TruncatedSeries(tuple(c))


@lru_cache(maxsize=None)
def partition_counts(cap: int) -> tuple[int, ...]:
    """``p(0) .. p(cap)``."""
    return inv_pochhammer(1, None, cap).coefficients


@lru_cache(maxsize=256)
def _nk_coeffs(k: int, abs_m: int, cap: int) -> tuple[int, ...]:
    numer = [0] * (cap + 1)
    j = 1
    while True:
        e = j * ((2 * k - 1) * j - 1) // 2 + abs_m * j
        if e > cap:
            break
        sign = 1 if j % 2 else -1
        numer[e] += sign
        if e + j <= cap:
            numer[e + j] -= sign
        j += 1
    # multiply by 1/(q;q)_inf in place
    for part in range(1, cap + 1):
        for i in range(part, cap + 1):
            numer[i] += numer[i - part]
    return tuple(numer)


def nk_series(k: int, m: int, cap: int) -> TruncatedSeries:
    """Generating function of Garvan's ``N_k(m, n)`` truncated at ``q^cap``.

    For ``k = 1`` this is the crank series, including its well-known
    irregularity at ``n = 1``: the raw coefficients are returned unchanged
    (``N_1(0, 1) = -1``).
    """
    if k < 1:
        raise InvalidInput("k must be at least 1")
    if cap < 0:
        raise InvalidInput("cap must be non-negative")
    return TruncatedSeries(_nk_coeffs(k, abs(m), cap))


def nk_count(k: int, m: int, n: int) -> int:
    """``N_k(m, n)``; symmetric in the sign of ``m``."""
    if n < 0:
        raise InvalidInput("n must be non-negative")
    cap = max(32, 1 << (n.bit_length()))
    return nk_series(k, m, max(cap, n))[n]


def c_family_series(M: int, N: int, cap: int) -> TruncatedSeries:
    """Counts of length-``N`` sequences with ``0 <= d_i - d_{i+1} <= M + N - i``.

    Each difference ``e_i`` contributes ``i * e_i`` to the weight, so the
    series is ``prod_i (1 - q^(i (M+N-i+1))) / (1 - q^i)``.
    """
    c = [0] * (cap + 1)
    c[0] = 1
    for i in range(1, N + 1):
        bound = M + N - i
        # multiply by 1 + q^i + ... + q^(i*bound)
        new = [0] * (cap + 1)
        for w, val in enumerate(c):
            if val:
                for e in range(bound + 1):
                    t = w + i * e
                    if t > cap:
                        break
                    new[t] += val
        c = new
    return TruncatedSeries(tuple(c))
