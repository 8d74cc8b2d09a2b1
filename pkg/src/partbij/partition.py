"""Partition values and the Ferrers-diagram statistics built on them.

Partitions are immutable tuples. ``Partition`` holds strictly positive,
non-increasing parts; ``PaddedPartition`` is the fixed-length variant that
may end in zeros. Both compare equal to plain tuples with the same entries,
so callers can write ``conjugate((3, 1)) == (2, 1, 1)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidInput

__all__ = [
    "Partition",
    "PaddedPartition",
    "FrequencyView",
    "DurfeeChain",
    "conjugate",
    "union",
    "durfee_side",
    "durfee_chain",
    "durfee_rectangle_chain",
    "k_rank",
    "pad",
    "strip",
    "is_partition",
    "parts_in_range",
]


def _check_ints(parts: Sequence[int]) -> None:
    for x in parts:
        if not isinstance(x, int) or isinstance(x, bool):
            raise InvalidInput(f"parts must be integers, got {x!r}")


class Partition(tuple):
    """A non-increasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        _check_ints(parts)
        for i, x in enumerate(parts):
            if x < 1:
                raise InvalidInput(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < x:
                raise InvalidInput(f"partition parts must be non-increasing: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def trusted(cls, parts: Iterable[int]) -> "Partition":
        """Build without validation; for internal use on known-good data."""
        return tuple.__new__(cls, parts)

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> "Partition":
        """Sort the positive entries of ``parts`` and drop zeros."""
        return cls(sorted((x for x in parts if x != 0), reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (1-based), or 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def multiplicity(self, value: int) -> int:
        return self.count(value)

    def frequencies(self) -> "FrequencyView":
        return FrequencyView.from_parts(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


class PaddedPartition(tuple):
    """A non-increasing tuple of non-negative integers of fixed length."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "PaddedPartition":
        parts = tuple(parts)
        _check_ints(parts)
        for i, x in enumerate(parts):
            if x < 0:
                raise InvalidInput(f"padded parts must be non-negative: {parts}")
            if i and parts[i - 1] < x:
                raise InvalidInput(f"padded parts must be non-increasing: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def trusted(cls, parts: Iterable[int]) -> "PaddedPartition":
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def declared_length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"PaddedPartition({tuple(self)!r})"


class FrequencyView(Mapping[int, int]):
    """Multiplicity map ``value -> count`` of a partition.

    Missing values read as 0, matching the ``f_i(lambda)`` convention.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        for value, count in (counts or {}).items():
            if value < 1 or count < 0:
                raise InvalidInput(f"bad multiplicity {value}^{count}")
            if count:
                clean[value] = count
        self._counts = clean

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "FrequencyView":
        counts: dict[int, int] = {}
        for x in parts:
            counts[x] = counts.get(x, 0) + 1
        return cls(counts)

    def __getitem__(self, value: int) -> int:
        return self._counts.get(value, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._counts, reverse=True))

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FrequencyView):
            return self._counts == other._counts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def to_partition(self) -> Partition:
        out: list[int] = []
        for value in self:
            out.extend([value] * self._counts[value])
        return Partition.trusted(out)

    def __repr__(self) -> str:
        body = ",".join(f"{v}^{self._counts[v]}" for v in self)
        return f"FrequencyView({body})"


class DurfeeChain(tuple):
    """Sides ``d_1 >= d_2 >= ...`` of successive Durfee squares."""

    __slots__ = ()

    @property
    def sides(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"DurfeeChain({tuple(self)!r})"


def is_partition(parts: Sequence[int], allow_zero: bool = False) -> bool:
    low = 0 if allow_zero else 1
    prev = None
    for x in parts:
        if not isinstance(x, int) or x < low:
            return False
        if prev is not None and prev < x:
            return False
        prev = x
    return True


def conjugate(p: Sequence[int]) -> Partition:
    """Transpose of the Ferrers diagram. Trailing zeros in ``p`` are ignored."""
    if not p or p[0] <= 0:
        return Partition.trusted(())
    out = []
    n = len(p)
    i = n
    for j in range(1, p[0] + 1):
        while i > 0 and p[i - 1] < j:
            i -= 1
        out.append(i)
    return Partition.trusted(out)


def union(p: Sequence[int], q: Sequence[int]) -> Partition:
    """Multiset union: multiplicities add."""
    return Partition.trusted(sorted((x for x in (*p, *q) if x), reverse=True))


def pad(p: Sequence[int], n: int) -> PaddedPartition:
    """Extend ``p`` with zeros to exactly ``n`` entries."""
    if len(p) > n:
        raise InvalidInput(f"cannot pad a partition with {len(p)} parts to length {n}")
    return PaddedPartition.trusted((*p, *([0] * (n - len(p)))))


def strip(pp: Sequence[int]) -> Partition:
    """Drop trailing zeros."""
    end = len(pp)
    while end and pp[end - 1] == 0:
        end -= 1
    return Partition.trusted(pp[:end])


def parts_in_range(p: Iterable[int], low: int, high: int) -> Partition:
    """Sub-multiset of parts ``x`` with ``low <= x <= high``."""
    return Partition.trusted(x for x in p if low <= x <= high)


def durfee_side(p: Sequence[int], offset: int = 0, extra: int = 0) -> int:
    """Largest ``j`` with ``p[offset + j - 1] >= j + extra``."""
    j = 0
    n = len(p)
    while offset + j < n and p[offset + j] >= j + 1 + extra:
        j += 1
    return j


def durfee_chain(p: Sequence[int], depth: int) -> DurfeeChain:
    """Successive Durfee square sides of ``p`` down to ``depth`` levels.

    Each square is taken in the rows strictly below the previous one.
    """
    if depth < 1:
        raise InvalidInput("depth must be at least 1")
    return DurfeeChain(durfee_rectangle_chain(p, 0, depth))


def durfee_rectangle_chain(p: Sequence[int], two_m: int, depth: int) -> tuple[int, ...]:
    """Row counts of successive rectangles with ``n`` rows and ``n + two_m`` columns.

    ``n_1`` is the largest ``j`` with ``p_j >= j + two_m``; each later rectangle
    is taken in the rows below the previous one. Once a side is 0 all later
    sides are 0.
    """
    if two_m < 0:
        raise InvalidInput("two_m must be non-negative")
    if depth < 1:
        raise InvalidInput("depth must be at least 1")
    sides = []
    offset = 0
    for _ in range(depth):
        side = durfee_side(p, offset, two_m)
        sides.append(side)
        offset += side
    return tuple(sides)


def k_rank(p: Sequence[int], k: int) -> int:
    """Garvan's k-rank.

    Counts columns right of the first Durfee square whose length is at most
    ``d_{k-1}``, minus the number of rows below the ``(k-1)``-th square.
    Returns 0 when the partition has fewer than ``k - 1`` squares.
    """
    if k < 2:
        raise InvalidInput("k-rank needs k >= 2")
    chain = durfee_chain(p, k - 1)
    last = chain[-1]
    if last == 0:
        return 0
    cols = conjugate(p)[chain[0]:]
    alpha_len = sum(1 for c in cols if c <= last)
    beta_len = len(p) - sum(chain)
    return alpha_len - beta_len
