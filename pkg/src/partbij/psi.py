"""The bijection psi from C_{M,N} to D_{M,N} and its table-based inverse.

``C_{M,N}(n)`` holds length-``N`` sequences ``delta`` of weight ``n`` with
``0 <= delta_i - delta_{i+1} <= M + N - i`` (reading ``delta_{N+1} = 0``).
``D_{M,N}(n)`` holds pairs ``(pi, mu)`` where every part ``M + i`` of ``pi``
appears at most ``N - i`` times and ``mu`` has ``N`` parts in ``[0, M]``.

The forward map repeatedly peels ``M + 1`` off the parts of ``delta`` that
exceed ``M``, merges them back with Algorithm Z and records the peeled
amounts in an ``N``-tuple of distinct-part partitions. The inverse places the
parts of ``pi`` in a table below ``mu`` and reads ``delta`` off column sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

from .algorithm_z import gamma_forward
from .errors import InternalError, InvalidInput
from .partition import PaddedPartition, Partition, conjugate, is_partition

__all__ = [
    "CElement",
    "DElement",
    "PsiStep",
    "PsiTrace",
    "CellKind",
    "Cell",
    "FillTable",
    "is_in_C",
    "is_in_D",
    "psi_forward",
    "psi_inverse",
    "render_table",
    "check_trace",
    "marker_columns_from_trace",
]


def is_in_C(delta: Sequence[int], M: int, N: int) -> bool:
    if N < 1 or M < 0 or len(delta) != N:
        return False
    if not all(isinstance(x, int) for x in delta):
        return False
    for i in range(1, N + 1):
        nxt = delta[i] if i < N else 0
        diff = delta[i - 1] - nxt
        if diff < 0 or diff > M + N - i:
            return False
    return True


def is_in_D(pi: Sequence[int], mu: Sequence[int], M: int, N: int) -> bool:
    if N < 1 or M < 0 or len(mu) != N:
        return False
    if not is_partition(pi) or not is_partition(mu, allow_zero=True):
        return False
    if mu and mu[0] > M:
        return False
    counts: dict[int, int] = {}
    for x in pi:
        if not M + 1 <= x <= M + N - 1:
            return False
        counts[x] = counts.get(x, 0) + 1
    return all(c <= N - (x - M) for x, c in counts.items())


@dataclass(frozen=True)
class CElement:
    delta: PaddedPartition
    M: int
    N: int

    def __post_init__(self) -> None:
        if not is_in_C(self.delta, self.M, self.N):
            raise InvalidInput(
                f"{tuple(self.delta)} is not in C_(M={self.M}, N={self.N}): "
                "need N entries with 0 <= delta_i - delta_(i+1) <= M+N-i"
            )

    @classmethod
    def of(cls, delta: Sequence[int], M: int, N: int | None = None) -> "CElement":
        N = len(delta) if N is None else N
        return cls(PaddedPartition.trusted(tuple(delta)), M, N)

    @property
    def weight(self) -> int:
        return sum(self.delta)


@dataclass(frozen=True)
class DElement:
    pi: Partition
    mu: PaddedPartition
    M: int
    N: int

    def __post_init__(self) -> None:
        if not is_in_D(self.pi, self.mu, self.M, self.N):
            raise InvalidInput(
                f"({tuple(self.pi)}, {tuple(self.mu)}) is not in D_(M={self.M}, N={self.N}): "
                "pi needs parts in [M+1, M+N-1] with M+i at most N-i times, "
                "mu needs N entries in [0, M]"
            )

    @classmethod
    def of(cls, pi: Sequence[int], mu: Sequence[int], M: int, N: int | None = None) -> "DElement":
        N = len(mu) if N is None else N
        return cls(Partition.trusted(tuple(pi)), PaddedPartition.trusted(tuple(mu)), M, N)

    @property
    def weight(self) -> int:
        return sum(self.pi) + sum(self.mu)

    def frequencies(self) -> tuple[int, ...]:
        """``f_1 .. f_N``: the multiplicity of ``M + i`` in ``pi``."""
        return tuple(self.pi.count(self.M + i) for i in range(1, self.N + 1))


@dataclass(frozen=True)
class PsiStep:
    """One pass of the forward loop, from ``delta^i`` to ``delta^{i+1}``."""

    k: int
    overline_delta: tuple[int, ...]
    tilde_delta: tuple[int, ...]
    gamma: tuple[int, ...]
    f: tuple[int, ...]
    delta_next: tuple[int, ...]
    pi_next: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PsiTrace:
    start: tuple[int, ...]
    M: int
    N: int
    steps: tuple[PsiStep, ...]

    @property
    def q_delta(self) -> int:
        return len(self.steps)

    @property
    def ks(self) -> tuple[int, ...]:
        return tuple(s.k for s in self.steps)

    def composed_f(self) -> tuple[int, ...]:
        """``f_0^{q-1}`` as a 1-based table: entry ``t-1`` is the final index of ``t``."""
        pos = list(range(1, self.N + 1))
        for step in self.steps:
            pos = [step.f[p - 1] for p in pos]
        return tuple(pos)


def _step(delta: tuple[int, ...], pis: list[tuple[int, ...]], i: int, M: int, N: int) -> PsiStep:
    k = max(j for j in range(1, N + 1) if delta[j - 1] >= M + 1)
    over = delta[k:]
    tilde = tuple(d - (M + 1) for d in delta[:k])
    z = gamma_forward(over, tilde)
    gamma = tuple(z.gamma)
    gp = conjugate(gamma)

    def gp_at(j: int) -> int:
        return gp[j - 1] if 1 <= j <= len(gp) else 0

    f = tuple(
        (N - k - gamma[j - 1] + j) if j <= k else (j - k + gp_at(N - j + 1)) for j in range(1, N + 1)
    )
    lengths = [len(p) for p in pis]
    new: list[tuple[int, ...] | None] = [None] * N
    for t in range(1, N + 1):
        if t > k:
            new[f[t - 1] - 1] = pis[t - 1]
            continue
        tail = lengths[N - gamma[t - 1]:]
        old = pis[t - 1]
        bar = [
            (old[s - 1] if s <= len(old) else 0) + sum(1 for L in tail if L == i - s + 1)
            for s in range(1, i + 1)
        ]
        bar.append(M + 1 + sum(1 for L in tail if L == 0))
        new[f[t - 1] - 1] = tuple(bar)
    return PsiStep(k, over, tilde, gamma, f, tuple(z.alpha), tuple(new))  # type: ignore[arg-type]


@lru_cache(maxsize=1 << 16)
def _forward_cached(delta: tuple[int, ...], M: int, N: int) -> PsiTrace:
    steps: list[PsiStep] = []
    pis: list[tuple[int, ...]] = [()] * N
    current = delta
    i = 0
    while current[0] > M:
        if i >= N:
            raise InternalError(f"psi did not terminate within N={N} steps on {delta}")
        step = _step(current, pis, i, M, N)
        steps.append(step)
        current, pis = step.delta_next, list(step.pi_next)
        i += 1
    trace = PsiTrace(delta, M, N, tuple(steps))
    check_trace(trace)
    return trace


def psi_forward(c: CElement | Sequence[int], M: int | None = None) -> tuple[DElement, PsiTrace]:
    """Map ``delta`` in ``C_{M,N}`` to ``(pi, mu)`` in ``D_{M,N}``.

    Accepts a :class:`CElement` or a raw sequence together with ``M``.
    """
    if not isinstance(c, CElement):
        if M is None:
            raise InvalidInput("M is required when delta is given as a sequence")
        c = CElement.of(tuple(c), M)
    trace = _forward_cached(tuple(c.delta), c.M, c.N)
    if trace.steps:
        mu = trace.steps[-1].delta_next
        parts = [x for p in trace.steps[-1].pi_next for x in p]
    else:
        mu, parts = tuple(c.delta), []
    d = DElement(Partition.trusted(sorted(parts, reverse=True)), PaddedPartition.trusted(mu), c.M, c.N)
    if d.weight != c.weight:
        raise InternalError("psi changed the weight")
    return d, trace


def check_trace(trace: PsiTrace) -> None:
    """Assert every structural property of a forward run; raise InternalError on failure."""
    M, N = trace.M, trace.N
    total = sum(trace.start)
    prev_k = N + 1
    for i, step in enumerate(trace.steps, start=1):
        if sorted(step.f) != list(range(1, N + 1)):
            raise InternalError(f"f at step {i - 1} is not a permutation: {step.f}")
        if not step.k < prev_k:
            raise InternalError(f"k did not decrease at step {i - 1}")
        prev_k = step.k
        if sum(step.delta_next) + sum(sum(p) for p in step.pi_next) != total:
            raise InternalError(f"weight identity fails after step {i}")
        lengths = [len(p) for p in step.pi_next]
        for w, p in enumerate(step.pi_next, start=1):
            if any(p[s] <= p[s + 1] for s in range(len(p) - 1)):
                raise InternalError(f"Pi^({i},{w}) = {p} does not have distinct parts")
            L = len(p)
            for s in range(1, L + 1):
                expected = (
                    M
                    + 1
                    + sum(1 for Lj in lengths if Lj <= L - 1 - s)
                    + sum(1 for Lj in lengths[w:] if Lj == L - s)
                )
                if p[s - 1] != expected:
                    raise InternalError(f"closed form fails for Pi^({i},{w})_{s}")
    # length structure: the entry that started at index t has length min(s(t), i)
    ks = (N, *trace.ks)
    q = len(trace.steps)

    def s_of(t: int) -> int:
        for s in range(q + 1):
            upper = ks[s]
            lower = ks[s + 1] if s + 1 <= q else 0
            if lower + 1 <= t <= upper:
                return s
        raise InternalError(f"index {t} not covered by the k sequence")

    pos = list(range(1, N + 1))
    for i, step in enumerate(trace.steps, start=1):
        pos = [step.f[p - 1] for p in pos]
        for t in range(1, N + 1):
            if len(step.pi_next[pos[t - 1] - 1]) != min(s_of(t), i):
                raise InternalError(f"length structure fails for t={t} after step {i}")


class CellKind(Enum):
    EMPTY = "empty"
    MU = "mu"
    FILLED = "filled"
    MARKER = "marker"
    DELETED = "deleted"


@dataclass(frozen=True)
class Cell:
    kind: CellKind
    value: int = 0

    def render(self) -> str:
        if self.kind is CellKind.MARKER:
            return f"F{self.value}"
        if self.kind is CellKind.DELETED:
            return "/"
        if self.kind is CellKind.EMPTY:
            return "."
        return str(self.value)


@dataclass(frozen=True)
class FillTable:
    """Rows ``0..N`` by columns ``1..N``; ``cells[r][c-1]``."""

    cells: tuple[tuple[Cell, ...], ...]
    marker_columns: tuple[int, ...]
    marker_rows: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.marker_columns)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(
            sum(row[c].value for row in self.cells if row[c].kind in (CellKind.MU, CellKind.FILLED))
            for c in range(self.N)
        )

    def render(self) -> str:
        N = self.N
        cols = [[c.render() for c in row] for row in self.cells]
        sums = [str(x) for x in self.column_sums()]
        width = max(len(x) for x in [*sum(cols, []), *sums, f"C{N}"])
        label_w = len(f"R{N}")
        fmt = lambda xs: " ".join(x.rjust(width) for x in xs)  # noqa: E731
        lines = [" " * label_w + " | " + fmt([f"C{j}" for j in range(1, N + 1)])]
        lines.append("-" * len(lines[0]))
        for r, row in enumerate(cols):
            lines.append(f"R{r}".ljust(label_w) + " | " + fmt(row))
        lines.append("-" * len(lines[0]))
        lines.append(" " * label_w + " | " + fmt(sums))
        return "\n".join(lines)


def render_table(d: DElement) -> FillTable:
    """Build the fill table of ``(pi, mu)``."""
    M, N = d.M, d.N
    grid: list[list[Cell]] = [[Cell(CellKind.MU, v) for v in d.mu]]
    grid += [[Cell(CellKind.EMPTY) for _ in range(N)] for _ in range(N)]
    marker_row = [0] * (N + 1)  # 1-based column -> row of its marker, 0 if none
    marker_cols: list[int] = []
    marker_rows: list[int] = []
    cursor = (1, N + 1)  # the next cell is the one after this in reading order

    def next_free(row: int, col: int) -> tuple[int, int]:
        while True:
            col -= 1
            if col < 1:
                row, col = row + 1, N
            if row > N:
                raise InternalError("fill table overflowed")
            if not (marker_row[col] and marker_row[col] < row):
                return row, col

    for i, fi in enumerate(d.frequencies(), start=1):
        for _ in range(fi):
            r, c = next_free(*cursor)
            grid[r][c - 1] = Cell(CellKind.FILLED, M + i)
            cursor = (r, c)
        r, c = next_free(*cursor)
        grid[r][c - 1] = Cell(CellKind.MARKER, i)
        if marker_row[c]:
            raise InternalError(f"two markers in column {c}")
        marker_row[c] = r
        marker_cols.append(c)
        marker_rows.append(r)
        cursor = (r, c)
    for c in range(1, N + 1):
        for r in range(marker_row[c] + 1, N + 1):
            grid[r][c - 1] = Cell(CellKind.DELETED)
    return FillTable(tuple(tuple(row) for row in grid), tuple(marker_cols), tuple(marker_rows))


def psi_inverse(d: DElement | tuple[Sequence[int], Sequence[int]], M: int | None = None) -> CElement:
    """Map ``(pi, mu)`` in ``D_{M,N}`` back to ``delta`` in ``C_{M,N}``."""
    if not isinstance(d, DElement):
        if M is None:
            raise InvalidInput("M is required when (pi, mu) is given as a pair")
        pi, mu = d
        d = DElement.of(tuple(pi), tuple(mu), M)
    return _inverse_cached(d)


@lru_cache(maxsize=1 << 16)
def _inverse_cached(d: DElement) -> CElement:
    N = d.N
    table = render_table(d)
    sums = table.column_sums()
    delta = [0] * N
    for i, c in enumerate(table.marker_columns, start=1):
        delta[N - i] = sums[c - 1]
    if sum(delta) != d.weight:
        raise InternalError("psi inverse changed the weight")
    try:
        return CElement(PaddedPartition.trusted(delta), d.M, N)
    except InvalidInput as exc:
        raise InternalError(f"psi inverse produced a sequence outside C: {delta}") from exc


def marker_columns_from_trace(trace: PsiTrace) -> tuple[int, ...]:
    """Predicted ``c(F_i)`` for ``i = 1..N``: the final index of ``N - i + 1``."""
    composed = trace.composed_f()
    return tuple(composed[trace.N - i] for i in range(1, trace.N + 1))
