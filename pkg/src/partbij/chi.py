"""The correspondence chi between R_{k,m}(n) and S_{k,m}(n).

Write ``a = |m|``. An element of ``R_{k,m}(n)`` is an ordinary partition
``lambda`` together with the forced partition ``delta_of(k, m)``.

An element of ``S_{k,m}(n)`` is ``(s; alpha, beta, gamma, xi)``. Here
``alpha`` is cut into ``k`` stacked Durfee squares of sides ``s_i`` with nothing
below the last one, ``beta`` has parts in ``(s_k, 2 s_k]``, ``gamma`` is
``gamma_of(m)`` and ``xi`` fits in a box of ``s_k + m`` rows by ``s_k - m``
columns.

The forward map cuts ``lambda`` into ``k`` rectangles of ``n_i`` rows and
``n_i + 2a`` columns, each taken in the rows below the previous one. It then
re-encodes the pieces around the rectangles with ``phi`` and grows each
rectangle into a square of side ``s_i = n_i + a``. The ``a^2`` cells each
square gains are paid for by the difference between ``delta`` and ``gamma``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InternalError, InvalidInput
from .partition import (
    Partition,
    conjugate,
    durfee_chain,
    durfee_rectangle_chain,
    is_partition,
    pad,
    parts_in_range,
    strip,
    union,
)
from .phi import phi_forward, phi_inverse

__all__ = [
    "RElement",
    "SElement",
    "LambdaDecomposition",
    "ChiSteps",
    "delta_of",
    "gamma_of",
    "decompose",
    "reassemble",
    "chi_forward",
    "chi_forward_steps",
    "chi_inverse",
    "is_in_S",
]


def delta_of(k: int, m: int) -> Partition:
    """The forced partition paired with ``lambda`` in ``R_{k,m}``."""
    if k < 1:
        raise InvalidInput("k must be at least 1")
    a = abs(m)
    tail = k + 1 if m >= 0 else k
    return Partition.trusted((2 * k + 1) * (a - i) + tail for i in range(1, a + 1))


def gamma_of(m: int) -> Partition:
    """The forced staircase in ``S_{k,m}``: ``(m, ..., 1)`` or ``(|m|-1, ..., 1)``."""
    top = m if m >= 0 else -m - 1
    return Partition.trusted(range(top, 0, -1))


@dataclass(frozen=True)
class RElement:
    lam: Partition
    k: int
    m: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidInput("k must be at least 1")
        if not is_partition(self.lam):
            raise InvalidInput(f"lambda must be a partition: {tuple(self.lam)}")

    @property
    def delta(self) -> Partition:
        return delta_of(self.k, self.m)

    @property
    def weight(self) -> int:
        return sum(self.lam) + sum(self.delta)


@dataclass(frozen=True)
class SElement:
    s: tuple[int, ...]
    alpha: Partition
    beta: Partition
    xi: Partition
    k: int
    m: int

    @property
    def gamma(self) -> Partition:
        return gamma_of(self.m)

    @property
    def weight(self) -> int:
        return sum(self.alpha) + sum(self.beta) + sum(self.gamma) + sum(self.xi)

    def validate(self) -> None:
        problem = _s_violation(self)
        if problem:
            raise InvalidInput(f"not in S_(k={self.k}, m={self.m}): {problem}")


def _s_violation(e: SElement) -> str | None:
    k, a = e.k, abs(e.m)
    s = e.s
    if k < 1 or len(s) != k:
        return f"need exactly k={k} square sides"
    if any(not isinstance(x, int) for x in s) or any(s[i] < s[i + 1] for i in range(k - 1)):
        return "square sides must be non-increasing integers"
    if s[-1] < a:
        return f"the last square side must be at least |m|={a}"
    for name, p in (("alpha", e.alpha), ("beta", e.beta), ("xi", e.xi)):
        if not is_partition(p):
            return f"{name} must be a partition"
    if len(e.alpha) != sum(s):
        return "alpha must consist of its k Durfee squares and the cells to their right"
    if e.alpha and e.alpha[-1] < s[-1]:
        return "alpha parts must be at least s_k"
    if tuple(durfee_chain(e.alpha, k)) != tuple(s):
        return "the successive Durfee sides of alpha differ from s"
    sk = s[-1]
    if any(not sk < x <= 2 * sk for x in e.beta):
        return "beta parts must lie in (s_k, 2 s_k]"
    if len(e.xi) > sk + e.m or (e.xi and e.xi[0] > sk - e.m):
        return "xi must fit in s_k + m rows of width s_k - m"
    return None


def is_in_S(e: SElement) -> bool:
    return _s_violation(e) is None


@dataclass(frozen=True)
class LambdaDecomposition:
    """Pieces of ``lambda`` around its ``k`` stacked rectangles.

    ``r[i]`` and ``b[i]`` are ``r^{i+1}`` and ``b^{i+1}``. The last ``b`` is
    split at ``n_k + a`` and the last ``r`` is split with ``phi^{-1}``.
    """

    n: tuple[int, ...]
    r: tuple[Partition, ...]
    b: tuple[Partition, ...]
    T: Partition
    bk1: Partition
    bk2: Partition
    rk1: Partition
    rk2: Partition


def decompose(lam: Sequence[int], k: int, m: int) -> LambdaDecomposition:
    if k < 1:
        raise InvalidInput("k must be at least 1")
    lam = Partition(strip(tuple(lam)))
    a = abs(m)
    n = durfee_rectangle_chain(lam, 2 * a, k)
    nn = (*n, 0)
    T = strip(tuple(x - (n[0] + 2 * a) for x in lam[: n[0]]))
    Tc = conjugate(T)
    r = [parts_in_range(Tc, nn[i + 1] + 1, nn[i]) for i in range(k - 1)]
    r.append(parts_in_range(Tc, 1, n[-1]))
    b = []
    row = n[0]
    for i in range(k - 1):
        block = lam[row : row + n[i + 1]]
        b.append(strip(tuple(x - (n[i + 1] + 2 * a) for x in block)))
        row += n[i + 1]
    bk = lam[row:]
    b.append(Partition.trusted(bk))
    nk = n[-1]
    bk1 = parts_in_range(bk, 1, nk + a)
    bk2 = parts_in_range(bk, nk + a + 1, nk + 2 * a)
    if len(bk1) + len(bk2) != len(bk):
        raise InternalError("rows below the last rectangle exceed its width")
    split = phi_inverse(pad(conjugate(r[-1]), nk), nk + 2 * a)
    out = LambdaDecomposition(tuple(n), tuple(r), tuple(b), T, bk1, bk2, split.alpha, split.beta)
    if reassemble(out, k, m) != lam:
        raise InternalError(f"decomposition of {tuple(lam)} does not reassemble")
    return out


def reassemble(dec: LambdaDecomposition, k: int, m: int) -> Partition:
    """Rebuild ``lambda`` from rectangle sides and the ``r``/``b`` pieces."""
    a = abs(m)
    n = dec.n
    Tc = Partition.trusted(sorted((x for piece in dec.r for x in piece), reverse=True))
    T = pad(conjugate(Tc), n[0]) if n[0] else ()
    rows = [n[0] + 2 * a + t for t in T]
    for i in range(k - 1):
        rows.extend(n[i + 1] + 2 * a + x for x in pad(dec.b[i], n[i + 1]))
    rows.extend(dec.b[k - 1])
    return Partition(rows)


@dataclass(frozen=True)
class ChiSteps:
    """Every intermediate artifact of the forward map."""

    decomposition: LambdaDecomposition
    nu: tuple[Partition, ...]
    b_bar: tuple[Partition, ...]
    r_bar: tuple[Partition, ...]
    gamma: Partition
    squares: tuple[int, ...]
    R: Partition
    result: SElement


def chi_forward_steps(lam: Sequence[int] | RElement, k: int | None = None, m: int | None = None) -> ChiSteps:
    if isinstance(lam, RElement):
        r = lam
    else:
        if k is None or m is None:
            raise InvalidInput("k and m are required")
        r = RElement(Partition(strip(tuple(lam))), k, m)
    k, m, a = r.k, r.m, abs(r.m)
    dec = decompose(r.lam, k, m)
    n = (*dec.n, 0)
    nu, b_bar, r_bar = [], [], []
    for i in range(k - 1):
        N = n[i] - n[i + 1]
        v = phi_forward(conjugate(dec.b[i]), dec.r[i], n[i + 1], N).gamma
        nu.append(strip(v))
        split = phi_inverse(v, n[i + 1] + a)
        b_bar.append(split.alpha)
        r_bar.append(split.beta)
    gamma = gamma_of(m)
    if sum(r.delta) - sum(gamma) != k * a * a:
        raise InternalError("weight ledger of delta and gamma fails")
    s = tuple(x + a for x in dec.n)
    R_seq = [x for piece in r_bar for x in piece] + list(dec.bk1)
    if any(R_seq[i] < R_seq[i + 1] for i in range(len(R_seq) - 1)):
        raise InternalError("stacked pieces are not already sorted")
    R = Partition.trusted(R_seq)
    Rc = pad(conjugate(R), s[0]) if s[0] else ()
    rows = [s[0] + x for x in Rc]
    for i in range(k - 1):
        rows.extend(s[i + 1] + x for x in pad(conjugate(b_bar[i]), s[i + 1]))
    alpha = Partition(rows)
    beta = union(dec.bk2, dec.rk2)
    xi = conjugate(dec.rk1) if m >= 0 else dec.rk1
    out = SElement(s, alpha, beta, xi, k, m)
    problem = _s_violation(out)
    if problem:
        raise InternalError(f"chi produced an element outside S: {problem}")
    if out.weight != r.weight:
        raise InternalError("chi changed the weight")
    return ChiSteps(dec, tuple(nu), tuple(b_bar), tuple(r_bar), gamma, s, R, out)


def chi_forward(lam: Sequence[int] | RElement, k: int | None = None, m: int | None = None) -> SElement:
    return chi_forward_steps(lam, k, m).result


def chi_inverse(e: SElement) -> RElement:
    e.validate()
    k, m, a = e.k, e.m, abs(e.m)
    s = e.s
    n = tuple(x - a for x in s) + (0,)
    top = strip(tuple(x - s[0] for x in e.alpha[: s[0]]))
    R = conjugate(top)
    r_bar = [parts_in_range(R, n[i + 1] + a + 1, n[i] + a) for i in range(k - 1)]
    bk1 = parts_in_range(R, 1, n[k - 1] + a)
    b_bar = []
    row = s[0]
    for i in range(k - 1):
        block = e.alpha[row : row + s[i + 1]]
        b_bar.append(conjugate(strip(tuple(x - s[i + 1] for x in block))))
        row += s[i + 1]
    r_pieces, b_pieces = [], []
    for i in range(k - 1):
        N = n[i] - n[i + 1]
        v = phi_forward(b_bar[i], r_bar[i], n[i + 1] + a, N).gamma
        split = phi_inverse(v, n[i + 1])
        b_pieces.append(conjugate(split.alpha))
        r_pieces.append(split.beta)
    nk = n[k - 1]
    bk2 = parts_in_range(e.beta, 1, nk + 2 * a)
    rk2 = parts_in_range(e.beta, nk + 2 * a + 1, 2 * nk + 2 * a)
    rk1 = conjugate(e.xi) if m >= 0 else e.xi
    rk_conj = phi_forward(rk1, rk2, nk + 2 * a, nk).gamma
    r_pieces.append(conjugate(strip(rk_conj)))
    b_pieces.append(union(bk1, bk2))
    dec = LambdaDecomposition(n[:k], tuple(r_pieces), tuple(b_pieces), Partition.trusted(()), bk1, bk2, rk1, rk2)
    lam = reassemble(dec, k, m)
    out = RElement(lam, k, m)
    if chi_forward(out) != e:
        raise InternalError(f"chi inverse of {e} does not round-trip")
    return out
