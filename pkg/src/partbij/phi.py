"""The bijection phi_M from A_{M,N} to B_N, built on psi.

``A_{M,N}(n)`` holds pairs ``(alpha, beta)`` where ``alpha`` has at most ``N``
parts, each at most ``M``, and every part of ``beta`` lies in
``[M+1, M+N]``. ``B_N(n)`` holds partitions with at most ``N`` parts. The
image is returned padded to exactly ``N`` entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import InternalError, InvalidInput
from .partition import FrequencyView, PaddedPartition, Partition, is_partition, pad, strip
from .psi import CElement, DElement, psi_forward, psi_inverse

__all__ = ["AElement", "BElement", "phi_forward", "phi_inverse"]


@dataclass(frozen=True)
class AElement:
    alpha: Partition
    beta: Partition
    M: int
    N: int

    def __post_init__(self) -> None:
        if self.M < 0 or self.N < 0:
            raise InvalidInput("M and N must be non-negative")
        if not is_partition(self.alpha) or not is_partition(self.beta):
            raise InvalidInput("alpha and beta must be partitions")
        if len(self.alpha) > self.N or (self.alpha and self.alpha[0] > self.M):
            raise InvalidInput(f"alpha={tuple(self.alpha)} must have at most N={self.N} parts, each at most M={self.M}")
        if any(not self.M + 1 <= x <= self.M + self.N for x in self.beta):
            raise InvalidInput(f"beta parts must lie in [{self.M + 1}, {self.M + self.N}]")

    @classmethod
    def of(cls, alpha: Sequence[int], beta: Sequence[int], M: int, N: int) -> "AElement":
        return cls(Partition(strip(tuple(alpha))), Partition(tuple(beta)), M, N)

    @property
    def weight(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    def beta_frequencies(self) -> FrequencyView:
        return FrequencyView.from_parts(self.beta)

    def g(self) -> tuple[int, ...]:
        """``g_1 .. g_N``: the multiplicity of ``M + i`` in ``beta``."""
        return tuple(self.beta.count(self.M + i) for i in range(1, self.N + 1))


@dataclass(frozen=True)
class BElement:
    gamma: PaddedPartition

    def __post_init__(self) -> None:
        if not is_partition(self.gamma, allow_zero=True):
            raise InvalidInput(f"gamma must be non-increasing and non-negative: {tuple(self.gamma)}")

    @property
    def N(self) -> int:
        return len(self.gamma)

    @property
    def weight(self) -> int:
        return sum(self.gamma)


def phi_forward(
    a: AElement | Sequence[int],
    beta: Sequence[int] | None = None,
    M: int | None = None,
    N: int | None = None,
) -> BElement:
    """``phi_M(alpha, beta)``; accepts an :class:`AElement` or ``(alpha, beta, M, N)``."""
    if not isinstance(a, AElement):
        if beta is None or M is None or N is None:
            raise InvalidInput("phi_forward needs alpha, beta, M and N")
        a = AElement.of(a, beta, M, N)
    return BElement(_forward(a))


@lru_cache(maxsize=1 << 17)
def _forward(a: AElement) -> PaddedPartition:
    M, N = a.M, a.N
    if N == 0:
        return PaddedPartition.trusted(())
    d = [0] * (N + 1)
    eps: list[int] = []
    for i, gi in enumerate(a.g(), start=1):
        d[i], h = divmod(gi, N - i + 1)
        eps.extend([M + i] * h)
    if M + N in eps:
        raise InternalError("h_N must vanish")
    eps.sort(reverse=True)
    eta = psi_inverse(DElement(Partition.trusted(eps), pad(a.alpha, N), M, N)).delta
    gamma = []
    for i in range(1, N + 1):
        stair = sum(d[N + 1 - j] * (M + N + 1 - j) for j in range(i, N + 1))
        gamma.append(eta[i - 1] + stair)
    out = PaddedPartition.trusted(gamma)
    if sum(out) != a.weight or not is_partition(out, allow_zero=True):
        raise InternalError(f"phi produced {gamma} from {a}")
    return out


def phi_inverse(b: BElement | Sequence[int], M: int) -> AElement:
    """``phi_M^{-1}``; the length of ``gamma`` fixes ``N``."""
    if not isinstance(b, BElement):
        b = BElement(PaddedPartition.trusted(tuple(b)))
    if M < 0:
        raise InvalidInput("M must be non-negative")
    return _inverse(tuple(b.gamma), M)


@lru_cache(maxsize=1 << 17)
def _inverse(gamma: tuple[int, ...], M: int) -> AElement:
    N = len(gamma)
    if N == 0:
        return AElement(Partition.trusted(()), Partition.trusted(()), M, 0)
    c = [0] * (N + 2)
    r = [0] * (N + 2)
    for i in range(1, N + 1):
        diff = gamma[i - 1] - (gamma[i] if i < N else 0)
        c[N + 1 - i], r[N + 1 - i] = divmod(diff, M + N + 1 - i)
    delta = [sum(r[1 : N + 2 - i]) for i in range(1, N + 1)]
    try:
        celem = CElement(PaddedPartition.trusted(delta), M, N)
    except InvalidInput as exc:
        raise InternalError(f"intermediate {delta} is outside C") from exc
    d, _ = psi_forward(celem)
    beta: list[int] = []
    for i in range(1, N + 1):
        beta.extend([M + i] * (c[i] * (N + 1 - i) + d.pi.count(M + i)))
    beta.sort(reverse=True)
    out = AElement(strip(d.mu), Partition.trusted(beta), M, N)
    if out.weight != sum(gamma):
        raise InternalError("phi inverse changed the weight")
    return out
