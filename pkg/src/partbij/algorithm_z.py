"""Zeilberger's Algorithm Z and its inverse.

Coordinates: ``xi`` has exactly ``N`` non-negative parts and ``delta`` has
exactly ``M`` non-negative parts. The output ``alpha`` has ``M + N`` parts and
``gamma`` has ``M`` parts, each in ``[0, N]``.

For each ``i``, ``gamma_i`` is the unique ``g`` in ``[0, N]`` that sandwiches
``delta_i - g`` between ``xi_{N-g+1}`` and ``xi_{N-g}``, reading
``xi_0 = +inf`` and ``xi_{N+1} = 0``. The parts ``xi_t`` and
``delta_i - gamma_i`` are then interleaved. ``xi_t`` goes to position
``t + gamma'_{N-t+1}`` and ``delta_i - gamma_i`` goes to position
``N - gamma_i + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InternalError, InvalidInput, NotInImage
from .partition import PaddedPartition, Partition, conjugate, is_partition, pad, strip

__all__ = [
    "ZInput",
    "ZOutput",
    "gamma_forward",
    "gamma_inverse",
    "theorem_form_forward",
    "theorem_form_inverse",
    "refined_forward",
    "refined_inverse",
]


@dataclass(frozen=True)
class ZInput:
    xi: PaddedPartition
    delta: PaddedPartition

    @property
    def N(self) -> int:
        return len(self.xi)

    @property
    def M(self) -> int:
        return len(self.delta)

    @property
    def weight(self) -> int:
        return sum(self.xi) + sum(self.delta)


@dataclass(frozen=True)
class ZOutput:
    alpha: PaddedPartition
    gamma: PaddedPartition

    @property
    def weight(self) -> int:
        return sum(self.alpha) + sum(self.gamma)


def _padded(seq: Sequence[int], name: str) -> PaddedPartition:
    if not is_partition(seq, allow_zero=True):
        raise InvalidInput(f"{name} must be non-increasing and non-negative: {tuple(seq)}")
    return PaddedPartition.trusted(tuple(seq))


def _gamma_part(xi: Sequence[int], d: int, N: int, check: bool) -> int:
    found = -1
    for g in range(0, N + 1):
        upper = xi[N - g - 1] if N - g >= 1 else None
        lower = xi[N - g] if g >= 1 else 0
        value = d - g
        if value >= lower and (upper is None or upper >= value):
            if not check:
                return g
            if found >= 0:
                raise InternalError(f"two sandwich positions for part {d}")
            found = g
    if found < 0:
        raise InternalError(f"no sandwich position for part {d} in {tuple(xi)}")
    return found


def gamma_forward(xi: Sequence[int], delta: Sequence[int], *, check: bool = False) -> ZOutput:
    """Run Algorithm Z on ``(xi, delta)``.

    With ``check=True`` the uniqueness of each ``gamma_i`` is verified by
    scanning every candidate.
    """
    xi = _padded(xi, "xi")
    delta = _padded(delta, "delta")
    N, M = len(xi), len(delta)
    gamma = [_gamma_part(xi, d, N, check) for d in delta]
    gp = conjugate(gamma)
    gp_at = lambda j: gp[j - 1] if j <= len(gp) else 0  # noqa: E731
    alpha: list[int | None] = [None] * (M + N)
    for t in range(1, N + 1):
        alpha[t + gp_at(N - t + 1) - 1] = xi[t - 1]
    for i in range(1, M + 1):
        pos = N - gamma[i - 1] + i
        if alpha[pos - 1] is not None:
            raise InternalError("interleaving positions collide")
        alpha[pos - 1] = delta[i - 1] - gamma[i - 1]
    if any(a is None for a in alpha) or not is_partition(alpha, allow_zero=True):
        raise InternalError(f"interleaved sequence is not a partition: {alpha}")
    out = ZOutput(PaddedPartition.trusted(alpha), PaddedPartition.trusted(gamma))
    if out.weight != sum(xi) + sum(delta):
        raise InternalError("weight not conserved")
    return out


def gamma_inverse(alpha: Sequence[int], gamma: Sequence[int], N: int, M: int) -> ZInput:
    """Undo :func:`gamma_forward`.

    Position ``N - gamma_i + i`` of ``alpha`` holds ``delta_i - gamma_i``; the
    remaining positions, in order, give ``xi``.
    """
    alpha = _padded(alpha, "alpha")
    gamma = _padded(gamma, "gamma")
    if len(alpha) != M + N:
        raise InvalidInput(f"alpha must have M+N={M + N} entries, got {len(alpha)}")
    if len(gamma) != M:
        raise InvalidInput(f"gamma must have M={M} entries, got {len(gamma)}")
    if gamma and gamma[0] > N:
        raise InvalidInput(f"gamma parts must not exceed N={N}")
    positions = [N - gamma[i - 1] + i for i in range(1, M + 1)]
    taken = set(positions)
    if len(taken) != M or any(not 1 <= p <= M + N for p in positions):
        raise NotInImage("gamma does not induce a permutation of positions")
    delta = [alpha[p - 1] + gamma[i] for i, p in enumerate(positions)]
    xi = [alpha[p - 1] for p in range(1, M + N + 1) if p not in taken]
    if not is_partition(delta, allow_zero=True) or not is_partition(xi, allow_zero=True):
        raise NotInImage("(alpha, gamma) is not in the image of Algorithm Z")
    result = ZInput(PaddedPartition.trusted(xi), PaddedPartition.trusted(delta))
    again = gamma_forward(result.xi, result.delta)
    if again.alpha != alpha or again.gamma != gamma:
        raise NotInImage("(alpha, gamma) is not in the image of Algorithm Z")
    return result


def theorem_form_forward(xi: Sequence[int], delta: Sequence[int], M: int, N: int) -> tuple[Partition, Partition]:
    """Algorithm Z with conjugated coordinates.

    Input: ``xi`` with at most ``N`` parts and ``delta`` with parts at most ``M``.
    Output: ``alpha`` with parts at most ``M + N`` and ``gamma`` with at most
    ``N`` parts, each at most ``M``.
    """
    xi_p = pad(strip(xi), N)
    delta_c = conjugate(strip(delta))
    if len(delta_c) > M:
        raise InvalidInput(f"delta parts must not exceed M={M}")
    out = gamma_forward(xi_p, pad(delta_c, M))
    return conjugate(out.alpha), conjugate(out.gamma)


def theorem_form_inverse(alpha: Sequence[int], gamma: Sequence[int], M: int, N: int) -> tuple[Partition, Partition]:
    alpha_c = conjugate(strip(alpha))
    gamma_c = conjugate(strip(gamma))
    if len(alpha_c) > M + N:
        raise InvalidInput(f"alpha parts must not exceed M+N={M + N}")
    if len(gamma_c) > M or len(strip(gamma)) > N:
        raise InvalidInput(f"gamma must fit in an N x M box (N={N}, M={M})")
    res = gamma_inverse(pad(alpha_c, M + N), pad(gamma_c, M), N, M)
    return strip(res.xi), conjugate(res.delta)


def refined_forward(xi: Sequence[int], delta: Sequence[int], M: int, N: int) -> tuple[Partition, PaddedPartition]:
    """Candidate bijection in theorem coordinates keeping ``delta`` inside ``alpha``.

    Splits ``xi`` with the inverse of ``phi_M`` into a box part (``gamma``)
    and a part with entries in ``[M+1, M+N]``, then returns
    ``alpha = delta ∪ that part``. The parts of ``alpha`` not exceeding ``M``
    are then exactly ``delta``. This is an experimental construction whose
    bijectivity is checked by exhaustive tests, not assumed.
    """
    from .phi import phi_inverse

    delta = strip(delta)
    if delta and delta[0] > M:
        raise InvalidInput(f"delta parts must not exceed M={M}")
    a = phi_inverse(pad(strip(xi), N), M)
    alpha = Partition.trusted(sorted((*delta, *a.beta), reverse=True))
    return alpha, pad(a.alpha, N)


def refined_inverse(alpha: Sequence[int], gamma: Sequence[int], M: int, N: int) -> tuple[Partition, Partition]:
    from .phi import phi_forward

    alpha = strip(alpha)
    if alpha and alpha[0] > M + N:
        raise InvalidInput(f"alpha parts must not exceed M+N={M + N}")
    delta = Partition.trusted(x for x in alpha if x <= M)
    beta = Partition.trusted(x for x in alpha if x > M)
    xi = phi_forward(strip(gamma), beta, M, N).gamma
    return strip(xi), delta
