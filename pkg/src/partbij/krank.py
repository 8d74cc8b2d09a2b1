"""Garvan's k-rank: the tuple form of Q_k(m, n) and the weight-raising injection.

A partition in ``Q_k(m, n)`` has at least ``k - 1`` successive Durfee squares
and k-rank ``m``. :func:`eta_forward` rewrites it as a :class:`KTuple`
``(alpha, beta, gamma^1..gamma^{k-2}, squares)``. ``alpha`` holds the short
columns right of the first square and ``beta`` holds the rows below the last
square. Each ``gamma^i`` packs the two pieces between squares ``i`` and
``i + 1`` with ``phi``.

:func:`sigma_apply` sends a tuple of weight ``n`` to one of weight ``n + 1``
through one of fifteen case maps. Label 16 collects the few tuples with no
image; those are exactly where ``N_k(m, n+1) < N_k(m, n)``. Each case map has a
left inverse :func:`zeta_apply`.

The case analysis assumes ``m >= 0``. For ``m < 0`` every operation swaps
``alpha`` and ``beta`` first and swaps back afterwards. Swapping is a
weight-preserving involution between ``m`` and ``-m``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Sequence

from .errors import ExceptionalElement, InternalError, InvalidInput, NotInImage
from .partition import Partition, conjugate, durfee_chain, is_partition, k_rank, pad, parts_in_range, strip
from .phi import phi_forward, phi_inverse

__all__ = [
    "KTuple",
    "QElement",
    "eta_forward",
    "eta_inverse",
    "swap",
    "source_labels",
    "classify_source",
    "target_labels",
    "sigma_apply",
    "zeta_apply",
    "is_exceptional",
    "MonotonicityCell",
    "MonotonicityReport",
    "verify_monotonicity",
    "image_census",
]


def _part(p: Sequence[int], i: int) -> int:
    return p[i - 1] if 1 <= i <= len(p) else 0


@dataclass(frozen=True)
class KTuple:
    """``(alpha, beta, gamma^1..gamma^{k-2}, squares)``; ``squares[i]`` is the side ``d_{i+1}``."""

    alpha: Partition
    beta: Partition
    gammas: tuple[Partition, ...]
    squares: tuple[int, ...]

    @classmethod
    def of(
        cls,
        alpha: Sequence[int],
        beta: Sequence[int],
        gammas: Iterable[Sequence[int]],
        squares: Sequence[int],
    ) -> "KTuple":
        t = cls(
            Partition(tuple(alpha)),
            Partition(tuple(beta)),
            tuple(Partition(tuple(g)) for g in gammas),
            tuple(squares),
        )
        t.validate()
        return t

    @property
    def k(self) -> int:
        return len(self.squares) + 1

    @property
    def m(self) -> int:
        return len(self.alpha) - len(self.beta)

    @property
    def weight(self) -> int:
        return (
            sum(self.alpha)
            + sum(self.beta)
            + sum(sum(g) for g in self.gammas)
            + sum(d * d for d in self.squares)
        )

    def violation(self) -> str | None:
        d = self.squares
        k = self.k
        if k < 3:
            return "need at least two squares (k >= 3)"
        if len(self.gammas) != k - 2:
            return f"need exactly k-2={k - 2} gamma partitions"
        if any(not isinstance(x, int) for x in d) or d[-1] < 1:
            return "square sides must be positive integers"
        if any(d[i] < d[i + 1] for i in range(k - 2)):
            return "square sides must be non-increasing"
        for name, p in (("alpha", self.alpha), ("beta", self.beta), *((f"gamma^{i + 1}", g) for i, g in enumerate(self.gammas))):
            if not is_partition(p):
                return f"{name} must be a partition"
        if (self.alpha and self.alpha[0] > d[-1]) or (self.beta and self.beta[0] > d[-1]):
            return "alpha and beta parts must not exceed the last square side"
        for i, g in enumerate(self.gammas):
            if len(g) > d[i] - d[i + 1]:
                return f"gamma^{i + 1} must have at most d_{i + 1} - d_{i + 2} parts"
        return None

    def validate(self) -> None:
        problem = self.violation()
        if problem:
            raise InvalidInput(f"not a valid k-tuple: {problem}")

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "gammas": [list(g) for g in self.gammas],
            "squares": list(self.squares),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "KTuple":
        try:
            return cls.of(obj["alpha"], obj["beta"], obj["gammas"], obj["squares"])
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed k-tuple object: {exc}") from exc

    def __str__(self) -> str:
        def fmt(p: Sequence[int]) -> str:
            return "(" + ",".join(map(str, p)) + ")" if p else "∅"

        body = [fmt(self.alpha), fmt(self.beta), *(fmt(g) for g in self.gammas)]
        body += [f"({d}^{d})" for d in self.squares]
        return "(" + ", ".join(body) + ")"


def _kt(alpha: Iterable[int], beta: Iterable[int], gammas: Iterable[Iterable[int]], squares: Iterable[int]) -> KTuple:
    return KTuple(
        Partition.trusted(tuple(alpha)),
        Partition.trusted(tuple(beta)),
        tuple(Partition.trusted(tuple(g)) for g in gammas),
        tuple(squares),
    )


def swap(t: KTuple) -> KTuple:
    """Exchange ``alpha`` and ``beta``; sends ``P_k(m, n)`` to ``P_k(-m, n)``."""
    return replace(t, alpha=t.beta, beta=t.alpha)


@dataclass(frozen=True)
class QElement:
    pi: Partition
    k: int

    def __post_init__(self) -> None:
        if self.k < 3:
            raise InvalidInput("k must be at least 3")
        if not is_partition(self.pi):
            raise InvalidInput("pi must be a partition")
        if durfee_chain(self.pi, self.k - 1)[-1] < 1:
            raise InvalidInput(f"pi needs at least k-1={self.k - 1} successive Durfee squares")

    @property
    def m(self) -> int:
        return k_rank(self.pi, self.k)


def eta_forward(pi: Sequence[int] | QElement, k: int | None = None) -> KTuple:
    q = pi if isinstance(pi, QElement) else QElement(Partition(strip(tuple(pi))), k if k is not None else 0)
    p, k = q.pi, q.k
    d = tuple(durfee_chain(p, k - 1))
    cols = conjugate(p)[d[0]:]
    alpha = parts_in_range(cols, 1, d[-1])
    gammas = []
    row = d[0]
    for i in range(k - 2):
        block = p[row : row + d[i + 1]]
        pb = conjugate(strip(tuple(x - d[i + 1] for x in block)))
        pr = parts_in_range(cols, d[i + 1] + 1, d[i])
        gammas.append(strip(phi_forward(pb, pr, d[i + 1], d[i] - d[i + 1]).gamma))
        row += d[i + 1]
    beta = Partition.trusted(p[row:])
    out = _kt(alpha, beta, gammas, d)
    problem = out.violation()
    if problem or out.weight != sum(p):
        raise InternalError(f"eta produced an invalid tuple from {tuple(p)}: {problem}")
    if out.m != k_rank(p, k):
        raise InternalError("the two k-rank computations disagree")
    return out


def eta_inverse(t: KTuple) -> QElement:
    t.validate()
    d, k = t.squares, t.k
    top: list[int] = list(t.alpha)
    blocks = []
    for i in range(k - 2):
        N = d[i] - d[i + 1]
        split = phi_inverse(pad(t.gammas[i], N), d[i + 1])
        top.extend(split.beta)
        blocks.append(split.alpha)
    top.sort(reverse=True)
    rows = [d[0] + x for x in pad(conjugate(top), d[0])]
    for i in range(k - 2):
        rows.extend(d[i + 1] + x for x in pad(conjugate(blocks[i]), d[i + 1]))
    rows.extend(t.beta)
    q = QElement(Partition(rows), k)
    if eta_forward(q) != t:
        raise InternalError(f"eta inverse of {t} does not round-trip")
    return q


# ---------------------------------------------------------------------------
# Source classification (weight n) and target classification (weight n + 1).
# Both assume m >= 0; public wrappers reflect negative m through ``swap``.


def _same_square(t: KTuple) -> bool:
    return t.squares[0] == t.squares[-1]


def _gammas_empty(t: KTuple) -> bool:
    return all(not g for g in t.gammas)


def _source_conditions(t: KTuple) -> list[bool]:
    d, k, a, b = t.squares, t.k, t.alpha, t.beta
    d1 = d[0]
    eq = _same_square(t)
    big = eq and d1 >= 2
    a1, a2, a3, b1 = _part(a, 1), _part(a, 2), _part(a, 3), _part(b, 1)
    n, m = t.weight, t.m
    return [
        d1 != d[-1],
        eq and d1 == 1 and n >= m + k,
        k >= 4 and big and not a,
        k == 3 and eq and d1 >= 3 and not a,
        big and 1 <= a1 < d1,
        big and a1 == d1 and a2 == 0 and b1 < d1,
        big and a1 == d1 and a2 == 0 and b1 == d1,
        big and a1 == d1 > a2 >= 1 and (a1 - a2) % 2 == 1,
        big and a1 == d1 > a2 >= 1 and (a1 - a2) % 2 == 0,
        big and a1 == a2 == d1 and 1 <= b1 < d1,
        big and a1 == a2 == d1 and b1 == d1,
        big and a1 == a2 == a3 == d1 and not b,
        big and a1 == a2 == d1 > a3 and not b and k >= 4,
        k == 3 and eq and d1 >= 3 and a1 == a2 == d1 > a3 and not b,
        k == 3 and eq and d1 == 2 and a1 == a2 == d1 > a3 and not b,
        (eq and d1 == 1 and n == m + k - 1) or (k == 3 and eq and d1 == 2 and not a),
    ]


def _first_drop(d: Sequence[int]) -> int | None:
    """Smallest 1-based ``j`` with ``d_j > d_{j+1}``."""
    for j in range(1, len(d)):
        if d[j - 1] > d[j]:
            return j
    return None


def _target_conditions(t: KTuple) -> list[bool]:
    d, k, a, b, g = t.squares, t.k, t.alpha, t.beta, t.gammas
    d1, dl = d[0], d[-1]
    eq = _same_square(t)
    a1, a2, a3, b1, b2 = _part(a, 1), _part(a, 2), _part(a, 3), _part(b, 1), _part(b, 2)
    g_empty = _gammas_empty(t)
    mids = d[1 : k - 2]  # d_2 .. d_{k-2}
    j = _first_drop(d)
    one_step = d1 >= 3 and all(x == d1 - 1 for x in d[1:])
    two_step = d1 >= 3 and all(x == d1 - 1 for x in mids) and dl == d1 - 2
    return [
        j is not None and _part(g[j - 1], 1) > _part(g[j - 1], 2),
        g_empty and d1 == 2 and all(x == 1 for x in d[1:]),
        k >= 4 and g_empty and d1 == d[k - 3] == dl + 1 >= 2 and a == (1,) * d1 and b == (1,) * d1,
        k == 3 and g_empty and d1 == d[1] + 1 >= 3 and a == (1,) * d1 and b == (1,) * d1,
        eq and d1 >= 2 and a1 > a2 and a1 >= 2,
        two_step and g_empty and a == (d1 - 2,),
        one_step and g_empty and not a,
        eq and d1 >= 2 and 1 <= a1 == a2 < d1 and (d1 - a1) % 2 == 1 and 2 * b.count(1) >= d1 - a1 + 1,
        eq and d1 >= 2 and 1 <= a1 == a2 < d1 and (d1 - a1) % 2 == 0,
        eq and d1 >= 2 and a1 == a2 == d1 and b1 > b2 and b1 >= 2,
        one_step and g_empty and a1 == d1 - 1,
        eq and d1 >= 2 and a1 == a2 == d1 and a.count(d1 - 1) >= 1 and b == (1,),
        k >= 4
        and two_step
        and all(not x for x in g[: k - 3])
        and g[k - 3] == (1,)
        and a1 == a2 == dl
        and not b,
        k == 3 and d1 == d[1] + 2 >= 4 and g[0] == (1, 1) and a1 == d[1] and a.count(a1 - 1) >= 1,
        k == 3 and d1 == d[1] == 2 and a1 == a2 == a3 == 1 and len(a) >= 3 and b == (2,),
    ]


def _labels(conds: list[bool]) -> list[int]:
    return [i + 1 for i, c in enumerate(conds) if c]


def source_labels(t: KTuple) -> list[int]:
    """Every ``i`` in 1..16 whose source subset contains ``t``."""
    t.validate()
    return _labels(_source_conditions(t if t.m >= 0 else swap(t)))


def classify_source(t: KTuple) -> int:
    labels = source_labels(t)
    if len(labels) != 1:
        raise InternalError(f"{t} matches source subsets {labels}; expected exactly one")
    return labels[0]


def target_labels(t: KTuple) -> list[int]:
    """Every ``i`` in 1..15 whose target subset contains ``t``."""
    t.validate()
    return _labels(_target_conditions(t if t.m >= 0 else swap(t)))


def is_exceptional(k: int, m: int, n: int) -> bool:
    """Whether ``N_k(m, n+1) < N_k(m, n)`` is expected (label 16 nonempty)."""
    return n == abs(m) + k - 1 or (k, m, n) == (3, 0, 8)


# ---------------------------------------------------------------------------
# The fifteen case maps (m >= 0).


def _with_squares(d: Sequence[int], first: int | None = None, last: int | None = None) -> tuple[int, ...]:
    out = list(d)
    if last is not None:
        out[-1] = last
    if first is not None:
        out[0] = first
    return tuple(out)


def _empty_gammas(t: KTuple) -> tuple[tuple[int, ...], ...]:
    return tuple(() for _ in t.gammas)


def _s1(t: KTuple) -> KTuple:
    i = _first_drop(t.squares)
    g = list(t.gammas)
    old = g[i - 1]
    g[i - 1] = (_part(old, 1) + 1, *old[1:])
    return _kt(t.alpha, t.beta, g, t.squares)


def _s2(t: KTuple) -> KTuple:
    s = len(t.beta)
    return _kt((1,) * (t.m + s - 1), (1,) * (s - 1), _empty_gammas(t), (2, *([1] * (t.k - 2))))


def _s3(t: KTuple) -> KTuple:
    d = t.squares[0]
    return _kt((1,) * d, (1,) * d, _empty_gammas(t), _with_squares(t.squares, last=t.squares[-1] - 1))


def _s5(t: KTuple) -> KTuple:
    return _kt((t.alpha[0] + 1, *t.alpha[1:]), t.beta, t.gammas, t.squares)


def _s6(t: KTuple) -> KTuple:
    d = t.squares
    return _kt((t.alpha[0] - 1,), t.beta, _empty_gammas(t), _with_squares(d, first=d[0] + 1, last=d[-1] - 1))


def _s7(t: KTuple) -> KTuple:
    return _kt((), (), _empty_gammas(t), _with_squares(t.squares, first=t.squares[0] + 1))


def _s8(t: KTuple) -> KTuple:
    a = t.alpha
    r = (a[0] - a[1] + 1) // 2
    return _kt((a[1], *a[1:], *([1] * r)), (*t.beta, *([1] * r)), t.gammas, t.squares)


def _s9(t: KTuple) -> KTuple:
    a = t.alpha
    r = (a[0] - a[1]) // 2
    beta = sorted((*t.beta, 2, *([1] * (r - 1))), reverse=True)
    return _kt((a[1], *a[1:], *([1] * r)), beta, t.gammas, t.squares)


def _s10(t: KTuple) -> KTuple:
    return _kt(t.alpha, (t.beta[0] + 1, *t.beta[1:]), t.gammas, t.squares)


def _s11(t: KTuple) -> KTuple:
    return _kt(t.alpha[1:], t.beta[1:], t.gammas, _with_squares(t.squares, first=t.squares[0] + 1))


def _s12(t: KTuple) -> KTuple:
    a = list(t.alpha)
    d = t.squares[0]
    last = max(i for i, x in enumerate(a) if x == d)
    a[last] -= 1
    return _kt((*a, 1), (1,), t.gammas, t.squares)


def _s13(t: KTuple) -> KTuple:
    a, d = t.alpha, t.squares
    g = [()] * (t.k - 3) + [(1,)]
    return _kt((a[0] - 1, a[1] - 1, *a[2:]), (), g, _with_squares(d, first=d[0] + 1, last=d[-1] - 1))


def _s14(t: KTuple) -> KTuple:
    a, d = t.alpha, t.squares
    d1 = d[0]
    last = max(i for i in range(1, len(a) + 1) if a[i - 1] >= d1 - 1)
    new = (a[0] - 1, *a[2:last], a[1] - 2, *a[last:])
    return _kt(new, (), [(1, 1)], (d1 + 1, d[1] - 1))


def _s15(t: KTuple) -> KTuple:
    a = t.alpha
    return _kt((a[0] - 1, a[1] - 1, 1, *a[2:]), (2,), t.gammas, t.squares)


def _z1(t: KTuple) -> KTuple:
    i = _first_drop(t.squares)
    if i is None:
        raise NotInImage("all squares are equal")
    g = list(t.gammas)
    old = g[i - 1]
    g[i - 1] = strip((old[0] - 1, *old[1:])) if old else None
    if g[i - 1] is None:
        raise NotInImage("gamma to decrement is empty")
    return _kt(t.alpha, t.beta, g, t.squares)


def _z2(t: KTuple) -> KTuple:
    s = len(t.beta)
    return _kt((1,) * (t.m + s + 1), (1,) * (s + 1), _empty_gammas(t), (1,) * (t.k - 1))


def _z3(t: KTuple) -> KTuple:
    return _kt((), (), _empty_gammas(t), _with_squares(t.squares, last=t.squares[-1] + 1))


def _z5(t: KTuple) -> KTuple:
    return _kt((t.alpha[0] - 1, *t.alpha[1:]), t.beta, t.gammas, t.squares)


def _z6(t: KTuple) -> KTuple:
    d = t.squares
    return _kt((t.alpha[0] + 1,), t.beta, _empty_gammas(t), _with_squares(d, first=d[0] - 1, last=d[-1] + 1))


def _z7(t: KTuple) -> KTuple:
    d1 = t.squares[0] - 1
    return _kt((d1,), (d1,), _empty_gammas(t), _with_squares(t.squares, first=d1))


def _drop_trailing_ones(p: Sequence[int], r: int) -> tuple[int, ...]:
    if r < 0 or len(p) < r or any(x != 1 for x in p[len(p) - r :]):
        raise NotInImage(f"expected {r} trailing ones in {tuple(p)}")
    return tuple(p[: len(p) - r])


def _z8(t: KTuple) -> KTuple:
    d1, a = t.squares[0], t.alpha
    r = (d1 - a[0] + 1) // 2
    alpha = (d1, *_drop_trailing_ones(a, r)[1:])
    return _kt(alpha, _drop_trailing_ones(t.beta, r), t.gammas, t.squares)


def _z9(t: KTuple) -> KTuple:
    d1, a = t.squares[0], t.alpha
    r = (d1 - a[0]) // 2
    alpha = (d1, *_drop_trailing_ones(a, r)[1:])
    beta = list(_drop_trailing_ones(t.beta, r - 1))
    if 2 not in beta:
        raise NotInImage("beta has no part 2 to remove")
    beta.remove(2)
    return _kt(alpha, beta, t.gammas, t.squares)


def _z10(t: KTuple) -> KTuple:
    return _kt(t.alpha, (t.beta[0] - 1, *t.beta[1:]), t.gammas, t.squares)


def _z11(t: KTuple) -> KTuple:
    d1 = t.squares[0] - 1
    return _kt((d1, *t.alpha), (d1, *t.beta), t.gammas, _with_squares(t.squares, first=d1))


def _z12(t: KTuple) -> KTuple:
    a, d1 = t.alpha, t.squares[0]
    j = max(i for i in range(1, len(a) + 1) if a[i - 1] == d1)
    if len(a) < j + 2:
        raise NotInImage("no trailing part to absorb after the (d-1) block")
    return _kt((*a[:j], a[j] + 1, *a[j + 1 : -1]), (), t.gammas, t.squares)


def _z13(t: KTuple) -> KTuple:
    a, d = t.alpha, t.squares
    return _kt((a[0] + 1, a[1] + 1, *a[2:]), (), _empty_gammas(t), _with_squares(d, first=d[0] - 1, last=d[-1] + 1))


def _z14(t: KTuple) -> KTuple:
    a, d = t.alpha, t.squares
    j = min(i for i in range(2, len(a) + 1) if a[i - 1] == a[0] - 1)
    new = (a[0] + 1, a[j - 1] + 2, *a[1 : j - 1], *a[j:])
    return _kt(new, (), [()], (d[0] - 1, d[1] + 1))


def _z15(t: KTuple) -> KTuple:
    a = t.alpha
    return _kt((a[0] + 1, a[1] + 1, *a[3:]), (), t.gammas, t.squares)


_SIGMA: dict[int, Callable[[KTuple], KTuple]] = {
    1: _s1, 2: _s2, 3: _s3, 4: _s3, 5: _s5, 6: _s6, 7: _s7, 8: _s8,
    9: _s9, 10: _s10, 11: _s11, 12: _s12, 13: _s13, 14: _s14, 15: _s15,
}
_ZETA: dict[int, Callable[[KTuple], KTuple]] = {
    1: _z1, 2: _z2, 3: _z3, 4: _z3, 5: _z5, 6: _z6, 7: _z7, 8: _z8,
    9: _z9, 10: _z10, 11: _z11, 12: _z12, 13: _z13, 14: _z14, 15: _z15,
}


def _sigma_nonneg(t: KTuple) -> tuple[KTuple, int]:
    labels = _labels(_source_conditions(t))
    if len(labels) != 1:
        raise InternalError(f"{t} matches source subsets {labels}")
    i = labels[0]
    if i == 16:
        raise ExceptionalElement(
            f"exceptional element (k={t.k}, m={t.m}, n={t.weight}): no injection exists"
        )
    out = _SIGMA[i](t)
    problem = out.violation()
    if problem:
        raise InternalError(f"case map {i} produced an invalid tuple: {problem}")
    if out.weight != t.weight + 1 or out.m != t.m:
        raise InternalError(f"case map {i} broke the weight or rank bookkeeping")
    return out, i


def sigma_apply(t: KTuple) -> tuple[KTuple, int]:
    """The injection from weight ``n`` to ``n + 1``; returns the image and its case label."""
    t.validate()
    if t.m >= 0:
        return _sigma_nonneg(t)
    out, i = _sigma_nonneg(swap(t))
    return swap(out), i


def zeta_apply(t: KTuple, i: int) -> KTuple:
    """Left inverse of case map ``i``; raises NotInImage off its image."""
    t.validate()
    if i not in _ZETA:
        raise InvalidInput(f"case label must be in 1..15, got {i}")
    flip = t.m < 0
    s = swap(t) if flip else t
    if not _target_conditions(s)[i - 1]:
        raise NotInImage(f"{t} is not in target subset {i}")
    try:
        cand = _ZETA[i](s)
    except (IndexError, ValueError) as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise NotInImage(f"{t} is not in the image of case map {i}") from exc
    if cand.violation() or _labels(_source_conditions(cand)) != [i] or _SIGMA[i](cand) != s:
        raise NotInImage(f"{t} is not in the image of case map {i}")
    return swap(cand) if flip else cand


# ---------------------------------------------------------------------------
# Monotonicity audit.


@dataclass(frozen=True)
class MonotonicityCell:
    k: int
    m: int
    n: int
    count_n: int
    count_n1: int
    series_n: int
    series_n1: int
    exceptional_count: int
    image_counts: tuple[int, ...]
    target_counts: tuple[int, ...]
    violations: tuple[str, ...]

    @property
    def holds(self) -> bool:
        return self.count_n1 >= self.count_n


@dataclass
class MonotonicityReport:
    k: int
    cells: list[MonotonicityCell] = field(default_factory=list)

    @property
    def violations(self) -> list[str]:
        return [v for c in self.cells for v in c.violations]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def failures(self) -> list[tuple[int, int, int]]:
        """``(k, m, n)`` where ``N_k(m, n+1) < N_k(m, n)``."""
        return [(c.k, c.m, c.n) for c in self.cells if not c.holds]

    def non_surjective_labels(self) -> list[int]:
        """Case labels whose image missed part of its target subset somewhere."""
        return sorted(
            {i + 1 for c in self.cells for i in range(15) if c.image_counts[i] < c.target_counts[i]}
        )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "ok": self.ok,
            "failures": [list(f) for f in self.failures],
            "non_surjective_labels": self.non_surjective_labels(),
            "violations": self.violations,
            "cells": [
                {
                    "m": c.m,
                    "n": c.n,
                    "count_n": c.count_n,
                    "count_n1": c.count_n1,
                    "series_n": c.series_n,
                    "series_n1": c.series_n1,
                    "exceptional": c.exceptional_count,
                    "holds": c.holds,
                }
                for c in self.cells
            ],
        }


def _audit_cell(args: tuple[int, int, int]) -> MonotonicityCell:
    from .oracle import enumerate_P
    from .qseries import nk_count

    k, m, n = args
    problems: list[str] = []
    where = f"(k={k}, m={m}, n={n})"
    here = list(enumerate_P(k, m, n))
    there = list(enumerate_P(k, m, n + 1))
    s_n, s_n1 = nk_count(k, m, n), nk_count(k, m, n + 1)
    if len(here) != s_n or len(there) != s_n1:
        problems.append(f"{where}: enumeration counts {len(here)},{len(there)} differ from series {s_n},{s_n1}")
    target_counts = [0] * 15
    for t in there:
        labels = target_labels(t)
        if len(labels) > 1:
            problems.append(f"{where}: {t} lies in target subsets {labels}")
        for i in labels:
            target_counts[i - 1] += 1
    image_counts = [0] * 15
    images: dict[KTuple, KTuple] = {}
    exceptional = 0
    for t in here:
        labels = source_labels(t)
        if len(labels) != 1:
            problems.append(f"{where}: {t} matches source subsets {labels}")
            continue
        if labels[0] == 16:
            exceptional += 1
            continue
        try:
            img, i = sigma_apply(t)
        except InternalError as exc:
            problems.append(f"{where}: {exc}")
            continue
        image_counts[i - 1] += 1
        if img in images:
            problems.append(f"{where}: {t} and {images[img]} share the image {img}")
        images[img] = t
        if target_labels(img) != [i]:
            problems.append(f"{where}: image {img} of case {i} lies in targets {target_labels(img)}")
        try:
            back = zeta_apply(img, i)
        except NotInImage as exc:
            problems.append(f"{where}: left inverse {i} rejected {img}: {exc}")
            continue
        if back != t:
            problems.append(f"{where}: left inverse {i} sent {img} to {back}, not {t}")
    expected = 1 if is_exceptional(k, m, n) and len(here) else 0
    if exceptional != expected:
        problems.append(f"{where}: {exceptional} exceptional tuples, expected {expected}")
    holds = len(there) >= len(here)
    if holds == is_exceptional(k, m, n) and len(here):
        problems.append(f"{where}: inequality {'holds' if holds else 'fails'} contrary to the exception list")
    return MonotonicityCell(
        k, m, n, len(here), len(there), s_n, s_n1, exceptional,
        tuple(image_counts), tuple(target_counts), tuple(problems),
    )


def verify_monotonicity(
    k: int,
    m_max: int,
    n_max: int,
    *,
    m_min: int = 0,
    n_min: int | None = None,
    workers: int = 1,
) -> MonotonicityReport:
    """Audit the injection on every ``(m, n)`` with ``m_min <= m <= m_max`` and ``k-1 <= n <= n_max``."""
    if k < 3:
        raise InvalidInput("the injection is defined for k >= 3")
    n_lo = k - 1 if n_min is None else n_min
    grid = [(k, m, n) for m in range(m_min, m_max + 1) for n in range(n_lo, n_max + 1)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_audit_cell, grid))
    else:
        cells = [_audit_cell(g) for g in grid]
    return MonotonicityReport(k, cells)


def image_census(cells: Iterable[MonotonicityCell]) -> Counter:
    """Total image size per case label across cells."""
    total: Counter = Counter()
    for c in cells:
        for i, v in enumerate(c.image_counts, start=1):
            total[i] += v
    return total
