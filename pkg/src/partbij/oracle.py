"""Brute-force enumeration of every partition family and a bijection harness.

Nothing here calls the maps under test to decide membership. Each family is
generated straight from its defining inequalities, so counts and round-trips
measured against these streams are independent evidence.

Elements are plain nested tuples (a :class:`~partbij.krank.KTuple` for ``P``).
Streams come out in descending lexicographic order of that tuple form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import isqrt
from typing import Any, Callable, Iterable, Iterator, Sequence

from .errors import CapExceeded, InvalidInput
from .qseries import inv_pochhammer, partition_counts

__all__ = [
    "DEFAULT_CAP",
    "FAMILIES",
    "FamilySpec",
    "partitions",
    "enumerate_family",
    "enumerate_P",
    "family_count",
    "contains",
    "series_count",
    "estimate_size",
    "brute_k_rank",
    "brute_durfee_chain",
    "MapSpec",
    "MAPS",
    "parse_grid",
    "CellResult",
    "BijectionCertificate",
    "certify",
]

DEFAULT_CAP = 10**6

FAMILIES = ("C", "D", "A", "B", "R", "S", "Q", "P", "PlainPartitions", "BoxPartitions", "ZIn", "ZOut", "TIn", "TOut")

_PARAMS = {
    "C": ("M", "N"),
    "D": ("M", "N"),
    "A": ("M", "N"),
    "B": ("N",),
    "R": ("k", "m"),
    "S": ("k", "m"),
    "Q": ("k", "m"),
    "P": ("k", "m"),
    "PlainPartitions": (),
    "BoxPartitions": ("M", "N"),
    "ZIn": ("M", "N"),
    "ZOut": ("M", "N"),
    "TIn": ("M", "N"),
    "TOut": ("M", "N"),
}


def partitions(
    n: int,
    max_part: int | None = None,
    max_len: int | None = None,
    exact_len: int | None = None,
    min_part: int = 1,
) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in descending lexicographic order under the given bounds."""
    if n < 0:
        return
    if exact_len is not None:
        max_len = exact_len if max_len is None else min(max_len, exact_len)
    cap_part = n if max_part is None else max_part
    cap_len = n if max_len is None else max_len

    def rec(rest: int, top: int, slots: int, need: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            if need <= 0:
                yield ()
            return
        if slots == 0 or rest < min_part * max(need, 1):
            return
        for first in range(min(top, rest), min_part - 1, -1):
            if first * slots < rest:
                break
            for tail in rec(rest - first, first, slots - 1, need - 1):
                yield (first, *tail)

    need = exact_len if exact_len is not None else 0
    if n == 0:
        if need == 0:
            yield ()
        return
    yield from rec(n, cap_part, cap_len, need)


def brute_durfee_chain(p: Sequence[int], depth: int) -> tuple[int, ...]:
    """Successive Durfee sides, each found by trying every square size."""
    sides = []
    rows = list(p)
    for _ in range(depth):
        d = max((j for j in range(len(rows) + 1) if all(rows[i] >= j for i in range(j))), default=0)
        sides.append(d)
        rows = rows[d:]
    return tuple(sides)


def brute_k_rank(p: Sequence[int], k: int) -> int | None:
    """``k``-rank by counting cells; ``None`` when there are fewer than ``k - 1`` squares."""
    chain = brute_durfee_chain(p, k - 1)
    if chain[-1] == 0:
        return None
    d1, last = chain[0], chain[-1]
    width = p[0] if p else 0
    cols = [sum(1 for x in p if x >= j) for j in range(d1 + 1, width + 1)]
    return sum(1 for c in cols if c <= last) - (len(p) - sum(chain))


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    n: int
    M: int = 0
    N: int = 0
    k: int = 0
    m: int = 0

    def __post_init__(self) -> None:
        if self.tag not in FAMILIES:
            raise InvalidInput(f"unknown family {self.tag!r}; choose from {', '.join(FAMILIES)}")
        if self.n < 0 or self.M < 0 or self.N < 0 or self.k < 0:
            raise InvalidInput("n, M, N and k must be non-negative")

    def describe(self) -> str:
        params = ",".join(f"{p}={getattr(self, p)}" for p in _PARAMS[self.tag])
        return f"{self.tag}({params})[n={self.n}]"


def _convolve(series: Sequence[Sequence[int]], n: int) -> int:
    acc = [1] + [0] * n
    for s in series:
        acc = [sum(acc[i] * s[j - i] for i in range(j + 1)) for j in range(n + 1)]
    return acc[n]


def estimate_size(spec: FamilySpec) -> int:
    """An upper bound on the size of a family cell, from partition-count series."""
    n = spec.n
    if spec.tag in ("C", "B"):
        return inv_pochhammer(1, spec.N, n)[n]
    p = partition_counts(n)
    # A, D and the (beta, xi) half of S pair pieces with disjoint part ranges,
    # so their union is injective and p(n) bounds them.
    pieces = {"ZIn": 2, "ZOut": 2, "TIn": 2, "TOut": 2, "S": 2}.get(spec.tag, 1)
    return _convolve([p] * pieces, n)


def _pad(p: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(p) + (0,) * (n - len(p))


def _gen_C(s: FamilySpec) -> Iterator[Any]:
    M, N = s.M, s.N
    if N < 1:
        return
    for p in partitions(s.n, max_len=N):
        d = _pad(p, N) + (0,)
        if all(d[i - 1] - d[i] <= M + N - i for i in range(1, N + 1)):
            yield d[:N]


def _multiset_partitions(n: int, values: Sequence[int], limits: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` using ``values[i]`` at most ``limits[i]`` times; ``values`` descending."""

    def rec(rest: int, i: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if i == len(values):
            return
        v = values[i]
        for c in range(min(limits[i], rest // v), -1, -1):
            for tail in rec(rest - c * v, i + 1):
                yield (v,) * c + tail

    yield from rec(n, 0)


def _gen_D(s: FamilySpec) -> Iterator[Any]:
    M, N = s.M, s.N
    if N < 1:
        return
    values = list(range(M + N - 1, M, -1))
    limits = [N - (v - M) for v in values]
    for w in range(s.n, -1, -1):
        for pi in _multiset_partitions(w, values, limits):
            for mu in partitions(s.n - w, max_part=M, max_len=N):
                yield (pi, _pad(mu, N))


def _gen_A(s: FamilySpec) -> Iterator[Any]:
    M, N = s.M, s.N
    for w in range(s.n, -1, -1):
        for alpha in partitions(w, max_part=M, max_len=N):
            for beta in partitions(s.n - w, max_part=M + N, min_part=M + 1):
                yield (alpha, beta)


def _gen_B(s: FamilySpec) -> Iterator[Any]:
    for p in partitions(s.n, max_len=s.N):
        yield _pad(p, s.N)


def _delta_weight(k: int, m: int) -> int:
    a = abs(m)
    tail = k + 1 if m >= 0 else k
    return sum((2 * k + 1) * (a - i) + tail for i in range(1, a + 1))


def _gen_R(s: FamilySpec) -> Iterator[Any]:
    if s.k < 1:
        return
    yield from partitions(s.n - _delta_weight(s.k, s.m))


def _gen_S(s: FamilySpec) -> Iterator[Any]:
    k, m = s.k, s.m
    if k < 1:
        return
    g = m * (m + 1) // 2 if m >= 0 else (-m - 1) * (-m) // 2
    rest = s.n - g
    for wa in range(rest, -1, -1):
        for alpha in partitions(wa):
            sides = brute_durfee_chain(alpha, k)
            sk = sides[-1]
            if sk < abs(m) or len(alpha) != sum(sides) or (alpha and alpha[-1] < sk):
                continue
            for wb in range(rest - wa, -1, -1):
                for beta in partitions(wb, max_part=2 * sk, min_part=sk + 1):
                    for xi in partitions(rest - wa - wb, max_part=sk - m, max_len=sk + m):
                        yield (sides, alpha, beta, xi)


def _gen_Q(s: FamilySpec) -> Iterator[Any]:
    if s.k < 2:
        return
    for p in partitions(s.n):
        if brute_k_rank(p, s.k) == s.m:
            yield p


def _gen_plain(s: FamilySpec) -> Iterator[Any]:
    yield from partitions(s.n)


def _gen_box(s: FamilySpec) -> Iterator[Any]:
    yield from partitions(s.n, max_part=s.N, max_len=s.M)


def _pairs(n: int, first: Callable[[int], Iterable], second: Callable[[int], Iterable]) -> Iterator[Any]:
    for w in range(n, -1, -1):
        for a in first(w):
            for b in second(n - w):
                yield (a, b)


def _gen_ZIn(s: FamilySpec) -> Iterator[Any]:
    M, N = s.M, s.N
    yield from _pairs(
        s.n,
        lambda w: (_pad(p, N) for p in partitions(w, max_len=N)),
        lambda w: (_pad(p, M) for p in partitions(w, max_len=M)),
    )


def _gen_ZOut(s: FamilySpec) -> Iterator[Any]:
    M, N = s.M, s.N
    yield from _pairs(
        s.n,
        lambda w: (_pad(p, M + N) for p in partitions(w, max_len=M + N)),
        lambda w: (_pad(p, M) for p in partitions(w, max_part=N, max_len=M)),
    )


def _gen_TIn(s: FamilySpec) -> Iterator[Any]:
    yield from _pairs(s.n, lambda w: partitions(w, max_len=s.N), lambda w: partitions(w, max_part=s.M))


def _gen_TOut(s: FamilySpec) -> Iterator[Any]:
    M, N = s.M, s.N
    yield from _pairs(s.n, lambda w: partitions(w, max_part=M + N), lambda w: partitions(w, max_part=M, max_len=N))


def _gen_P(s: FamilySpec) -> Iterator[Any]:
    return iter(enumerate_P(s.k, s.m, s.n))


_GENERATORS: dict[str, Callable[[FamilySpec], Iterator[Any]]] = {
    "C": _gen_C,
    "D": _gen_D,
    "A": _gen_A,
    "B": _gen_B,
    "R": _gen_R,
    "S": _gen_S,
    "Q": _gen_Q,
    "P": _gen_P,
    "PlainPartitions": _gen_plain,
    "BoxPartitions": _gen_box,
    "ZIn": _gen_ZIn,
    "ZOut": _gen_ZOut,
    "TIn": _gen_TIn,
    "TOut": _gen_TOut,
}


def _sort_key(x: Any) -> Any:
    from .krank import KTuple

    if isinstance(x, KTuple):
        return (x.alpha, x.beta, x.gammas, x.squares)
    return x


def enumerate_family(spec: FamilySpec, cap: int = DEFAULT_CAP) -> list[Any]:
    """Every element of the family cell, duplicate-free, descending lexicographic order.

    Raises :class:`CapExceeded` when the size bound exceeds ``cap``.
    """
    bound = estimate_size(spec)
    if bound > cap:
        raise CapExceeded(f"{spec.describe()} may hold up to {bound} elements, above the cap {cap}")
    items = list(_GENERATORS[spec.tag](spec))
    items.sort(key=_sort_key, reverse=True)
    if len(set(items)) != len(items):
        raise AssertionError(f"duplicate elements in {spec.describe()}")
    return items


def _is_part(p: Any) -> bool:
    return isinstance(p, tuple) and all(isinstance(x, int) and x >= 1 for x in p) and all(
        p[i] >= p[i + 1] for i in range(len(p) - 1)
    )


def _is_padded(p: Any, length: int) -> bool:
    return (
        isinstance(p, tuple)
        and len(p) == length
        and all(isinstance(x, int) and x >= 0 for x in p)
        and all(p[i] >= p[i + 1] for i in range(len(p) - 1))
    )


def contains(spec: FamilySpec, x: Any) -> bool:
    """Membership straight from the defining conditions, without enumerating."""
    M, N, k, m, n = spec.M, spec.N, spec.k, spec.m, spec.n
    tag = spec.tag
    try:
        if tag == "C":
            d = (*x, 0)
            return N >= 1 and _is_padded(x, N) and sum(x) == n and all(
                d[i - 1] - d[i] <= M + N - i for i in range(1, N + 1)
            )
        if tag == "D":
            pi, mu = x
            return (
                N >= 1
                and _is_part(pi)
                and _is_padded(mu, N)
                and (not mu or mu[0] <= M)
                and all(M + 1 <= v <= M + N - 1 and pi.count(v) <= N - (v - M) for v in pi)
                and sum(pi) + sum(mu) == n
            )
        if tag == "A":
            alpha, beta = x
            return (
                _is_part(alpha)
                and _is_part(beta)
                and len(alpha) <= N
                and all(v <= M for v in alpha)
                and all(M + 1 <= v <= M + N for v in beta)
                and sum(alpha) + sum(beta) == n
            )
        if tag == "B":
            return _is_padded(x, N) and sum(x) == n
        if tag in ("PlainPartitions", "R"):
            return _is_part(x) and sum(x) == n - (_delta_weight(k, m) if tag == "R" else 0)
        if tag == "BoxPartitions":
            return _is_part(x) and len(x) <= M and all(v <= N for v in x) and sum(x) == n
        if tag == "Q":
            return _is_part(x) and sum(x) == n and k >= 2 and brute_k_rank(x, k) == m
        if tag == "P" or tag == "S":
            return x in set(enumerate_family(spec))
        if tag in ("ZIn", "ZOut", "TIn", "TOut"):
            return x in set(enumerate_family(spec))
    except (TypeError, ValueError):
        return False
    return False


def family_count(spec: FamilySpec, cap: int = DEFAULT_CAP) -> int:
    return len(enumerate_family(spec, cap))


@lru_cache(maxsize=4096)
def _gamma_options(total: int, widths: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All tuples of partitions with the given length bounds and total weight."""
    if not widths:
        return ((),) if total == 0 else ()
    out = []
    first, rest = widths[0], widths[1:]
    for w in range(total, -1, -1):
        heads = list(partitions(w, max_len=first))
        if not heads:
            continue
        tails = _gamma_options(total - w, rest)
        for h in heads:
            for t in tails:
                out.append((h, *t))
    return tuple(out)


def _chains(k: int, budget: int) -> Iterator[tuple[int, ...]]:
    def rec(length: int, top: int, rest: int) -> Iterator[tuple[int, ...]]:
        if length == 0:
            yield ()
            return
        for d in range(min(top, isqrt(rest)), 0, -1):
            for tail in rec(length - 1, d, rest - d * d):
                yield (d, *tail)

    yield from rec(k - 1, budget, budget)


def enumerate_P(k: int, m: int, n: int) -> list:
    """The tuple family ``P_k(m, n)`` built straight from its defining conditions."""
    from .krank import KTuple
    from .partition import Partition

    if k < 3:
        raise InvalidInput("the tuple family needs k >= 3")
    out = []
    for d in _chains(k, n):
        rest = n - sum(x * x for x in d)
        widths = tuple(d[i] - d[i + 1] for i in range(k - 2))
        last = d[-1]
        for wg in range(rest + 1):
            gammas = _gamma_options(wg, widths)
            if not gammas:
                continue
            for wa in range(rest - wg + 1):
                for alpha in partitions(wa, max_part=last):
                    lb = len(alpha) - m
                    if lb < 0:
                        continue
                    for beta in partitions(rest - wg - wa, max_part=last, exact_len=lb):
                        for g in gammas:
                            out.append(
                                KTuple(
                                    Partition.trusted(alpha),
                                    Partition.trusted(beta),
                                    tuple(Partition.trusted(x) for x in g),
                                    d,
                                )
                            )
    out.sort(key=_sort_key, reverse=True)
    return out


# ---------------------------------------------------------------------------
# Bijection certificates.


@dataclass(frozen=True)
class MapSpec:
    """A registered bijection: families on both sides plus both directions."""

    name: str
    domain: str
    codomain: str
    params: tuple[str, ...]
    forward: Callable[[Any, dict], Any]
    backward: Callable[[Any, dict], Any]
    weight_in: Callable[[Any], int]
    weight_out: Callable[[Any], int]


def _w_flat(x: Any) -> int:
    return sum(sum(p) for p in x)


def _w_seq(x: Any) -> int:
    return sum(x)


def _fwd_algz(x, p):
    from .algorithm_z import gamma_forward

    out = gamma_forward(*x)
    return (tuple(out.alpha), tuple(out.gamma))


def _bwd_algz(y, p):
    from .algorithm_z import gamma_inverse

    out = gamma_inverse(y[0], y[1], p["N"], p["M"])
    return (tuple(out.xi), tuple(out.delta))


def _fwd_algz_theorem(x, p):
    from .algorithm_z import theorem_form_forward

    a, g = theorem_form_forward(x[0], x[1], p["M"], p["N"])
    return (tuple(a), tuple(g))


def _bwd_algz_theorem(y, p):
    from .algorithm_z import theorem_form_inverse

    xi, delta = theorem_form_inverse(y[0], y[1], p["M"], p["N"])
    return (tuple(xi), tuple(delta))


def _fwd_refined(x, p):
    from .algorithm_z import refined_forward
    from .partition import strip

    a, g = refined_forward(x[0], x[1], p["M"], p["N"])
    return (tuple(a), tuple(strip(g)))


def _bwd_refined(y, p):
    from .algorithm_z import refined_inverse

    xi, delta = refined_inverse(y[0], y[1], p["M"], p["N"])
    return (tuple(xi), tuple(delta))


def _fwd_psi(x, p):
    from .psi import psi_forward

    d, _ = psi_forward(x, p["M"])
    return (tuple(d.pi), tuple(d.mu))


def _bwd_psi(y, p):
    from .psi import DElement, psi_inverse

    return tuple(psi_inverse(DElement.of(y[0], y[1], p["M"], p["N"])).delta)


def _fwd_phi(x, p):
    from .phi import phi_forward

    return tuple(phi_forward(x[0], x[1], p["M"], p["N"]).gamma)


def _fwd_phi_corrupt(x, p):
    gamma = list(_fwd_phi(x, p))
    if len(gamma) >= 2 and gamma[-1] > 0:
        gamma[0] += 1
        gamma[-1] -= 1
    return tuple(gamma)


def _bwd_phi(y, p):
    from .phi import phi_inverse

    a = phi_inverse(y, p["M"])
    return (tuple(a.alpha), tuple(a.beta))


def _fwd_chi(x, p):
    from .chi import chi_forward

    e = chi_forward(x, p["k"], p["m"])
    return (tuple(e.s), tuple(e.alpha), tuple(e.beta), tuple(e.xi))


def _bwd_chi(y, p):
    from .chi import SElement, chi_inverse
    from .partition import Partition

    s, alpha, beta, xi = y
    e = SElement(tuple(s), Partition(alpha), Partition(beta), Partition(xi), p["k"], p["m"])
    return tuple(chi_inverse(e).lam)


def _fwd_eta(x, p):
    from .krank import eta_forward

    return eta_forward(x, p["k"])


def _bwd_eta(y, p):
    from .krank import eta_inverse

    return tuple(eta_inverse(y).pi)


MAPS: dict[str, MapSpec] = {
    "algz": MapSpec("algz", "ZIn", "ZOut", ("M", "N"), _fwd_algz, _bwd_algz, _w_flat, _w_flat),
    "algz-theorem": MapSpec(
        "algz-theorem", "TIn", "TOut", ("M", "N"), _fwd_algz_theorem, _bwd_algz_theorem, _w_flat, _w_flat
    ),
    "refined-z": MapSpec("refined-z", "TIn", "TOut", ("M", "N"), _fwd_refined, _bwd_refined, _w_flat, _w_flat),
    "psi": MapSpec("psi", "C", "D", ("M", "N"), _fwd_psi, _bwd_psi, _w_seq, _w_flat),
    "phi": MapSpec("phi", "A", "B", ("M", "N"), _fwd_phi, _bwd_phi, _w_flat, _w_seq),
    "phi-corrupt": MapSpec("phi-corrupt", "A", "B", ("M", "N"), _fwd_phi_corrupt, _bwd_phi, _w_flat, _w_seq),
    "chi": MapSpec("chi", "R", "S", ("k", "m"), _fwd_chi, _bwd_chi, None, None),  # type: ignore[arg-type]
    "eta": MapSpec("eta", "Q", "P", ("k", "m"), _fwd_eta, _bwd_eta, _w_seq, lambda t: t.weight),
}


def _range(text: str) -> list[int]:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split("|")]


def parse_grid(text: str) -> dict[str, list[int]]:
    """Parse ``"M=0..3,N=1..4,n=0..24"``; a single value or ``a|b|c`` lists also work."""
    grid: dict[str, list[int]] = {}
    try:
        for piece in filter(None, (x.strip() for x in text.split(","))):
            key, value = piece.split("=", 1)
            grid[key.strip()] = _range(value)
    except ValueError as exc:
        raise InvalidInput(f"cannot parse grid {text!r}: expected entries like M=0..3") from exc
    return grid


@dataclass(frozen=True)
class CellResult:
    params: tuple[tuple[str, int], ...]
    n: int
    domain_count: int
    codomain_count: int
    counterexample: str | None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


@dataclass
class BijectionCertificate:
    map_name: str
    grid: dict[str, list[int]]
    cells: list[CellResult] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if self.cells and all(c.ok for c in self.cells) else "fail"

    @property
    def counterexample(self) -> str | None:
        for c in self.cells:
            if not c.ok:
                return c.counterexample
        return None

    def to_json(self) -> dict:
        return {
            "map": self.map_name,
            "grid": self.grid,
            "verdict": self.verdict,
            "counterexample": self.counterexample,
            "cells": [
                {**dict(c.params), "n": c.n, "domain": c.domain_count, "codomain": c.codomain_count, "ok": c.ok}
                for c in self.cells
            ],
        }


def _weight(spec: MapSpec, x: Any, side: str, p: dict) -> int:
    if spec.name == "chi":
        if side == "in":
            return sum(x) + _delta_weight(p["k"], p["m"])
        m = p["m"]
        g = m * (m + 1) // 2 if m >= 0 else (-m - 1) * (-m) // 2
        return sum(x[1]) + sum(x[2]) + sum(x[3]) + g
    return (spec.weight_in if side == "in" else spec.weight_out)(x)


def _certify_cell(args: tuple[str, tuple[tuple[str, int], ...], int, int]) -> CellResult:
    name, params, n, cap = args
    spec = MAPS[name]
    p = dict(params)
    dom = enumerate_family(FamilySpec(spec.domain, n, **p), cap)
    cod = enumerate_family(FamilySpec(spec.codomain, n, **p), cap)
    where = f"{name} at {', '.join(f'{k}={v}' for k, v in params)}, n={n}"

    def cell(problem: str | None) -> CellResult:
        return CellResult(params, n, len(dom), len(cod), problem)

    if len(dom) != len(cod):
        return cell(f"{where}: {len(dom)} domain elements but {len(cod)} codomain elements")
    cod_set = set(cod)
    dom_set = set(dom)
    for x in dom:
        try:
            y = spec.forward(x, p)
        except Exception as exc:  # noqa: BLE001 - any failure is a counterexample
            return cell(f"{where}: forward raised {type(exc).__name__} on {x}: {exc}")
        if _weight(spec, y, "out", p) != _weight(spec, x, "in", p):
            return cell(f"{where}: forward changed the weight of {x} (got {y})")
        if y not in cod_set:
            return cell(f"{where}: forward sent {x} outside the codomain: {y}")
        try:
            back = spec.backward(y, p)
        except Exception as exc:  # noqa: BLE001
            return cell(f"{where}: backward raised {type(exc).__name__} on {y}: {exc}")
        if back != x:
            return cell(f"{where}: backward(forward({x})) = {back}")
    for y in cod:
        try:
            x = spec.backward(y, p)
            again = spec.forward(x, p)
        except Exception as exc:  # noqa: BLE001
            return cell(f"{where}: round trip from {y} raised {type(exc).__name__}: {exc}")
        if x not in dom_set or again != y:
            return cell(f"{where}: forward(backward({y})) = {again}")
    return cell(None)


def certify(
    map_name: str,
    grid: dict[str, list[int]] | str,
    *,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    stop_at_first: bool = False,
) -> BijectionCertificate:
    """Check that a registered map is a weight-preserving bijection on every grid cell.

    ``grid`` needs the map's parameters (``M, N`` or ``k, m``) and ``n``.
    Cells run in grid order; the first failing cell holds the reported
    counterexample.
    """
    if map_name not in MAPS:
        raise InvalidInput(f"unknown map {map_name!r}; choose from {', '.join(MAPS)}")
    spec = MAPS[map_name]
    if isinstance(grid, str):
        grid = parse_grid(grid)
    missing = [k for k in (*spec.params, "n") if k not in grid]
    if missing:
        raise InvalidInput(f"grid for {map_name} is missing {', '.join(missing)}")
    keys = spec.params
    jobs = [
        (map_name, tuple(zip(keys, combo)), n, cap)
        for combo in product(*(grid[k] for k in keys))
        for n in grid["n"]
    ]
    cert = BijectionCertificate(map_name, {k: grid[k] for k in (*keys, "n")})
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            cert.cells = list(pool.map(_certify_cell, jobs, chunksize=4))
    else:
        for job in jobs:
            cell = _certify_cell(job)
            cert.cells.append(cell)
            if stop_at_first and not cell.ok:
                break
    return cert


def series_count(spec: FamilySpec) -> int | None:
    """The generating-function count for families that have one; ``None`` otherwise."""
    from .qseries import gaussian, nk_count

    n = spec.n
    if spec.tag == "PlainPartitions":
        return partition_counts(n)[n]
    if spec.tag == "B":
        return inv_pochhammer(1, spec.N, n).coefficients[n]
    if spec.tag == "BoxPartitions":
        g = gaussian(spec.M, spec.N).coefficients
        return g[n] if n < len(g) else 0
    if spec.tag == "A":
        g = gaussian(spec.M, spec.N).coefficients
        tail = inv_pochhammer(spec.M + 1, spec.N, n).coefficients
        return sum(g[i] * tail[n - i] for i in range(min(n, len(g) - 1) + 1))
    if spec.tag in ("Q", "P"):
        return nk_count(spec.k, spec.m, n)
    return None
