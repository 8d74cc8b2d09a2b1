"""Named verification suites shared by the CLI and the acceptance tests.

Each suite returns a :class:`SuiteResult` holding a pass flag, a one-line
summary and the first counterexample it met.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import InvalidInput
from .krank import verify_monotonicity
from .oracle import FamilySpec, certify, family_count
from .qseries import gaussian, inv_pochhammer, nk_count

__all__ = [
    "SuiteResult",
    "SUITES",
    "SMALL_K_EXCEPTIONS",
    "small_k_failures",
    "run_suite",
]

# Points (k, m, n) off the line n = m + k where N_k(m, n) < N_k(m, n - 1).
SMALL_K_EXCEPTIONS = frozenset(
    {(1, 2, 5), (1, 3, 10), (1, 4, 9), (1, 6, 13), (2, 1, 7), (2, 0, 8), (2, 3, 11), (3, 0, 9)}
)


@dataclass
class SuiteResult:
    name: str
    ok: bool
    summary: str
    counterexample: str | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "summary": self.summary,
            "counterexample": self.counterexample,
            "details": self.details,
        }


def _certify_suite(name: str, map_name: str, grid: dict[str, list[int]], workers: int) -> SuiteResult:
    cert = certify(map_name, grid, workers=workers)
    sizes = sum(c.domain_count for c in cert.cells)
    return SuiteResult(
        name,
        cert.verdict == "pass",
        f"{map_name}: {len(cert.cells)} cells, {sizes} elements, verdict {cert.verdict}",
        cert.counterexample,
        {"cells": len(cert.cells), "elements": sizes},
    )


def _algz(p: dict) -> SuiteResult:
    grid = {"M": list(range(p.get("M", 3) + 1)), "N": list(range(p.get("N", 3) + 1)), "n": list(range(p.get("n_max", 12) + 1))}
    return _certify_suite("algorithm-z", "algz", grid, p.get("workers", 1))


def _psi(p: dict) -> SuiteResult:
    grid = {"M": list(range(p.get("M", 3) + 1)), "N": list(range(1, p.get("N", 4) + 1)), "n": list(range(p.get("n_max", 24) + 1))}
    return _certify_suite("psi", "psi", grid, p.get("workers", 1))


def _phi(p: dict) -> SuiteResult:
    grid = {"M": list(range(p.get("M", 2) + 1)), "N": list(range(p.get("N", 4) + 1)), "n": list(range(p.get("n_max", 20) + 1))}
    return _certify_suite("phi", "phi", grid, p.get("workers", 1))


def _chi(p: dict) -> SuiteResult:
    mm = p.get("m_max", 2)
    grid = {"k": list(range(1, p.get("k", 3) + 1)), "m": list(range(-mm, mm + 1)), "n": list(range(p.get("n_max", 24) + 1))}
    return _certify_suite("chi", "chi", grid, p.get("workers", 1))


def _eta(p: dict) -> SuiteResult:
    mm = p.get("m_max", 4)
    grid = {"k": list(range(3, p.get("k", 4) + 1)), "m": list(range(-mm, mm + 1)), "n": list(range(p.get("n_max", 18) + 1))}
    return _certify_suite("eta", "eta", grid, p.get("workers", 1))


def _monotonicity(p: dict) -> SuiteResult:
    problems: list[str] = []
    failures: list[list[int]] = []
    non_surjective: dict[int, list[int]] = {}
    for k in range(3, p.get("k", 4) + 1):
        report = verify_monotonicity(k, p.get("m_max", 5), p.get("n_max", 25), workers=p.get("workers", 1))
        problems += report.violations
        failures += [list(f) for f in report.failures]
        non_surjective[k] = report.non_surjective_labels()
    return SuiteResult(
        "monotonicity",
        not problems,
        f"{len(failures)} failures of N_k(m,n+1) >= N_k(m,n), all at exceptional points" if not problems else f"{len(problems)} violations",
        problems[0] if problems else None,
        {"failures": failures, "non_surjective_labels": non_surjective},
    )


def small_k_failures(k_values=(1, 2, 3), m_max: int = 6, n_max: int = 30) -> set[tuple[int, int, int]]:
    """Every ``(k, m, n)`` with ``N_k(m, n) < N_k(m, n - 1)`` on the grid."""
    return {
        (k, m, n)
        for k in k_values
        for m in range(m_max + 1)
        for n in range(1, n_max + 1)
        if nk_count(k, m, n) < nk_count(k, m, n - 1)
    }


def _small_k(p: dict) -> SuiteResult:
    m_max, n_max = p.get("m_max", 6), p.get("n_max", 30)
    ks = (1, 2, 3)
    found = small_k_failures(ks, m_max, n_max)
    expected = {(k, m, m + k) for k in ks for m in range(m_max + 1) if m + k <= n_max}
    expected |= {t for t in SMALL_K_EXCEPTIONS if t[1] <= m_max and t[2] <= n_max}
    extra, missing = sorted(found - expected), sorted(expected - found)
    ok = not extra and not missing
    example = None if ok else f"unexpected failures {extra}, missing failures {missing}"
    return SuiteResult("small-k-monotonicity", ok, f"{len(found)} failure points for k in 1..3", example,
                       {"extra": extra, "missing": missing})


def _gaussian(p: dict) -> SuiteResult:
    top, n_max = p.get("M", 5), p.get("n_max", 25)
    for M in range(top + 1):
        for N in range(p.get("N", 5) + 1):
            g = gaussian(M, N)
            for n in range(n_max + 1):
                c = family_count(FamilySpec("BoxPartitions", n, M=M, N=N))
                if g[n] != c:
                    return SuiteResult("gaussian", False, "mismatch", f"M={M}, N={N}, n={n}: series {g[n]}, count {c}")
    return SuiteResult("gaussian", True, "box counts equal Gaussian coefficients")


def _pochhammer(p: dict) -> SuiteResult:
    cap = p.get("cap", 40)
    for M in range(p.get("M", 5) + 1):
        for N in range(p.get("N", 5) + 1):
            left = inv_pochhammer(1, N, cap)
            right = inv_pochhammer(M + 1, N, cap) * gaussian(M, N).as_series(cap)
            if left != right:
                bad = next(i for i in range(cap + 1) if left[i] != right[i])
                return SuiteResult("pochhammer", False, "mismatch", f"M={M}, N={N}, q^{bad}: {left[bad]} vs {right[bad]}")
    return SuiteResult("pochhammer", True, f"product identity holds to q^{cap}")


def _krank_series(p: dict) -> SuiteResult:
    mm, n_max = p.get("m_max", 5), p.get("n_max", 22)
    for k in (2, 3, 4):
        for m in range(-mm, mm + 1):
            for n in range(n_max + 1):
                c = family_count(FamilySpec("Q", n, k=k, m=m))
                if c != nk_count(k, m, n):
                    return SuiteResult("krank-series", False, "mismatch",
                                       f"k={k}, m={m}, n={n}: series {nk_count(k, m, n)}, count {c}")
    return SuiteResult("krank-series", True, "k-rank counts equal series coefficients")


SUITES: dict[str, Callable[[dict], SuiteResult]] = {
    "algorithm-z": _algz,
    "psi": _psi,
    "phi": _phi,
    "chi": _chi,
    "eta": _eta,
    "monotonicity": _monotonicity,
    "small-k-monotonicity": _small_k,
    "gaussian": _gaussian,
    "pochhammer": _pochhammer,
    "krank-series": _krank_series,
}


def run_suite(name: str, **params) -> SuiteResult:
    """Run a suite; unset parameters take the default sweep ranges."""
    if name not in SUITES:
        raise InvalidInput(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name]({k: v for k, v in params.items() if v is not None})
