"""Command-line interface: ``partbij <command> ...``.

Exit status is 0 on success, 1 when a verification finds a counterexample and
2 on invalid input. Every command accepts ``--json``; JSON objects carry
``"schema": 1``. Commands that take a single partition or k-tuple read one
per line from standard input when given ``-``.
"""

from __future__ import annotations

import json
import sys
from typing import Callable, Iterator

import click

from . import __version__
from .algorithm_z import (
    gamma_forward,
    gamma_inverse,
    refined_forward,
    refined_inverse,
    theorem_form_forward,
    theorem_form_inverse,
)
from .chi import SElement, chi_forward_steps, chi_inverse
from .errors import CapExceeded, InvalidInput
from .krank import eta_forward, eta_inverse, sigma_apply, source_labels, target_labels, verify_monotonicity, zeta_apply
from .oracle import DEFAULT_CAP, FAMILIES, FamilySpec, certify, enumerate_family, series_count
from .phi import phi_forward, phi_inverse
from .psi import CElement, DElement, psi_forward, psi_inverse, render_table
from .qseries import gaussian, inv_pochhammer, nk_series, partition_counts
from .suites import SUITES, run_suite
from .textio import (
    format_frequency,
    format_ktuple,
    format_partition,
    parse_ktuple,
    parse_padded,
    parse_partition,
)

SCHEMA = 1


class VerificationFailed(Exception):
    pass


def _emit(as_json: bool, payload: dict, human: Callable[[], str]) -> None:
    if as_json:
        click.echo(json.dumps({"schema": SCHEMA, **payload}, separators=(",", ":")))
    else:
        click.echo(human())


def _lines(arg: str) -> Iterator[str]:
    if arg == "-":
        for line in sys.stdin:
            line = line.rstrip("\n")
            if line.strip():
                yield line
    else:
        yield arg


def _fmt(p) -> str:
    return "(" + format_partition(p) + ")" if len(p) else "∅"


def _freq(p) -> str:
    return "(" + format_frequency(p) + ")" if len(p) else "∅"


def _run(fn: Callable[[], None]) -> None:
    try:
        fn()
    except InvalidInput as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except CapExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except VerificationFailed as exc:
        click.echo(f"verification failed: {exc}", err=True)
        sys.exit(1)


json_opt = click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of text.")


@click.group()
@click.version_option(__version__, prog_name="partbij")
def main() -> None:
    """Partition bijections, k-rank injections and their exhaustive checks."""


@main.command()
@click.option("--M", "M", type=int, required=True)
@click.option("--N", "N", type=int, required=True)
@click.option("--form", type=click.Choice(["padded", "theorem", "refined"]), default="padded", show_default=True,
              help="padded: N-part xi and M-part delta; theorem and refined: conjugated coordinates.")
@click.option("--xi", default=None, help="First input partition.")
@click.option("--delta", default=None, help="Second input partition.")
@click.option("--invert", is_flag=True, help="Map (ALPHA, GAMMA) back to (xi, delta).")
@click.option("--alpha", default=None, help="With --invert: the alpha output.")
@click.option("--gamma", default=None, help="With --invert: the gamma output.")
@json_opt
def algz(M: int, N: int, form: str, xi, delta, invert: bool, alpha, gamma, as_json: bool) -> None:
    """Run Algorithm Z on (--xi, --delta), or undo it with --invert."""

    def go() -> None:
        if invert:
            if alpha is None or gamma is None:
                raise InvalidInput("--invert needs --alpha and --gamma")
            if form == "padded":
                res = gamma_inverse(parse_padded(alpha, M + N), parse_padded(gamma, M), N, M)
                x, d = tuple(res.xi), tuple(res.delta)
            elif form == "theorem":
                x, d = theorem_form_inverse(parse_partition(alpha), parse_partition(gamma), M, N)
            else:
                x, d = refined_inverse(parse_partition(alpha), parse_partition(gamma), M, N)
            _emit(as_json, {"xi": list(x), "delta": list(d)}, lambda: f"xi = {_fmt(x)}\ndelta = {_fmt(d)}")
            return
        if xi is None or delta is None:
            raise InvalidInput("algz needs --xi and --delta")
        if form == "padded":
            out = gamma_forward(parse_padded(xi, N), parse_padded(delta, M))
            a, g = tuple(out.alpha), tuple(out.gamma)
        elif form == "theorem":
            a, g = theorem_form_forward(parse_partition(xi), parse_partition(delta), M, N)
        else:
            a, g = refined_forward(parse_partition(xi), parse_partition(delta), M, N)
        _emit(as_json, {"alpha": list(a), "gamma": list(g)}, lambda: f"alpha = {_fmt(a)}\ngamma = {_fmt(g)}")

    _run(go)


@main.command()
@click.option("--M", "M", type=int, required=True)
@click.option("--N", "N", type=int, default=None, help="Defaults to the number of entries of DELTA.")
@click.option("--trace", is_flag=True, help="Print every pass of the forward loop.")
@click.argument("delta")
@json_opt
def psi(M: int, N: int | None, trace: bool, delta: str, as_json: bool) -> None:
    """Map DELTA in C_{M,N} to (pi, mu) in D_{M,N}."""

    def go() -> None:
        for line in _lines(delta):
            seq = parse_padded(line, N)
            d, tr = psi_forward(CElement.of(seq, M, len(seq)))
            payload = {"pi": list(d.pi), "mu": list(d.mu)}
            if trace:
                payload["trace"] = [
                    {"k": s.k, "gamma": list(s.gamma), "f": list(s.f), "delta": list(s.delta_next),
                     "pi": [list(x) for x in s.pi_next]}
                    for s in tr.steps
                ]

            def human() -> str:
                out = [f"mu = {_fmt(d.mu)}", f"pi = {_freq(d.pi)}"]
                if trace:
                    for i, s in enumerate(tr.steps, start=1):
                        out.append(f"step {i}: k={s.k} gamma={_fmt(s.gamma)} delta={_fmt(s.delta_next)}")
                        out.append("        Pi = " + " ".join(_fmt(x) for x in s.pi_next))
                return "\n".join(out)

            _emit(as_json, payload, human)

    _run(go)


@main.command("psi-inv")
@click.option("--M", "M", type=int, required=True)
@click.option("--N", "N", type=int, required=True)
@click.option("--table", is_flag=True, help="Print the fill table with markers and column sums.")
@click.argument("pi")
@click.argument("mu")
@json_opt
def psi_inv(M: int, N: int, table: bool, pi: str, mu: str, as_json: bool) -> None:
    """Map (PI, MU) in D_{M,N} back to C_{M,N}."""

    def go() -> None:
        d = DElement(parse_partition(pi), parse_padded(mu, N), M, N)
        c = psi_inverse(d)
        payload = {"delta": list(c.delta)}
        t = render_table(d) if table else None
        if t is not None:
            payload["table"] = [[cell.render() for cell in row] for row in t.cells]
            payload["column_sums"] = list(t.column_sums())
        _emit(as_json, payload, lambda: (t.render() + "\n" if t else "") + f"delta = {_fmt(c.delta)}")

    _run(go)


@main.command()
@click.option("--M", "M", type=int, required=True)
@click.option("--N", "N", type=int, required=True)
@click.argument("alpha")
@click.argument("beta")
@json_opt
def phi(M: int, N: int, alpha: str, beta: str, as_json: bool) -> None:
    """Map (ALPHA, BETA) in A_{M,N} to B_N."""

    def go() -> None:
        g = phi_forward(parse_partition(alpha), parse_partition(beta), M, N).gamma
        _emit(as_json, {"gamma": list(g)}, lambda: f"gamma = {_fmt(g)}")

    _run(go)


@main.command("phi-inv")
@click.option("--M", "M", type=int, required=True)
@click.option("--N", "N", type=int, default=None, help="Pad GAMMA to N entries.")
@click.argument("gamma")
@json_opt
def phi_inv(M: int, N: int | None, gamma: str, as_json: bool) -> None:
    """Map GAMMA in B_N back to A_{M,N}."""

    def go() -> None:
        for line in _lines(gamma):
            a = phi_inverse(parse_padded(line, N), M)
            _emit(as_json, {"alpha": list(a.alpha), "beta": list(a.beta)},
                  lambda: f"alpha = {_fmt(a.alpha)}\nbeta = {_freq(a.beta)}")

    _run(go)


@main.command()
@click.option("--k", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.option("--steps", is_flag=True, help="Print every intermediate piece.")
@click.argument("lam")
@json_opt
def chi(k: int, m: int, steps: bool, lam: str, as_json: bool) -> None:
    """Map LAM (paired with its forced partition) from R_{k,m} to S_{k,m}."""

    def go() -> None:
        for line in _lines(lam):
            st = chi_forward_steps(parse_partition(line), k, m)
            e = st.result
            payload = {"s": list(e.s), "alpha": list(e.alpha), "beta": list(e.beta),
                       "gamma": list(e.gamma), "xi": list(e.xi)}
            dec = st.decomposition
            named = {
                "n": list(dec.n),
                "r": [list(x) for x in dec.r],
                "b": [list(x) for x in dec.b],
                "nu": [list(x) for x in st.nu],
                "b_bar": [list(x) for x in st.b_bar],
                "r_bar": [list(x) for x in st.r_bar],
                "r_k1": list(dec.rk1),
                "r_k2": list(dec.rk2),
                "b_k1": list(dec.bk1),
                "b_k2": list(dec.bk2),
                "R": list(st.R),
            }
            if steps:
                payload["steps"] = named

            def human() -> str:
                out = [f"s = {tuple(e.s)}", f"alpha = {_fmt(e.alpha)}", f"beta = {_fmt(e.beta)}",
                       f"gamma = {_fmt(e.gamma)}", f"xi = {_fmt(e.xi)}"]
                if steps:
                    out += [f"{key} = {value}" for key, value in named.items()]
                return "\n".join(out)

            _emit(as_json, payload, human)

    _run(go)


@main.command("chi-inv")
@click.option("--k", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.option("--s", "sides", required=True, help="Square sides, comma-separated.")
@click.argument("alpha")
@click.argument("beta")
@click.argument("xi")
@json_opt
def chi_inv(k: int, m: int, sides: str, alpha: str, beta: str, xi: str, as_json: bool) -> None:
    """Map (S; ALPHA, BETA, XI) in S_{k,m} back to R_{k,m}."""

    def go() -> None:
        s = tuple(int(x) for x in sides.split(",") if x.strip())
        e = SElement(s, parse_partition(alpha), parse_partition(beta), parse_partition(xi), k, m)
        r = chi_inverse(e)
        _emit(as_json, {"lambda": list(r.lam), "delta": list(r.delta)},
              lambda: f"lambda = {_fmt(r.lam)}\ndelta = {_fmt(r.delta)}")

    _run(go)


@main.command()
@click.option("--k", type=int, required=True)
@click.argument("pi")
@json_opt
def eta(k: int, pi: str, as_json: bool) -> None:
    """Rewrite PI (with at least k-1 Durfee squares) as a k-tuple."""

    def go() -> None:
        for line in _lines(pi):
            t = eta_forward(parse_partition(line), k)
            _emit(as_json, {"tuple": t.to_json(), "k": t.k, "m": t.m, "n": t.weight},
                  lambda: f"{t}  (k={t.k}, m={t.m}, n={t.weight})")

    _run(go)


@main.command("eta-inv")
@click.argument("ktuple")
@json_opt
def eta_inv(ktuple: str, as_json: bool) -> None:
    """Rebuild the partition of a KTUPLE given as JSON."""

    def go() -> None:
        for line in _lines(ktuple):
            q = eta_inverse(parse_ktuple(line))
            _emit(as_json, {"pi": list(q.pi), "k": q.k}, lambda: _fmt(q.pi))

    _run(go)


@main.command()
@click.argument("ktuple")
@json_opt
def classify(ktuple: str, as_json: bool) -> None:
    """Report the source subset (1..16) and target subsets (1..15) of a KTUPLE."""

    def go() -> None:
        for line in _lines(ktuple):
            t = parse_ktuple(line)
            src, tgt = source_labels(t), target_labels(t)
            _emit(as_json, {"source": src, "target": tgt, "k": t.k, "m": t.m, "n": t.weight},
                  lambda: f"source {','.join(map(str, src))}; target {','.join(map(str, tgt)) or 'none'}")

    _run(go)


@main.command()
@click.option("--inverse", "label", type=int, default=None, help="Apply the left inverse of case LABEL instead.")
@click.argument("ktuple")
@json_opt
def sigma(label: int | None, ktuple: str, as_json: bool) -> None:
    """Apply the weight-raising injection to a KTUPLE (or a case inverse with --inverse)."""

    def go() -> None:
        for line in _lines(ktuple):
            t = parse_ktuple(line)
            if label is None:
                out, i = sigma_apply(t)
            else:
                out, i = zeta_apply(t, label), label
            _emit(as_json, {"tuple": out.to_json(), "label": i}, lambda: f"{out}  [case {i}]\n{format_ktuple(out)}")

    _run(go)


@main.command()
@click.option("--kind", type=click.Choice(["nk", "gaussian", "pochhammer", "partitions"]), required=True)
@click.option("--k", type=int, default=None)
@click.option("--m", type=int, default=0, show_default=True)
@click.option("--M", "M", type=int, default=None)
@click.option("--N", "N", type=int, default=None)
@click.option("--a", "a", type=int, default=1, show_default=True, help="First exponent of the Pochhammer product.")
@click.option("--terms", type=int, default=None, help="Pochhammer factors; omit for the infinite product.")
@click.option("--cap", type=int, default=20, show_default=True)
@json_opt
def series(kind: str, k, m, M, N, a, terms, cap, as_json: bool) -> None:
    """Print exact series coefficients, one 'n<TAB>c_n' line each."""

    def go() -> None:
        if cap < 0:
            raise InvalidInput("cap must be non-negative")
        if kind == "nk":
            if k is None or k < 1:
                raise InvalidInput("--k >= 1 is required for nk")
            coeffs = list(nk_series(k, m, cap))
        elif kind == "gaussian":
            if M is None or N is None:
                raise InvalidInput("--M and --N are required for gaussian")
            coeffs = list(gaussian(M, N).coefficients)
        elif kind == "pochhammer":
            if a < 1:
                raise InvalidInput("--a must be at least 1")
            coeffs = list(inv_pochhammer(a, terms, cap))
        else:
            coeffs = list(partition_counts(cap))
        _emit(as_json, {"kind": kind, "coefficients": coeffs},
              lambda: "\n".join(f"{n}\t{c}" for n, c in enumerate(coeffs)))

    _run(go)


@main.command()
@click.option("--family", type=click.Choice(FAMILIES), required=True)
@click.option("--M", "M", type=int, default=0)
@click.option("--N", "N", type=int, default=0)
@click.option("--k", type=int, default=0)
@click.option("--m", type=int, default=0)
@click.option("--n", "n", type=int, required=True)
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True)
@click.option("--list", "show", is_flag=True, help="Also print every element.")
@json_opt
def count(family: str, M, N, k, m, n, cap, show: bool, as_json: bool) -> None:
    """Count a family cell by brute force and compare with its series when one exists."""

    def go() -> None:
        spec = FamilySpec(family, n, M=M, N=N, k=k, m=m)
        items = enumerate_family(spec, cap)
        expected = series_count(spec)
        payload = {"family": spec.describe(), "count": len(items), "series": expected}
        if show:
            payload["elements"] = [x.to_json() if hasattr(x, "to_json") else x for x in items]

        def human() -> str:
            out = [f"{spec.describe()}: {len(items)}" + (f" (series {expected})" if expected is not None else "")]
            if show:
                out += [str(x) for x in items]
            return "\n".join(out)

        _emit(as_json, payload, human)
        if expected is not None and expected != len(items):
            raise VerificationFailed(f"count {len(items)} differs from series {expected}")

    _run(go)


@main.command("certify")
@click.option("--map", "map_name", required=True, help="algz, algz-theorem, refined-z, psi, phi, chi or eta.")
@click.option("--grid", required=True, help="For example M=0..3,N=1..4,n=0..24.")
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True)
@json_opt
def certify_cmd(map_name: str, grid: str, workers: int, cap: int, as_json: bool) -> None:
    """Check a registered map is a weight-preserving bijection on every grid cell."""

    def go() -> None:
        cert = certify(map_name, grid, cap=cap, workers=workers)
        _emit(as_json, cert.to_json(), lambda: f"{map_name}: {cert.verdict} over {len(cert.cells)} cells"
              + (f"\ncounterexample: {cert.counterexample}" if cert.counterexample else ""))
        if cert.verdict != "pass":
            raise VerificationFailed(cert.counterexample or "no cells")

    _run(go)


@main.command("verify-monotonicity")
@click.option("--k", type=int, required=True)
@click.option("--m-max", type=int, required=True)
@click.option("--n-max", type=int, required=True)
@click.option("--m-min", type=int, default=0, show_default=True)
@click.option("--workers", type=int, default=1, show_default=True)
@json_opt
def verify_mono_cmd(k: int, m_max: int, n_max: int, m_min: int, workers: int, as_json: bool) -> None:
    """Audit N_k(m,n+1) >= N_k(m,n) and the injection behind it."""

    def go() -> None:
        report = verify_monotonicity(k, m_max, n_max, m_min=m_min, workers=workers)

        def human() -> str:
            out = [f"k={k}: {len(report.cells)} cells, {'ok' if report.ok else 'VIOLATIONS'}"]
            out.append("failures at (k,m,n): " + ", ".join(map(str, report.failures)))
            out.append("labels whose image misses part of the target: "
                       + (", ".join(map(str, report.non_surjective_labels())) or "none"))
            out += report.violations
            return "\n".join(out)

        _emit(as_json, report.to_json(), human)
        if not report.ok:
            raise VerificationFailed(report.violations[0])

    _run(go)


@main.command()
@click.option("--suite", type=click.Choice(sorted(SUITES)), required=True)
@click.option("--M", "M", type=int, default=None)
@click.option("--N", "N", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--m-max", type=int, default=None)
@click.option("--n-max", type=int, default=None)
@click.option("--cap", type=int, default=None, help="Series cap for the pochhammer suite.")
@click.option("--workers", type=int, default=None)
@json_opt
def verify(suite: str, M, N, k, m_max, n_max, cap, workers, as_json: bool) -> None:
    """Run a named verification suite over its sweep grid."""

    def go() -> None:
        click.echo(f"running {suite} ...", err=True)
        res = run_suite(suite, M=M, N=N, k=k, m_max=m_max, n_max=n_max, cap=cap, workers=workers)
        _emit(as_json, res.to_json(), lambda: f"{suite}: {'pass' if res.ok else 'FAIL'} ({res.summary})"
              + (f"\ncounterexample: {res.counterexample}" if res.counterexample else ""))
        if not res.ok:
            raise VerificationFailed(res.counterexample or res.summary)

    _run(go)


if __name__ == "__main__":
    main()
