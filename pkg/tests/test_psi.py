import pytest
from hypothesis import given, settings

from partbij.errors import InvalidInput
from partbij.oracle import FamilySpec, certify, contains, enumerate_family
from partbij.psi import (
    CElement,
    CellKind,
    DElement,
    check_trace,
    is_in_C,
    is_in_D,
    marker_columns_from_trace,
    psi_forward,
    psi_inverse,
    render_table,
)
from strategies import c_elements

DELTA = (28, 26, 20, 12, 6, 6, 5, 3, 1, 1)
MU = (2, 1, 1, 1, 1, 1, 1, 1, 0, 0)
PI = (10, 10, 9, 9, 9, 7, 6, 6, 5, 5, 5, 4, 4, 4, 3, 3)


def test_worked_example_output():
    d, trace = psi_forward(DELTA, 2)
    assert tuple(d.mu) == MU
    assert tuple(d.pi) == PI
    assert trace.ks == (8, 4, 3, 1)


def test_worked_example_first_split():
    _, trace = psi_forward(DELTA, 2)
    first = trace.steps[0]
    assert first.overline_delta == (1, 1)
    assert first.tilde_delta == (25, 23, 17, 9, 3, 3, 2, 0)


def test_worked_example_trace():
    _, trace = psi_forward(DELTA, 2)
    deltas = [s.delta_next for s in trace.steps]
    assert deltas == [
        (23, 21, 15, 7, 1, 1, 1, 1, 1, 0),
        (14, 12, 6, 1, 1, 1, 1, 1, 1, 0),
        (4, 2, 1, 1, 1, 1, 1, 1, 1, 0),
        (2, 1, 1, 1, 1, 1, 1, 1, 0, 0),
    ]
    e = ()
    assert trace.steps[0].pi_next == ((5,), (5,), (5,), (5,), (5,), (5,), e, (4,), e, (3,))
    assert trace.steps[1].pi_next == ((9, 5), (9, 5), (9, 5), (5,), (5,), e, (7, 4), (4,), e, (3,))
    assert trace.steps[2].pi_next == ((10, 9, 5), (10, 9, 5), (5,), (5,), e, (7, 4), (4,), (9, 6, 4), e, (3,))
    assert trace.steps[3].pi_next == (
        (10, 9, 5), (5,), (5,), e, (7, 4), (4,), (9, 6, 4), e, (10, 9, 6, 3), (3,),
    )


def test_worked_example_table():
    d = DElement.of(PI, MU, 2, 10)
    table = render_table(d)
    assert table.column_sums() == (26, 6, 6, 1, 12, 5, 20, 1, 28, 3)
    markers = {
        cell.value: (r, c + 1)
        for r, row in enumerate(table.cells)
        for c, cell in enumerate(row)
        if cell.kind is CellKind.MARKER
    }
    assert markers == {2: (1, 4), 1: (1, 8), 6: (2, 2), 5: (2, 3), 4: (2, 6), 3: (2, 10),
                       7: (3, 5), 9: (4, 1), 8: (4, 7), 10: (5, 9)}
    assert tuple(psi_inverse(d).delta) == DELTA


def test_marker_columns_agree_with_trace():
    d, trace = psi_forward(DELTA, 2)
    table = render_table(d)
    assert tuple(table.marker_columns) == marker_columns_from_trace(trace)


def test_membership_rejections():
    assert not is_in_C((5, 0), 0, 2)  # 5 - 0 exceeds M + N - 1 = 1
    assert not is_in_D((4,), (0, 0), 0, 2)  # parts must lie in [1, 1]
    with pytest.raises(InvalidInput):
        CElement.of((5, 0), 0, 2)
    with pytest.raises(InvalidInput):
        DElement.of((1, 1, 1), (0, 0), 0, 2)


def test_exhaustive_bijection():
    cert = certify("psi", "M=0..3,N=1..4,n=0..24")
    assert cert.verdict == "pass", cert.counterexample


@given(c_elements())
@settings(max_examples=300)
def test_trace_properties(c):
    delta, M, N = c
    d, trace = psi_forward(delta, M)
    check_trace(trace)
    total = sum(delta)
    for step in trace.steps:
        assert sum(step.delta_next) + sum(map(sum, step.pi_next)) == total
        assert all(all(p[i] > p[i + 1] for i in range(len(p) - 1)) for p in step.pi_next)
    assert list(trace.ks) == sorted(set(trace.ks), reverse=True)
    assert sum(d.pi) + sum(d.mu) == total


@given(c_elements())
@settings(max_examples=300)
def test_forward_lands_in_D_and_inverse_in_C(c):
    delta, M, N = c
    d, _ = psi_forward(delta, M)
    assert contains(FamilySpec("D", sum(delta), M=M, N=N), (tuple(d.pi), tuple(d.mu)))
    back = psi_inverse(d).delta
    assert contains(FamilySpec("C", sum(delta), M=M, N=N), tuple(back))
    assert tuple(back) == delta


def test_inverse_lands_in_C_exhaustively():
    for M in range(3):
        for N in range(1, 5):
            for n in range(14):
                for pi, mu in enumerate_family(FamilySpec("D", n, M=M, N=N)):
                    delta = psi_inverse(DElement.of(pi, mu, M, N)).delta
                    d = (*delta, 0)
                    assert all(0 <= d[i - 1] - d[i] <= M + N - i for i in range(1, N + 1))
