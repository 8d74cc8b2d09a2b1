import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partbij.errors import InvalidInput
from partbij.oracle import FamilySpec, certify, family_count
from partbij.phi import AElement, phi_forward, phi_inverse
from partbij.qseries import inv_pochhammer
from strategies import padded, partitions

ALPHA = (2, 1, 1, 1, 1, 1, 1, 1)
BETA = tuple(sorted([3] * 2 + [4] * 3 + [5] * 3 + [6] * 2 + [7] + [8] * 10 + [9] * 7 + [10] * 8 + [11] * 2 + [12] * 2,
                    reverse=True))
GAMMA = (108, 82, 65, 37, 22, 6, 5, 3, 1, 1)


def test_worked_example_forward():
    assert sum(ALPHA) + sum(BETA) == 330
    assert tuple(phi_forward(ALPHA, BETA, 2, 10).gamma) == GAMMA


def test_worked_example_inverse():
    a = phi_inverse(GAMMA, 2)
    assert tuple(a.alpha) == ALPHA
    assert tuple(a.beta) == BETA


def test_zero_parts():
    assert tuple(phi_forward((), (), 3, 0).gamma) == ()
    assert tuple(phi_forward((), (), 1, 3).gamma) == (0, 0, 0)


def test_rejects_out_of_range_beta():
    with pytest.raises(InvalidInput):
        AElement.of((1,), (2,), 2, 3)


def test_small_cell_counts():
    assert [family_count(FamilySpec("A", n, M=1, N=2)) for n in range(5)] == [1, 1, 2, 2, 3]


def test_exhaustive_bijection():
    cert = certify("phi", "M=0..2,N=0..4,n=0..20")
    assert cert.verdict == "pass", cert.counterexample


def test_counts_match_bounded_part_series():
    for M in range(3):
        for N in range(5):
            s = inv_pochhammer(1, N, 20)
            assert [family_count(FamilySpec("A", n, M=M, N=N)) for n in range(21)] == list(s)


@st.composite
def a_elements(draw):
    M = draw(st.integers(0, 3))
    N = draw(st.integers(1, 5))
    alpha = draw(partitions(12, max_part=M, max_len=N))
    beta = tuple(sorted(draw(st.lists(st.integers(M + 1, M + N), max_size=6)), reverse=True))
    return alpha, beta, M, N


@given(a_elements())
@settings(max_examples=300)
def test_round_trip_and_weight(a):
    alpha, beta, M, N = a
    g = phi_forward(alpha, beta, M, N).gamma
    assert len(g) == N and sum(g) == sum(alpha) + sum(beta)
    back = phi_inverse(g, M)
    assert (tuple(back.alpha), tuple(back.beta)) == (alpha, beta)


@given(st.integers(0, 3), st.integers(1, 5), partitions(40))
@settings(max_examples=300)
def test_inverse_round_trip(M, N, p):
    if len(p) > N:
        return
    g = padded(p, N)
    a = phi_inverse(g, M)
    assert tuple(phi_forward(a).gamma) == g
