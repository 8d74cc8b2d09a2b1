import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partbij.chi import (
    RElement,
    SElement,
    chi_forward,
    chi_forward_steps,
    chi_inverse,
    decompose,
    delta_of,
    gamma_of,
    is_in_S,
    reassemble,
)
from partbij.errors import InvalidInput
from partbij.oracle import FamilySpec, certify, family_count
from partbij.partition import Partition
from strategies import partitions

LAM = (11, 10, 10, 9, 8, 7, 6, 5, 5, 4, 3, 1, 1)


def test_worked_example():
    steps = chi_forward_steps(LAM, 3, 1)
    assert delta_of(3, 1) == (4,)
    assert RElement(Partition(LAM), 3, 1).weight == 84
    dec = steps.decomposition
    assert dec.n == (5, 3, 2)
    assert dec.b[:2] == ((2, 1), (1,)) and dec.b[2] == (3, 1, 1)
    assert dec.T == (4, 3, 3, 2, 1)
    assert dec.r == ((5, 4), (3,), (1,))
    assert steps.nu == ((10, 2), (4,))
    assert steps.b_bar[0] == (4, 2)
    assert steps.r_bar == ((6,), (4,))
    e = steps.result
    assert e.s == (6, 4, 3)
    assert e.alpha == (11, 9, 9, 8, 7, 7, 6, 6, 5, 5, 3, 3, 3)
    assert e.beta == () and e.gamma == (1,) and e.xi == (1,)
    assert chi_inverse(e).lam == LAM


def test_delta_and_gamma():
    assert delta_of(3, 0) == () and gamma_of(0) == ()
    assert delta_of(2, 2) == (8, 3) and gamma_of(2) == (2, 1)
    assert delta_of(2, -2) == (7, 2) and gamma_of(-2) == (1,)


@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("m", range(-6, 7))
def test_weight_ledger(k, m):
    assert sum(gamma_of(m)) == sum(delta_of(k, m)) - k * m * m


def test_strict_set_is_smaller_than_the_literal_reading():
    # alpha = (1, 1) has Durfee sides (1, 1) but a third "square" of side 0 and
    # parts below it; the strict reading rejects it, matching #R.
    bad = SElement((1,), Partition((1, 1)), Partition(()), Partition(()), 1, 0)
    assert not is_in_S(bad)
    assert family_count(FamilySpec("S", 2, k=1, m=0)) == family_count(FamilySpec("R", 2, k=1, m=0)) == 2


def test_inverse_rejects_non_members():
    with pytest.raises(InvalidInput):
        chi_inverse(SElement((2,), Partition((2,)), Partition(()), Partition(()), 1, 0))


def test_exhaustive_bijection():
    cert = certify("chi", "k=1..3,m=-2..2,n=0..24")
    assert cert.verdict == "pass", cert.counterexample


@given(partitions(40), st.integers(1, 4), st.integers(-3, 3))
@settings(max_examples=300)
def test_decomposition_reassembles(lam, k, m):
    assert reassemble(decompose(lam, k, m), k, m) == lam


@given(partitions(40), st.integers(1, 4), st.integers(-3, 3))
@settings(max_examples=300)
def test_forward_properties(lam, k, m):
    e = chi_forward(lam, k, m)
    assert is_in_S(e)
    assert e.weight == sum(lam) + sum(delta_of(k, m))
    assert chi_inverse(e).lam == lam
