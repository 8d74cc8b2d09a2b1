import pytest
from hypothesis import given
from hypothesis import strategies as st

from partbij.errors import InvalidInput
from partbij.oracle import FamilySpec, brute_k_rank, family_count, partitions
from partbij.qseries import (
    TruncatedSeries,
    c_family_series,
    gaussian,
    inv_pochhammer,
    nk_count,
    nk_series,
    partition_counts,
)


def series(values):
    return TruncatedSeries(tuple(values))


def test_gaussian_two_by_two():
    assert gaussian(2, 2).coefficients == (1, 1, 2, 1, 1)


def test_inv_pochhammer_examples():
    assert tuple(inv_pochhammer(1, 1, 4)) == (1, 1, 1, 1, 1)
    assert tuple(inv_pochhammer(1, None, 5)) == (1, 1, 2, 3, 5, 7)
    assert tuple(inv_pochhammer(3, 2, 4)) == (1, 0, 0, 1, 1)


def test_dyson_rank_zero_at_four():
    # ranks of the partitions of 4 are 3, 1, 0, -1, -3
    assert nk_count(2, 0, 4) == 1


def test_large_m_gives_zero():
    assert nk_count(3, 5, 3) == 0


def test_nk_at_weight_zero():
    # the empty partition has no Durfee square, so it is never counted for k >= 2
    for k in (2, 3, 4):
        assert nk_count(k, 0, 0) == 0
        assert family_count(FamilySpec("Q", 0, k=k, m=0)) == 0


def test_crank_series_keeps_raw_coefficients():
    assert [nk_count(1, 0, n) for n in range(4)] == [1, -1, 0, 1]


def test_exceptional_drop_at_eight():
    s = nk_series(3, 0, 9)
    assert s[8] == s[9] + 1
    assert s[8] == family_count(FamilySpec("Q", 8, k=3, m=0))


def test_series_index_beyond_cap():
    with pytest.raises(IndexError):
        inv_pochhammer(1, None, 3)[4]


def test_empty_series_rejected():
    with pytest.raises(InvalidInput):
        TruncatedSeries(())


def test_c_family_series_matches_enumeration():
    for M in range(3):
        for N in range(1, 4):
            s = c_family_series(M, N, 15)
            assert list(s) == [family_count(FamilySpec("C", n, M=M, N=N)) for n in range(16)]


coeffs = st.lists(st.integers(-50, 50), min_size=6, max_size=6)


@given(coeffs, coeffs)
def test_multiplication_commutes(a, b):
    assert series(a) * series(b) == series(b) * series(a)


@given(coeffs, coeffs, coeffs)
def test_multiplication_associates(a, b, c):
    assert (series(a) * series(b)) * series(c) == series(a) * (series(b) * series(c))


@given(coeffs, coeffs)
def test_product_is_truncated_convolution(a, b):
    prod = series(a) * series(b)
    assert list(prod) == [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(6)]


@given(coeffs, coeffs)
def test_addition_and_negation(a, b):
    assert list(series(a) + series(b)) == [x + y for x, y in zip(a, b)]
    assert series(a) - series(a) == series([0] * 6)


@given(st.integers(0, 5), st.integers(0, 5))
def test_gaussian_counts_box_partitions(M, N):
    g = gaussian(M, N)
    for n in range(M * N + 1):
        assert g[n] == sum(1 for _ in partitions(n, max_part=N, max_len=M))


@given(st.integers(0, 5), st.integers(0, 5))
def test_product_identity_with_gaussian(M, N):
    cap = 30
    assert inv_pochhammer(1, N, cap) == inv_pochhammer(M + 1, N, cap) * gaussian(M, N).as_series(cap)


def test_partition_counts():
    assert partition_counts(10)[:11] == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


@given(st.integers(1, 4), st.integers(0, 6), st.integers(0, 25))
def test_nk_symmetric_in_m(k, m, n):
    assert nk_count(k, m, n) == nk_count(k, -m, n)


@given(st.integers(2, 4), st.integers(-4, 4), st.integers(0, 14))
def test_nk_counts_partitions_by_k_rank(k, m, n):
    brute = sum(1 for p in partitions(n) if brute_k_rank(p, k) == m)
    assert nk_count(k, m, n) == brute
