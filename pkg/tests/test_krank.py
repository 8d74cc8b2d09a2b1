import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partbij.errors import ExceptionalElement, InvalidInput, NotInImage
from partbij.krank import (
    KTuple,
    QElement,
    classify_source,
    eta_forward,
    eta_inverse,
    is_exceptional,
    sigma_apply,
    source_labels,
    swap,
    target_labels,
    verify_monotonicity,
    zeta_apply,
)
from partbij.oracle import FamilySpec, enumerate_P, enumerate_family
from partbij.qseries import nk_count
from strategies import partitions

E = ()


def kt(alpha, beta, gammas, squares):
    return KTuple.of(alpha, beta, gammas, squares)


# (label, input, output); k is the number of squares plus one
CASES = [
    (1, kt((2, 1, 1), (1, 1), [(2,), E], (3, 2, 2)), kt((2, 1, 1), (1, 1), [(3,), E], (3, 2, 2))),
    (2, kt((1, 1, 1), (1, 1), [E, E], (1, 1, 1)), kt((1, 1), (1,), [E, E], (2, 1, 1))),
    (3, kt(E, E, [E, E], (2, 2, 2)), kt((1, 1), (1, 1), [E, E], (2, 2, 1))),
    (4, kt(E, E, [E], (3, 3)), kt((1, 1, 1), (1, 1, 1), [E], (3, 2))),
    (5, kt((2, 1, 1), (1,), [E], (3, 3)), kt((3, 1, 1), (1,), [E], (3, 3))),
    (6, kt((2,), (1,), [E, E], (2, 2, 2)), kt((1,), (1,), [E, E], (3, 2, 1))),
    (7, kt((2,), (2,), [E, E], (2, 2, 2)), kt(E, E, [E, E], (3, 2, 2))),
    (8, kt((2, 1), (1,), [E, E], (2, 2, 2)), kt((1, 1, 1), (1, 1), [E, E], (2, 2, 2))),
    (9, kt((3, 1), (1,), [E], (3, 3)), kt((1, 1, 1), (2, 1), [E], (3, 3))),
    (10, kt((3, 3), (1, 1), [E], (3, 3)), kt((3, 3), (2, 1), [E], (3, 3))),
    (11, kt((3, 3, 1), (3, 2), [E], (3, 3)), kt((3, 1), (2,), [E], (4, 3))),
    (12, kt((2, 2, 2, 1, 1), E, [E], (2, 2)), kt((2, 2, 1, 1, 1, 1), (1,), [E], (2, 2))),
    (13, kt((2, 2, 1, 1), E, [E, E], (2, 2, 2)), kt((1, 1, 1, 1), E, [E, (1,)], (3, 2, 1))),
    (14, kt((3, 3, 2, 2, 1), E, [E], (3, 3)), kt((2, 2, 2, 1, 1), E, [(1, 1)], (4, 2))),
    (15, kt((2, 2), E, [E], (2, 2)), kt((1, 1, 1), (2,), [E], (2, 2))),
]


def test_eta_worked_example():
    t = eta_forward((12, 9, 8, 6, 5, 4, 3, 1), 3)
    assert t == kt((2, 1, 1, 1), (1,), [(7, 4, 2)], (5, 2))
    assert (t.k, t.m, t.weight) == (3, 3, 48)
    assert eta_inverse(t).pi == (12, 9, 8, 6, 5, 4, 3, 1)


def test_eta_minimal_tuples():
    for k in (3, 4, 5):
        t = kt(E, E, [E] * (k - 2), (1,) * (k - 1))
        assert eta_inverse(t).pi == (1,) * (k - 1)
    t = eta_forward((3, 3, 3, 1), 3)
    assert t.alpha == () and t.beta == () and t.m == 0


def test_eta_rejects_too_few_squares():
    with pytest.raises(InvalidInput):
        QElement((2, 2), 3)
    with pytest.raises(InvalidInput):
        eta_forward((5,), 3)


@pytest.mark.parametrize("label,source,image", CASES, ids=[f"case-{c[0]}" for c in CASES])
def test_case_examples(label, source, image):
    assert source_labels(source) == [label]
    out, i = sigma_apply(source)
    assert (out, i) == (image, label)
    assert target_labels(image) == [label]
    assert zeta_apply(image, label) == source


def test_classification_examples():
    assert classify_source(kt((1, 1, 1), (1, 1), [E, E], (1, 1, 1))) == 2
    assert classify_source(kt(E, E, [E], (2, 2))) == 16
    assert classify_source(kt((2, 1), (1,), [E, E], (2, 2, 2))) == 8


def test_exceptional_tuple():
    t = kt(E, E, [E], (2, 2))
    with pytest.raises(ExceptionalElement, match="no injection exists"):
        sigma_apply(t)
    assert is_exceptional(3, 0, 8) and not is_exceptional(3, 0, 9)


def test_all_ones_tuple_is_exceptional():
    for k in (3, 4):
        for m in range(4):
            t = kt((1,) * m, E, [E] * (k - 2), (1,) * (k - 1))
            assert t.weight == m + k - 1 and classify_source(t) == 16


def test_case_twelve_misses_part_of_its_target():
    t = kt((3, 3, 2), (1,), [E], (3, 3))
    assert target_labels(t) == [12]
    with pytest.raises(NotInImage):
        zeta_apply(t, 12)


def test_zeta_rejects_outside_target():
    with pytest.raises(NotInImage):
        zeta_apply(kt(E, E, [E], (2, 2)), 5)
    with pytest.raises(InvalidInput):
        zeta_apply(kt(E, E, [E], (2, 2)), 16)


def test_ktuple_validation():
    with pytest.raises(InvalidInput):
        kt((3,), E, [E], (2, 2))  # alpha part above the last square
    with pytest.raises(InvalidInput):
        kt(E, E, [(1, 1)], (3, 2))  # gamma longer than 3 - 2
    with pytest.raises(InvalidInput):
        kt(E, E, [E], (1, 2))
    with pytest.raises(InvalidInput):
        kt(E, E, [], (2,))


def test_json_round_trip():
    t = CASES[0][1]
    assert KTuple.from_json(t.to_json()) == t


def test_negative_m_reflects():
    src = swap(CASES[7][1])
    out, i = sigma_apply(src)
    assert i == 8 and out == swap(CASES[7][2]) and out.m == src.m == -1
    assert zeta_apply(out, 8) == src


@pytest.mark.parametrize("k", [3, 4])
def test_partition_and_injection_properties(k):
    report = verify_monotonicity(k, 4, 18)
    assert report.ok, report.violations[:5]
    assert set(report.failures) == {(k, m, m + k - 1) for m in range(5)} | ({(3, 0, 8)} if k == 3 else set())


def test_exceptional_drop_is_exactly_one():
    assert nk_count(3, 0, 8) - nk_count(3, 0, 9) == 1
    assert [t for t in enumerate_P(3, 0, 8) if classify_source(t) == 16] == [kt(E, E, [E], (2, 2))]


def test_monotone_for_k4_m0():
    assert all(nk_count(4, 0, n + 1) >= nk_count(4, 0, n) for n in range(4, 21))


@pytest.mark.parametrize("k", [3, 4])
def test_eta_bijection_counts(k):
    for m in range(-4, 5):
        for n in range(15):
            qs = enumerate_family(FamilySpec("Q", n, k=k, m=m))
            ps = enumerate_P(k, m, n)
            assert len(qs) == len(ps) == nk_count(k, m, n)
            assert {eta_forward(p, k) for p in qs} == set(ps)


@given(partitions(40), st.integers(3, 5))
@settings(max_examples=300)
def test_eta_properties(p, k):
    try:
        q = QElement(p, k)
    except InvalidInput:
        return
    t = eta_forward(q)
    assert t.violation() is None
    assert t.weight == sum(p) and t.m == q.m
    assert eta_inverse(t).pi == p


@given(partitions(30), st.integers(3, 4))
@settings(max_examples=300)
def test_sigma_properties(p, k):
    try:
        t = eta_forward(p, k)
    except InvalidInput:
        return
    (label,) = source_labels(t)
    if label == 16:
        assert is_exceptional(k, t.m, t.weight)
        return
    out, i = sigma_apply(t)
    assert i == label and out.weight == t.weight + 1 and out.m == t.m
    assert target_labels(out) == [i]
    assert zeta_apply(out, i) == t
