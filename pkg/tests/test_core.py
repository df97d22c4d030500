import pytest
from hypothesis import given, strategies as st

from dioph import (
    CoprimeTuple,
    EmptyOrSingleton,
    NonPositiveCoefficient,
    NotSetwiseCoprime,
    cbar,
    check_proposition1,
    instance_params,
    new_coprime_tuple,
)


def test_example_tuple_fields():
    t = new_coprime_tuple([2, 4, 5, 5, 6])
    assert (t.n, t.M, t.sum_a, t.prod_a) == (5, 60, 22, 1200)
    assert t.coeffs == (2, 4, 5, 5, 6)
    assert t.box_bounds == (29, 14, 11, 11, 9)


def test_all_ones():
    t = new_coprime_tuple([1, 1])
    assert t.M == 1
    assert t.box_bounds == (0, 0)


@pytest.mark.parametrize(
    "coeffs, exc",
    [
        ([4, 6], NotSetwiseCoprime),
        ([3, 6, 6], NotSetwiseCoprime),
        ([], EmptyOrSingleton),
        ([1], EmptyOrSingleton),
        ([0, 1], NonPositiveCoefficient),
        ([-2, 3], NonPositiveCoefficient),
    ],
)
def test_rejects(coeffs, exc):
    with pytest.raises(exc):
        new_coprime_tuple(coeffs)


def test_order_and_duplicates_kept():
    assert new_coprime_tuple([6, 2, 3, 3]).coeffs == (6, 2, 3, 3)


def test_tuple_is_immutable():
    t = new_coprime_tuple([2, 3])
    with pytest.raises(AttributeError):
        t.M = 7


@pytest.mark.parametrize(
    "coeffs, b, expected",
    [
        ([3, 4, 12], 31, (7, 2, 0, 5)),
        ([3, 4, 12], 24, (0, 2, 1, 5)),
        ([2, 3], 0, (0, 0, 1, 1)),
    ],
)
def test_instance_params(coeffs, b, expected):
    p = instance_params(new_coprime_tuple(coeffs), b)
    assert (p.r, p.b_prime, p.s, p.r0) == expected
    assert p.b == b


def test_instance_params_huge_b_is_exact():
    t = new_coprime_tuple([3, 4, 12])
    b = 10**40 + 7
    p = instance_params(t, b)
    assert p.b_prime * 12 + p.r == b
    assert p.r == (10**40 + 7) % 12


def test_negative_b_rejected():
    with pytest.raises(ValueError):
        instance_params(new_coprime_tuple([2, 3]), -1)


@pytest.mark.parametrize("m, k, expected", [(4, 2, 6), (1, 2, 0), (5, 0, 1), (0, 0, 1), (3, -1, 0)])
def test_cbar(m, k, expected):
    assert cbar(m, k) == expected


def test_cbar_pascal_grid():
    for m in range(1, 30):
        for k in range(1, 30):
            assert cbar(m, k) == cbar(m - 1, k - 1) + cbar(m - 1, k)


def test_proposition1_examples():
    assert check_proposition1(new_coprime_tuple([2, 3]))
    t = new_coprime_tuple([1, 5, 5])
    assert check_proposition1(t)
    assert t.sum_a == (t.n - 1) * t.M + 1 == 11


coeff_lists = st.lists(st.integers(1, 40), min_size=2, max_size=6)


@given(coeff_lists)
def test_accepted_tuples_satisfy_invariants(coeffs):
    try:
        t = CoprimeTuple(tuple(coeffs))
    except NotSetwiseCoprime:
        return
    assert all(t.M % a == 0 for a in t.coeffs)
    assert all(u >= 0 for u in t.box_bounds)
    assert check_proposition1(t)


@given(coeff_lists, st.integers(0, 10**6))
def test_s_range_and_condition8_split(coeffs, b):
    try:
        t = CoprimeTuple(tuple(coeffs))
    except NotSetwiseCoprime:
        return
    p = instance_params(t, b)
    assert b == p.b_prime * t.M + p.r and 0 <= p.r < t.M
    assert 0 <= p.s <= t.n - 1
    if t.condition8:
        assert p.s == (0 if p.r > p.r0 else 1)
    assert instance_params(t, b) == p
