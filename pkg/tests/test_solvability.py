import pytest

from dioph import (
    CoprimeTuple,
    count_bruteforce,
    decide,
    new_coprime_tuple,
    sufficient_thm2,
    sufficient_thm3,
    sufficient_thm4,
    sufficient_thm5,
    sufficient_thm6,
)
from dioph.solvability import EXACT_POSITIVE, EXACT_ZERO, certificates


@pytest.mark.parametrize(
    "check, coeffs, b, expected",
    [
        (sufficient_thm2, [2, 3], 6, True),
        (sufficient_thm2, [2, 3], 1, False),
        (sufficient_thm2, [3, 4, 12], 31, True),
        (sufficient_thm3, [2, 3], 7, True),
        (sufficient_thm3, [2, 3], 6, False),
        (sufficient_thm3, [3, 4, 12], 17, True),
        (sufficient_thm4, [2, 3], 6, True),
        (sufficient_thm4, [2, 3], 5, False),
        (sufficient_thm4, [2, 4, 5, 5, 6], 240, True),
        (sufficient_thm6, [3, 4, 12], 6, True),
        (sufficient_thm6, [3, 4, 12], 5, False),
        (sufficient_thm6, [2, 3], 2, True),
        (sufficient_thm6, [2, 3, 5], 1000, False),
    ],
)
def test_checkers(check, coeffs, b, expected):
    assert check(new_coprime_tuple(coeffs), b) is expected


def test_thm3_is_only_sufficient():
    t = new_coprime_tuple([2, 3])
    assert not sufficient_thm3(t, 6)
    assert count_bruteforce(t, 6) == 2


@pytest.mark.parametrize(
    "coeffs, b, expected",
    [
        ([3, 4, 100], 6, (1, 2)),
        ([6, 10, 15], 10**6, None),
        ([2, 3], 1, None),
        ([2, 3], 2, (1, 2)),
        # pair (2,5) gives 3, pair (5,6) gives 19: smallest wins
        ([2, 4, 5, 5, 6], 100, (1, 3)),
        ([5, 6, 2], 100, (1, 3)),
    ],
)
def test_thm5_pair(coeffs, b, expected):
    assert sufficient_thm5(new_coprime_tuple(coeffs), b) == expected


def test_thm5_tie_goes_to_first_pair():
    # (2,5) at positions (1,3) and (1,4) tie; lexicographic first
    assert sufficient_thm5(new_coprime_tuple([2, 4, 5, 5]), 4) == (1, 3)


def test_decide_example9():
    t = new_coprime_tuple([2, 4, 5, 5, 6])
    v3 = decide(t, 3)
    assert not v3.solvable and v3.certificates == (EXACT_ZERO,) and v3.count == 0
    v2 = decide(t, 2)
    assert v2.solvable and v2.count == 1


def test_decide_zero():
    v = decide(new_coprime_tuple([2, 3]), 0)
    assert v.solvable and v.count == 1


def test_decide_reports_all_certificates():
    v = decide(new_coprime_tuple([3, 4, 12]), 100)
    assert v.certificates == ("THM2", "THM3", "THM4", "THM5(1,2)", "THM6", EXACT_POSITIVE)


def test_sufficient_soundness_and_chain(small_tuples):
    for coeffs in small_tuples:
        t = CoprimeTuple(coeffs)
        for b in range(3 * t.M + 1):
            fired = certificates(t, b)
            v = decide(t, b)
            assert v.solvable == (count_bruteforce(t, b) > 0)
            if fired:
                assert v.solvable, (coeffs, b, fired)
            if sufficient_thm3(t, b) or sufficient_thm4(t, b):
                assert sufficient_thm2(t, b)
