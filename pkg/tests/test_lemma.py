from fractions import Fraction

import pytest

from mbar0n.divisors import VitalPartition, enumerate_vital_partitions, intersect_vital
from mbar0n.log_canonical import (
    EmptyCaseError,
    a_alpha,
    case_closed_form,
    case_conditions,
    classify_case,
    h_sum,
    reference_case14,
    verify_lemma,
)

F = Fraction
P = VitalPartition


@pytest.mark.parametrize(
    "n, k, p, case",
    [(10, 2, P(2, 2, 3, 3), 3), (10, 5, P(1, 1, 1, 7), 9), (12, 5, P(3, 3, 3, 3), 10)],
)
def test_classification_examples(n, k, p, case):
    assert classify_case(n, k, p) == case


def test_classify_rejects_wrong_n():
    with pytest.raises(ValueError):
        classify_case(11, 3, P(2, 2, 3, 3))


def test_case_values():
    assert case_closed_form(10, 3, P(1, 1, 1, 7), 9) == 0
    k = 3
    assert case_closed_form(16, k, P(4, 4, 4, 4), 1) == F(2 * k, 1 + k)
    a = 2
    assert case_closed_form(16, k, P(a, 4, 5, 5), 2) == F(a * (2 + k - a), 1 + k)
    with pytest.raises(EmptyCaseError):
        case_closed_form(16, k, P(1, 1, 1, 13), 15)


@pytest.mark.parametrize("n", range(6, 31))
def test_cases_exclusive_exhaustive(n):
    for k in range(2, n // 2):
        for p in enumerate_vital_partitions(n):
            hits = case_conditions(k, p)
            assert sum(hits) == 1
            assert not hits[14]


@pytest.mark.parametrize("n", range(6, 31))
def test_h_sum_is_vital_intersection_of_breakpoint(n):
    # independent path: the h-sum is the intersection of A_{2/(k+1)} with the curve
    for k in range(2, n // 2):
        A = a_alpha(n, F(2, k + 1))
        for p in enumerate_vital_partitions(n):
            assert h_sum(n, k, p) == intersect_vital(A, p)


@pytest.mark.parametrize("n", [10, 17, 24, 30])
def test_verify_lemma(n):
    report = verify_lemma(n)
    assert report.ok, report.violations[:3]
    assert report.checked == (n // 2 - 2) * len(enumerate_vital_partitions(n))
    assert 15 not in report.case_counts


def test_every_case_but_15_is_reached():
    seen = set()
    for n in range(6, 31):
        seen |= set(verify_lemma(n).case_counts)
    assert seen == set(range(1, 15))


def test_reference_case14_differs_from_the_sum():
    # the reference closed form has (n-2) where the sum gives (n-2-k)
    found = False
    for n in range(6, 31):
        for k in range(2, n // 2):
            for p in enumerate_vital_partitions(n):
                if classify_case(n, k, p) != 14:
                    continue
                found = True
                value = h_sum(n, k, p)
                assert case_closed_form(n, k, p, 14) == value
                if p.d * 2 != n:
                    assert reference_case14(n, k, p) != value
    assert found
