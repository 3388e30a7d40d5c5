"""Tests for Gaussian coefficient vectors, class sums, and their closed forms."""

from math import comb, gcd

import pytest
from hypothesis import given, strategies as st

from qfiber.partitions import count_by_residue, count_restricted, enumerate_restricted
from qfiber.qbinomial import (
    CoefficientVector,
    coprime_class_sum,
    gaussian_coefficients,
    is_prime,
    prime_adjacent_class_sum,
    prime_multiple_class_sum,
    residue_sums,
)


def brute_coeffs(m, n):
    """Coefficient vector from explicit enumeration of the box."""
    counts = [0] * (m * n + 1)
    for p in enumerate_restricted(m, n):
        counts[p.weight] += 1
    return counts


def test_is_prime_small_values():
    primes = [2, 3, 5, 7, 11, 13, 97, 104729]
    composites = [0, 1, 4, 6, 9, 15, 91, 104730]
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(c) for c in composites)


def test_coefficient_vector_validates_length():
    with pytest.raises(ValueError):
        CoefficientVector(2, 2, (1, 1, 2, 1))
    with pytest.raises(ValueError):
        CoefficientVector(-1, 2, (1,))


def test_trivial_boxes():
    assert gaussian_coefficients(0, 0).coeffs == (1,)
    assert gaussian_coefficients(0, 7).coeffs == (1,)
    assert gaussian_coefficients(1, 1).coeffs == (1, 1)
    assert gaussian_coefficients(2, 2).coeffs == (1, 1, 2, 1, 1)


def test_coefficients_match_brute_force():
    for m in range(6):
        for n in range(6):
            assert list(gaussian_coefficients(m, n).coeffs) == brute_coeffs(m, n), (m, n)


def test_coefficients_match_counting_route():
    # same numbers through the counting recurrence instead of the q-Pascal sweep
    for m in range(9):
        for n in range(9):
            vec = gaussian_coefficients(m, n)
            assert all(
                vec[j] == count_restricted(m, n, j) for j in range(m * n + 1)
            ), (m, n)


def test_palindromic_coefficients_up_to_thirty():
    for m in range(31):
        for n in range(31):
            vec = gaussian_coefficients(m, n).coeffs
            assert vec == vec[::-1], (m, n)


@given(st.integers(min_value=0, max_value=14), st.integers(min_value=0, max_value=14))
def test_coefficients_sum_to_binomial(m, n):
    assert gaussian_coefficients(m, n).total == comb(m + n, n)


def test_getitem_and_len():
    vec = gaussian_coefficients(3, 2)
    assert len(vec) == 7
    assert vec[0] == 1 and vec[3] == 2


def test_residue_sum_examples():
    assert residue_sums(3, 3, 4) == [5, 5, 5, 5]
    assert residue_sums(5, 2, 3) == [7, 7, 7]
    assert residue_sums(10, 9, 10) == [
        9252, 9225, 9250, 9225, 9250, 9226, 9250, 9225, 9250, 9225,
    ]


def test_residue_sums_single_class_collects_everything():
    for m in range(6):
        for n in range(6):
            assert residue_sums(m, n, 1) == [comb(m + n, n)]


def test_residue_sums_match_partition_route():
    for m in range(8):
        for n in range(8):
            for r in (1, 2, 3, 4, 7):
                assert residue_sums(m, n, r) == count_by_residue(m, n, r)


def test_residue_sums_rejects_bad_modulus():
    with pytest.raises(ValueError):
        residue_sums(3, 3, 0)


def test_complement_class_symmetry():
    # the class table of a k x (l-1) box mod l is symmetric under j -> l-j
    for k in range(1, 13):
        for l in range(2, 11):
            table = residue_sums(k, l - 1, l)
            assert all(table[j] == table[(l - j) % l] for j in range(l)), (k, l)


def test_coprime_class_sum_examples():
    assert coprime_class_sum(3, 4, 4) == 5
    assert coprime_class_sum(5, 3, 3) == 7
    for k, l in ((1, 1), (4, 7), (9, 2)):
        assert coprime_class_sum(k, l, 1) == comb(k + l - 1, l - 1)


def test_coprime_class_sum_rejects_bad_input():
    with pytest.raises(ValueError):
        coprime_class_sum(6, 4, 2)  # not coprime
    with pytest.raises(ValueError):
        coprime_class_sum(3, 4, 3)  # r does not divide l
    with pytest.raises(ValueError):
        coprime_class_sum(0, 4, 2)
    with pytest.raises(ValueError):
        coprime_class_sum(3, 4, 0)


def test_coprime_equal_classes_small_sweep():
    for k in range(1, 11):
        for l in range(1, 9):
            if gcd(k, l) != 1:
                continue
            for r in range(1, l + 1):
                if l % r:
                    continue
                assert residue_sums(k, l - 1, r) == [coprime_class_sum(k, l, r)] * r


def test_prime_multiple_class_sum_values():
    # 3 x 2 box mod 3 holds [4, 3, 3]
    assert prime_multiple_class_sum(3, 1, 2, 0) == 4
    assert prime_multiple_class_sum(3, 1, 2, 1) == 3
    assert prime_multiple_class_sum(3, 1, 2, 2) == 3
    assert residue_sums(3, 2, 3) == [4, 3, 3]


def test_prime_multiple_gap_is_exactly_one():
    for p in (3, 5, 7):
        for mult in (1, 2):
            for height in range(1, p):
                zero = prime_multiple_class_sum(p, mult, height, 0)
                others = {prime_multiple_class_sum(p, mult, height, j) for j in range(1, p)}
                assert len(others) == 1
                assert zero == others.pop() + 1


def test_prime_multiple_matches_enumeration():
    for p in (3, 5, 7):
        for mult in (1, 2):
            for height in range(1, p):
                expected = [prime_multiple_class_sum(p, mult, height, j) for j in range(p)]
                assert residue_sums(mult * p, height, p) == expected


def test_prime_multiple_rejects_bad_input():
    with pytest.raises(ValueError):
        prime_multiple_class_sum(9, 1, 2, 0)  # not prime
    with pytest.raises(ValueError):
        prime_multiple_class_sum(2, 1, 1, 0)  # even prime
    with pytest.raises(ValueError):
        prime_multiple_class_sum(5, 0, 2, 0)
    with pytest.raises(ValueError):
        prime_multiple_class_sum(5, 1, 5, 0)  # height out of range
    with pytest.raises(ValueError):
        prime_multiple_class_sum(5, 1, 2, 5)  # residue out of range


def test_prime_adjacent_class_sum_values():
    assert prime_adjacent_class_sum(3, 2) == 2
    assert prime_adjacent_class_sum(5, 4) == 14
    assert prime_adjacent_class_sum(3, 1) == 1


def test_prime_adjacent_matches_enumeration():
    for p in (3, 5, 7):
        for height in range(1, p):
            expected = [prime_adjacent_class_sum(p, height)] * p
            assert residue_sums(p - 1, height, p) == expected


def test_prime_adjacent_rejects_bad_input():
    with pytest.raises(ValueError):
        prime_adjacent_class_sum(4, 1)
    with pytest.raises(ValueError):
        prime_adjacent_class_sum(5, 0)
    with pytest.raises(ValueError):
        prime_adjacent_class_sum(5, 5)


def test_inexact_division_fails_loudly():
    # the guard behind every closed-form prediction
    from qfiber.qbinomial import _exact_div

    assert _exact_div(20, 4) == 5
    with pytest.raises(ArithmeticError):
        _exact_div(20, 3)
