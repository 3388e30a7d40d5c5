"""Identity-verification harness.

Each suite sweeps one family of exact identities at a configurable scale,
comparing closed-form predictions against independently computed tables,
and returns structured pass/fail reports.  A failing check never aborts a
sweep; callers decide what to do with failures.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd
from typing import Iterator, Sequence, Union

from .heisenberg import (
    CoveringPoint,
    delta_fiber_sizes,
    delta_fiber_sizes_via_partitions,
    reconstruct,
    relative_positions,
    shift_action,
)
from .partitions import count_by_residue, count_exact_parts_by_residue
from .qbinomial import (
    coprime_class_sum,
    is_prime,
    prime_adjacent_class_sum,
    prime_multiple_class_sum,
    residue_sums,
)

SUITES = ("main1", "therm", "thmp", "counterexamples", "fibrations", "all")

DEFAULT_KL_BOUND = 24
DEFAULT_PRIMES = (3, 5, 7, 11)
DEFAULT_MULTIPLIER_BOUND = 3
DEFAULT_RING_BOUND = 14

# Reference class-sum tables for two non-coprime boxes where the sums differ.
REFERENCE_6X5_MOD6 = (80, 75, 78, 76, 78, 75)
REFERENCE_10X9_MOD10 = (9252, 9225, 9250, 9225, 9250, 9226, 9250, 9225, 9250, 9225)

Values = Union[int, list[int]]


@dataclass
class CheckReport:
    """Outcome of one identity check; passes iff expected equals actual."""

    check_id: str
    parameters: dict[str, int]
    expected: Values
    actual: Values
    status: str
    elapsed: float


def _finish(
    check_id: str, parameters: dict[str, int], expected: Values, actual: Values, started: float
) -> CheckReport:
    status = "pass" if expected == actual else "fail"
    return CheckReport(check_id, parameters, expected, actual, status, time.perf_counter() - started)


def _ordered(reports: list[CheckReport]) -> list[CheckReport]:
    return sorted(reports, key=lambda rep: (rep.check_id, sorted(rep.parameters.items())))


def _validate_primes(primes: Sequence[int]) -> None:
    if not primes:
        raise ValueError("need at least one prime")
    bad = [p for p in primes if p == 2 or not is_prime(p)]
    if bad:
        raise ValueError(f"not odd primes: {bad}")


def check_main1(k_max: int = DEFAULT_KL_BOUND, l_max: int = DEFAULT_KL_BOUND) -> list[CheckReport]:
    """Equal class sums for coprime boxes.

    For every coprime pair (k, l) within the bounds and every divisor r of l,
    the r class sums of the k x (l-1) box must all equal C(k+l-1, l-1) / r.
    Non-coprime pairs are skipped; they are covered by `counterexamples`.
    """
    if k_max < 2 or l_max < 2:
        raise ValueError("bounds must be at least 2")
    reports = []
    for k in range(1, k_max + 1):
        for l in range(1, l_max + 1):
            if gcd(k, l) != 1:
                continue
            for r in range(1, l + 1):
                if l % r:
                    continue
                started = time.perf_counter()
                expected = [coprime_class_sum(k, l, r)] * r
                actual = residue_sums(k, l - 1, r)
                reports.append(_finish("main1", {"k": k, "l": l, "r": r}, expected, actual, started))
    return _ordered(reports)


def check_therm(
    primes: Sequence[int] = DEFAULT_PRIMES, multiplier_max: int = DEFAULT_MULTIPLIER_BOUND
) -> list[CheckReport]:
    """Class sums of prime-width boxes against their closed forms.

    For each odd prime p: the (M*p) x N box mod p (1 <= N <= p-1) must give
    the common value everywhere except class 0, which exceeds it by one; the
    (p-1) x N box mod p must give p equal sums.
    """
    _validate_primes(primes)
    if multiplier_max < 1:
        raise ValueError("multiplier_max must be positive")
    reports = []
    for p in primes:
        for multiplier in range(1, multiplier_max + 1):
            for height in range(1, p):
                started = time.perf_counter()
                expected = [prime_multiple_class_sum(p, multiplier, height, j) for j in range(p)]
                actual = residue_sums(multiplier * p, height, p)
                reports.append(
                    _finish(
                        "therm-multiple",
                        {"p": p, "M": multiplier, "N": height},
                        expected,
                        actual,
                        started,
                    )
                )
        for height in range(1, p):
            started = time.perf_counter()
            expected = [prime_adjacent_class_sum(p, height)] * p
            actual = residue_sums(p - 1, height, p)
            reports.append(_finish("therm-adjacent", {"p": p, "N": height}, expected, actual, started))
    return _ordered(reports)


def check_thmp(
    primes: Sequence[int] = DEFAULT_PRIMES, multiplier_max: int = DEFAULT_MULTIPLIER_BOUND
) -> list[CheckReport]:
    """Exact-part-count class tables for prime moduli.

    Single parts bounded by p-1 give the table [0, 1, ..., 1]; for
    2 <= k <= p-1 parts bounded by p-1, and for 1 <= k <= p-1 parts bounded
    by M*p, all p classes are equal, so each holds a p-th of the total
    C(bound - 1 + k, k).
    """
    _validate_primes(primes)
    if multiplier_max < 1:
        raise ValueError("multiplier_max must be positive")
    reports = []
    for p in primes:
        started = time.perf_counter()
        expected: Values = [0] + [1] * (p - 1)
        actual = count_exact_parts_by_residue(p - 1, 1, p)
        reports.append(_finish("thmp-one-part", {"p": p}, expected, actual, started))
        for k in range(2, p):
            started = time.perf_counter()
            expected = [comb(p - 2 + k, k) // p] * p
            actual = count_exact_parts_by_residue(p - 1, k, p)
            reports.append(_finish("thmp-equal-classes-pm1", {"p": p, "k": k}, expected, actual, started))
        for multiplier in range(1, multiplier_max + 1):
            for k in range(1, p):
                started = time.perf_counter()
                expected = [comb(multiplier * p - 1 + k, k) // p] * p
                actual = count_exact_parts_by_residue(multiplier * p, k, p)
                reports.append(
                    _finish(
                        "thmp-equal-classes-mp",
                        {"p": p, "M": multiplier, "k": k},
                        expected,
                        actual,
                        started,
                    )
                )
    return _ordered(reports)


def check_counterexamples() -> list[CheckReport]:
    """Non-coprime boxes where the class sums genuinely differ.

    Reproduces the reference tables for the 6 x 5 box mod 6 and the 10 x 9
    box mod 10 (non-constancy is the pass condition), and cross-checks the
    companion 20 x 9 box mod 10 through two independent computation routes.
    """
    reports = []
    for (m, n, r), reference in (
        ((6, 5, 6), REFERENCE_6X5_MOD6),
        ((10, 9, 10), REFERENCE_10X9_MOD10),
    ):
        label = f"counterexample-{m}x{n}"
        params = {"m": m, "n": n, "r": r}
        started = time.perf_counter()
        actual = residue_sums(m, n, r)
        reports.append(_finish(f"{label}-table", params, list(reference), actual, started))
        started = time.perf_counter()
        reports.append(_finish(f"{label}-total", params, comb(m + n, n), sum(actual), started))
        started = time.perf_counter()
        reports.append(
            _finish(f"{label}-nonconstant", params, 1, int(len(set(actual)) > 1), started)
        )
    started = time.perf_counter()
    reports.append(
        _finish(
            "counterexample-20x9-crosscheck",
            {"m": 20, "n": 9, "r": 10},
            count_by_residue(20, 9, 10),
            residue_sums(20, 9, 10),
            started,
        )
    )
    return _ordered(reports)


def _covering_points(ring_size: int, marked: int) -> Iterator[CoveringPoint]:
    """Covering points with the first mark in [1, ring_size]."""
    for first in range(1, ring_size + 1):
        for cuts in combinations(range(1, ring_size), marked - 1):
            bounds = (0,) + cuts + (ring_size,)
            gaps = [b - a for a, b in zip(bounds, bounds[1:])]
            positions = [first]
            for gap in gaps[:-1]:
                positions.append(positions[-1] + gap)
            yield CoveringPoint(tuple(positions), ring_size)


def check_fibrations(ring_max: int = DEFAULT_RING_BOUND) -> list[CheckReport]:
    """Gap-vector fiber tables and covering-space round trips.

    For every ring size N <= ring_max and 1 <= r <= N: the enumeration and
    partition-bijection fiber tables must agree; coprime (N, r) must give a
    constant table; N a multiple of an odd prime r must put a single +1
    excess at class 0; and reconstruction from (position sum, gap vector)
    must invert on every covering point with first mark in [1, N], where the
    shift also raises the position sum by exactly N.
    """
    if ring_max < 3:
        raise ValueError("ring_max must be at least 3")
    reports = []
    for n in range(1, ring_max + 1):
        for r in range(1, n + 1):
            params = {"N": n, "r": r}
            started = time.perf_counter()
            table = delta_fiber_sizes(n, r)
            chained = delta_fiber_sizes_via_partitions(n, r)
            reports.append(_finish("fibers-agree", params, table, chained, started))
            if gcd(n, r) == 1:
                started = time.perf_counter()
                expected = [comb(n - 1, r - 1) // r] * r
                reports.append(_finish("fibers-constant-coprime", params, expected, table, started))
            if r > 2 and is_prime(r) and n % r == 0:
                started = time.perf_counter()
                common = (comb(n - 1, r - 1) - 1) // r
                expected = [common + 1] + [common] * (r - 1)
                reports.append(_finish("fibers-prime-gap", params, expected, table, started))
            started = time.perf_counter()
            points = list(_covering_points(n, r))
            good = sum(
                1
                for point in points
                if reconstruct(point.center_sum, relative_positions(point)) == point
            )
            reports.append(_finish("covering-roundtrip", params, len(points), good, started))
            started = time.perf_counter()
            good = sum(
                1 for point in points if shift_action(point, 1).center_sum == point.center_sum + n
            )
            reports.append(_finish("covering-shift", params, len(points), good, started))
    return _ordered(reports)


def run_suite(
    suite: str,
    *,
    k_max: int = DEFAULT_KL_BOUND,
    l_max: int = DEFAULT_KL_BOUND,
    primes: Sequence[int] = DEFAULT_PRIMES,
    multiplier_max: int = DEFAULT_MULTIPLIER_BOUND,
    ring_max: int = DEFAULT_RING_BOUND,
) -> list[CheckReport]:
    """Run one named suite ("all" for every suite) and return ordered reports."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    reports: list[CheckReport] = []
    if suite in ("main1", "all"):
        reports += check_main1(k_max, l_max)
    if suite in ("therm", "all"):
        reports += check_therm(primes, multiplier_max)
    if suite in ("thmp", "all"):
        reports += check_thmp(primes, multiplier_max)
    if suite in ("counterexamples", "all"):
        reports += check_counterexamples()
    if suite in ("fibrations", "all"):
        reports += check_fibrations(ring_max)
    return _ordered(reports)
