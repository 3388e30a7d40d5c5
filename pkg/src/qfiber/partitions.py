"""Exact counting and enumeration of partitions restricted to a rectangle.

A partition fits an (a, b) rectangle when it has at most b parts, each of
size at most a.  All counts are exact Python integers, so rectangles well
past 64-bit coefficient sizes are fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing part sizes; trailing zeros are stripped on construction.

    The empty tuple is the zero partition.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not isinstance(p, int) or p < 0 for p in parts):
            raise ValueError(f"parts must be nonnegative integers: {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts!r}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def fits(self, max_part: int, max_count: int) -> bool:
        """True when there are at most max_count parts, each at most max_part."""
        return len(self.parts) <= max_count and (not self.parts or self.parts[0] <= max_part)


def _validate_box(max_part: int, max_count: int) -> None:
    if max_part < 0 or max_count < 0:
        raise ValueError("rectangle dimensions must be nonnegative")


@lru_cache(maxsize=None)
def _weight_counts(max_part: int, max_count: int) -> tuple[int, ...]:
    """Counts of partitions in a max_part x max_count box, indexed by weight.

    Iterative fill of the two-term recurrence: a partition with at most b
    parts each of size at most a either has fewer than b parts, or has
    exactly b nonzero parts and, after removing one unit from every part,
    lands in the (a-1, b) box with weight reduced by b.
    """
    row: list[tuple[int, ...]] = [(1,)] * (max_count + 1)
    for a in range(1, max_part + 1):
        new_row = [(1,)]
        for b in range(1, max_count + 1):
            counts = list(new_row[b - 1]) + [0] * (a * b + 1 - len(new_row[b - 1]))
            for w, c in enumerate(row[b]):
                counts[w + b] += c
            new_row.append(tuple(counts))
        row = new_row
    return row[max_count]


def count_restricted(max_part: int, max_count: int, weight: int) -> int:
    """Number of partitions of `weight` into at most max_count parts, each at
    most max_part.

    Returns 0 for weights outside [0, max_part * max_count] and 1 at weight 0
    (the zero partition).
    """
    _validate_box(max_part, max_count)
    if weight < 0 or weight > max_part * max_count:
        return 0
    return _weight_counts(max_part, max_count)[weight]


def enumerate_restricted(max_part: int, max_count: int) -> Iterator[Partition]:
    """Yield each partition fitting the box exactly once, ordered
    lexicographically by the zero-padded part vector.

    Produces C(max_part + max_count, max_count) partitions in total.
    """
    _validate_box(max_part, max_count)

    def descend(bound: int, length: int) -> Iterator[tuple[int, ...]]:
        if length == 0:
            yield ()
            return
        for first in range(bound + 1):
            for rest in descend(first, length - 1):
                yield (first,) + rest

    for vector in descend(max_part, max_count):
        yield Partition(vector)


def count_by_residue(max_part: int, max_count: int, modulus: int) -> list[int]:
    """Partition counts for the box, bucketed by weight mod modulus.

    Entries sum to C(max_part + max_count, max_count); the zero partition
    sits in class 0.
    """
    _validate_box(max_part, max_count)
    if modulus < 1:
        raise ValueError("modulus must be positive")
    table = [0] * modulus
    for weight, count in enumerate(_weight_counts(max_part, max_count)):
        table[weight % modulus] += count
    return table


def count_exact_parts_by_residue(part_bound: int, exact_count: int, modulus: int) -> list[int]:
    """Counts of partitions with exactly `exact_count` nonzero parts, each at
    most `part_bound`, bucketed by weight mod modulus.

    Removing one unit from each part is a bijection onto the
    (part_bound - 1, exact_count) box, which supplies the counts.
    """
    if part_bound < 0:
        raise ValueError("part_bound must be nonnegative")
    if exact_count < 1:
        raise ValueError("exact_count must be positive")
    if modulus < 1:
        raise ValueError("modulus must be positive")
    table = [0] * modulus
    if part_bound == 0:
        return table
    for base_weight, count in enumerate(_weight_counts(part_bound - 1, exact_count)):
        table[(base_weight + exact_count) % modulus] += count
    return table
