"""Configuration spaces of a ring with marked nodes and their fibrations.

r marked nodes on a ring of N sites are encoded either as a strictly
increasing tuple in [1, N] or as a point of the covering space (strictly
increasing integers spanning less than N).  Gap vectors between consecutive
marks are the compositions of N into r positive parts; the fibers of the
center-of-mass compatibility classes are counted both by direct enumeration
and through the partition bijection.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Union

from .errors import EnumerationCapError
from .partitions import count_by_residue


@dataclass(frozen=True, order=True)
class Configuration:
    """Marked nodes j_1 < ... < j_r inside [1, ring_size]."""

    nodes: tuple[int, ...]
    ring_size: int

    def __post_init__(self):
        nodes = tuple(self.nodes)
        if self.ring_size < 1:
            raise ValueError("ring_size must be positive")
        if any(not isinstance(j, int) for j in nodes):
            raise ValueError(f"nodes must be integers: {nodes!r}")
        if nodes and not (1 <= nodes[0] and nodes[-1] <= self.ring_size):
            raise ValueError(f"nodes must lie in [1, {self.ring_size}]: {nodes!r}")
        if any(a >= b for a, b in zip(nodes, nodes[1:])):
            raise ValueError(f"nodes must be strictly increasing: {nodes!r}")
        object.__setattr__(self, "nodes", nodes)


@dataclass(frozen=True, order=True)
class CoveringPoint:
    """Strictly increasing integers whose span is less than ring_size."""

    positions: tuple[int, ...]
    ring_size: int

    def __post_init__(self):
        positions = tuple(self.positions)
        if self.ring_size < 1:
            raise ValueError("ring_size must be positive")
        if any(not isinstance(j, int) for j in positions):
            raise ValueError(f"positions must be integers: {positions!r}")
        if any(a >= b for a, b in zip(positions, positions[1:])):
            raise ValueError(f"positions must be strictly increasing: {positions!r}")
        if positions and positions[-1] >= positions[0] + self.ring_size:
            raise ValueError(
                f"span must be less than ring_size={self.ring_size}: {positions!r}"
            )
        object.__setattr__(self, "positions", positions)

    @property
    def center_sum(self) -> int:
        """Sum of positions; grows by ring_size under one covering shift."""
        return sum(self.positions)


@dataclass(frozen=True)
class RelativePositions:
    """Gaps between consecutive marks: positive integers summing to ring_size."""

    gaps: tuple[int, ...]
    ring_size: int

    def __post_init__(self):
        gaps = tuple(self.gaps)
        if not gaps:
            raise ValueError("need at least one gap")
        if any(not isinstance(t, int) or t < 1 for t in gaps):
            raise ValueError(f"gaps must be positive integers: {gaps!r}")
        if sum(gaps) != self.ring_size:
            raise ValueError(f"gaps must sum to ring_size={self.ring_size}: {gaps!r}")
        object.__setattr__(self, "gaps", gaps)


def enumerate_configurations(ring_size: int, marked: int) -> Iterator[Configuration]:
    """All C(ring_size, marked) configurations in lexicographic node order."""
    if ring_size < 1:
        raise ValueError("ring_size must be positive")
    if not 0 <= marked <= ring_size:
        raise ValueError("need 0 <= marked <= ring_size")
    for nodes in combinations(range(1, ring_size + 1), marked):
        yield Configuration(nodes, ring_size)


def center_projection(c: Configuration) -> int:
    """Scaled center of mass: the sum of node indices, reduced mod ring_size."""
    return sum(c.nodes) % c.ring_size


def relative_positions(point: Union[Configuration, CoveringPoint]) -> RelativePositions:
    """Gap vector of a configuration or covering point: consecutive
    differences plus the wrap-around gap back to the first mark."""
    marks = point.nodes if isinstance(point, Configuration) else point.positions
    if not marks:
        raise ValueError("need at least one marked node")
    n = point.ring_size
    gaps = tuple(b - a for a, b in zip(marks, marks[1:])) + (n + marks[0] - marks[-1],)
    return RelativePositions(gaps, n)


def reconstruct(center_sum: int, t: RelativePositions) -> CoveringPoint:
    """The unique covering point with the given position sum and gap vector.

    Writing r for the number of gaps, the weighted sum center_sum +
    sum_beta beta * t_beta must vanish mod r (otherwise ValueError); the
    positions are then (that sum)/r minus the trailing gap sums.
    """
    r = len(t.gaps)
    weighted = sum(beta * gap for beta, gap in enumerate(t.gaps, start=1))
    lead, remainder = divmod(center_sum + weighted, r)
    if remainder:
        raise ValueError(
            f"center sum {center_sum} is incompatible with the gap vector {t.gaps}"
        )
    positions = [0] * r
    suffix = 0
    for alpha in range(r, 0, -1):
        suffix += t.gaps[alpha - 1]
        positions[alpha - 1] = lead - suffix
    point = CoveringPoint(tuple(positions), t.ring_size)
    assert point.center_sum == center_sum
    return point


def shift_action(point: CoveringPoint, steps: int = 1) -> CoveringPoint:
    """Apply the covering shift `steps` times; one step sends
    (j_1, ..., j_r) to (j_2, ..., j_r, j_1 + ring_size).  Negative steps
    apply the inverse."""
    r = len(point.positions)
    if r == 0:
        return point
    whole, part = divmod(steps, r)
    base = [j + whole * point.ring_size for j in point.positions]
    moved = base[part:] + [j + point.ring_size for j in base[:part]]
    return CoveringPoint(tuple(moved), point.ring_size)


def delta_fiber_sizes(
    ring_size: int, marked: int, max_elements: int | None = None
) -> list[int]:
    """Fiber sizes of the gap-vector compatibility classes, by direct count.

    Gap vectors are the compositions of ring_size into `marked` positive
    parts; the vector t lies in the fiber of the residue s in [0, marked)
    for which s + sum_beta beta * t_beta = 0 mod marked.  Entries sum to
    C(ring_size - 1, marked - 1).
    """
    if marked < 1 or marked > ring_size:
        raise ValueError("need 1 <= marked <= ring_size")
    total = comb(ring_size - 1, marked - 1)
    if max_elements is not None and total > max_elements:
        raise EnumerationCapError(
            f"{total} gap vectors for (N={ring_size}, r={marked}) exceed the cap "
            f"of {max_elements}"
        )
    table = [0] * marked
    for cuts in combinations(range(1, ring_size), marked - 1):
        bounds = (0,) + cuts + (ring_size,)
        weighted = sum(
            beta * (b - a)
            for beta, (a, b) in enumerate(zip(bounds, bounds[1:]), start=1)
        )
        table[-weighted % marked] += 1
    return table


def delta_fiber_sizes_via_partitions(ring_size: int, marked: int) -> list[int]:
    """The same fiber table obtained through the partition bijection.

    The fiber at s matches the step sequences whose area is r - s mod r, and
    those match the partitions in the (N-r) x (r-1) box whose weight lies in
    the class shifted by r(r-1)/2 + N; no enumeration is involved, so this
    route scales to large rings.
    """
    if marked < 1 or marked > ring_size:
        raise ValueError("need 1 <= marked <= ring_size")
    n, r = ring_size, marked
    base = count_by_residue(n - r, r - 1, r)
    offset = r * (r - 1) // 2 + n
    return [base[((r - s) - offset) % r] for s in range(r)]
