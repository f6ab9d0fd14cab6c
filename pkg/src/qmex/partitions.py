"""Partition enumeration and excludant statistics.

Everything in this module works by exhaustive enumeration. It is the
slow, obviously-correct half of the package: the generating-function
builders are checked coefficient by coefficient against these counts.
Intended for n up to a few dozen; the series side takes over beyond
that.

Conventions for the empty partition: mex = 1, smallest odd excludant
= 1, largest is 0, and the maximal excludant is 0 (there is no
non-negative integer below the largest part that is missing, so the
statistic contributes nothing).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    """A partition of a non-negative integer, parts in non-increasing order.

    distinct=True additionally requires strictly decreasing parts and
    marks that the partition came from the distinct-parts stream.
    """

    parts: tuple[int, ...]
    distinct: bool = False

    def __post_init__(self) -> None:
        prev = None
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if prev is not None:
                if self.distinct:
                    if p >= prev:
                        raise ValueError("distinct partition must strictly decrease")
                elif p > prev:
                    raise ValueError("parts must be non-increasing")
            prev = p

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)


class StatKind(enum.Enum):
    """Statistics summed over partitions by stat_sum_oracle."""

    MEX = "mex"
    MOEX = "moex"
    MAEX = "maex"
    LARGEST = "largest"


class CountKind(enum.Enum):
    """Predicates counted by refined_count_oracle."""

    MEX_EQ = "mex-eq"
    MEX_GT = "mex-gt"
    SMALLEST_GT = "smallest-gt"
    ODD_MEX = "odd-mex"


def enum_partitions(n: int, distinct_only: bool = False) -> Iterator[Partition]:
    """Yield the partitions of n in reverse-lexicographic order.

    Largest first part first; ties broken recursively the same way, so
    for n = 4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1). n = 0 yields the
    empty partition once. The stream is generated lazily.
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")

    def gen(remaining: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(tuple(prefix), distinct_only)
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            yield from gen(remaining - part, part - 1 if distinct_only else part, prefix)
            prefix.pop()

    return gen(n, n, [])


def mex(p: Partition) -> int:
    """Smallest positive integer that is not a part."""
    have = set(p.parts)
    m = 1
    while m in have:
        m += 1
    return m


def moex(p: Partition) -> int:
    """Smallest odd positive integer that is not a part."""
    have = set(p.parts)
    m = 1
    while m in have:
        m += 2
    return m


def maex(p: Partition) -> int:
    """Largest non-negative integer below the largest part that is not a part.

    0 when every candidate is present, in particular for the empty
    partition and for staircases like (2, 1) where 0 itself is the
    largest missing value.
    """
    if not p.parts:
        return 0
    have = set(p.parts)
    for g in range(p.parts[0] - 1, 0, -1):
        if g not in have:
            return g
    return 0


_STATS = {
    StatKind.MEX: mex,
    StatKind.MOEX: moex,
    StatKind.MAEX: maex,
    StatKind.LARGEST: lambda p: p.largest,
}


def stat_sum_oracle(kind: StatKind, n: int, distinct_only: bool = False) -> int:
    """Sum a statistic over all partitions of n by direct enumeration."""
    fn = _STATS[kind]
    return sum(fn(p) for p in enum_partitions(n, distinct_only))


def refined_count_oracle(
    kind: CountKind, index: int, n: int, distinct_only: bool = False
) -> int:
    """Count partitions of n satisfying a predicate, by enumeration.

    MEX_EQ counts mex == index, MEX_GT counts mex > index, SMALLEST_GT
    counts every part > index (vacuously true for the empty partition),
    ODD_MEX counts partitions whose mex is odd and ignores index.
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if kind is CountKind.MEX_EQ:
        return sum(1 for p in enum_partitions(n, distinct_only) if mex(p) == index)
    if kind is CountKind.MEX_GT:
        return sum(1 for p in enum_partitions(n, distinct_only) if mex(p) > index)
    if kind is CountKind.SMALLEST_GT:
        return sum(
            1
            for p in enum_partitions(n, distinct_only)
            if all(part > index for part in p.parts)
        )
    if kind is CountKind.ODD_MEX:
        return sum(1 for p in enum_partitions(n, distinct_only) if mex(p) % 2 == 1)
    raise ValueError(f"unknown count kind {kind!r}")


def two_colored_distinct_count(n: int) -> int:
    """Number of pairs of distinct-part partitions with weights summing to n.

    Convolves the distinct-partition counts d(0..n) with themselves,
    where each d(j) is itself obtained by enumeration.
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    d = [sum(1 for _ in enum_partitions(j, True)) for j in range(n + 1)]
    return sum(d[j] * d[n - j] for j in range(n + 1))
