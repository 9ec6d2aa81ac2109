"""
Stirling Numbers Module
Second-kind numbers three ways (recurrence, explicit sum, set-partition enumeration),
first-kind numbers signed and unsigned, orthogonality and triangle tables.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from .exactnum import binomial, exact_divide, factorial

logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 12
TABLE_LIMIT = 200

MODERN_LAYOUT = "modern"
STIRLING_LAYOUT = "stirling"


class SizeLimitError(ValueError):
    """Raised when a request exceeds an enumeration or table guard."""


def _check_indices(m: int, n: int):
    if m < 0 or n < 0:
        raise ValueError(f"indices must be non-negative, got ({m}, {n})")


@dataclass(frozen=True)
class Triangle:
    """
    Lower-triangular table of integers indexed by (m, n) with 0 <= n <= m <= max_m.

    Row m holds m + 1 entries; anything above the diagonal reads as 0.
    """

    max_m: int
    entries: Tuple[Tuple[int, ...], ...]

    def entry(self, m: int, n: int) -> int:
        if m < 0 or m > self.max_m:
            raise IndexError(f"row {m} outside triangle of size {self.max_m}")
        if n < 0 or n > m:
            return 0
        return self.entries[m][n]

    def row(self, m: int) -> Tuple[int, ...]:
        if m < 0 or m > self.max_m:
            raise IndexError(f"row {m} outside triangle of size {self.max_m}")
        return self.entries[m]

    def row_sums(self) -> List[int]:
        return [sum(r) for r in self.entries]

    def signed(self) -> "Triangle":
        """Apply the sign (-1)^(m-n) entrywise."""
        return Triangle(
            self.max_m,
            tuple(
                tuple((-1) ** (m - n) * v for n, v in enumerate(r))
                for m, r in enumerate(self.entries)
            ),
        )

    def rows(self, layout: str = MODERN_LAYOUT) -> List[List[Optional[int]]]:
        """
        Rectangular view with ``None`` in the blank cells.

        Args:
            layout: ``modern`` puts m down the rows and n across; ``stirling`` is the
                transposed historical layout where m runs horizontally, left to right

        Returns:
            (max_m + 1) x (max_m + 1) list of rows
        """
        size = self.max_m + 1
        if layout == MODERN_LAYOUT:
            return [list(r) + [None] * (size - len(r)) for r in self.entries]
        if layout == STIRLING_LAYOUT:
            return [
                [self.entries[m][n] if m >= n else None for m in range(size)]
                for n in range(size)
            ]
        raise ValueError(f"Unknown layout: {layout}")


def stirling2(m: int, n: int) -> int:
    """
    S(m, n) by the recurrence S(m, n) = n S(m-1, n) + S(m-1, n-1).

    Only the columns 0..n of rows 0..m are computed.
    """
    _check_indices(m, n)
    if n > m:
        return 0
    column = [1] + [0] * n
    for i in range(1, m + 1):
        for j in range(min(i, n), 0, -1):
            column[j] = j * column[j] + column[j - 1]
        column[0] = 0
    return column[n]


def stirling2_explicit(m: int, n: int) -> int:
    """
    S(m, n) = (1/n!) sum_k C(n, k) (-1)^(n-k) k^m, with 0^0 = 1.

    The alternating sum is formed in integers and divided exactly at the end.
    """
    _check_indices(m, n)
    total = sum((-1) ** (n - k) * binomial(n, k) * k ** m for k in range(n + 1))
    return exact_divide(total, factorial(n))


def _restricted_growth_strings(length: int) -> Iterator[Tuple[List[int], int]]:
    """
    Yield every restricted growth string of the given length with its block count.

    a[0] = 0 and a[i] <= 1 + max(a[:i]); each string labels one set partition,
    element i going to block a[i]. The yielded list is reused between steps.
    """
    if length == 0:
        yield [], 0
        return
    a = [0] * length
    top = [0] * length
    while True:
        yield a, top[-1] + 1
        i = length - 1
        while i >= 1 and a[i] > top[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top[i] = max(top[i - 1], a[i])
        for j in range(i + 1, length):
            a[j] = 0
            top[j] = top[i]


def set_partitions(m: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """
    Enumerate the set partitions of {1, ..., m} as tuples of blocks.

    Args:
        m: Size of the ground set (at most ENUMERATION_LIMIT)

    Yields:
        One partition at a time, blocks ordered by their smallest element
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if m > ENUMERATION_LIMIT:
        raise SizeLimitError(f"set partition enumeration is limited to m <= {ENUMERATION_LIMIT}, got {m}")
    for labels, blocks in _restricted_growth_strings(m):
        parts: List[List[int]] = [[] for _ in range(blocks)]
        for element, label in enumerate(labels, start=1):
            parts[label].append(element)
        yield tuple(tuple(p) for p in parts)


@lru_cache(maxsize=None)
def _block_count_histogram(m: int) -> Dict[int, int]:
    # Every partition of {1..m} is visited once through its restricted growth string
    logger.info(f"Enumerating set partitions of a {m}-element set")
    histogram: Counter = Counter()
    for _, blocks in _restricted_growth_strings(m):
        histogram[blocks] += 1
    return dict(histogram)


def count_set_partitions(m: int, n: int) -> int:
    """Number of partitions of an m-set into exactly n non-empty blocks, by enumeration."""
    _check_indices(m, n)
    if m > ENUMERATION_LIMIT:
        raise SizeLimitError(f"set partition enumeration is limited to m <= {ENUMERATION_LIMIT}, got {m}")
    return _block_count_histogram(m).get(n, 0)


def stirling1_unsigned(m: int, k: int) -> int:
    """sigma(m, k) by sigma(m, k) = sigma(m-1, k-1) + (m-1) sigma(m-1, k)."""
    _check_indices(m, k)
    if k > m:
        return 0
    column = [1] + [0] * k
    for i in range(1, m + 1):
        for j in range(min(i, k), 0, -1):
            column[j] = column[j - 1] + (i - 1) * column[j]
        column[0] = 0
    return column[k]


def stirling1_signed(m: int, k: int) -> int:
    """s(m, k) = (-1)^(m-k) sigma(m, k)."""
    return (-1) ** (m - k) * stirling1_unsigned(m, k)


def orthogonality_sum(m: int, n: int) -> int:
    """sum_k S(m, k) s(k, n); equals 1 when m == n and 0 otherwise."""
    _check_indices(m, n)
    second = second_kind_table(m)
    first = first_kind_table(m).signed()
    return sum(second.entry(m, k) * first.entry(k, n) for k in range(m + 1))


def _check_table_size(max_m: int):
    if max_m < 0:
        raise ValueError(f"max_m must be non-negative, got {max_m}")
    if max_m > TABLE_LIMIT:
        raise SizeLimitError(f"tables are limited to max_m <= {TABLE_LIMIT}, got {max_m}")


@lru_cache(maxsize=64)
def second_kind_table(max_m: int) -> Triangle:
    """Full S(m, n) triangle for 0 <= n <= m <= max_m."""
    _check_table_size(max_m)
    logger.info(f"Building second-kind triangle up to m={max_m}")
    rows = [(1,)]
    for m in range(1, max_m + 1):
        prev = rows[-1]
        row = [0] * (m + 1)
        for n in range(1, m + 1):
            row[n] = (n * prev[n] if n < m else 0) + prev[n - 1]
        rows.append(tuple(row))
    return Triangle(max_m, tuple(rows))


@lru_cache(maxsize=64)
def first_kind_table(max_m: int) -> Triangle:
    """Full unsigned sigma(m, k) triangle for 0 <= k <= m <= max_m."""
    _check_table_size(max_m)
    logger.info(f"Building first-kind triangle up to m={max_m}")
    rows = [(1,)]
    for m in range(1, max_m + 1):
        prev = rows[-1]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            row[k] = prev[k - 1] + ((m - 1) * prev[k] if k < m else 0)
        rows.append(tuple(row))
    return Triangle(max_m, tuple(rows))


def bell_number(m: int) -> int:
    """Bell number as the row sum of the second-kind triangle."""
    return sum(second_kind_table(m).row(m))
