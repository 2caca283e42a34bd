"""Standard Young tableaux and hook lengths for partition shapes."""

from __future__ import annotations

from functools import cache
from math import factorial

from .partitions import Partition, check_partition

Tableau = tuple[tuple[int, ...], ...]  # rows of entry values, 1-based entries


def standard_tableaux(shape: Partition) -> list[Tableau]:
    """All standard Young tableaux of the given shape.

    Entries 1..n increase along rows and down columns.  Generated by
    choosing, for each value n, n-1, ..., a removable corner cell.
    """
    shape = check_partition(shape)

    @cache
    def build(partial: Partition) -> tuple[Tableau, ...]:
        n = sum(partial)
        if n == 0:
            return ((),)
        out = []
        rows = list(partial)
        for i in range(len(rows)):
            below = rows[i + 1] if i + 1 < len(rows) else 0
            if rows[i] - 1 < below:
                continue  # not a removable corner
            child = rows[:i] + [rows[i] - 1] + rows[i + 1:]
            while child and child[-1] == 0:
                child.pop()
            for smaller in build(tuple(child)):
                grown = [list(r) for r in smaller]
                while len(grown) <= i:
                    grown.append([])
                grown[i].append(n)
                out.append(tuple(tuple(r) for r in grown))
        return tuple(out)

    return sorted(build(shape))


def cell_of(tableau: Tableau, value: int) -> tuple[int, int]:
    """(row, column) of a value in a tableau, 0-based."""
    for r, row in enumerate(tableau):
        for c, v in enumerate(row):
            if v == value:
                return r, c
    raise ValueError(f"{value} not in tableau")


def hook_lengths(shape: Partition) -> list[list[int]]:
    shape = check_partition(shape)
    arm = [[shape[i] - j - 1 for j in range(shape[i])] for i in range(len(shape))]
    leg = [
        [sum(1 for below in shape[i + 1:] if below > j) for j in range(shape[i])]
        for i in range(len(shape))
    ]
    return [
        [arm[i][j] + leg[i][j] + 1 for j in range(shape[i])]
        for i in range(len(shape))
    ]


def hook_length_dimension(shape: Partition) -> int:
    """Standard tableau count by the hook length product formula."""
    shape = check_partition(shape)
    n = sum(shape)
    prod = 1
    for row in hook_lengths(shape):
        for h in row:
            prod *= h
    return factorial(n) // prod
