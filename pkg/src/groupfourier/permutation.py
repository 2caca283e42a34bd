"""Permutations of {1..n} in one-line image notation.

A permutation is stored by its image tuple ``images`` where ``images[i-1]``
is the image of the point ``i``.  Multiplication is function composition:
``(p * q)(i) = p(q(i))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: tuple[int, ...]) -> "Permutation":
        """Build a permutation of degree n from disjoint cycles of points."""
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if point < 1 or point > n or point in seen:
                    raise ValueError(f"bad cycle {cycle} for degree {n}")
                seen.add(point)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycle decomposition, each cycle starting at its minimum."""
        out = []
        seen: set[int] = set()
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return f"Permutation.identity({self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
        return f"Perm[{self.degree}]{body}"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Composition p after q: (p o q)(i) = p(q(i))."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    return Permutation(tuple(p.images[j - 1] for j in q.images))


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths of p sorted decreasing, fixed points included as 1s."""
    lengths = [len(c) for c in p.cycles(include_fixed=True)]
    return tuple(sorted(lengths, reverse=True))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations of degree n, in lexicographic image order."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)
