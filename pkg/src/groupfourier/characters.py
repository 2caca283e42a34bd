"""Exact character theory of the symmetric groups.

Character values are computed by the recursive border-strip rule; row
dimensions come from the factorial/difference-product formula.  A second,
independent route to the same integers is Young's orthogonal representation
(``yor_matrices``), which realizes each irreducible as explicit orthogonal
matrices so that characters can be cross-checked as numeric traces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from math import factorial, prod

import numpy as np

from .errors import CapacityError
from .partitions import Partition, check_partition, class_size, partitions_of
from .permutation import Permutation
from .tableaux import cell_of, standard_tableaux

CHARACTER_TABLE_CAP = 12
YOR_DEGREE_CAP = 8
INVOLUTION_DEGREE_CAP = 12


def hook_dimension(shape: Partition) -> int:
    """Dimension of the irreducible of S_n labeled by this shape.

    Uses d = n! * prod_{i<j} (l_i - l_j) / prod_i l_i! with l_i = shape_i + k - i
    (1-based i, k rows).  Equals the number of standard Young tableaux.
    """
    shape = check_partition(shape)
    n = sum(shape)
    k = len(shape)
    ell = [shape[i] + k - (i + 1) for i in range(k)]
    numerator = factorial(n) * prod(
        ell[i] - ell[j] for i in range(k) for j in range(i + 1, k)
    )
    denominator = prod(factorial(l) for l in ell)
    dim, rem = divmod(numerator, denominator)
    assert rem == 0, f"dimension formula not integral for {shape}"
    return dim


def _border_strip_removals(shape: Partition, length: int):
    """Yield (smaller shape, height) for each removable strip of the length.

    Encoded on first-column hook coordinates: with beta_i = shape_i + k - 1 - i,
    a removable strip corresponds to replacing some beta value b by b - length
    when the result is nonnegative and unoccupied; its height is the number of
    beta values strictly between the two.
    """
    k = len(shape)
    beta = [shape[i] + k - 1 - i for i in range(k)]
    occupied = set(beta)
    for i, b in enumerate(beta):
        nb = b - length
        if nb < 0 or nb in occupied:
            continue
        height = sum(1 for other in beta if nb < other < b)
        new_beta = sorted((val if j != i else nb for j, val in enumerate(beta)), reverse=True)
        new_shape = tuple(
            part
            for j, val in enumerate(new_beta)
            if (part := val - (k - 1 - j)) > 0
        )
        yield new_shape, height


@cache
def mn_character(shape: Partition, content: Partition) -> int:
    """Character of S_n at a class: signed sum over ordered strip removals.

    Strips are removed for the parts of ``content`` in decreasing order; the
    value is independent of the order, and decreasing order keeps the memo
    table small.
    """
    shape = check_partition(shape)
    content = check_partition(content)
    if sum(shape) != sum(content):
        raise ValueError(f"size mismatch: |{shape}| != |{content}|")
    content = tuple(sorted(content, reverse=True))
    return _mn(shape, content)


@cache
def _mn(shape: Partition, content: Partition) -> int:
    if not content:
        return 1
    first, rest = content[0], content[1:]
    total = 0
    for smaller, height in _border_strip_removals(shape, first):
        total += (-1) ** height * _mn(smaller, rest)
    return total


def char_at_fixed_point_free_involution(half_degree: int) -> dict[Partition, int]:
    """Character column at the class (2, 2, ..., 2) of S_{2m}."""
    n = 2 * half_degree
    if n > INVOLUTION_DEGREE_CAP:
        raise CapacityError(f"degree {n} exceeds cap {INVOLUTION_DEGREE_CAP}")
    content = (2,) * half_degree
    return {shape: mn_character(shape, content) for shape in partitions_of(n)}


@dataclass(frozen=True)
class CharacterTable:
    """Square table of S_n character values.

    Rows are irreducible labels in decreasing partition order (trivial
    first); columns are class labels in increasing order (identity class
    first).  Entries are exact integers.
    """

    n: int
    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]

    def entry(self, row: Partition, col: Partition) -> int:
        return self.entries[self.rows.index(row)][self.cols.index(col)]

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "rows": [list(r) for r in self.rows],
            "cols": [list(c) for c in self.cols],
            "entries": [list(row) for row in self.entries],
            "class_sizes": list(self.class_sizes),
        }
        return json.dumps(payload, sort_keys=True)

    def to_text(self) -> str:
        def label(p: Partition) -> str:
            return "(" + ",".join(map(str, p)) + ")"

        headers = [""] + [label(c) for c in self.cols]
        body = [
            [label(r)] + [str(v) for v in row]
            for r, row in zip(self.rows, self.entries)
        ]
        widths = [
            max(len(line[i]) for line in [headers] + body)
            for i in range(len(headers))
        ]
        lines = [
            "  ".join(cell.rjust(w) for cell, w in zip(line, widths))
            for line in [headers] + body
        ]
        return "\n".join(lines)


def character_table(n: int) -> CharacterTable:
    if n < 1:
        raise ValueError("n must be positive")
    if n > CHARACTER_TABLE_CAP:
        raise CapacityError(f"n={n} exceeds character table cap {CHARACTER_TABLE_CAP}")
    rows = partitions_of(n)
    cols = tuple(reversed(rows))
    entries = tuple(
        tuple(mn_character(row, col) for col in cols) for row in rows
    )
    sizes = tuple(class_size(col) for col in cols)
    return CharacterTable(n=n, rows=rows, cols=cols, entries=entries, class_sizes=sizes)


class SymmetricIrrep:
    """Young's orthogonal representation for one shape.

    Generator matrices are indexed by the adjacent transpositions (i, i+1);
    arbitrary permutations are evaluated by decomposing into adjacent
    transpositions and multiplying.  Entries involve square roots, so the
    matrices are float64; traces of character checks are integers and are
    compared at 1e-9.
    """

    def __init__(self, shape: Partition, degree: int):
        shape = check_partition(shape, degree)
        if degree > YOR_DEGREE_CAP:
            raise CapacityError(f"degree {degree} exceeds YOR cap {YOR_DEGREE_CAP}")
        self.shape = shape
        self.degree = degree
        self.basis = standard_tableaux(shape)
        self.dimension = len(self.basis)
        self._index = {t: i for i, t in enumerate(self.basis)}
        self._generators = [
            self._generator_matrix(i) for i in range(1, degree)
        ]

    def _generator_matrix(self, i: int) -> np.ndarray:
        dim = self.dimension
        mat = np.zeros((dim, dim))
        for idx, tab in enumerate(self.basis):
            r1, c1 = cell_of(tab, i)
            r2, c2 = cell_of(tab, i + 1)
            axial = (c2 - r2) - (c1 - r1)
            mat[idx, idx] = 1.0 / axial
            swapped = tuple(
                tuple(i + 1 if v == i else i if v == i + 1 else v for v in row)
                for row in tab
            )
            other = self._index.get(swapped)
            if other is not None and other > idx:
                off = (1.0 - 1.0 / axial**2) ** 0.5
                mat[idx, other] = off
                mat[other, idx] = off
        return mat

    def matrix(self, p: Permutation) -> np.ndarray:
        """Image of a permutation as an orthogonal matrix."""
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        word = []
        images = list(p.images)
        # Right-multiplying by (i, i+1) swaps one-line entries i, i+1; sorting
        # to the identity yields p = s_{w_k} ... s_{w_1} for the recorded word.
        changed = True
        while changed:
            changed = False
            for i in range(self.degree - 1):
                if images[i] > images[i + 1]:
                    images[i], images[i + 1] = images[i + 1], images[i]
                    word.append(i + 1)
                    changed = True
        result = np.eye(self.dimension)
        for i in reversed(word):
            result = result @ self._generators[i - 1]
        return result

    def character(self, p: Permutation) -> float:
        return float(np.trace(self.matrix(p)))


def yor_matrices(shape: Partition, degree: int) -> SymmetricIrrep:
    return SymmetricIrrep(shape, degree)


def regular_dimension_check(n: int) -> bool:
    """Burnside identity: sum of squared dimensions equals n factorial."""
    return sum(hook_dimension(p) ** 2 for p in partitions_of(n)) == factorial(n)
