"""Character operations over finite groups given by explicit element lists.

Inner products, restriction, induction, tensor products and the reciprocity
check that ties induction to restriction.  All values are exact: inner
products are returned as rationals, and any non-rational outcome raises
instead of being rounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .cyclotomic import CycMatrix, CyclotomicInteger, cyc
from .dihedral import DihedralIrrep, as_permutation, dihedral_elements
from .errors import CapacityError, ExactnessError
from .permutation import Permutation, all_permutations, cycle_type

INDUCTION_CAP = 40320
BLOCK_INDUCTION_CAP = 120


@dataclass
class FiniteGroupView:
    """A finite group as an explicit element list with multiplication maps.

    ``class_key``, when provided, is a cheap conjugacy invariant that is
    complete for the group (e.g. cycle type on a full symmetric group); it
    lets class enumeration skip the quadratic orbit computation.
    """

    elements: tuple
    mul: Callable[[Any, Any], Any]
    inv: Callable[[Any], Any]
    identity: Any
    name: str = ""
    class_key: Callable[[Any], Any] | None = None
    _element_set: frozenset = field(init=False, repr=False, default=None)
    _classes: tuple = field(init=False, repr=False, default=None)

    def __post_init__(self):
        self.elements = tuple(self.elements)
        self._element_set = frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._element_set

    def contains_all(self, elements) -> bool:
        return all(g in self._element_set for g in elements)

    def conjugacy_classes(self) -> tuple[tuple, ...]:
        """Conjugacy classes, each a tuple with a fixed representative first."""
        if self._classes is not None:
            return self._classes
        if self.class_key is not None:
            buckets: dict[Any, list] = {}
            for g in self.elements:
                buckets.setdefault(self.class_key(g), []).append(g)
            classes = tuple(tuple(members) for members in buckets.values())
        else:
            seen = set()
            classes_list = []
            for g in self.elements:
                if g in seen:
                    continue
                orbit = []
                orbit_set = set()
                for h in self.elements:
                    conj = self.mul(self.mul(h, g), self.inv(h))
                    if conj not in orbit_set:
                        orbit_set.add(conj)
                        orbit.append(conj)
                seen |= orbit_set
                classes_list.append(tuple(orbit))
            classes = tuple(classes_list)
        self._classes = classes
        return classes

    def spot_check_axioms(self) -> None:
        """Closure, identity and inverse laws on the listed elements."""
        for g in self.elements:
            if self.mul(self.identity, g) != g or self.mul(g, self.inv(g)) != self.identity:
                raise ValueError(f"group axioms fail at {g!r}")
        for g in self.elements[: min(8, self.order)]:
            for h in self.elements[: min(8, self.order)]:
                if self.mul(g, h) not in self._element_set:
                    raise ValueError(f"not closed at {g!r} * {h!r}")


def dihedral_group_view(n: int) -> FiniteGroupView:
    return FiniteGroupView(
        elements=tuple(dihedral_elements(n)),
        mul=lambda a, b: a * b,
        inv=lambda a: a.inverse(),
        identity=dihedral_elements(n)[0],
        name=f"D{n}",
    )


def symmetric_group_view(n: int) -> FiniteGroupView:
    return FiniteGroupView(
        elements=tuple(all_permutations(n)),
        mul=lambda a, b: a * b,
        inv=lambda a: a.inverse(),
        identity=Permutation.identity(n),
        name=f"S{n}",
        class_key=cycle_type,
    )


def dihedral_in_symmetric_view(n: int) -> FiniteGroupView:
    """The image of D_n under the permutation embedding, as a view on S_n elements."""
    return FiniteGroupView(
        elements=tuple(as_permutation(g) for g in dihedral_elements(n)),
        mul=lambda a, b: a * b,
        inv=lambda a: a.inverse(),
        identity=Permutation.identity(n),
        name=f"D{n}<S{n}",
    )


def product_group_view(a: FiniteGroupView, b: FiniteGroupView) -> FiniteGroupView:
    keys = None
    if a.class_key is not None and b.class_key is not None:
        ka, kb = a.class_key, b.class_key
        keys = lambda g: (ka(g[0]), kb(g[1]))
    return FiniteGroupView(
        elements=tuple((g, h) for g in a.elements for h in b.elements),
        mul=lambda u, v: (a.mul(u[0], v[0]), b.mul(u[1], v[1])),
        inv=lambda u: (a.inv(u[0]), b.inv(u[1])),
        identity=(a.identity, b.identity),
        name=f"{a.name}x{b.name}",
        class_key=keys,
    )


def subgroup_view(parent: FiniteGroupView, elements, name: str = "") -> FiniteGroupView:
    elements = tuple(elements)
    if not parent.contains_all(elements):
        raise ValueError("elements are not all in the parent group")
    return FiniteGroupView(
        elements=elements,
        mul=parent.mul,
        inv=parent.inv,
        identity=parent.identity,
        name=name or f"subgroup of {parent.name}",
    )


@dataclass
class ClassFunction:
    """A function on a group, stored per element; characters in practice.

    Values may be Python ints or CyclotomicInteger; arithmetic coerces as
    needed.
    """

    group: FiniteGroupView
    values: dict

    def __call__(self, g):
        return self.values[g]

    def is_class_function(self) -> bool:
        for members in self.group.conjugacy_classes():
            first = cyc(self.values[members[0]])
            if any(cyc(self.values[g]) != first for g in members[1:]):
                return False
        return True


def trivial_character(group: FiniteGroupView) -> ClassFunction:
    return ClassFunction(group, {g: 1 for g in group.elements})


def regular_character(group: FiniteGroupView) -> ClassFunction:
    return ClassFunction(
        group, {g: (group.order if g == group.identity else 0) for g in group.elements}
    )


def irrep_character(group: FiniteGroupView, irrep) -> ClassFunction:
    """Evaluate an irrep's character on every listed element."""
    return ClassFunction(group, {g: irrep.character(g) for g in group.elements})


def dihedral_irrep_on_permutations(n: int, irrep: DihedralIrrep,
                                   group: FiniteGroupView) -> ClassFunction:
    """Character of a D_n irrep transported along the permutation embedding."""
    values = {}
    for g in dihedral_elements(n):
        values[as_permutation(g)] = irrep.character(g)
    return ClassFunction(group, values)


def inner_product(chi: ClassFunction, psi: ClassFunction) -> Fraction:
    """(1/|G|) sum over g of chi(g) * conj(psi(g)), exactly.

    The result of pairing two genuine characters is a rational; a
    non-rational outcome raises ExactnessError.
    """
    if chi.group is not psi.group and chi.group.elements != psi.group.elements:
        raise ValueError("characters live on different groups")
    int_total = 0
    cyc_total: CyclotomicInteger | None = None
    for g in chi.group.elements:
        a, b = chi.values[g], psi.values[g]
        if isinstance(a, int) and isinstance(b, int):
            int_total += a * b
            continue
        term = cyc(a) * cyc(b).conjugate()
        cyc_total = term if cyc_total is None else cyc_total + term
    total = int_total if cyc_total is None else (cyc_total + int_total).as_integer()
    return Fraction(total, chi.group.order)


def multiplicity(chi: ClassFunction, psi: ClassFunction) -> int:
    """Inner product that must be a nonnegative integer."""
    value = inner_product(chi, psi)
    if value.denominator != 1 or value < 0:
        raise ExactnessError(f"multiplicity {value} is not a nonnegative integer")
    return int(value)


def restrict(chi: ClassFunction, subgroup: FiniteGroupView) -> ClassFunction:
    """Pointwise restriction to a subgroup of the character's group."""
    if not chi.group.contains_all(subgroup.elements):
        raise ValueError("not a subgroup of the character's group")
    return ClassFunction(subgroup, {g: chi.values[g] for g in subgroup.elements})


def induce_character(psi: ClassFunction, group: FiniteGroupView) -> ClassFunction:
    """Induce a subgroup character up to the full group.

    Uses the averaged-conjugates formula: value at g is
    (1/|H|) * sum over x in G of psi0(x^-1 g x), with psi0 zero off H.
    Values are computed once per conjugacy class of G.
    """
    if group.order > INDUCTION_CAP:
        raise CapacityError(f"|G|={group.order} exceeds induction cap {INDUCTION_CAP}")
    sub = psi.group
    if not group.contains_all(sub.elements):
        raise ValueError("character's group is not a subgroup")
    values: dict = {}
    for members in group.conjugacy_classes():
        rep = members[0]
        total: CyclotomicInteger | int = 0
        for x in group.elements:
            conj = group.mul(group.mul(group.inv(x), rep), x)
            val = psi.values.get(conj)
            if val is None:
                continue
            total = val + total if isinstance(total, int) and isinstance(val, int) else cyc(val) + cyc(total)
        # exact division by |H|
        if isinstance(total, int):
            if total % sub.order:
                raise ExactnessError("induced value is not integral")
            value = total // sub.order
        else:
            value = total.exact_div(sub.order)
        for g in members:
            values[g] = value
    return ClassFunction(group, values)


@dataclass(frozen=True)
class FrobeniusResult:
    left: Fraction   # <psi induced, chi> over the big group
    right: Fraction  # <psi, chi restricted> over the subgroup
    equal: bool


def frobenius_check(psi: ClassFunction, chi: ClassFunction) -> FrobeniusResult:
    """Evaluate both sides of reciprocity independently and compare."""
    induced = induce_character(psi, chi.group)
    left = inner_product(induced, chi)
    right = inner_product(psi, restrict(chi, psi.group))
    return FrobeniusResult(left=left, right=right, equal=left == right)


def tensor_character(chi_a: ClassFunction, chi_b: ClassFunction) -> ClassFunction:
    """Character of the outer tensor product, on the direct product group."""
    product = product_group_view(chi_a.group, chi_b.group)
    values = {}
    for g in chi_a.group.elements:
        va = chi_a.values[g]
        for h in chi_b.group.elements:
            vb = chi_b.values[h]
            values[(g, h)] = va * vb if isinstance(va, int) and isinstance(vb, int) else cyc(va) * cyc(vb)
    return ClassFunction(product, values)


def coset_transversal(group: FiniteGroupView, sub: FiniteGroupView) -> list:
    """Representatives of the left cosets gH, by greedy sweep of the list."""
    reps = []
    covered: set = set()
    for g in group.elements:
        if g in covered:
            continue
        reps.append(g)
        covered.update(group.mul(g, h) for h in sub.elements)
    return reps


def induced_matrix_rep(rep_matrix: Callable[[Any], CycMatrix], sub: FiniteGroupView,
                       group: FiniteGroupView) -> Callable[[Any], CycMatrix]:
    """Block-matrix induction of a matrix representation, for small groups.

    Returns a callable assigning to g the block matrix with (i, j) block
    Y(t_i^-1 g t_j), zero when the argument falls outside the subgroup.
    Serves as an independent oracle for the induced character formula.
    """
    if group.order > BLOCK_INDUCTION_CAP:
        raise CapacityError(
            f"|G|={group.order} exceeds block induction cap {BLOCK_INDUCTION_CAP}"
        )
    transversal = coset_transversal(group, sub)
    sub_dim = rep_matrix(sub.identity).dim
    zero_block = CycMatrix.zero(sub_dim)

    def induced(g) -> CycMatrix:
        blocks = []
        for t_i in transversal:
            row = []
            for t_j in transversal:
                h = group.mul(group.mul(group.inv(t_i), g), t_j)
                row.append(rep_matrix(h) if h in sub else zero_block)
            blocks.append(row)
        rows = []
        for block_row in blocks:
            for r in range(sub_dim):
                rows.append([block[r, c] for block in block_row for c in range(sub_dim)])
        return CycMatrix(rows)

    return induced
