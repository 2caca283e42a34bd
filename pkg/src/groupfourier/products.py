"""The tensor catalog of irreducibles of a product of two dihedral groups.

For even factors the catalog has 64 entries: each factor contributes its
four one-dimensional irreducibles plus the generic two-dimensional family
tagged by the four element types it is evaluated on (the generator x, a
general rotation x^l, the base reflection y, a general reflection y x^l).
Entries are numbered with the m-factor index running fastest, so entry
(m_slot, n_slot) has index (n_slot - 1) * 8 + m_slot.

The one-dimensional factors take element-dependent values +-1; the catalog
stores the representation itself and evaluates per element rather than
treating the two signs as distinct representations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .cyclotomic import CyclotomicInteger, cyc, cyclotomic_root
from .dihedral import (
    DihedralElement,
    DihedralIrrep,
    dihedral_elements,
    two_dim_k_range,
)
from .errors import CapacityError
from .repops import (
    ClassFunction,
    dihedral_group_view,
    inner_product,
    product_group_view,
    trivial_character,
)

SAMPLING_REPORT_CAP = 12  # on m + n, keeps (m+n)! as the ambient order sane

ELEMENT_TYPES = ("any", "x", "rotation", "y", "reflection")


@dataclass(frozen=True)
class FactorSlot:
    """One factor of a catalog entry: an irrep plus the element type tag.

    The tag records which element shape the closed form in the catalog
    refers to; one-dimensional irreps apply to any element.
    """

    irrep: DihedralIrrep
    element_type: str

    @property
    def dimension(self) -> int:
        return self.irrep.dimension

    @property
    def n(self) -> int:
        return self.irrep.n

    def matches(self, g: DihedralElement) -> bool:
        if self.element_type == "any":
            return True
        if self.element_type == "x":
            return not g.reflection and g.rotation == 1
        if self.element_type == "rotation":
            return not g.reflection
        if self.element_type == "y":
            return bool(g.reflection) and g.rotation == 0
        if self.element_type == "reflection":
            return bool(g.reflection)
        raise AssertionError(self.element_type)

    def matching_elements(self) -> list[DihedralElement]:
        return [g for g in dihedral_elements(self.n) if self.matches(g)]

    def closed_form(self, g: DihedralElement) -> CyclotomicInteger:
        """Character value straight from the listed formulas, no matrices.

        Two-dimensional slots evaluate z^{kl} + z^{-kl} on rotations and 0
        on reflections; one-dimensional slots evaluate their sign.
        """
        if not self.matches(g):
            raise ValueError(f"element {g!r} does not match type {self.element_type}")
        if self.irrep.name == "two_dim":
            if g.reflection:
                return cyc(0)
            n, k, l = self.n, self.irrep.k, g.rotation
            return cyclotomic_root(n, k * l) + cyclotomic_root(n, -k * l)
        if self.irrep.name == "trivial":
            return cyc(1)
        if self.irrep.name == "rotation_sign":
            return cyc(-1 if g.reflection else 1)
        if self.irrep.name == "half_sign_a":
            return cyc((-1) ** g.rotation)
        return cyc((-1) ** (g.rotation + g.reflection))

    def label(self) -> str:
        if self.irrep.name != "two_dim":
            return self.irrep.label
        return f"{self.irrep.label}@{self.element_type}"


def factor_slots(n: int, k: int) -> list[FactorSlot]:
    """The per-factor slot list: 8 slots for even n, 6 for odd n."""
    one_dim = [DihedralIrrep(n, "trivial"), DihedralIrrep(n, "rotation_sign")]
    if n % 2 == 0:
        one_dim += [DihedralIrrep(n, "half_sign_a"), DihedralIrrep(n, "half_sign_b")]
    two_dim = DihedralIrrep(n, "two_dim", k)
    slots = [FactorSlot(rho, "any") for rho in one_dim]
    slots += [FactorSlot(two_dim, t) for t in ("x", "rotation", "y", "reflection")]
    return slots


@dataclass(frozen=True)
class ProductIrrep:
    """One catalog entry: a tensor product of factor slots."""

    index: int
    m_slot: FactorSlot
    n_slot: FactorSlot

    @property
    def dimension(self) -> int:
        return self.m_slot.dimension * self.n_slot.dimension

    def label(self) -> str:
        return f"rho_{self.index}[{self.m_slot.label()} (x) {self.n_slot.label()}]"

    def matches(self, pair: tuple[DihedralElement, DihedralElement]) -> bool:
        return self.m_slot.matches(pair[0]) and self.n_slot.matches(pair[1])

    def character(self, pair: tuple[DihedralElement, DihedralElement]) -> CyclotomicInteger:
        """Trace of the tensor product: product of the factor traces."""
        g_m, g_n = pair
        return self.m_slot.irrep.character(g_m) * self.n_slot.irrep.character(g_n)

    def closed_form(self, pair: tuple[DihedralElement, DihedralElement]) -> CyclotomicInteger:
        return self.m_slot.closed_form(pair[0]) * self.n_slot.closed_form(pair[1])


def catalog_character(entry: ProductIrrep,
                      pair: tuple[DihedralElement, DihedralElement]) -> CyclotomicInteger:
    if pair[0].n != entry.m_slot.n or pair[1].n != entry.n_slot.n:
        raise ValueError("element degrees do not match the catalog factors")
    return entry.character(pair)


def product_catalog(m: int, n: int, k_m: int = 1, k_n: int = 1) -> list[ProductIrrep]:
    """The full slot catalog for D_m x D_n at fixed frequencies (k_m, k_n).

    64 entries when both factors are even, 48 for one odd factor, 36 for
    two; entry order follows the fixed slot order with the m index fastest.
    """
    if m < 3 or n < 3:
        raise ValueError("factors need m, n >= 3")
    if k_m not in two_dim_k_range(m) or k_n not in two_dim_k_range(n):
        raise ValueError("frequency outside the irreducible range")
    m_slots = factor_slots(m, k_m)
    n_slots = factor_slots(n, k_n)
    catalog = []
    index = 1
    for n_slot in n_slots:
        for m_slot in m_slots:
            catalog.append(ProductIrrep(index=index, m_slot=m_slot, n_slot=n_slot))
            index += 1
    return catalog


def dimension_histogram(catalog: list[ProductIrrep]) -> dict[int, int]:
    histogram: dict[int, int] = {}
    for entry in catalog:
        histogram[entry.dimension] = histogram.get(entry.dimension, 0) + 1
    return histogram


def zero_character_set(m: int, n: int) -> set[int]:
    """Catalog indices whose character vanishes on every matching element.

    Quantified over all valid frequencies of both factors, so a vanishing
    that happens only at a special frequency does not count.
    """
    vanishing: set[int] | None = None
    for k_m in two_dim_k_range(m):
        for k_n in two_dim_k_range(n):
            catalog = product_catalog(m, n, k_m, k_n)
            current = set()
            for entry in catalog:
                values = [
                    entry.character((g_m, g_n))
                    for g_m in entry.m_slot.matching_elements()
                    for g_n in entry.n_slot.matching_elements()
                ]
                if all(v.is_zero() for v in values):
                    current.add(entry.index)
            vanishing = current if vanishing is None else vanishing & current
    return vanishing


def complete_product_dual(m: int, n: int) -> list[tuple[str, int, ClassFunction]]:
    """The genuine full dual of D_m x D_n: label, dimension, character.

    Unlike the 64-entry slot catalog, each two-dimensional family appears
    once per frequency and without element-type duplication, so squared
    dimensions sum to the group order.
    """
    from .dihedral import dihedral_irreps

    view_m = dihedral_group_view(m)
    view_n = dihedral_group_view(n)
    product = product_group_view(view_m, view_n)
    out = []
    for rho_m in dihedral_irreps(m):
        for rho_n in dihedral_irreps(n):
            label = f"{rho_m.label}(x){rho_n.label}"
            dim = rho_m.dimension * rho_n.dimension
            values = {}
            for g in view_m.elements:
                chi_m = rho_m.character(g)
                for h in view_n.elements:
                    values[(g, h)] = chi_m * rho_n.character(h)
            out.append((label, dim, ClassFunction(product, values)))
    return out


@dataclass(frozen=True)
class ProductSamplingRow:
    index: int
    label: str
    dimension: int
    probability: Fraction


@dataclass(frozen=True)
class ProductSamplingReport:
    m: int
    n: int
    ambient_order: int
    rows: tuple[ProductSamplingRow, ...]
    total: Fraction
    normalized: bool

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "ambient_order": self.ambient_order,
            "rows": [
                {
                    "index": r.index,
                    "label": r.label,
                    "dimension": r.dimension,
                    "probability": str(r.probability),
                }
                for r in self.rows
            ],
            "total": str(self.total),
            "normalized": self.normalized,
        }


def product_sampling_failure_report(m: int, n: int, k_m: int = 1, k_n: int = 1) -> ProductSamplingReport:
    """Label probabilities when the hidden subgroup is all of D_m x D_n.

    The ambient group is the symmetric group on the m + n vertices of the
    two disjoint cycles.  Every non-trivial catalog entry gets probability
    exactly zero; the trivial entry gets |D_m x D_n| / (m+n)!, so the
    entries do not form a normalized distribution, which the report flags.
    """
    if m + n > SAMPLING_REPORT_CAP:
        raise CapacityError(f"m+n={m + n} exceeds report cap {SAMPLING_REPORT_CAP}")
    ambient_order = factorial(m + n)
    view_m = dihedral_group_view(m)
    view_n = dihedral_group_view(n)
    product = product_group_view(view_m, view_n)
    trivial = trivial_character(product)
    group_order = product.order  # 4mn
    rows = []
    for entry in product_catalog(m, n, k_m, k_n):
        values = {}
        for g in view_m.elements:
            chi_m = entry.m_slot.irrep.character(g)
            for h in view_n.elements:
                values[(g, h)] = chi_m * entry.n_slot.irrep.character(h)
        mult = inner_product(ClassFunction(product, values), trivial)
        assert mult.denominator == 1
        probability = Fraction(group_order, ambient_order) * entry.dimension * int(mult)
        rows.append(
            ProductSamplingRow(
                index=entry.index,
                label=entry.label(),
                dimension=entry.dimension,
                probability=probability,
            )
        )
    total = sum((r.probability for r in rows), Fraction(0))
    return ProductSamplingReport(
        m=m, n=n, ambient_order=ambient_order, rows=tuple(rows),
        total=total, normalized=total == 1,
    )


def random_matching_pair(entry: ProductIrrep, rng: random.Random) -> tuple[DihedralElement, DihedralElement]:
    return (
        rng.choice(entry.m_slot.matching_elements()),
        rng.choice(entry.n_slot.matching_elements()),
    )
