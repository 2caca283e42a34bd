"""Weak Fourier sampling distributions over finite groups, exactly.

The label probability of an irreducible under the coset-state measurement
is (|H|/|G|) * dim * <restricted character, trivial>, an exact rational.
Two independent routes are provided: the character formula
(``label_probability``) and a brute-force statevector computation that
Fourier-transforms an explicit coset state (``statevector_weak_sampling``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Callable

from .characters import char_at_fixed_point_free_involution, hook_dimension, mn_character
from .cyclotomic import CycMatrix, cyc
from .dihedral import as_permutation, dihedral_elements, dihedral_irreps
from .errors import CapacityError, ExactnessError
from .partitions import partitions_of
from .permutation import cycle_type
from .repops import (
    ClassFunction,
    FiniteGroupView,
    dihedral_group_view,
    inner_product,
    subgroup_view,
    trivial_character,
)

STATEVECTOR_ORDER_CAP = 4096
GI_GAP_DEGREE_CAP = 12
AMBIENT_MODE_CAP = 6
PAPER_MODE_CAP = 64


def partition_label(parts: tuple[int, ...]) -> str:
    return "(" + ",".join(map(str, parts)) + ")"


@dataclass(frozen=True)
class SamplingDistribution:
    """Map from irreducible labels to exact probabilities.

    ``complete_dual`` records whether the label set ranges over all
    irreducibles of the ambient group; only then must the entries sum to 1.
    """

    labels: tuple[str, ...]
    probabilities: dict[str, Fraction]
    complete_dual: bool

    def total(self) -> Fraction:
        return sum(self.probabilities.values(), Fraction(0))

    def is_normalized(self) -> bool:
        return self.total() == 1

    def __getitem__(self, label: str) -> Fraction:
        return self.probabilities[label]

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "probabilities": [str(self.probabilities[label]) for label in self.labels],
            "normalized": self.is_normalized(),
        }


@dataclass
class HiddenSubgroupInstance:
    """An explicit hidden-subgroup promise: oracle constant on left cosets."""

    ambient: FiniteGroupView
    hidden: FiniteGroupView
    oracle: Callable[[Any], Any]

    def verify_promise(self) -> bool:
        """Exhaustively check constancy on left cosets and distinctness across."""
        coset_values: dict[Any, Any] = {}
        seen: set = set()
        for g in self.ambient.elements:
            if g in seen:
                continue
            coset = [self.ambient.mul(g, h) for h in self.hidden.elements]
            seen.update(coset)
            value = self.oracle(coset[0])
            if any(self.oracle(member) != value for member in coset[1:]):
                return False
            if value in coset_values.values():
                return False
            coset_values[g] = value
        return True


def label_probability(ambient_order: int, hidden: FiniteGroupView,
                      restricted_character: ClassFunction, dimension: int) -> Fraction:
    """Exact probability of measuring one irreducible label.

    ``restricted_character`` is the ambient irreducible's character already
    restricted to the hidden subgroup; its multiplicity against the trivial
    character must come out a nonnegative integer.
    """
    identity_value = cyc(restricted_character.values[hidden.identity])
    if identity_value != dimension:
        raise ValueError("restricted character does not match the stated dimension")
    mult = inner_product(restricted_character, trivial_character(hidden))
    if mult.denominator != 1 or mult < 0:
        raise ExactnessError(f"multiplicity {mult} is not a nonnegative integer")
    return Fraction(hidden.order, ambient_order) * dimension * mult


def cycle_auto_distribution(n: int, mode: str = "paper") -> SamplingDistribution:
    """Sampling distribution for the hidden automorphism group of an n-cycle.

    mode="paper": labels are the irreducibles of the hidden dihedral group
    itself; every label except the trivial one gets probability exactly
    zero (established by exact cyclotomic vanishing, not cancellation) and
    the entries total 2n/n!, not 1.

    mode="ambient": labels are the irreducibles of the ambient symmetric
    group; this is the complete dual, so the entries total exactly 1.
    """
    if mode == "paper":
        return _cycle_auto_paper(n)
    if mode == "ambient":
        return _cycle_auto_ambient(n)
    raise ValueError(f"unknown mode {mode!r}")


def _cycle_auto_paper(n: int) -> SamplingDistribution:
    if not 3 <= n <= PAPER_MODE_CAP:
        raise CapacityError(f"n={n} outside 3..{PAPER_MODE_CAP}")
    group_order = 2 * n
    ambient_order = factorial(n)
    labels = []
    probabilities = {}
    for rho in dihedral_irreps(n):
        total = cyc(0)
        for g in dihedral_elements(n):
            total = total + rho.character(g)
        if rho.name == "trivial":
            assert total == group_order
            mult = 1
        else:
            # the vanishing must be a canonical cyclotomic zero
            if not total.is_zero():
                raise ExactnessError(f"character sum for {rho.label} is not zero")
            mult = 0
        prob = Fraction(group_order, ambient_order) * rho.dimension * mult
        labels.append(rho.label)
        probabilities[rho.label] = prob
    return SamplingDistribution(tuple(labels), probabilities, complete_dual=False)


def _cycle_auto_ambient(n: int) -> SamplingDistribution:
    if not 3 <= n <= AMBIENT_MODE_CAP:
        raise CapacityError(f"n={n} outside 3..{AMBIENT_MODE_CAP} for ambient mode")
    group_order = 2 * n
    ambient_order = factorial(n)
    cycle_types = [cycle_type(as_permutation(g)) for g in dihedral_elements(n)]
    labels = []
    probabilities = {}
    for shape in partitions_of(n):
        dim = hook_dimension(shape)
        total = sum(mn_character(shape, ct) for ct in cycle_types)
        mult, rem = divmod(total, group_order)
        if rem:
            raise ExactnessError(f"multiplicity for {shape} is not integral")
        labels.append(partition_label(shape))
        probabilities[labels[-1]] = Fraction(group_order, ambient_order) * dim * mult
    return SamplingDistribution(tuple(labels), probabilities, complete_dual=True)


@dataclass(frozen=True)
class GiGapResult:
    isomorphic_free: SamplingDistribution      # hidden subgroup trivial
    isomorphic_swap: SamplingDistribution      # hidden subgroup {e, sigma}
    tv_distance: Fraction


def gi_gap(half_degree: int) -> GiGapResult:
    """Distinguishability gap between the two promise distributions.

    Over S_{2m} with the order-two hidden subgroup generated by the fixed
    involution (1 2)(3 4)...(2m-1 2m): p = dim^2/(2m)! against
    q = dim*(dim + chi(sigma))/(2m)!, and the total variation distance
    sum dim*|chi(sigma)|/(2m)!.
    """
    degree = 2 * half_degree
    if degree > GI_GAP_DEGREE_CAP:
        raise CapacityError(f"degree {degree} exceeds cap {GI_GAP_DEGREE_CAP}")
    order = factorial(degree)
    sigma_column = char_at_fixed_point_free_involution(half_degree)
    labels = []
    p_probs = {}
    q_probs = {}
    tv = Fraction(0)
    for shape in partitions_of(degree):
        dim = hook_dimension(shape)
        chi_sigma = sigma_column[shape]
        label = partition_label(shape)
        labels.append(label)
        p_probs[label] = Fraction(dim * dim, order)
        q_probs[label] = Fraction(dim * (dim + chi_sigma), order)
        tv += Fraction(dim * abs(chi_sigma), order)
    p = SamplingDistribution(tuple(labels), p_probs, complete_dual=True)
    q = SamplingDistribution(tuple(labels), q_probs, complete_dual=True)
    return GiGapResult(p, q, tv)


@dataclass(frozen=True)
class GiGapBoundReport:
    half_degree: int
    max_abs_character: int
    bound: float
    bound_holds: bool
    tv_distance: Fraction

    def to_json(self) -> dict:
        return {
            "half_degree": self.half_degree,
            "max_abs_character_at_involution": self.max_abs_character,
            "bound": self.bound,
            "bound_holds": self.bound_holds,
            "tv_distance": str(self.tv_distance),
        }


def gi_gap_bound_report(half_degree: int) -> GiGapBoundReport:
    """Exact maximal |chi(sigma)| against the counting bound 16^m (2 sqrt(2m))^m.

    The comparison is done on squares so it stays in exact integers.
    """
    sigma_column = char_at_fixed_point_free_involution(half_degree)
    max_abs = max(abs(v) for v in sigma_column.values())
    m = half_degree
    bound_squared = 256**m * (8 * m) ** m  # (16^m)^2 * (2 sqrt(2m))^(2m)
    holds = max_abs * max_abs <= bound_squared
    bound_float = float(16**m) * (2.0 * (2.0 * m) ** 0.5) ** m
    return GiGapBoundReport(
        half_degree=half_degree,
        max_abs_character=max_abs,
        bound=bound_float,
        bound_holds=holds,
        tv_distance=gi_gap(half_degree).tv_distance,
    )


def statevector_weak_sampling(group: FiniteGroupView, irreps,
                              hidden: FiniteGroupView,
                              coset_rep=None) -> SamplingDistribution:
    """Brute-force label distribution from an explicit coset state.

    Builds the amplitude vector 1/sqrt(|H|) on cH, transforms it at each
    irreducible, and returns the squared Frobenius norm per label.  The
    irrational scalars enter only through their squares, so every entry is
    an exact rational: dim * ||sum over cH of rho||^2 / (|G| |H|).
    """
    if group.order > STATEVECTOR_ORDER_CAP:
        raise CapacityError(f"|G|={group.order} exceeds cap {STATEVECTOR_ORDER_CAP}")
    dims = sum(rho.dimension**2 for rho in irreps)
    if dims != group.order:
        raise ValueError(
            f"incomplete dual: sum of squared dimensions {dims} != |G| {group.order}"
        )
    if not group.contains_all(hidden.elements):
        raise ValueError("hidden subgroup is not inside the group")
    c = group.identity if coset_rep is None else coset_rep
    coset = [group.mul(c, h) for h in hidden.elements]
    labels = []
    probabilities = {}
    for rho in irreps:
        block = _sum_of_images(rho, coset)
        norm_sq = block.frobenius_norm_sq()
        labels.append(rho.label)
        probabilities[rho.label] = Fraction(
            rho.dimension * norm_sq, group.order * hidden.order
        )
    return SamplingDistribution(tuple(labels), probabilities, complete_dual=True)


def _sum_of_images(rho, elements) -> CycMatrix:
    total = None
    for g in elements:
        mat = rho.matrix(g)
        total = mat if total is None else total + mat
    return total


@dataclass(frozen=True)
class StrongSamplingEntry:
    label: str
    dimension: int
    label_probability_zero: bool
    all_entries_zero: bool


@dataclass(frozen=True)
class StrongSamplingReport:
    n: int
    entries: tuple[StrongSamplingEntry, ...]
    consistent: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [
                {
                    "label": e.label,
                    "dimension": e.dimension,
                    "label_probability_zero": e.label_probability_zero,
                    "all_entries_zero": e.all_entries_zero,
                }
                for e in self.entries
            ],
            "consistent": self.consistent,
        }


def strong_sampling_note(n: int) -> StrongSamplingReport:
    """Conditional entry probabilities vanish wherever the label does.

    For the full-group coset state over the cycle automorphism group, the
    Fourier block of every zero-probability irreducible is checked to be
    the exact zero matrix entry by entry, so measuring matrix indices
    cannot recover what the label measurement already lost.
    """
    elements = dihedral_elements(n)
    entries = []
    for rho in dihedral_irreps(n):
        block = _sum_of_images(rho, elements)
        zero_block = block.is_zero()
        zero_label = block.frobenius_norm_sq() == 0
        entries.append(
            StrongSamplingEntry(
                label=rho.label,
                dimension=rho.dimension,
                label_probability_zero=zero_label,
                all_entries_zero=zero_block,
            )
        )
    consistent = all(e.label_probability_zero == e.all_entries_zero for e in entries)
    return StrongSamplingReport(n=n, entries=tuple(entries), consistent=consistent)


def dihedral_statevector_distribution(n: int, subgroup_elements,
                                      coset_rep=None) -> SamplingDistribution:
    """Statevector sampling over D_n for a subgroup given by its elements."""
    group = dihedral_group_view(n)
    hidden = subgroup_view(group, subgroup_elements)
    return statevector_weak_sampling(group, dihedral_irreps(n), hidden, coset_rep)


def dihedral_label_distribution(n: int, subgroup_elements) -> SamplingDistribution:
    """Character-formula sampling over D_n for the same inputs."""
    group = dihedral_group_view(n)
    hidden = subgroup_view(group, subgroup_elements)
    labels = []
    probabilities = {}
    for rho in dihedral_irreps(n):
        restricted = ClassFunction(
            hidden, {g: rho.character(g) for g in hidden.elements}
        )
        labels.append(rho.label)
        probabilities[rho.label] = label_probability(
            group.order, hidden, restricted, rho.dimension
        )
    return SamplingDistribution(tuple(labels), probabilities, complete_dual=True)
