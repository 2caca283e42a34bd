"""The dihedral group D_n: elements, subgroups and irreducible representations.

Elements are kept in the normal form y^e x^l with e in {0, 1} and
0 <= l < n, where x is the rotation of order n and y a reflection with
y x y = x^-1.  The permutation realization sends x to the n-cycle
(1 2 ... n) and y to the reflection fixing the point 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property

from .cyclotomic import CycMatrix, CyclotomicInteger, cyclotomic_root
from .errors import CapacityError
from .permutation import Permutation

SUBGROUP_CATALOG_CAP = 24


@dataclass(frozen=True)
class DihedralElement:
    n: int
    reflection: int  # 0 or 1, the y exponent
    rotation: int    # the x exponent, 0 <= rotation < n

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("dihedral order parameter must be at least 3")
        object.__setattr__(self, "reflection", self.reflection % 2)
        object.__setattr__(self, "rotation", self.rotation % self.n)

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        if self.n != other.n:
            raise ValueError("mixed dihedral groups")
        # y^a x^i * y^b x^j = y^(a+b) x^(±i + j), sign flipped by b
        sign = -1 if other.reflection else 1
        return DihedralElement(
            self.n, self.reflection ^ other.reflection, sign * self.rotation + other.rotation
        )

    def inverse(self) -> "DihedralElement":
        if self.reflection:
            return self
        return DihedralElement(self.n, 0, -self.rotation)

    def is_identity(self) -> bool:
        return self.reflection == 0 and self.rotation == 0

    @property
    def is_reflection(self) -> bool:
        return self.reflection == 1

    def label(self) -> str:
        rot = "e" if self.rotation == 0 else ("x" if self.rotation == 1 else f"x^{self.rotation}")
        if not self.reflection:
            return rot
        return "y" if self.rotation == 0 else f"y*{rot}"

    def __repr__(self) -> str:
        return f"D{self.n}[{self.label()}]"


def dihedral_x(n: int) -> DihedralElement:
    return DihedralElement(n, 0, 1)


def dihedral_y(n: int) -> DihedralElement:
    return DihedralElement(n, 1, 0)


def dihedral_identity(n: int) -> DihedralElement:
    return DihedralElement(n, 0, 0)


def dihedral_elements(n: int) -> list[DihedralElement]:
    """The 2n elements of D_n: rotations first, then reflections."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return [DihedralElement(n, e, l) for e in (0, 1) for l in range(n)]


def as_permutation(element: DihedralElement) -> Permutation:
    """Embed D_n into S_n acting on the vertices of the n-gon."""
    n = element.n
    x = Permutation(tuple(list(range(2, n + 1)) + [1]))
    y = Permutation(tuple([1] + list(range(n, 1, -1))))
    result = Permutation.identity(n)
    for _ in range(element.rotation):
        result = x * result
    if element.reflection:
        result = y * result
    return result


def conjugacy_class_count(n: int) -> int:
    """Closed form for the number of conjugacy classes of D_n."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if n % 2 == 0:
        return n // 2 + 3
    return (n + 3) // 2


@dataclass(frozen=True)
class DihedralSubgroup:
    """One subgroup of D_n: <x^d> (cyclic) or <x^d, x^i y> (dihedral type)."""

    n: int
    kind: str            # "cyclic" or "dihedral"
    step: int            # the divisor d
    offset: int | None   # the i in x^i y, None for cyclic subgroups

    @cached_property
    def generators(self) -> tuple[DihedralElement, ...]:
        gens = [DihedralElement(self.n, 0, self.step)]
        if self.kind == "dihedral":
            # x^i y = y x^-i in normal form
            gens.append(DihedralElement(self.n, 1, -self.offset))
        return tuple(gens)

    @cached_property
    def elements(self) -> tuple[DihedralElement, ...]:
        n, d = self.n, self.step
        rotations = [DihedralElement(n, 0, d * j) for j in range(n // d)]
        if self.kind == "cyclic":
            return tuple(rotations)
        reflections = [
            DihedralElement(n, 1, (-self.offset - d * j) % n) for j in range(n // d)
        ]
        return tuple(rotations + reflections)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return 2 * self.n // self.order

    def label(self) -> str:
        if self.kind == "cyclic":
            return f"<x^{self.step}>"
        return f"<x^{self.step}, x^{self.offset}*y>"


def subgroup_catalog(n: int) -> list[DihedralSubgroup]:
    """Every subgroup of D_n, each exactly once.

    Cyclic subgroups <x^d> for each divisor d of n, and dihedral-type
    subgroups <x^d, x^i y> for each divisor d and 0 <= i < d.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if n > SUBGROUP_CATALOG_CAP:
        raise CapacityError(f"n={n} exceeds subgroup catalog cap {SUBGROUP_CATALOG_CAP}")
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    catalog = [DihedralSubgroup(n, "cyclic", d, None) for d in divisors]
    catalog += [
        DihedralSubgroup(n, "dihedral", d, i) for d in divisors for i in range(d)
    ]
    return catalog


def two_dim_k_range(n: int) -> range:
    """Valid frequencies k of the irreducible two-dimensional family."""
    if n % 2 == 0:
        return range(1, (n - 2) // 2 + 1)
    return range(1, (n - 1) // 2 + 1)


@dataclass(frozen=True)
class DihedralIrrep:
    """A matrix representation of D_n with exact cyclotomic entries.

    The one-dimensional irreps take values +-1; the two-dimensional family
    two_dim(k) sends x^l to diag(z^{kl}, z^{-kl}) with z = zeta_n and y to
    the swap matrix.  For even n, k = 0 and k = n/2 give reducible
    two-dimensional representations; they are excluded from the standard
    listing but can be constructed with ``include_reducible``.
    """

    n: int
    name: str           # trivial | rotation_sign | half_sign_a | half_sign_b | two_dim
    k: int | None = None
    irreducible: bool = True

    @property
    def dimension(self) -> int:
        return 2 if self.name == "two_dim" else 1

    @property
    def label(self) -> str:
        return f"two_dim_{self.k}" if self.name == "two_dim" else self.name

    def _scalar(self, g: DihedralElement) -> int:
        if self.name == "trivial":
            return 1
        if self.name == "rotation_sign":
            return -1 if g.reflection else 1
        if self.name == "half_sign_a":
            return (-1) ** g.rotation
        if self.name == "half_sign_b":
            return (-1) ** (g.rotation + g.reflection)
        raise AssertionError(self.name)

    def matrix(self, g: DihedralElement) -> CycMatrix:
        if g.n != self.n:
            raise ValueError("element from a different group")
        return _irrep_matrix(self, g)

    def character(self, g: DihedralElement) -> CyclotomicInteger:
        return self.matrix(g).trace()


@cache
def _irrep_matrix(rho: "DihedralIrrep", g: DihedralElement) -> CycMatrix:
    if rho.name != "two_dim":
        return CycMatrix([[rho._scalar(g)]])
    n, k, l = rho.n, rho.k, g.rotation
    plus = cyclotomic_root(n, k * l)
    minus = cyclotomic_root(n, -k * l)
    if not g.reflection:
        return CycMatrix([[plus, 0], [0, minus]])
    # y x^l maps to swap @ diag(z^{kl}, z^{-kl})
    return CycMatrix([[0, minus], [plus, 0]])


def dihedral_irreps(n: int, include_reducible: bool = False) -> list[DihedralIrrep]:
    """The complete list of irreducibles of D_n, in a fixed order.

    Order: trivial, rotation_sign, then (even n only) the two half sign
    characters, then two_dim(k) for ascending k.  The count equals the
    conjugacy class count and the squared dimensions sum to 2n.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    irreps = [DihedralIrrep(n, "trivial"), DihedralIrrep(n, "rotation_sign")]
    if n % 2 == 0:
        irreps += [DihedralIrrep(n, "half_sign_a"), DihedralIrrep(n, "half_sign_b")]
    irreps += [DihedralIrrep(n, "two_dim", k) for k in two_dim_k_range(n)]
    if include_reducible:
        extra = [0, n // 2] if n % 2 == 0 else [0]
        irreps += [DihedralIrrep(n, "two_dim", k, irreducible=False) for k in extra]
    return irreps


def dihedral_character(rho: DihedralIrrep, g: DihedralElement) -> CyclotomicInteger:
    if rho.n != g.n:
        raise ValueError("irrep and element from different groups")
    return rho.character(g)
