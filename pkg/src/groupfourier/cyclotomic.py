"""Exact arithmetic in rings of cyclotomic integers Z[zeta_N].

Elements are integer polynomials in zeta_N reduced modulo the N-th
cyclotomic polynomial Phi_N.  The reduced form is canonical, so an element
equals zero as a complex number exactly when its coefficient vector is
zero; all vanishing-sum arguments downstream rest on that coefficient
check rather than on floating-point cancellation.

Phi_N is obtained by repeated exact division: Phi_N = (x^N - 1) / prod of
Phi_d over proper divisors d of N.  Arithmetic between elements of
different orders promotes both to the least common multiple order.
"""

from __future__ import annotations

import cmath
from functools import cache
from math import lcm

from .errors import ExactnessError

Poly = tuple[int, ...]  # coefficients, low degree first; no trailing zeros


def _poly_trim(coeffs: list[int]) -> Poly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _poly_trim(out)


def _poly_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Polynomial division by a monic divisor, over the integers."""
    assert den and den[-1] == 1, "divisor must be monic"
    rem = list(num)
    deg_d = len(den) - 1
    quot = [0] * max(len(rem) - deg_d, 0)
    for i in range(len(rem) - 1, deg_d - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quot[i - deg_d] = c
        for j, d in enumerate(den):
            rem[i - deg_d + j] -= c * d
    return _poly_trim(quot), _poly_trim(rem)


@cache
def cyclotomic_polynomial(order: int) -> Poly:
    """Phi_N as an integer coefficient tuple, low degree first."""
    if order < 1:
        raise ValueError("order must be positive")
    if order == 1:
        return (-1, 1)
    num = [-1] + [0] * (order - 1) + [1]  # x^N - 1
    poly: Poly = tuple(num)
    for d in range(1, order):
        if order % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert rem == (), f"Phi_{d} does not divide x^{order}-1 exactly"
    return poly


@cache
def _phi_degree(order: int) -> int:
    return len(cyclotomic_polynomial(order)) - 1


def _reduce(coeffs: list[int], order: int) -> tuple[int, ...]:
    """Reduce an integer polynomial mod Phi_N; return a fixed-width vector."""
    deg = _phi_degree(order)
    _, rem = _poly_divmod(tuple(coeffs), cyclotomic_polynomial(order))
    out = list(rem) + [0] * (deg - len(rem))
    return tuple(out)


class CyclotomicInteger:
    """An element of Z[zeta_N] in canonical reduced form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs, reduce: bool = True):
        if order < 1:
            raise ValueError("order must be positive")
        coeffs = list(coeffs)
        if reduce or len(coeffs) != _phi_degree(order):
            coeffs = list(_reduce(coeffs, order))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicInteger is immutable")

    @classmethod
    def from_int(cls, value: int, order: int = 1) -> "CyclotomicInteger":
        return cls(order, [value])

    @classmethod
    def root(cls, order: int, exponent: int) -> "CyclotomicInteger":
        """zeta_N ** exponent (exponent taken mod N)."""
        e = exponent % order
        return cls(order, [0] * e + [1])

    # -- coercion ---------------------------------------------------------

    def promoted(self, order: int) -> "CyclotomicInteger":
        """Rewrite in Z[zeta_M] for a multiple M of the current order."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError(f"{order} is not a multiple of {self.order}")
        step = order // self.order
        raw = [0] * order
        for j, c in enumerate(self.coeffs):
            raw[j * step] += c
        return CyclotomicInteger(order, raw)

    def _coerce(self, other) -> tuple["CyclotomicInteger", "CyclotomicInteger"]:
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(other, self.order)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented, NotImplemented
        if self.order == other.order:
            return self, other
        common = lcm(self.order, other.order)
        return self.promoted(common), other.promoted(common)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicInteger(
            a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)], reduce=False
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.order, [-c for c in self.coeffs], reduce=False)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicInteger(
            a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)], reduce=False
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(
                self.order, [other * c for c in self.coeffs], reduce=False
            )
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicInteger(a.order, list(_poly_mul(a.coeffs, b.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not defined in the ring")
        result = CyclotomicInteger.from_int(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "CyclotomicInteger":
        """Complex conjugate: zeta^j maps to zeta^(N-j)."""
        raw = [0] * self.order
        raw[0] = self.coeffs[0]
        for j in range(1, len(self.coeffs)):
            raw[(self.order - j) % self.order] += self.coeffs[j]
        return CyclotomicInteger(self.order, raw)

    def exact_div(self, divisor: int) -> "CyclotomicInteger":
        """Divide by an integer, failing if any coefficient is not divisible."""
        if any(c % divisor for c in self.coeffs):
            raise ExactnessError(f"{self!r} is not divisible by {divisor}")
        return CyclotomicInteger(
            self.order, [c // divisor for c in self.coeffs], reduce=False
        )

    # -- predicates and conversions ----------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_integer(self) -> int:
        if not self.is_rational():
            raise ExactnessError(f"{self!r} is not rational")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        return sum(
            c * cmath.exp(2j * cmath.pi * j / self.order)
            for j, c in enumerate(self.coeffs)
            if c
        ) or complex(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        a, b = self._coerce(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # cross-order equality makes a consistent hash awkward

    def __repr__(self) -> str:
        if self.is_rational():
            return f"Cyc({self.coeffs[0]})"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                terms.append(f"{coeff}z{self.order}^{j}" if j > 1 else f"{coeff}z{self.order}")
        return "Cyc(" + " + ".join(terms).replace("+ -", "- ") + ")"

    def to_json(self) -> dict:
        approx = self.to_complex()
        return {
            "order": self.order,
            "coeffs": list(self.coeffs),
            "approx": [approx.real, approx.imag],
        }


def cyc(value, order: int = 1) -> CyclotomicInteger:
    """Coerce an int (or pass through a CyclotomicInteger)."""
    if isinstance(value, CyclotomicInteger):
        return value
    if isinstance(value, int):
        return CyclotomicInteger.from_int(value, order)
    raise TypeError(f"cannot coerce {type(value).__name__} to CyclotomicInteger")


def cyclotomic_root(order: int, exponent: int) -> CyclotomicInteger:
    return CyclotomicInteger.root(order, exponent)


def is_zero(value: CyclotomicInteger) -> bool:
    return value.is_zero()


class CycMatrix:
    """Small dense matrix over cyclotomic integers."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(cyc(v) for v in row) for row in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("CycMatrix is immutable")

    @classmethod
    def identity(cls, dim: int) -> "CycMatrix":
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def zero(cls, dim: int) -> "CycMatrix":
        return cls([[0] * dim for _ in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, key) -> CyclotomicInteger:
        i, j = key
        return self.rows[i][j]

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        cols = list(zip(*other.rows))
        return CycMatrix(
            [[_dot(row, col) for col in cols] for row in self.rows]
        )

    def scaled(self, factor: int) -> "CycMatrix":
        return CycMatrix([[v * factor for v in row] for row in self.rows])

    def conjugate_transpose(self) -> "CycMatrix":
        return CycMatrix(
            [[self.rows[j][i].conjugate() for j in range(len(self.rows))]
             for i in range(len(self.rows[0]))]
        )

    def trace(self) -> CyclotomicInteger:
        total = cyc(0)
        for i, row in enumerate(self.rows):
            total = total + row[i]
        return total

    def frobenius_norm_sq(self) -> int:
        """Sum of |entry|^2, exact; the result is always a rational integer."""
        total = cyc(0)
        for row in self.rows:
            for v in row:
                total = total + v * v.conjugate()
        return total.as_integer()

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.rows for v in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if self.dim != other.dim:
            return False
        return all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"CycMatrix({[[repr(v) for v in row] for row in self.rows]})"


def _dot(row, col) -> CyclotomicInteger:
    total = cyc(0)
    for a, b in zip(row, col):
        total = total + a * b
    return total
