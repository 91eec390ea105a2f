"""Quasi-homogeneous linear systems of plane curves and their numerical invariants.

A system L(d, m0, n, m) is the family of plane curves of degree d with a
point of multiplicity m0 at one general point p0 and multiplicity m at n
further general points.  This module holds the system type, the virtual /
expected dimension bookkeeping, the intersection pairing, and the two
elementary dimension computations (simple base points, and up to three
fat points via a lattice-point count) used as recursion base cases
everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

#: Inputs are quadratic in d, m0, n, m; capping them keeps every formula
#: comfortably inside 64-bit signed arithmetic.
MAX_INPUT = 10**6


class Status(str, Enum):
    NON_SPECIAL_PROVED = "NonSpecialProved"
    SPECIAL_PROVED = "SpecialProved"
    CONJECTURAL = "Conjectural"
    ORACLE_MEASURED = "OracleMeasured"


@dataclass(frozen=True)
class QuasiHomogeneousSystem:
    """The 4-tuple (d, m0, n, m) naming a system L(d, m0, n, m).

    Degenerate data is normalized at construction: n = 0 forces m = 0 and
    vice versa, so equality of systems is structural equality.
    """

    d: int
    m0: int
    n: int
    m: int

    def __post_init__(self):
        for name in ("d", "m0", "n", "m"):
            value = getattr(self, name)
            if not isinstance(value, int):
                raise TypeError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")
            if value > MAX_INPUT:
                raise ValueError(f"{name} exceeds the supported cap {MAX_INPUT}")
        if self.n == 0 and self.m != 0:
            object.__setattr__(self, "m", 0)
        if self.m == 0 and self.n != 0:
            object.__setattr__(self, "n", 0)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.d, self.m0, self.n, self.m)

    def canonical_key(self) -> tuple[int, int, int, int]:
        """Memoization key.  With a single extra point the two points are
        interchangeable general points, so sort (m0, m) descending."""
        if self.n == 1 and self.m > self.m0:
            return (self.d, self.m, 1, self.m0)
        return self.as_tuple()

    def multiplicities(self) -> list[int]:
        """All multiplicities, distinguished point first."""
        return [self.m0] + [self.m] * self.n

    def __str__(self) -> str:
        if self.n == 0:
            return f"L({self.d},{self.m0})"
        return f"L({self.d},{self.m0},{self.n},{self.m})"


#: Short constructor used pervasively in tests and internal code.
def L(d: int, m0: int, n: int = 0, m: int = 0) -> QuasiHomogeneousSystem:
    return QuasiHomogeneousSystem(d, m0, n, m)


@dataclass(frozen=True)
class SystemInvariants:
    v: int
    e: int
    self_int: int
    genus: int


@dataclass
class DimensionResult:
    dim: int
    status: Status
    certificate: Optional[dict] = field(default=None)

    @property
    def empty(self) -> bool:
        return self.dim == -1


def virtual_dim(L: QuasiHomogeneousSystem) -> int:
    d, m0, n, m = L.as_tuple()
    return d * (d + 3) // 2 - m0 * (m0 + 1) // 2 - n * m * (m + 1) // 2


def expected_dim(L: QuasiHomogeneousSystem) -> int:
    return max(-1, virtual_dim(L))


def invariants(L: QuasiHomogeneousSystem) -> SystemInvariants:
    """Virtual and expected dimension, self-intersection and arithmetic genus.

    The degree-genus bookkeeping satisfies v = L^2 - g + 1 exactly; this is
    asserted because every other module leans on it.
    """
    d, m0, n, m = L.as_tuple()
    v = virtual_dim(L)
    self_int = d * d - m0 * m0 - n * m * m
    # d(d-3), m0(m0-1), m(m-1) are all even, so the division is exact.
    genus = (d * (d - 3) - m0 * (m0 - 1) - n * m * (m - 1)) // 2 + 1
    assert v == self_int - genus + 1
    return SystemInvariants(v=v, e=max(-1, v), self_int=self_int, genus=genus)


def intersect(
    a: QuasiHomogeneousSystem, b: QuasiHomogeneousSystem, n_shared: int
) -> int:
    """Intersection number of two systems sharing p0 and n_shared of the
    equal-multiplicity points."""
    if n_shared < 0 or n_shared > min(a.n, b.n):
        raise ValueError(
            f"n_shared={n_shared} exceeds min(n, n') = {min(a.n, b.n)}"
        )
    return a.d * b.d - a.m0 * b.m0 - n_shared * a.m * b.m


def multiplicity_one(dim_M: int, n: int) -> int:
    """Dimension after imposing n general simple base points on a system of
    dimension dim_M."""
    if dim_M < -1:
        raise ValueError("dim_M must be at least -1")
    if n < 0:
        raise ValueError("n must be non-negative")
    return max(-1, dim_M - n)


def trinomial_dim(d: int, m0: int, m1: int, m2: int) -> int:
    """Exact generic dimension of plane curves of degree d with three fat
    points of multiplicities m0, m1, m2.

    Three general points are projectively equivalent to the coordinate
    points, where the conditions are monomial: a monomial x^a y^b z^c
    survives iff a <= d - m0, b <= d - m1, c <= d - m2.  Returns the count
    of surviving monomials minus one (so an empty system gives -1).
    """
    if d < 0:
        return -1
    for value in (m0, m1, m2):
        if value < 0:
            raise ValueError("multiplicities must be non-negative")
    count = 0
    a_max, b_max, c_max = d - m0, d - m1, d - m2
    if a_max < 0 or b_max < 0 or c_max < 0:
        return -1
    for a in range(0, a_max + 1):
        # b + c = d - a with b <= b_max, c <= c_max.
        lo = max(0, d - a - c_max)
        hi = min(b_max, d - a)
        if hi >= lo:
            count += hi - lo + 1
    return count - 1
