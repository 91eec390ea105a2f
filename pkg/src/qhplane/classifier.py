"""Top-level dimension and speciality classification.

For m <= 3 the answer is a theorem: a system is special exactly when it
appears in the eleven-family (-1)-special table, and then its dimension is
the tabulated one; every other system has the expected dimension.  For
m >= 4 the same machinery returns a prediction: proved closed forms where
they apply, otherwise the (-1)-curve fixed-part accounting, labelled
Conjectural.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .core import (
    DimensionResult,
    QuasiHomogeneousSystem,
    Status,
    expected_dim,
    virtual_dim,
)
from .cremona import dim_few_points, dim_large_m0
from .minus_one import SpecialDecomposition, find_special_decomposition


@dataclass(frozen=True)
class SpecialTableEntry:
    """One family of the (-1)-special table for m <= 3.

    match returns the (v, l) pair when the system belongs to the family."""

    name: str
    match: Callable[[int, int, int, int], Optional[tuple[int, int]]]


def _fixed(d0, m00, n0, m0v, v, l):
    def match(d, m0, n, m):
        return (v, l) if (d, m0, n, m) == (d0, m00, n0, m0v) else None

    return match


SPECIAL_TABLE: list[SpecialTableEntry] = [
    SpecialTableEntry("L(4,0,5,2)", _fixed(4, 0, 5, 2, -1, 0)),
    SpecialTableEntry(
        "L(2e,2e-2,2e,2)",
        lambda d, m0, n, m: (-1, 0)
        if m == 2 and d >= 2 and d % 2 == 0 and m0 == d - 2 and n == d
        else None,
    ),
    SpecialTableEntry(
        "L(d,d,e,2)",
        lambda d, m0, n, m: (d - 3 * n, d - 2 * n)
        if m == 2 and m0 == d and n >= 1 and d >= 2 * n
        else None,
    ),
    SpecialTableEntry("L(4,0,2,3)", _fixed(4, 0, 2, 3, 2, 3)),
    SpecialTableEntry("L(6,0,5,3)", _fixed(6, 0, 5, 3, -3, 0)),
    SpecialTableEntry("L(6,2,4,3)", _fixed(6, 2, 4, 3, 0, 1)),
    SpecialTableEntry(
        "L(3e,3e-3,2e,3)",
        lambda d, m0, n, m: (-3, 0)
        if m == 3 and d >= 3 and d % 3 == 0 and m0 == d - 3 and n == 2 * d // 3
        else None,
    ),
    SpecialTableEntry(
        "L(3e+1,3e-2,2e,3)",
        lambda d, m0, n, m: (1, 2)
        if m == 3 and d >= 4 and d % 3 == 1 and m0 == d - 3 and n == 2 * (d - 1) // 3
        else None,
    ),
    SpecialTableEntry(
        "L(4e,4e-2,2e,3)",
        lambda d, m0, n, m: (-1, 0)
        if m == 3 and d >= 4 and d % 4 == 0 and m0 == d - 2 and n == d // 2
        else None,
    ),
    SpecialTableEntry(
        "L(d,d-1,e,3)",
        lambda d, m0, n, m: (2 * d - 6 * n, 2 * d - 5 * n)
        if m == 3 and m0 == d - 1 and n >= 1 and 2 * d >= 5 * n
        else None,
    ),
    SpecialTableEntry(
        "L(d,d,e,3)",
        lambda d, m0, n, m: (d - 6 * n, d - 3 * n)
        if m == 3 and m0 == d and n >= 1 and d >= 3 * n
        else None,
    ),
]


@dataclass
class TableMatch:
    v: int
    l: int
    families: list[str]
    decomposition: Optional[SpecialDecomposition] = None


def lookup_special_table(
    L: QuasiHomogeneousSystem, with_decomposition: bool = True
) -> Optional[TableMatch]:
    """Match L against the (-1)-special table (m <= 3 only).

    A system may belong to several families (the fixed sporadic tuples all
    sit inside a parametric family); every match must agree on (v, l)."""
    if L.m > 3:
        raise ValueError(f"special table only covers m <= 3, got {L}")
    d, m0, n, m = L.as_tuple()
    hits = [
        (entry.name, got)
        for entry in SPECIAL_TABLE
        if (got := entry.match(d, m0, n, m)) is not None
    ]
    if not hits:
        return None
    values = {got for _, got in hits}
    assert len(values) == 1, f"table families disagree on {L}: {hits}"
    (v, l) = values.pop()
    assert v == virtual_dim(L), f"table v mismatch for {L}"
    assert l > expected_dim(L), f"table entry for {L} is not special"
    match = TableMatch(v=v, l=l, families=[name for name, _ in hits])
    if with_decomposition:
        match.decomposition = find_special_decomposition(L)
    return match


def dimension(L: QuasiHomogeneousSystem) -> DimensionResult:
    """Generic dimension of L with the strongest available status.

    m <= 3: exact (table families are special with the tabulated dimension,
    everything else is non-special).  m >= 4: exact in the few-point and
    large-m0 regimes, otherwise a Conjectural value from the (-1)-curve
    fixed-part accounting."""
    d, m0, n, m = L.as_tuple()
    if n <= 2 or m <= 1:
        return dim_few_points(L)
    if m <= 3:
        match = lookup_special_table(L)
        if match is not None:
            return DimensionResult(
                dim=match.l,
                status=Status.SPECIAL_PROVED,
                certificate={
                    "table": match.families,
                    "v": match.v,
                    "decomposition": match.decomposition.to_dict()
                    if match.decomposition
                    else None,
                },
            )
        return DimensionResult(
            dim=expected_dim(L),
            status=Status.NON_SPECIAL_PROVED,
            certificate={"theorem": "m<=3 complete classification"},
        )
    if m0 >= d - m - 1 or m0 > d or m > d:
        return dim_large_m0(L)
    decomp = find_special_decomposition(L)
    if decomp is not None and decomp.residual_v > expected_dim(L):
        return DimensionResult(
            dim=decomp.residual_v,
            status=Status.CONJECTURAL,
            certificate={"decomposition": decomp.to_dict()},
        )
    return DimensionResult(
        dim=expected_dim(L),
        status=Status.CONJECTURAL,
        certificate={"decomposition": None},
    )


def is_special(L: QuasiHomogeneousSystem) -> tuple[bool, DimensionResult]:
    result = dimension(L)
    return result.dim > expected_dim(L), result
