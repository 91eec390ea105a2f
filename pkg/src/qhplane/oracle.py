"""Finite-field interpolation oracle.

Measures the generic dimension of a fat-point system directly: sample the
base points at random over F_p, build the conditions-by-monomials matrix,
and take corank - 1.  A point of multiplicity m contributes the m(m+1)/2
coefficient-vanishing conditions of total order < m on the polynomial
shifted to that point; the rows are binomial-expansion coefficients, which
are valid in any characteristic (Hasse-derivative conditions).

By semicontinuity the generic dimension is the minimum over point choices,
so we take the minimum over independent trials.  Working over a big prime
field instead of the complex numbers can only inflate the measured
dimension on pathological point choices, which the multi-trial minimum
makes negligible at the sizes used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .core import (
    DimensionResult,
    QuasiHomogeneousSystem,
    Status,
    expected_dim,
)

MERSENNE_31 = 2**31 - 1


@dataclass(frozen=True)
class OracleConfig:
    prime: int = MERSENNE_31
    trials: int = 3
    seed: int = 20209

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.prime < 2 or not _is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    def as_dict(self) -> dict:
        return {"prime": self.prime, "trials": self.trials, "seed": self.seed}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


DEFAULT_CONFIG = OracleConfig()


def _binomials(n: int, p: int) -> np.ndarray:
    """Pascal triangle mod p, shape (n+1, n+1)."""
    C = np.zeros((n + 1, n + 1), dtype=np.int64)
    C[:, 0] = 1
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            C[i, j] = (C[i - 1, j - 1] + C[i - 1, j]) % p
    return C


def condition_rows(
    d: int, points: Sequence[tuple[int, int, int]], p: int
) -> np.ndarray:
    """Interpolation matrix for degree-d curves, one block of rows per point.

    points: (x, y, mult) in the affine chart z = 1.  Columns are indexed by
    the monomials x^a y^b with a + b <= d.  The row for derivative order
    (i, j), i + j < mult, at (px, py) has entry C(a,i) C(b,j) px^(a-i)
    py^(b-j) in the (a, b) column: the x^i y^j coefficient of the monomial
    shifted to the point.
    """
    cols = [(a, b) for a in range(d + 1) for b in range(d + 1 - a)]
    col_index = {ab: idx for idx, ab in enumerate(cols)}
    C = _binomials(d, p)
    rows = []
    for px, py, mult in points:
        if mult <= 0:
            continue
        xpow = np.ones(d + 1, dtype=np.int64)
        ypow = np.ones(d + 1, dtype=np.int64)
        for k in range(1, d + 1):
            xpow[k] = xpow[k - 1] * (px % p) % p
            ypow[k] = ypow[k - 1] * (py % p) % p
        for i in range(mult):
            for j in range(mult - i):
                row = np.zeros(len(cols), dtype=np.int64)
                for (a, b), idx in col_index.items():
                    if a >= i and b >= j:
                        row[idx] = (
                            C[a, i] * C[b, j] % p * xpow[a - i] % p * ypow[b - j] % p
                        )
                rows.append(row)
    if not rows:
        return np.zeros((0, len(cols)), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank over F_p by Gaussian elimination, pivoting on the first nonzero
    entry of each column.  int64 is safe: products stay below 2^62 for
    p <= 2^31 - 1."""
    A = matrix % p
    rows, cols = A.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivot = None
        for r in range(rank, rows):
            if A[r, col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            A[[rank, pivot]] = A[[pivot, rank]]
        inv = pow(int(A[rank, col]), p - 2, p)
        below = A[rank + 1 :, col]
        nz = below != 0
        if nz.any():
            factors = below[nz] * inv % p
            A[rank + 1 :][nz] = (A[rank + 1 :][nz] - factors[:, None] * A[rank]) % p
        rank += 1
    return rank


MultsLike = Union[QuasiHomogeneousSystem, tuple[int, Sequence[int]]]


def _as_degree_mults(system: MultsLike) -> tuple[int, list[int]]:
    if isinstance(system, QuasiHomogeneousSystem):
        return system.d, system.multiplicities()
    d, mults = system
    return d, list(mults)


def measure_dim_mults(
    d: int,
    mults: Sequence[int],
    cfg: OracleConfig = DEFAULT_CONFIG,
    shift: tuple[int, int] = (0, 0),
) -> int:
    """Generic dimension of degree-d curves with the given multiplicities at
    random points; min over cfg.trials independent point samples.

    shift translates every sample point by a fixed vector (used by the
    translation-invariance check)."""
    if any(m < 0 for m in mults):
        raise ValueError("multiplicities must be non-negative")
    if d < 0:
        return -1
    if cfg.prime <= d:
        raise ValueError(f"prime {cfg.prime} must exceed the degree {d}")
    p = cfg.prime
    cols = (d + 1) * (d + 2) // 2
    active = [m for m in mults if m > 0]
    best = None
    for trial in range(cfg.trials):
        rng = np.random.default_rng([cfg.seed, trial, d, len(active)])
        coords = rng.integers(0, p, size=(len(active), 2), dtype=np.int64)
        points = [
            ((int(x) + shift[0]) % p, (int(y) + shift[1]) % p, m)
            for (x, y), m in zip(coords, active)
        ]
        matrix = condition_rows(d, points, p)
        dim = cols - rank_mod_p(matrix, p) - 1
        best = dim if best is None else min(best, dim)
    return best if best is not None else cols - 1


def measure_dim(
    system: MultsLike, cfg: OracleConfig = DEFAULT_CONFIG
) -> DimensionResult:
    d, mults = _as_degree_mults(system)
    dim = measure_dim_mults(d, mults, cfg)
    return DimensionResult(
        dim=dim,
        status=Status.ORACLE_MEASURED,
        certificate={"oracle": cfg.as_dict()},
    )


def measure_speciality(
    system: QuasiHomogeneousSystem, cfg: OracleConfig = DEFAULT_CONFIG
) -> tuple[int, int, bool]:
    """(measured dim, expected dim, special?)."""
    dim = measure_dim(system, cfg).dim
    e = expected_dim(system)
    return dim, e, dim > e
