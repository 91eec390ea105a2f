"""Quadratic Cremona transformations and the large-m0 dimension theory.

A quadratic transformation based at three of the base points sends degree d
to 2d - mi - mj - mk and adjusts the three multiplicities; it preserves the
generic dimension of the system and (when all entries stay non-negative)
the virtual dimension.  Systems L(d, m0, n, m) with m0 within one of d - m
reduce, by splitting off the lines through p0 and by Cremona
transformations, to closed-form dimensions; those closed forms are the
workhorse base cases of the degeneration recursion.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .core import (
    DimensionResult,
    QuasiHomogeneousSystem,
    Status,
    expected_dim,
    multiplicity_one,
    trinomial_dim,
    virtual_dim,
)
from .core import L as _L


@dataclass(frozen=True)
class MultiplicitySequence:
    """(degree; multiplicities), index 0 distinguished.

    Negative entries are allowed during class computations (the
    transformation acts on the Picard lattice); `is_effective` gates any
    dimension claim.
    """

    degree: int
    mults: tuple[int, ...]
    from_empty_warning: bool = False

    @property
    def is_effective(self) -> bool:
        return self.degree >= 0 and all(m >= 0 for m in self.mults)

    def virtual_dim(self) -> int:
        return self.degree * (self.degree + 3) // 2 - sum(
            m * (m + 1) // 2 for m in self.mults
        )

    def dropped_zeros(self) -> "MultiplicitySequence":
        return replace(self, mults=tuple(m for m in self.mults if m != 0))

    def __str__(self) -> str:
        return f"({self.degree}; {', '.join(map(str, self.mults))})"


def sequence_of(system: QuasiHomogeneousSystem) -> MultiplicitySequence:
    return MultiplicitySequence(system.d, tuple(system.multiplicities()))


def quadratic_transform(
    s: MultiplicitySequence, i: int, j: int, k: int
) -> MultiplicitySequence:
    """Transform based at the points indexed i, j, k.

    Sets from_empty_warning when 2d < mi + mj + mk: every member of such a
    system meets a conic through the three points negatively, so the system
    is empty.
    """
    if len({i, j, k}) != 3:
        raise ValueError("base point indices must be distinct")
    for idx in (i, j, k):
        if idx < 0 or idx >= len(s.mults):
            raise IndexError(f"index {idx} out of range")
    d = s.degree
    mi, mj, mk = s.mults[i], s.mults[j], s.mults[k]
    mults = list(s.mults)
    mults[i] = d - mj - mk
    mults[j] = d - mi - mk
    mults[k] = d - mi - mj
    return MultiplicitySequence(
        degree=2 * d - mi - mj - mk,
        mults=tuple(mults),
        from_empty_warning=2 * d < mi + mj + mk,
    )


def reduces_to_line(
    s: MultiplicitySequence, max_steps: int = 10_000
) -> tuple[bool, list[dict]]:
    """Greedy Cremona reduction towards the line through two points (1; 1, 1).

    Pivots on the three largest multiplicities, ties broken by index.
    Succeeds iff the reduction reaches (1; 1, 1) through states with
    non-negative entries and strictly decreasing degree; used as the
    numerical irreducibility criterion for (-1)-classes.
    """
    trace: list[dict] = []
    cur = s.dropped_zeros()
    for _ in range(max_steps):
        if cur.degree == 1 and sorted(cur.mults) == [1, 1]:
            return True, trace
        if cur.degree < 1 or any(m < 0 for m in cur.mults):
            trace.append({"state": str(cur), "fail": "negative entry"})
            return False, trace
        padded = list(cur.mults) + [0] * max(0, 3 - len(cur.mults))
        order = sorted(range(len(padded)), key=lambda t: (-padded[t], t))
        i, j, k = order[:3]
        nxt = quadratic_transform(
            MultiplicitySequence(cur.degree, tuple(padded)), i, j, k
        )
        if nxt.degree >= cur.degree:
            trace.append({"state": str(cur), "fail": "degree does not decrease"})
            return False, trace
        trace.append({"state": str(cur), "pivot": (i, j, k), "to": str(nxt)})
        if nxt.degree < 1 or any(m < 0 for m in nxt.mults):
            trace.append({"state": str(nxt), "fail": "negative entry"})
            return False, trace
        cur = nxt.dropped_zeros()
    return False, trace + [{"fail": "step limit"}]


# ---------------------------------------------------------------------------
# Closed forms for m0 >= d - m - 1.
# ---------------------------------------------------------------------------


def dim_few_points(L: QuasiHomogeneousSystem) -> DimensionResult:
    """Exact dimension when there are at most three fat points in total
    (n <= 2) or all the n points are simple (m <= 1)."""
    d, m0, n, m = L.as_tuple()
    if n <= 2:
        dim = trinomial_dim(d, m0, m if n >= 1 else 0, m if n >= 2 else 0)
    elif m <= 1:
        dim = multiplicity_one(trinomial_dim(d, m0, 0, 0), n)
    else:
        raise ValueError(f"{L} has more than two equal fat points")
    e = expected_dim(L)
    status = Status.SPECIAL_PROVED if dim > e else Status.NON_SPECIAL_PROVED
    return DimensionResult(dim=dim, status=status, certificate={"base": "few-points"})


def dim_m0_eq_d_minus_m(L: QuasiHomogeneousSystem) -> DimensionResult:
    """Closed form for L(d, d-m, n, m), 2 <= m <= d.

    With d = qm + mu (0 <= mu < m) and n = 2h + eps, the system is special
    exactly when q = h, eps = 0 and mu <= m - 2.
    """
    d, m0, n, m = L.as_tuple()
    if not (2 <= m <= d) or m0 != d - m:
        raise ValueError(f"{L} is not of the form L(d, d-m, n, m) with 2 <= m <= d")
    q, mu = divmod(d, m)
    h, eps = divmod(n, 2)
    cert = {"base": "m0=d-m", "q": q, "mu": mu, "h": h, "eps": eps}
    if q >= h + 1:
        dim = d * (m + 1) - m * (m - 1) // 2 - n * m * (m + 1) // 2
        return DimensionResult(dim, Status.NON_SPECIAL_PROVED, cert)
    if q == h and eps == 1:
        return DimensionResult(-1, Status.NON_SPECIAL_PROVED, cert)
    if q == h and mu == m - 1:
        return DimensionResult((m - 1) * (m + 2) // 2, Status.NON_SPECIAL_PROVED, cert)
    if q == h:
        return DimensionResult(mu * (mu + 3) // 2, Status.SPECIAL_PROVED, cert)
    return DimensionResult(-1, Status.NON_SPECIAL_PROVED, cert)


def dim_m0_eq_d_minus_m_minus_1(L: QuasiHomogeneousSystem) -> DimensionResult:
    """Closed form for L(d, d-m-1, n, m), 2 <= m <= d-1.

    Here d = q(m-1) + mu with 0 <= mu <= m-2, n = 2h + eps.  Outside the two
    exceptional strata the dimension is the expected one."""
    d, m0, n, m = L.as_tuple()
    if not (2 <= m <= d - 1) or m0 != d - m - 1:
        raise ValueError(f"{L} is not of the form L(d, d-m-1, n, m) with 2 <= m <= d-1")
    q, mu = divmod(d, m - 1)
    h, eps = divmod(n, 2)
    cert = {"base": "m0=d-m-1", "q": q, "mu": mu, "h": h, "eps": eps}
    if q == h + 1 and mu == 0 and eps == 0 and (m - 1) * (m + 2) >= 4 * h:
        dim = (m - 1) * (m + 2) // 2 - 2 * h
        special = dim > expected_dim(L)
        status = Status.SPECIAL_PROVED if special else Status.NON_SPECIAL_PROVED
        return DimensionResult(dim, status, cert)
    if q == h and eps == 0 and 4 * q <= mu * (mu + 3):
        dim = mu * (mu + 3) // 2 - 2 * q
        special = dim > expected_dim(L)
        status = Status.SPECIAL_PROVED if special else Status.NON_SPECIAL_PROVED
        return DimensionResult(dim, status, cert)
    dim = max(-1, d * (m + 2) - (n + 1) * m * (m + 1) // 2)
    return DimensionResult(dim, Status.NON_SPECIAL_PROVED, cert)


def dim_m0_ge_d_minus_m(L: QuasiHomogeneousSystem) -> DimensionResult:
    """Dimension of L(d, m0, n, m) with m0 >= d - m, via splitting off the n
    lines through p0.

    Covers m0 > d (empty), m0 = d and m0 = d - 1 directly, and reduces
    m0 = d - m + k (k >= 1) to the residual L(d-kn, d-kn-m+k, n, m-k)."""
    d, m0, n, m = L.as_tuple()
    if n == 0 or m == 0:
        return dim_few_points(L)
    if m0 > d or m > d:
        return DimensionResult(-1, Status.NON_SPECIAL_PROVED, {"base": "mult>deg"})
    if m0 < d - m:
        raise ValueError(f"{L} has m0 < d - m")
    if m0 == d - m:
        if m == 1:
            return dim_few_points(L)
        return dim_m0_eq_d_minus_m(L)
    k = m0 - (d - m)
    # Each line through p0 and a base point meets the system in
    # m0 + m > d points, so splits off; iterated k times per line.
    rd, rm0, rm = d - k * n, m0 - k * n, m - k
    cert = {"base": "m0=d-m+k", "k": k, "residual": (rd, max(rm0, 0), n, max(rm, 0))}
    if rd < 0:
        return DimensionResult(-1, Status.NON_SPECIAL_PROVED, cert)
    if rm <= 0:
        # Residual has no conditions at the n points (m0 = d case included).
        dim = trinomial_dim(rd, max(rm0, 0), 0, 0) if rm0 >= 0 else trinomial_dim(rd, 0, 0, 0)
        if rm0 < 0:
            # More line splittings were forced than p0 could absorb: the
            # leftover multiplicities exceed the leftover degree.
            dim = -1
        special = dim > expected_dim(L)
        status = Status.SPECIAL_PROVED if special else Status.NON_SPECIAL_PROVED
        return DimensionResult(dim, status, cert)
    if rm0 < 0:
        return DimensionResult(-1, Status.NON_SPECIAL_PROVED, cert)
    sub = dim_m0_ge_d_minus_m(_L(rd, rm0, n, rm))
    dim = sub.dim
    special = dim > expected_dim(L)
    status = Status.SPECIAL_PROVED if special else Status.NON_SPECIAL_PROVED
    cert["residual_status"] = sub.status.value
    return DimensionResult(dim, status, cert)


def dim_large_m0(L: QuasiHomogeneousSystem) -> DimensionResult:
    """Dispatch for the whole m0 >= d - m - 1 regime."""
    d, m0, n, m = L.as_tuple()
    if n == 0 or m == 0 or n <= 2 or m == 1:
        return dim_few_points(L)
    if m0 > d or m > d:
        return DimensionResult(-1, Status.NON_SPECIAL_PROVED, {"base": "mult>deg"})
    if m0 >= d - m:
        return dim_m0_ge_d_minus_m(L)
    if m0 == d - m - 1:
        return dim_m0_eq_d_minus_m_minus_1(L)
    raise ValueError(f"{L} has m0 < d - m - 1")
