"""Quasi-homogeneous (-1)-classes, (-1)-configurations, and the fixed-part
decompositions that force speciality.

A quasi-homogeneous (-1)-class is a system with self-intersection -1 and
arithmetic genus 0; the two conditions reduce, after two changes of
variables, to factorizations x*y = (m-1)(2m+1), so the classes can be
enumerated exactly.  Orbits of non-quasi-homogeneous (-1)-curves under
permutation of the n points give the compound configurations.  A system
meeting such a curve to order -N <= -2 contains it N times in its base
locus and is therefore special; `find_special_decomposition` searches for
that situation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .core import QuasiHomogeneousSystem, invariants, virtual_dim
from .core import L as _L
from .cremona import MultiplicitySequence, reduces_to_line

DEFAULT_E_MAX = 50


@dataclass(frozen=True)
class MinusOneClass:
    system: QuasiHomogeneousSystem
    family: str  # "Line" | "Conic5" | "LinePencil" | "Hyperbola"
    witness: Optional[tuple[int, int]] = None  # (x, y) for the Hyperbola family
    e: Optional[int] = None  # parameter of the LinePencil family

    @property
    def uv(self) -> Optional[tuple[int, int]]:
        d, _, n, m = self.system.as_tuple()
        return (4 * d - n * m, 2 * d - n * m)

    def to_row(self) -> dict:
        d, m0, n, m = self.system.as_tuple()
        x, y = self.witness if self.witness else (None, None)
        return {"d": d, "m0": m0, "n": n, "m": m, "x": x, "y": y, "family": self.family}


@dataclass(frozen=True)
class MinusOneConfiguration:
    """A quasi-homogeneous union of disjoint (-1)-curves on n points.

    Compound case (count = n): the full orbit of a curve of shape
    (delta; mu0, mu1, mu2^(n-1)) under permutation of the n points, one
    member per choice of the mu1 point.  Non-compound case (count = 1): a
    single quasi-homogeneous (-1)-curve, recorded with mu1 = mu2."""

    delta: int
    mu0: int
    mu1: int
    mu2: int
    n: int
    count: int = -1  # defaults to n (orbit case)

    def __post_init__(self):
        if self.count == -1:
            object.__setattr__(self, "count", self.n)
        if self.count not in (1, self.n):
            raise ValueError("count must be 1 or n")
        if self.count == 1 and self.mu1 != self.mu2:
            raise ValueError("a single curve has one multiplicity at the n points")

    @property
    def curve(self) -> tuple[int, int, int, int]:
        return (self.delta, self.mu0, self.mu1, self.mu2)

    @property
    def total(self) -> QuasiHomogeneousSystem:
        if self.count == 1:
            return _L(self.delta, self.mu0, self.n, self.mu1)
        return _L(
            self.n * self.delta,
            self.n * self.mu0,
            self.n,
            self.mu1 + (self.n - 1) * self.mu2,
        )

    @property
    def compound(self) -> bool:
        return self.count >= 2

    def member_sequence(self) -> MultiplicitySequence:
        return MultiplicitySequence(
            self.delta, (self.mu0, self.mu1) + (self.mu2,) * (self.n - 1)
        )

    def member_intersection(self, L: QuasiHomogeneousSystem) -> int:
        """L . A for any single orbit member A (all members give the same
        number when L is quasi-homogeneous on the same n points)."""
        assert L.n == self.n
        return L.d * self.delta - L.m0 * self.mu0 - L.m * (
            self.mu1 + (self.n - 1) * self.mu2
        )

    def to_row(self) -> dict:
        t = self.total
        return {
            "d": t.d, "m0": t.m0, "n": t.n, "m": t.m,
            "delta": self.delta, "mu0": self.mu0, "mu1": self.mu1, "mu2": self.mu2,
            "compound": self.compound,
        }


def _is_minus_one_class(L: QuasiHomogeneousSystem) -> bool:
    inv = invariants(L)
    return inv.self_int == -1 and inv.genus == 0


def hyperbola_solutions(m: int) -> list[tuple[int, int]]:
    """Factorizations x*y = (m-1)(2m+1) giving a (-1)-class for this m:
    x + m >= y, x - y = m (mod 2), and m | x + 2y - 1."""
    target = (m - 1) * (2 * m + 1)
    out = []
    for x in range(1, target + 1):
        if target % x:
            continue
        y = target // x
        if x + m < y:
            continue
        if (x - y - m) % 2:
            continue
        if (x + 2 * y - 1) % m:
            continue
        out.append((x, y))
    return out


def _hyperbola_class(m: int, x: int, y: int) -> MinusOneClass:
    d = (x + y + 3 * m) // 2
    m0 = (x - y + m) // 2
    n = (x + 2 * y - 1) // m + 4
    return MinusOneClass(_L(d, m0, n, m), family="Hyperbola", witness=(x, y))


def enumerate_qh_classes(
    m_max: int, e_max: int = DEFAULT_E_MAX
) -> list[MinusOneClass]:
    """All quasi-homogeneous (-1)-classes with m <= m_max; the infinite
    pencil family (e, e-1, 2e, 1) is truncated at e_max."""
    return list(_enumerate_qh_classes_cached(m_max, e_max))


@lru_cache(maxsize=256)
def _enumerate_qh_classes_cached(
    m_max: int, e_max: int
) -> tuple[MinusOneClass, ...]:
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    classes = [
        MinusOneClass(_L(1, 1, 1, 1), family="Line"),
        MinusOneClass(_L(2, 0, 5, 1), family="Conic5"),
    ]
    classes += [
        MinusOneClass(_L(e, e - 1, 2 * e, 1), family="LinePencil", e=e)
        for e in range(1, e_max + 1)
    ]
    for m in range(2, m_max + 1):
        for x, y in hyperbola_solutions(m):
            classes.append(_hyperbola_class(m, x, y))
    classes.sort(key=lambda c: (c.system.m, c.system.d, c.system.m0))
    for c in classes:
        assert _is_minus_one_class(c.system), c
    return tuple(classes)


def enumerate_homogeneous_classes() -> list[QuasiHomogeneousSystem]:
    """The homogeneous (-1)-classes, in their m0 = 0 normal form."""
    return [_L(1, 0, 2, 1), _L(2, 0, 5, 1)]


def homogeneous_form(L: QuasiHomogeneousSystem) -> Optional[QuasiHomogeneousSystem]:
    """m0 = 0 normal form of L if it is homogeneous (m0 = 0 or m0 = m)."""
    if L.m0 == 0:
        return L
    if L.m0 == L.m:
        return _L(L.d, 0, L.n + 1, L.m)
    return None


def enumerate_configurations(
    m_max: int,
    delta_max: Optional[int] = None,
    e_max: int = DEFAULT_E_MAX,
    require_irreducible_member: bool = True,
) -> list[MinusOneConfiguration]:
    return list(
        _enumerate_configurations_cached(
            m_max, delta_max, e_max, require_irreducible_member
        )
    )


@lru_cache(maxsize=256)
def _enumerate_configurations_cached(
    m_max: int,
    delta_max: Optional[int],
    e_max: int,
    require_irreducible_member: bool,
) -> tuple[MinusOneConfiguration, ...]:
    """Quasi-homogeneous (-1)-configurations with total multiplicity
    m = mu1 + (n-1) mu2 <= m_max.

    Compound case: for mu2 >= 1 the disjointness condition pins n, and the
    member must be a genuine (-1)-curve (self-intersection, genus, and
    reduction to a line by Cremona transformations); mu2 = 0 forces
    (delta, mu0, mu1) = (1, 1, 1), the family of the e lines through p0,
    truncated at e_max.  Non-compound case: every quasi-homogeneous
    (-1)-class counts as a single-curve configuration.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    if delta_max is None:
        delta_max = _auto_delta_max(m_max)
    found: list[MinusOneConfiguration] = []
    # Single-curve configurations.
    for c in enumerate_qh_classes(m_max, e_max=e_max):
        s = c.system
        found.append(
            MinusOneConfiguration(s.d, s.m0, s.m, s.m, n=s.n, count=1)
        )
    # The lines-through-p0 family (delta, mu0, mu1, mu2) = (1, 1, 1, 0).
    found += [MinusOneConfiguration(1, 1, 1, 0, n=e) for e in range(2, e_max + 1)]
    for delta in range(1, delta_max + 1):
        for mu0 in range(0, delta + 1):
            for mu2 in range(1, delta + 1):
                for mu1 in (mu2 - 1, mu2 + 1):
                    if mu1 < 0:
                        continue
                    num = delta**2 - mu0**2 - 2 * mu1 * mu2
                    if num % mu2**2:
                        continue
                    n = num // mu2**2 + 2
                    if n < 2:
                        continue
                    cfg = MinusOneConfiguration(delta, mu0, mu1, mu2, n)
                    # member is a (-1)-class ...
                    if delta**2 - mu0**2 - mu1**2 - (n - 1) * mu2**2 != -1:
                        continue
                    # ... of genus zero ...
                    if 3 * delta - mu0 - mu1 - (n - 1) * mu2 != 1:
                        continue
                    if cfg.total.m > m_max:
                        continue
                    # ... and an actual curve.
                    if require_irreducible_member:
                        ok, _ = reduces_to_line(cfg.member_sequence())
                        if not ok:
                            continue
                    found.append(cfg)
    # The same orbit can arise with the mu1 / mu2 roles swapped (n = 2);
    # keep one representative per member-multiplicity multiset.
    seen: set = set()
    unique: list[MinusOneConfiguration] = []
    for cfg in found:
        key = (
            cfg.count,
            cfg.n,
            cfg.delta,
            cfg.mu0,
            tuple(sorted((cfg.mu1,) + (cfg.mu2,) * max(cfg.n - 1, 0))),
        )
        if key in seen:
            continue
        seen.add(key)
        unique.append(cfg)
    unique.sort(key=lambda c: (c.total.m, c.total.d, c.total.m0, c.n))
    return tuple(unique)


@lru_cache(maxsize=256)
def _auto_delta_max(m_max: int, quiet_run: int = 3) -> int:
    """Smallest search bound such that no new solution appears for
    `quiet_run` consecutive values of delta."""
    delta = 0
    quiet = 0
    while quiet < quiet_run:
        delta += 1
        hit = False
        for mu0 in range(0, delta + 1):
            for mu2 in range(1, delta + 1):
                for mu1 in (mu2 - 1, mu2 + 1):
                    num = delta**2 - mu0**2 - 2 * mu1 * mu2
                    if mu1 < 0 or num % mu2**2:
                        continue
                    n = num // mu2**2 + 2
                    if n < 2:
                        continue
                    if delta**2 - mu0**2 - mu1**2 - (n - 1) * mu2**2 != -1:
                        continue
                    if 3 * delta - mu0 - mu1 - (n - 1) * mu2 != 1:
                        continue
                    if mu1 + (n - 1) * mu2 <= m_max:
                        hit = True
        quiet = 0 if hit else quiet + 1
    return delta


def is_irreducible_class(c: MinusOneClass) -> tuple[bool, dict]:
    """Whether the (-1)-class contains an irreducible (-1)-curve.

    Criterion: greedy quadratic Cremona transformations (always the three
    largest multiplicities) reach the line through two points.  On failure
    the trace names an irreducible class met negatively, if one exists."""
    if not _is_minus_one_class(c.system):
        raise ValueError(f"{c.system} is not a (-1)-class")
    seq = MultiplicitySequence(c.system.d, tuple(c.system.multiplicities()))
    ok, trace = reduces_to_line(seq)
    cert: dict = {"trace": trace}
    if not ok:
        blocker = _blocking_class(c.system)
        if blocker is not None:
            cert["blocking_class"] = blocker
    return ok, cert


def _blocking_class(L: QuasiHomogeneousSystem) -> Optional[dict]:
    for other in enumerate_qh_classes(m_max=max(1, L.m), e_max=max(L.n, 1)):
        o = other.system
        if o.n != L.n or o.as_tuple() == L.as_tuple():
            continue
        pairing = L.d * o.d - L.m0 * o.m0 - L.n * L.m * o.m
        if pairing < 0:
            ok, _ = reduces_to_line(
                MultiplicitySequence(o.d, tuple(o.multiplicities()))
            )
            if ok:
                residual = (L.d - o.d, L.m0 - o.m0, L.n, L.m - o.m)
                res_v = (
                    residual[0] * (residual[0] + 3) // 2
                    - residual[1] * (residual[1] + 1) // 2
                    - residual[2] * residual[3] * (residual[3] + 1) // 2
                )
                return {
                    "class": o.as_tuple(),
                    "intersection": pairing,
                    "residual": residual,
                    "residual_v": res_v,
                }
    return None


# ---------------------------------------------------------------------------
# (-1)-special decompositions.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Candidate:
    """A (-1)-curve orbit usable as a fixed part of L: either a single
    quasi-homogeneous class on all n points, or a configuration orbit."""

    kind: str  # "class" | "configuration"
    total: QuasiHomogeneousSystem
    label: str
    member_mults: tuple[int, int, int]  # (mu0, mu1, mu2) of one member
    delta: int
    count: int  # curves in the orbit: 1 for a class, n for a configuration

    def member_intersection(self, d: int, m0: int, m: int) -> int:
        mu0, mu1, mu2 = self.member_mults
        n = self.total.n
        return d * self.delta - m0 * mu0 - m * (mu1 + (n - 1) * mu2)


@dataclass
class SpecialDecomposition:
    fixed_parts: list[tuple[_Candidate, int]]
    residual: tuple[int, int, int, int]  # lattice data; entries may be negative
    residual_v: int

    def max_N(self) -> int:
        return max(N for _, N in self.fixed_parts)

    def to_dict(self) -> dict:
        return {
            "fixed_parts": [
                {"curve": c.label, "total": c.total.as_tuple(), "N": N,
                 "curves": c.count}
                for c, N in self.fixed_parts
            ],
            "residual": self.residual,
            "residual_v": self.residual_v,
        }


def _lattice_v(d: int, m0: int, n: int, m: int) -> int:
    return d * (d + 3) // 2 - m0 * (m0 + 1) // 2 - n * m * (m + 1) // 2


def candidates_for(L: QuasiHomogeneousSystem, e_max: int = DEFAULT_E_MAX) -> list[_Candidate]:
    """The (-1)-curve orbits on exactly the n points of L: irreducible
    quasi-homogeneous classes with the same n, plus configuration orbits of
    n members."""
    return list(_candidates_cached(L.n, L.m, e_max))


@lru_cache(maxsize=4096)
def _candidates_cached(n: int, m: int, e_max: int) -> tuple[_Candidate, ...]:
    if n == 0:
        return ()
    out: list[_Candidate] = []
    for c in enumerate_qh_classes(m_max=max(1, m), e_max=max(e_max, n)):
        s = c.system
        if s.n != n:
            continue
        ok, _ = reduces_to_line(MultiplicitySequence(s.d, tuple(s.multiplicities())))
        if not ok:
            continue
        out.append(
            _Candidate(
                kind="class",
                total=s,
                label=str(s),
                member_mults=(s.m0, s.m, s.m),
                delta=s.d,
                count=1,
            )
        )
    for cfg in enumerate_configurations(
        m_max=max(1, m), e_max=max(e_max, n)
    ):
        if cfg.n != n or not cfg.compound:
            continue
        out.append(
            _Candidate(
                kind="configuration",
                total=cfg.total,
                label=f"orbit({cfg.delta};{cfg.mu0},{cfg.mu1},{cfg.mu2}^{n - 1})",
                member_mults=(cfg.mu0, cfg.mu1, cfg.mu2),
                delta=cfg.delta,
                count=cfg.count,
            )
        )
    return tuple(out)


def _pairwise_disjoint(fixed: list[tuple[_Candidate, int]], n: int) -> bool:
    mem = [(c.delta, *c.member_mults) for c, _ in fixed]
    for i in range(len(mem)):
        for j in range(i + 1, len(mem)):
            di, a0, a1, a2 = mem[i]
            dj, b0, b1, b2 = mem[j]
            # members placed with their mu1-points at distinct base points
            pairing = di * dj - a0 * b0 - a1 * b2 - a2 * b1 - (n - 2) * a2 * b2
            if pairing != 0:
                return False
    return True


def find_special_decomposition(
    L: QuasiHomogeneousSystem, classes: Optional[list[_Candidate]] = None
) -> Optional[SpecialDecomposition]:
    """Fixed-part decomposition L = sum N_j A_j + M with some N_j >= 2,
    v(M) >= 0, and M meeting the enumerated curves non-negatively; None if
    no enumerated curve orbit meets L to order <= -2."""
    if classes is None:
        classes = candidates_for(L)
    d, m0, n, m = L.as_tuple()
    fixed: dict[int, int] = {}
    changed = True
    while changed:
        changed = False
        for idx, cand in enumerate(classes):
            t = cand.member_intersection(d, m0, m)
            if t <= -2:
                N = -t
                fixed[idx] = fixed.get(idx, 0) + N
                td, tm0, tm = cand.total.d, cand.total.m0, cand.total.m
                d, m0, m = d - N * td, m0 - N * tm0, m - N * tm
                if d < 0 or m0 < 0 or m < 0:
                    # the forced fixed part exceeds the system: no effective
                    # residual exists (the system is empty, not special)
                    return None
                changed = True
    if not fixed:
        return None
    parts = [(classes[i], N) for i, N in fixed.items()]
    if not _pairwise_disjoint(parts, n):
        return None
    res_v = _lattice_v(d, m0, n, m)
    if res_v < 0:
        return None
    # Residual may keep simple (-1)-curves in its base locus; it must not
    # meet any enumerated curve to order <= -2.
    for cand in classes:
        if cand.member_intersection(d, m0, m) <= -2:
            return None
    decomp = SpecialDecomposition(
        fixed_parts=parts, residual=(d, m0, n, m), residual_v=res_v
    )
    # Fixed-part accounting (residual v minus system v) is exact; the sum
    # runs over individual curves, so an orbit contributes once per member.
    assert res_v - virtual_dim(L) == sum(
        c.count * N * (N - 1) // 2 for c, N in parts
    )
    return decomp
