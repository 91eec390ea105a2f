import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhplane.core import L, invariants, virtual_dim
from qhplane.minus_one import (
    MinusOneClass,
    candidates_for,
    enumerate_configurations,
    enumerate_homogeneous_classes,
    enumerate_qh_classes,
    find_special_decomposition,
    homogeneous_form,
    hyperbola_solutions,
    is_irreducible_class,
)
from qhplane.oracle import measure_dim


def test_defining_equations_hold():
    for c in enumerate_qh_classes(10, e_max=30):
        inv = invariants(c.system)
        assert inv.self_int == -1
        assert inv.genus == 0
        assert inv.v == 0  # every (-1)-class has v = 0


def test_known_hyperbola_rows():
    rows = {
        c.system.as_tuple(): c.witness
        for c in enumerate_qh_classes(7)
        if c.family == "Hyperbola"
    }
    assert rows[(6, 3, 7, 2)] == (5, 1)
    assert rows[(12, 8, 9, 3)] == (14, 1)
    assert rows[(20, 15, 11, 4)] == (27, 1)
    assert rows[(30, 24, 13, 5)] == (44, 1)
    assert rows[(42, 35, 15, 6)] == (65, 1)
    assert rows[(20, 3, 8, 7)] == (9, 10)
    assert rows[(27, 17, 9, 7)] == (30, 3)


def test_extremal_family_present():
    # x = (m-1)(2m+1), y = 1 always satisfies (i)-(iv)
    for m in range(2, 31):
        tuples = {c.system.as_tuple() for c in enumerate_qh_classes(m, e_max=1)}
        assert (m * m + m, m * m - 1, 2 * m + 3, m) in tuples


def test_sorted_by_m_then_d():
    cs = enumerate_qh_classes(7)
    keys = [(c.system.m, c.system.d) for c in cs]
    assert keys == sorted(keys)


def test_rejects_bad_m_max():
    with pytest.raises(ValueError):
        enumerate_qh_classes(0)


@given(st.integers(2, 40))
def test_uv_xy_round_trip(m):
    for x, y in hyperbola_solutions(m):
        d = (x + y + 3 * m) // 2
        n = (x + 2 * y - 1) // m + 4
        u, v = 4 * d - n * m, 2 * d - n * m
        assert (u - v) // 2 == d
        assert x == u - 2 * m - 1
        assert y == 1 - m - v


def test_homogeneous_classes():
    got = [s.as_tuple() for s in enumerate_homogeneous_classes()]
    assert got == [(1, 0, 2, 1), (2, 0, 5, 1)]
    for s in enumerate_homogeneous_classes():
        assert virtual_dim(s) == 0


def test_homogeneous_cross_check():
    # the m0 <-> m symmetric condition finds no homogeneous class with m >= 2
    homo = set()
    for c in enumerate_qh_classes(100, e_max=5):
        h = homogeneous_form(c.system)
        if h is not None:
            homo.add(h.as_tuple())
    assert homo == {(1, 0, 2, 1), (2, 0, 5, 1)}


def test_enumeration_completeness_desk_scale():
    # brute-force scan of both Diophantine conditions, d <= 120 here
    # (the D = 200 scan runs in the acceptance suite)
    D = 120
    sols = set()
    for d in range(1, D + 1):
        for m0 in range(0, d + 1):
            t = 3 * d - m0 - 1  # = n*m
            if t <= 0:
                continue
            for m in range(1, d + 1):
                if t % m:
                    continue
                n = t // m
                if n >= 1 and d * d - m0 * m0 - n * m * m == -1:
                    sols.add((d, m0, n, m))
    m_max = max(s[3] for s in sols)
    enum = {
        c.system.as_tuple() for c in enumerate_qh_classes(m_max, e_max=2 * D)
    }
    assert sols <= enum


# -- configurations ----------------------------------------------------------


def test_configuration_table_m_le_10():
    compound = {
        (c.curve, c.n)
        for c in enumerate_configurations(10, delta_max=6, e_max=4)
        if c.compound and c.mu2 >= 1
    }
    assert compound == {
        ((1, 0, 0, 1), 3),
        ((2, 1, 0, 1), 5),
        ((2, 0, 0, 1), 6),
        ((3, 2, 0, 1), 7),
        ((3, 1, 2, 1), 6),
        ((3, 0, 2, 1), 7),
        ((4, 3, 0, 1), 9),
        ((5, 4, 0, 1), 11),
    }
    # plus the family of e lines through p0
    family = {
        c.n
        for c in enumerate_configurations(10, delta_max=6, e_max=4)
        if c.compound and c.curve == (1, 1, 1, 0)
    }
    assert family == {2, 3, 4}
    totals = {
        c.total.as_tuple()
        for c in enumerate_configurations(10, delta_max=6, e_max=4)
        if c.curve == (1, 1, 1, 0)
    }
    assert {(2, 2, 2, 1), (3, 3, 3, 1), (4, 4, 4, 1)} <= totals


def test_configuration_invariants():
    for c in enumerate_configurations(10, delta_max=6, e_max=6):
        n, delta, mu0, mu1, mu2 = c.n, c.delta, c.mu0, c.mu1, c.mu2
        # each member is a (-1)-class of genus 0
        assert delta**2 - mu0**2 - mu1**2 - (n - 1) * mu2**2 == -1
        assert 3 * delta - mu0 - mu1 - (n - 1) * mu2 == 1
        if c.compound and mu2 >= 1:
            assert (mu1 - mu2) ** 2 == 1
            # distinct members are disjoint
            assert delta**2 - mu0**2 - 2 * mu1 * mu2 - (n - 2) * mu2**2 == 0
            assert c.total.as_tuple() == (
                n * delta, n * mu0, n, mu1 + (n - 1) * mu2
            )


def test_homogeneous_configurations():
    homo = set()
    for c in enumerate_configurations(17, delta_max=8, e_max=3):
        h = homogeneous_form(c.total)
        if h is not None:
            homo.add(h.as_tuple())
    assert homo == {
        (1, 0, 2, 1),
        (2, 0, 5, 1),
        (3, 0, 3, 2),
        (12, 0, 6, 5),
        (21, 0, 7, 8),
        (48, 0, 8, 17),
    }


def test_three_lines_configuration():
    # L(3,0,3,2): each of the 3 points lies on 2 of the 3 lines
    cfgs = [
        c
        for c in enumerate_configurations(2, delta_max=3, e_max=1)
        if c.total.as_tuple() == (3, 0, 3, 2)
    ]
    assert len(cfgs) == 1
    c = cfgs[0]
    assert c.curve == (1, 0, 0, 1) and c.count == 3


# -- irreducibility ----------------------------------------------------------


def test_extremal_classes_irreducible():
    for m in range(2, 7):
        c = MinusOneClass(
            L(m * m + m, m * m - 1, 2 * m + 3, m), family="Hyperbola"
        )
        ok, cert = is_irreducible_class(c)
        assert ok, (m, cert)


def test_line_is_irreducible():
    ok, cert = is_irreducible_class(MinusOneClass(L(1, 1, 1, 1), family="Line"))
    assert ok
    assert cert["trace"] == []


def test_27_17_9_7_not_irreducible():
    ok, cert = is_irreducible_class(
        MinusOneClass(L(27, 17, 9, 7), family="Hyperbola")
    )
    assert not ok
    blocker = cert["blocking_class"]
    assert blocker["class"] == (12, 8, 9, 3)
    assert blocker["intersection"] == -1
    assert blocker["residual"] == (15, 9, 9, 4)
    assert blocker["residual_v"] == 0


def test_irreducibility_rejects_non_class():
    with pytest.raises(ValueError):
        is_irreducible_class(MinusOneClass(L(3, 0, 3, 1), family="Line"))


# -- decompositions ----------------------------------------------------------


def test_decomposition_examples():
    d = find_special_decomposition(L(4, 2, 2, 3))
    assert d is not None
    [(cand, N)] = d.fixed_parts
    assert (cand.total.as_tuple(), N) == ((1, 0, 2, 1), 2)
    assert d.residual == (2, 2, 2, 1)
    assert d.residual_v - virtual_dim(L(4, 2, 2, 3)) == 1

    d = find_special_decomposition(L(6, 0, 5, 3))
    assert d is not None
    [(cand, N)] = d.fixed_parts
    assert (cand.total.as_tuple(), N) == ((2, 0, 5, 1), 3)

    assert find_special_decomposition(L(5, 0, 4, 2)) is None
    # really non-special: measured dim equals e = 8
    assert measure_dim(L(5, 0, 4, 2)).dim == virtual_dim(L(5, 0, 4, 2)) == 8


def test_decomposition_lemma_accounting():
    # fixed-part accounting: disjoint fixed curves, exact dimension bookkeeping
    samples = [
        L(4, 0, 5, 2), L(6, 0, 5, 3), L(4, 2, 2, 3), L(8, 6, 4, 3),
        L(10, 10, 3, 2), L(12, 11, 4, 3), L(9, 9, 3, 3),
    ]
    for sys_ in samples:
        d = find_special_decomposition(sys_)
        assert d is not None, sys_
        assert d.max_N() >= 2
        assert d.residual_v >= 0
        total_curves = sum(c.count * N * (N - 1) // 2 for c, N in d.fixed_parts)
        assert d.residual_v - virtual_dim(sys_) == total_curves


def test_decomposition_agrees_with_oracle():
    for sys_ in [L(4, 0, 5, 2), L(6, 0, 5, 3), L(4, 2, 2, 3), L(8, 6, 4, 3)]:
        d = find_special_decomposition(sys_)
        assert d is not None
        assert measure_dim(sys_).dim == d.residual_v


def test_candidates_cover_both_kinds():
    kinds = {c.kind for c in candidates_for(L(6, 0, 5, 3))}
    assert kinds == {"class", "configuration"}
