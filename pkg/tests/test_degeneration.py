import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhplane.core import L, expected_dim, virtual_dim
from qhplane.degeneration import (
    BudgetExceeded,
    Certifier,
    DegenerationParams,
    DegenerationSplit,
    certify,
    dim_L0,
    split,
)
from qhplane.classifier import lookup_special_table
from qhplane.oracle import measure_dim


def test_split_example():
    s = split(L(6, 0, 5, 3), DegenerationParams(2, 3))
    assert s.LP.as_tuple() == (4, 0, 2, 3)
    assert s.LF.as_tuple() == (6, 4, 3, 3)
    assert s.hatLP.as_tuple() == (3, 0, 2, 3)
    assert s.hatLF.as_tuple() == (6, 5, 3, 3)
    # identity check: vP + vF = v + d - k
    assert virtual_dim(s.LP) + virtual_dim(s.LF) == virtual_dim(s.parent) + 4


def test_split_rejects_out_of_bounds():
    with pytest.raises(ValueError):
        split(L(6, 0, 5, 3), DegenerationParams(6, 3))
    with pytest.raises(ValueError):
        split(L(6, 0, 5, 3), DegenerationParams(2, 5))
    with pytest.raises(ValueError):
        split(L(6, 0, 5, 3), DegenerationParams(0, 3))


@settings(max_examples=200)
@given(
    st.integers(2, 30),
    st.integers(0, 30),
    st.integers(2, 15),
    st.integers(1, 6),
    st.data(),
)
def test_lemma_identities_on_all_splits(d, m0, n, m, data):
    k = data.draw(st.integers(1, d - 1))
    b = data.draw(st.integers(1, n - 1))
    s = split(L(d, m0, n, m), DegenerationParams(k, b))
    v = virtual_dim(s.parent)
    assert virtual_dim(s.LP) + virtual_dim(s.LF) == v + d - k
    assert virtual_dim(s.hatLP) + virtual_dim(s.LF) == v - 1
    assert virtual_dim(s.LP) + virtual_dim(s.hatLF) == v - 1


def test_dim_L0_all_empty():
    s = split(L(10, 0, 11, 3), DegenerationParams(3, 5))
    assert dim_L0(s, -1, -1, -1, -1) == -1


def test_dim_L0_boundary_consistency():
    # when rP + rF = d - k - 1 both formulas agree (asserted internally)
    s = split(L(6, 0, 6, 2), DegenerationParams(1, 3))
    d_k = 5
    lPhat, lFhat = 2, 1
    rP, rF = 2, d_k - 1 - 2
    lP, lF = rP + lPhat + 1, rF + lFhat + 1
    assert dim_L0(s, lP, lF, lPhat, lFhat) == lPhat + lFhat + 1 == lP + lF - d_k


def test_dim_L0_transversal_case():
    # l0 = lP + lF - (d - k) when the restricted series are transversal
    s = split(L(8, 0, 4, 2), DegenerationParams(1, 2))
    assert dim_L0(s, 20, 10, 5, 2) == 20 + 10 - 7


def test_certify_examples():
    assert certify(L(5, 0, 6, 2)).outcome == "NonSpecialProved"
    assert certify(L(5, 0, 6, 2)).dim == 2
    c = certify(L(6, 0, 9, 2))
    assert (c.outcome, c.dim) == ("NonSpecialProved", 0)
    assert certify(L(4, 0, 5, 2)).outcome == "Inconclusive"
    assert certify(L(10, 0, 11, 3)).outcome == "EmptyProved"


def test_certifier_never_proves_table_systems():
    cf = Certifier()
    for sys_ in (L(4, 0, 5, 2), L(6, 0, 5, 3), L(6, 2, 4, 3), L(8, 6, 4, 3)):
        assert lookup_special_table(sys_, with_decomposition=False) is not None
        assert cf.certify(sys_).outcome == "Inconclusive"


def test_certified_dims_match_oracle():
    cf = Certifier()
    for d in range(1, 9):
        for m in (2, 3):
            for m0 in range(0, d + 1):
                for n in range(3, 9):
                    sys_ = L(d, m0, n, m)
                    c = cf.certify(sys_)
                    if not c.proved:
                        continue
                    want = -1 if c.outcome == "EmptyProved" else expected_dim(sys_)
                    assert c.dim == want
                    assert measure_dim(sys_).dim == want, sys_


def test_memoization_and_cache_round_trip(tmp_path):
    path = str(tmp_path / "cache.json")
    cf = Certifier()
    cf.certify(L(7, 0, 8, 3))
    n_entries = len(cf.memo)
    cf.save_cache(path)
    fresh = Certifier()
    assert fresh.load_cache(path) == n_entries
    assert fresh.certify(L(7, 0, 8, 3)).outcome == cf.certify(L(7, 0, 8, 3)).outcome
    assert fresh.nodes == 0  # answered from cache


def test_budget_exceeded():
    cf = Certifier(budget=3)
    with pytest.raises(BudgetExceeded):
        cf.certify(L(12, 0, 13, 3))


def test_certificate_tree_is_jsonable():
    import json

    c = certify(L(6, 0, 9, 2))
    json.dumps(c.to_dict())
    assert c.to_dict()["outcome"] == "NonSpecialProved"


def test_semicontinuity_on_evaluated_splits():
    # l0 computed from certified sub-dimensions bounds e from below
    cf = Certifier()
    sys_ = L(9, 2, 10, 3)
    cert = cf.certify(sys_)
    if cert.proved:
        assert cert.dim >= expected_dim(sys_)
