import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhplane.core import L, expected_dim
from qhplane.oracle import (
    DEFAULT_CONFIG,
    MERSENNE_31,
    OracleConfig,
    condition_rows,
    measure_dim,
    measure_dim_mults,
    measure_speciality,
    rank_mod_p,
)


def test_known_dimensions():
    assert measure_dim(L(1, 0, 2, 1)).dim == 0
    assert measure_dim(L(6, 0, 5, 3)).dim == 0  # special: e = -1
    assert measure_dim(L(2, 0, 2, 2)).dim == 0  # the doubled line
    assert measure_dim(L(4, 0, 5, 2)).dim == 0
    assert measure_dim(L(4, 0, 2, 3)).dim == 3
    assert measure_dim(L(3, 0, 3, 2)).dim == 0
    assert measure_dim(L(5, 0, 1, 1)).dim == 19


def test_measure_speciality():
    dim, e, special = measure_speciality(L(4, 0, 5, 2))
    assert (dim, e, special) == (0, -1, True)
    dim, e, special = measure_speciality(L(3, 0, 3, 2))
    assert (dim, e, special) == (0, 0, False)


def test_determinism():
    cfg = OracleConfig(trials=2, seed=7)
    a = measure_dim(L(9, 4, 6, 3), cfg).dim
    b = measure_dim(L(9, 4, 6, 3), cfg).dim
    assert a == b


def test_trial_monotonicity():
    for sys_ in (L(8, 3, 6, 2), L(10, 0, 9, 3), L(7, 7, 4, 2)):
        d3 = measure_dim(sys_, OracleConfig(trials=3)).dim
        d10 = measure_dim(sys_, OracleConfig(trials=10)).dim
        assert d10 <= d3
        assert d10 == d3  # no unlucky-point contamination at this size


def test_row_count_identity():
    d, mults = 7, [4, 2, 2, 2]
    p = MERSENNE_31
    pts = [(11 * i + 1, 13 * i + 2, m) for i, m in enumerate(mults)]
    rows = condition_rows(d, pts, p)
    assert rows.shape == (sum(m * (m + 1) // 2 for m in mults), 36)


def test_translation_invariance():
    base = measure_dim_mults(8, [3, 2, 2, 2, 2])
    shifted = measure_dim_mults(8, [3, 2, 2, 2, 2], shift=(12345, 67890))
    assert base == shifted


def test_rejects_small_prime():
    with pytest.raises(ValueError):
        measure_dim_mults(13, [1], OracleConfig(prime=11))
    with pytest.raises(ValueError):
        OracleConfig(prime=10)
    with pytest.raises(ValueError):
        OracleConfig(trials=0)


def test_rank_mod_p_small():
    p = 101
    A = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]], dtype=np.int64)
    assert rank_mod_p(A, p) == 2
    assert rank_mod_p(np.zeros((3, 3), dtype=np.int64), p) == 0


def test_excess_multiplicity_handled_naturally():
    # multiplicity beyond the degree simply empties the system
    assert measure_dim(L(2, 4)).dim == -1


@settings(max_examples=25, deadline=None)
@given(
    st.integers(1, 7),
    st.lists(st.integers(1, 3), min_size=0, max_size=5),
)
def test_oracle_at_most_expected_conditions(d, mults):
    # dim >= v always: the oracle can only see fewer independent conditions
    sys_dim = measure_dim_mults(d, mults)
    cols = (d + 1) * (d + 2) // 2
    v = cols - 1 - sum(m * (m + 1) // 2 for m in mults)
    assert sys_dim >= max(-1, v)
    assert sys_dim <= cols - 1


def test_result_carries_config():
    res = measure_dim(L(3, 1, 2, 1))
    assert res.certificate["oracle"] == DEFAULT_CONFIG.as_dict()
