import pytest
from hypothesis import given, strategies as st

from cycliccover.combinatorics import (
    gamma,
    required_profile,
    sigma,
    sigma_table,
    tau,
)

# Transcribed by hand: the d=15 reference table, rows q=1..14, columns k=q..15.
D15_ROWS = {
    1: [0, 0, 1, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 9],
    2: [0, 0, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 9],
    3: [0, 0, 1, 2, 3, 3, 4, 5, 6, 6, 7, 8, 9],
    4: [0, 0, 1, 2, 3, 4, 4, 5, 6, 7, 8, 8],
    5: [0, 0, 1, 2, 3, 4, 5, 5, 6, 7, 8],
    6: [0, 0, 1, 2, 3, 4, 5, 6, 6, 7],
    7: [0, 0, 1, 2, 3, 4, 5, 6, 7],
    8: [0, 0, 1, 2, 3, 4, 5, 6],
    9: [0, 0, 1, 2, 3, 4, 5],
    10: [0, 0, 1, 2, 3, 4],
    11: [0, 0, 1, 2, 3],
    12: [0, 0, 1, 2],
    13: [0, 0, 1],
    14: [0, 0],
}


def test_gamma_divisibility():
    assert gamma(6, 3) == 1
    assert gamma(7, 3) == 0
    assert gamma(5, 5) == 1


def test_gamma_rejects_nonpositive():
    with pytest.raises(ValueError):
        gamma(0, 3)
    with pytest.raises(ValueError):
        gamma(3, 0)


def test_tau_values():
    assert tau(16, 4) == 10  # 16 - 4 - 4 + 1 + 1
    assert tau(3, 2) == 1    # 3 - 1 - 2 + 0 + 1


@given(st.integers(min_value=1, max_value=500))
def test_tau_at_ell_one_is_one(k):
    assert tau(k, 1) == 1


def test_tau_can_be_nonpositive():
    assert tau(2, 10) < 0


def test_sigma_q_zero_is_k():
    for k in range(0, 51):
        for d in range(2, 51):
            assert sigma(k, d, 0) == k


def test_sigma_examples():
    assert sigma(15, 15, 1) == 9
    assert sigma(4, 15, 2) == 1
    assert sigma(2, 5, 1) == 0  # max(tau(3,2), tau(3,3)) - 1 = 0


def test_sigma_domain_errors():
    with pytest.raises(ValueError):
        sigma(3, 2, 2)  # q > d-1
    with pytest.raises(ValueError):
        sigma(2, 5, 3)  # q > k
    with pytest.raises(ValueError):
        sigma(3, 1, 0)  # d < 2
    with pytest.raises(ValueError):
        sigma(-1, 5, 0)


def test_sigma_at_most_k_minus_q_exhaustive():
    # The very-ampleness requirement is never stronger than the jet one.
    for k in range(0, 51):
        for d in range(2, 51):
            for q in range(1, min(k, d - 1) + 1):
                assert sigma(k, d, q) <= k - q


def test_sigma_independent_of_d_once_saturated():
    for k in range(0, 30):
        for q in range(1, k + 1):
            base = sigma(k, k + 1, q) if q <= k else None
            for d in range(k + 1, k + 6):
                if q <= min(k, d - 1):
                    assert sigma(k, d, q) == base


def test_sigma_definitional_round_trip():
    for k in range(0, 30):
        for d in range(2, 20):
            for q in range(1, min(k, d - 1) + 1):
                expected = max(tau(k + 1, ell)
                               for ell in range(q + 1, min(d, k + 1) + 1))
                assert sigma(k, d, q) + 1 == expected


def test_sigma_table_matches_reference():
    table = sigma_table(15, 15)
    assert table.rows() == list(range(1, 15))
    expected_cells = {(q, q + i): v
                      for q, row in D15_ROWS.items()
                      for i, v in enumerate(row)}
    assert table.entries == expected_cells


def test_sigma_table_small():
    table = sigma_table(2, 3)
    assert table.entries == {(1, 1): 0, (1, 2): 0, (1, 3): 1}


def test_sigma_table_kmax_zero():
    assert sigma_table(7, 0).entries == {}


def test_sigma_table_rejects_bad_args():
    with pytest.raises(ValueError):
        sigma_table(1, 5)
    with pytest.raises(ValueError):
        sigma_table(5, -1)


def test_required_profile_jet():
    assert required_profile("jet", 3, 2).requirements == (3, 2)
    assert required_profile("jet", 5, 2).requirements == (5, 4)


def test_required_profile_very():
    assert required_profile("very", 2, 15).requirements == (2, 0, 0)
    assert required_profile("very", 4, 15).requirements == (4, 1, 1, 0, 0)


def test_required_profile_rejects_bad_kind():
    with pytest.raises(ValueError):
        required_profile("ample", 2, 3)


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=2, max_value=40))
def test_required_profile_length(k, d):
    prof = required_profile("very", k, d)
    assert len(prof.requirements) == min(k, d - 1) + 1
    assert prof.requirements[0] == k
