import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bias_by_listing, progression_count
from qbias.partitions import (
    BiasQuery,
    CapExceeded,
    RestrictedCountTable,
    bias_count,
    bias_counts,
    bias_oracle,
    parity_bias,
    partition_numbers,
    restricted_count,
    restricted_count_oracle,
    restricted_gf,
    tie_counts,
)


@pytest.mark.parametrize(
    "s, m, k, n, expected",
    [(1, 2, 1, 7, 1), (1, 2, 2, 5, 2), (3, 4, 2, 2, 0), (1, 1, 3, -4, 0), (7, 2, 0, -4, 0)],
)
def test_restricted_count_examples(s, m, k, n, expected):
    assert restricted_count(s, m, k, n) == expected


def test_restricted_count_conventions():
    assert restricted_count(4, 3, 5, 0) == 1
    assert restricted_count(4, 3, 0, 0) == 1
    assert all(restricted_count(2, 2, 0, n) == 0 for n in range(1, 10))


def test_restricted_count_rejects_bad_progression():
    with pytest.raises(ValueError):
        restricted_count(0, 1, 1, 3)
    with pytest.raises(ValueError):
        restricted_count(1, 1, -1, 3)


@pytest.mark.parametrize(
    "args, expected",
    [((1, 2, 1, 4), [1, 1, 1, 1, 1]), ((1, 2, 2, 5), [1, 1, 1, 2, 2, 2]), ((1, 1, 0, 3), [1, 0, 0, 0])],
)
def test_restricted_gf_examples(args, expected):
    assert list(restricted_gf(*args).coeffs) == expected


def test_restricted_gf_example_from_enumeration():
    assert [progression_count(1, 2, 2, n) for n in range(6)] == [1, 1, 1, 2, 2, 2]


@pytest.mark.parametrize("s", range(1, 6))
@pytest.mark.parametrize("m", range(1, 6))
def test_gf_matches_count_and_monotone(s, m):
    table = RestrictedCountTable.build(s, m, 9, 60)
    for k in range(9):
        gf = restricted_gf(s, m, k, 60)
        for t in range(61):
            assert gf[t] == restricted_count(s, m, k, t) == table(k, t)
            assert table(k, t) <= table(k + 1, t)


def test_table_invariants_and_bounds():
    table = RestrictedCountTable.build(2, 3, 4, 10)
    assert all(table(k, 0) == 1 for k in range(5))
    assert all(table(0, n) == 0 for n in range(1, 11))
    assert table(3, -2) == 0
    with pytest.raises(IndexError):
        table(5, 1)
    with pytest.raises(IndexError):
        table(1, 11)


@pytest.mark.parametrize(
    "query, expected",
    [((1, 2, 2, 4), 3), ((2, 1, 2, 4), 2), ((1, 2, 2, 0), 0)],
)
def test_bias_count_examples(query, expected):
    assert bias_count(BiasQuery(*query)) == expected


@pytest.mark.parametrize(
    "query, expected",
    [((1, 2, 2, 4), 3), ((1, 2, 2, 1), 1), ((1, 3, 3, 2), 1)],
)
def test_bias_oracle_examples(query, expected):
    # (1, 3, 3, 2): {2} ties at zero, {1,1} counts -> 1
    assert bias_by_listing(*query) == expected
    assert bias_oracle(BiasQuery(*query)) == expected


def test_bias_oracle_cap():
    with pytest.raises(CapExceeded):
        bias_oracle(BiasQuery(1, 2, 2, 41))
    assert bias_oracle(BiasQuery(1, 2, 2, 12), cap=12) == bias_count(BiasQuery(1, 2, 2, 12))


@pytest.mark.parametrize(
    "a, b, m", [(0, 1, 2), (1, 1, 2), (1, 3, 2), (1, 2, 1)]
)
def test_bias_query_validation(a, b, m):
    with pytest.raises(ValueError):
        BiasQuery(a, b, m, 3)


def test_bias_query_negative_n():
    with pytest.raises(ValueError):
        BiasQuery(1, 2, 2, -1)


def test_residue_m_means_divisible_by_m():
    # parts divisible by 3 are the "3" residue
    q = BiasQuery(3, 1, 3, 6)
    assert bias_count(q) == bias_by_listing(3, 1, 3, 6) == bias_by_listing(0, 1, 3, 6)


@pytest.mark.parametrize("m", range(2, 7))
def test_bias_dp_matches_listing_small(m):
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            if a != b:
                counts = bias_counts(a, b, m, 14)
                assert counts == [bias_by_listing(a, b, m, n) for n in range(15)]


def test_parity_bias_small_values():
    assert [parity_bias(n) for n in range(5)] == [(0, 0), (1, 0), (1, 1), (2, 0), (3, 2)]


def test_partition_numbers():
    assert partition_numbers(10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@pytest.mark.parametrize("m", range(2, 7))
def test_bias_counts_split_all_partitions(m):
    p = partition_numbers(60)
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            fwd, back, tie = bias_counts(a, b, m, 60), bias_counts(b, a, m, 60), tie_counts(a, b, m, 60)
            assert [x + y + z for x, y, z in zip(fwd, back, tie)] == p


def test_bias_counts_large_n_uses_exact_ints():
    p = partition_numbers(420)
    fwd, back, tie = bias_counts(1, 2, 2, 420), bias_counts(2, 1, 2, 420), tie_counts(1, 2, 2, 420)
    assert fwd[420] + back[420] + tie[420] == p[420]
    assert p[420] > 2**63


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 6), st.integers(0, 18))
def test_restricted_count_matches_oracles(s, m, k, n):
    expected = progression_count(s, m, k, n)
    assert restricted_count(s, m, k, n) == expected
    assert restricted_count_oracle(s, m, k, n) == expected
