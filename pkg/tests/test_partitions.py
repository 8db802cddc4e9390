import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from partition_primes.divisor import divisor_count
from partition_primes.partitions import (
    Partition,
    check_norm_inequality,
    enumerate_short_nonunitary,
    gap_partitions,
    nonunitary_partitions_of_norm,
    norm,
    partition_from_integer,
    supernorm,
    verify_gap_equivalence,
)
from partition_primes.sieve import build_sieve

TABLE = build_sieve(100_000)


def test_partition_views():
    lam = Partition((2, 3, 2, 1))
    assert lam.parts == (3, 2, 2, 1)
    assert lam.size == 8 and lam.length == 4
    assert lam.multiplicities() == {3: 1, 2: 2, 1: 1}
    assert sum(i * m for i, m in lam.multiplicities().items()) == lam.size
    assert not lam.is_nonunitary
    with pytest.raises(ValueError):
        Partition((2, 0))


@pytest.mark.parametrize("parts, n, sn", [((), 1, 1), ((3, 2, 2), 12, 45), ((5,), 5, 11), ((1,), 1, 2)])
def test_norm_and_supernorm(parts, n, sn):
    lam = Partition(parts)
    assert norm(lam) == n
    assert supernorm(lam, TABLE) == sn


def test_supernorm_table_too_small():
    with pytest.raises(IndexError):
        supernorm(Partition((5,)), build_sieve(10))


@pytest.mark.parametrize("m, parts", [(1, ()), (45, (3, 2, 2)), (12, (2, 1, 1)), (97, (25,))])
def test_partition_from_integer(m, parts):
    assert partition_from_integer(m, TABLE).parts == parts


def test_partition_from_integer_rejects_zero():
    with pytest.raises(ValueError):
        partition_from_integer(0, TABLE)


def test_round_trip_all_integers():
    for m in range(1, 100_001):
        assert supernorm(partition_from_integer(m, TABLE), TABLE) == m


@given(st.lists(st.integers(1, 40), max_size=6))
def test_round_trip_partitions(parts):
    lam = Partition(tuple(parts))
    if supernorm(lam, TABLE) <= 10**12:
        assert partition_from_integer(supernorm(lam, TABLE), TABLE) == lam


@pytest.mark.parametrize("n, expected", [
    (12, {(12,), (6, 2), (4, 3)}),
    (9, {(9,), (3, 3)}),
    (2, {(2,)}),
])
def test_short_nonunitary_examples(n, expected):
    found = enumerate_short_nonunitary(n)
    assert {lam.parts for lam in found} == expected
    assert len(found) == math.ceil(divisor_count(n) / 2)


def test_short_nonunitary_against_full_enumeration():
    for n in range(2, 400):
        full = [lam for lam in nonunitary_partitions_of_norm(n) if lam.length <= 2]
        assert sorted(full) == sorted(enumerate_short_nonunitary(n))


def test_multiplicative_partition_counts():
    # OEIS A001055: 1, 1, 1, 2, 1, 2, 1, 3, 2, 2, 1, 4
    counts = [len(list(nonunitary_partitions_of_norm(n))) for n in range(1, 13)]
    assert counts == [1, 1, 1, 2, 1, 2, 1, 3, 2, 2, 1, 4]


@pytest.mark.parametrize("n", [1, 4, 25])
def test_gap_equivalence_examples(n):
    assert verify_gap_equivalence(n, TABLE)


def test_gap_partitions_for_seven_to_eleven():
    found = gap_partitions(4, TABLE)
    assert sorted(supernorm(lam, TABLE) for lam in found) == [7, 8, 9, 10]


def test_norm_inequality_examples():
    assert check_norm_inequality(Partition((5,)), TABLE)
    assert check_norm_inequality(Partition((3, 2)), TABLE)
    with pytest.raises(ValueError):
        check_norm_inequality(Partition((2, 2)), TABLE)
    with pytest.raises(ValueError):
        check_norm_inequality(Partition((5, 1)), TABLE)


def test_norm_inequality_upper_bound_is_tight_for_twos():
    # (2,2,2): norm 8, supernorm 27 = 8**(log 3/log 2) exactly
    assert check_norm_inequality(Partition((2, 2, 2)), TABLE)
    assert check_norm_inequality(Partition((2,) * 10), TABLE)


def test_norm_inequality_lower_bound_fails_for_small_two_part_cases():
    # p_12 = 37 > 7*5 and p_16 = 53 > 7*7
    assert not check_norm_inequality(Partition((4, 3)), TABLE)
    assert not check_norm_inequality(Partition((4, 4)), TABLE)
