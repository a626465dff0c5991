from math import factorial

import pytest
from hypothesis import given, strategies as st

from gvindex.partitions import (Partition, enumerate_partitions, enumerate_multipartitions,
                                transpose, cell_stats, hooks, kappa, kappa_closed, n_of,
                                cycle_type_stats, partition_count, to_json, from_json)


def test_enumeration_counts():
    assert enumerate_partitions(0) == [Partition(())]
    assert len(enumerate_partitions(4)) == 5
    assert len(enumerate_partitions(5)) == 7
    assert [partition_count(n) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_multipartitions():
    assert len(enumerate_multipartitions(1, 3)) == 3
    assert enumerate_multipartitions(2, 0) == [(Partition(()), Partition(()))]
    assert len(enumerate_multipartitions(2, 3)) == 10
    for mp in enumerate_multipartitions(3, 4):
        assert sum(sum(p) for p in mp) == 4


def test_negative_size_rejected():
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_transpose_examples():
    assert transpose(()) == Partition(())
    assert transpose((2, 1)) == Partition((2, 1))
    assert transpose((3, 1)) == Partition((2, 1, 1))


def test_cells_and_hooks():
    assert cell_stats((1,), (1, 1)) == (0, 0, 1)
    assert sorted(hooks((2, 1))) == [1, 1, 3]
    assert sorted(hooks((2, 2))) == [1, 2, 2, 3]


def test_kappa_examples():
    assert kappa(()) == 0
    assert kappa((2,)) == 2 and kappa((1, 1)) == -2
    assert kappa((3, 1)) == 4


def test_cycle_types():
    for n in range(1, 6):
        assert cycle_type_stats((1,) * n)[1] == factorial(n)
        assert cycle_type_stats((n,))[1] == n
    assert cycle_type_stats((2, 1))[1] == 2


def test_class_equation():
    # sum over cycle types of n!/z_mu counts the whole group
    for n in range(7):
        assert sum(factorial(n) // cycle_type_stats(mu)[1]
                   for mu in enumerate_partitions(n)) == factorial(n)


def test_json_round_trip():
    for mu in enumerate_partitions(5):
        assert from_json(to_json(mu)) == mu
    assert to_json(Partition(())) == []


partitions = st.integers(0, 12).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


@given(partitions)
def test_kappa_identities(mu):
    assert kappa(transpose(mu)) == -kappa(mu)
    assert kappa(mu) == kappa_closed(mu)
    # kappa = 2 (n(mu^t) - n(mu))
    assert kappa(mu) == 2 * (n_of(transpose(mu)) - n_of(mu))


@given(partitions)
def test_hook_facts(mu):
    assert transpose(transpose(mu)) == mu
    assert len(hooks(mu)) == sum(mu)
    assert sorted(hooks(mu)) == sorted(hooks(transpose(mu)))
