import os

import pytest

from topocheck.core import validate_topology
from topocheck.enumeration import (
    count_spaces,
    enumerate_spaces,
    enumerate_spaces_naive,
    naive_families,
    sharded_map,
    worker_count,
)
from topocheck.errors import SizeLimitExceeded

FROZEN_COUNTS = {1: 1, 2: 4, 3: 29, 4: 355}
# recorded from the preorder enumerator; the naive oracle cannot reach n = 5
FROZEN_COUNT_5 = 6942


@pytest.mark.parametrize("n,count", sorted(FROZEN_COUNTS.items()))
def test_naive_counts(n, count):
    assert sum(1 for _ in naive_families(n)) == count


@pytest.mark.parametrize("n", range(1, 5))
def test_enumerator_matches_oracle(n):
    fast = [sp.open_masks for sp in enumerate_spaces(n)]
    assert len(fast) == len(set(fast)) == FROZEN_COUNTS[n]
    assert set(fast) == set(naive_families(n))
    assert {sp for sp in enumerate_spaces_naive(n)} == set(enumerate_spaces(n))


def test_n5_count_pinned():
    assert count_spaces(5) == FROZEN_COUNT_5


def test_naive_refuses_n5():
    with pytest.raises(SizeLimitExceeded):
        next(naive_families(5))
    with pytest.raises(SizeLimitExceeded):
        count_spaces(5, oracle=True)


@pytest.mark.parametrize("n", [0, 7])
def test_enumerator_limits(n):
    with pytest.raises(SizeLimitExceeded):
        list(enumerate_spaces(n))


def test_stream_elements_pass_strict_validation():
    for n in range(1, 5):
        for sp in enumerate_spaces(n):
            assert validate_topology(n, sp.open_masks) == sp


def test_deterministic_order():
    assert [sp.min_nbhd for sp in enumerate_spaces(4)] == [
        sp.min_nbhd for sp in enumerate_spaces(4)
    ]


def _square(x):
    return x * x


def test_sharded_map_preserves_order():
    items = list(range(50))
    assert sharded_map(_square, items, workers=2) == [x * x for x in items]
    assert sharded_map(_square, items, workers=1) == [x * x for x in items]


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("TOPOCHECK_WORKERS", "3")
    assert worker_count() == 3
    assert worker_count(1) == 1
    monkeypatch.delenv("TOPOCHECK_WORKERS")
    assert worker_count() >= 1
