"""Enumeration of labeled finite topologies and worker sharding."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

from . import kernels
from .core import FiniteSpace, space_from_rows, validate_topology
from .errors import SizeLimitExceeded

MAX_ENUM = 6
MAX_NAIVE = 4

T = TypeVar("T")
R = TypeVar("R")


def enumerate_spaces(n: int) -> Iterator[FiniteSpace]:
    """Every topology on n labeled points, via specialization preorders.

    Row ``p`` of a preorder (the points above ``p``) is taken directly as
    the minimal open neighbourhood of ``p``.
    """
    return iter(spaces(n))


@lru_cache(maxsize=None)
def spaces(n: int) -> tuple[FiniteSpace, ...]:
    if not 1 <= n <= MAX_ENUM:
        raise SizeLimitExceeded(f"enumeration supports 1 <= n <= {MAX_ENUM}; got {n}")
    return tuple(space_from_rows(rows) for rows in kernels.enumerate_preorders(n))


def spaces_up_to(n_max: int, n_min: int = 1) -> list[FiniteSpace]:
    return [sp for n in range(n_min, n_max + 1) for sp in spaces(n)]


def naive_families(n: int) -> Iterator[tuple[int, ...]]:
    """Brute force: every family containing the empty and full set that is
    closed under pairwise union and intersection, as a sorted mask tuple."""
    if not 1 <= n <= MAX_NAIVE:
        raise SizeLimitExceeded(
            f"naive enumeration is limited to n <= {MAX_NAIVE} "
            f"(n={n} needs 2^{(1 << n) - 2} candidates)"
        )
    full = (1 << n) - 1
    middle = list(range(1, full))
    for choice in range(1 << len(middle)):
        family = {0, full}
        family.update(m for i, m in enumerate(middle) if choice >> i & 1)
        if all(u | v in family and u & v in family for u, v in combinations(family, 2)):
            yield tuple(sorted(family, key=lambda m: (bin(m).count("1"), m)))


def enumerate_spaces_naive(n: int) -> Iterator[FiniteSpace]:
    for family in naive_families(n):
        yield validate_topology(n, family)


def count_spaces(n: int, oracle: bool = False) -> int:
    if oracle:
        return sum(1 for _ in naive_families(n))
    return len(spaces(n))


def worker_count(requested: int | None = None) -> int:
    if requested is not None:
        return max(1, requested)
    env = os.environ.get("TOPOCHECK_WORKERS")
    if env:
        return max(1, int(env))
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1


def sharded_map(fn: Callable[[T], R], items: Sequence[T], workers: int | None = None) -> list[R]:
    """Apply fn to every item; results come back in input order."""
    w = min(worker_count(workers), len(items))
    if w <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=w) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * w))))


def first(items: Iterable[T]) -> T | None:
    return next(iter(items), None)
