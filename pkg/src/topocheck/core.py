"""Finite spaces, the interior/closure/kernel operators, and constructions.

A finite topology is stored through its minimal open neighbourhoods:
``min_nbhd[p]`` is the intersection of all opens containing ``p``. Every
finite space is Alexandroff, so the opens are exactly the unions of these
rows and the rows determine the topology.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from itertools import product as _cartesian
from typing import Iterable, Sequence

from . import kernels
from .errors import EmptyCarrier, NotATopology, SizeLimitExceeded, WidthMismatch
from .pointset import MAX_WIDTH, PointSet, bits_of

EXHAUSTIVE_LIMIT = 16


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def canonical_order(masks: Iterable[int]) -> list[int]:
    return sorted(set(masks), key=lambda m: (popcount(m), m))


@dataclass(frozen=True, eq=False)
class FiniteSpace:
    """A topology on the points ``0 .. n-1``.

    Equality and hashing use ``(n, min_nbhd)``, which is equivalent to
    comparing the sorted open families; labels are presentation only.
    """

    n: int
    min_nbhd: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_WIDTH:
            raise SizeLimitExceeded(f"{self.n} points exceeds the limit of {MAX_WIDTH}")
        if len(self.min_nbhd) != self.n:
            raise ValueError("min_nbhd needs one row per point")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels needs one entry per point")
        for p, row in enumerate(self.min_nbhd):
            if not row >> p & 1 or row >> self.n:
                raise ValueError(f"min_nbhd[{p}] = {row:#x} is not a neighbourhood of {p}")
            for q in bits_of(row):
                if self.min_nbhd[q] & ~row:
                    raise ValueError(f"min_nbhd rows {p} and {q} are not nested")

    def __eq__(self, other):
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return self.n == other.n and self.min_nbhd == other.min_nbhd

    def __hash__(self):
        return hash((self.n, self.min_nbhd))

    def __repr__(self):
        name = self._cache.get("name")
        opens = ", ".join(self.format_set(m) for m in self.open_masks)
        return f"FiniteSpace({name + ': ' if name else ''}n={self.n}, opens=[{opens}])"

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def open_masks(self) -> tuple[int, ...]:
        return tuple(kernels.opens_from_basis(self.n, self.min_nbhd))

    @property
    def opens(self) -> list[PointSet]:
        return [PointSet(self.n, m) for m in self.open_masks]

    def canonical_key(self) -> tuple:
        return (self.n, self.open_masks)

    def label(self, p: int) -> str:
        return self.labels[p] if self.labels is not None else str(p)

    def point_labels(self) -> list[str]:
        return [self.label(p) for p in range(self.n)]

    def index(self, label: str) -> int:
        names = self.point_labels()
        try:
            return names.index(label)
        except ValueError:
            raise KeyError(label) from None

    def format_set(self, mask: int | PointSet) -> str:
        if isinstance(mask, PointSet):
            mask = mask.bits
        return "{" + ",".join(self.label(p) for p in bits_of(mask)) + "}"

    def pointset(self, points: Iterable[int | str]) -> PointSet:
        idx = [self.index(p) if isinstance(p, str) else p for p in points]
        return PointSet.of(self.n, idx)

    def canonical_text(self) -> str:
        """Label-free one-line form, e.g. ``n=3;{},{0,1},{0,1,2}``."""
        body = ",".join("{" + ",".join(map(str, bits_of(m))) + "}" for m in self.open_masks)
        return f"n={self.n};{body}"

    # mask-level operators; the hot paths of the other modules use these
    def int_mask(self, a: int) -> int:
        out = 0
        for p in bits_of(a):
            if not self.min_nbhd[p] & ~a:
                out |= 1 << p
        return out

    def cl_mask(self, a: int) -> int:
        out = 0
        for p, row in enumerate(self.min_nbhd):
            if row & a:
                out |= 1 << p
        return out

    def ker_mask(self, a: int) -> int:
        out = 0
        for p in bits_of(a):
            out |= self.min_nbhd[p]
        return out

    def is_open_mask(self, a: int) -> bool:
        return all(not self.min_nbhd[p] & ~a for p in bits_of(a))


@dataclass(frozen=True)
class SpaceMap:
    """A total function between the point sets of two finite spaces."""

    domain: FiniteSpace
    codomain: FiniteSpace
    assign: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assign", tuple(self.assign))
        if len(self.assign) != self.domain.n:
            raise ValueError("assign needs one target per domain point")
        for t in self.assign:
            if not 0 <= t < self.codomain.n:
                raise ValueError(f"target {t} outside codomain of size {self.codomain.n}")

    def __call__(self, p: int) -> int:
        return self.assign[p]

    def __repr__(self):
        return f"SpaceMap({list(self.assign)})"


def _mask(A: PointSet, sp: FiniteSpace) -> int:
    if A.width != sp.n:
        raise WidthMismatch(f"set of width {A.width} used in a space of {sp.n} points")
    return A.bits


def space_from_rows(rows: Sequence[int], labels: Sequence[str] | None = None) -> FiniteSpace:
    return FiniteSpace(len(rows), tuple(rows), tuple(labels) if labels is not None else None)


def _rows_from_family(n: int, family: Iterable[int]) -> tuple[int, ...]:
    full = (1 << n) - 1
    rows = [full] * n
    for u in family:
        for p in bits_of(u):
            rows[p] &= u
    return tuple(rows)


def validate_topology(
    n: int,
    family: Iterable[PointSet | int],
    *,
    complete: bool = False,
    labels: Sequence[str] | None = None,
) -> FiniteSpace:
    """Build a space from an open family.

    Strict mode requires the family (with the empty and full set adjoined)
    to be closed under pairwise union and intersection. With
    ``complete=True`` the family is treated as a subbasis instead.
    """
    if not 0 <= n <= MAX_WIDTH:
        raise SizeLimitExceeded(f"{n} points exceeds the limit of {MAX_WIDTH}")
    full = (1 << n) - 1
    masks = set()
    for u in family:
        if isinstance(u, PointSet):
            if u.width != n:
                raise WidthMismatch(f"open of width {u.width} in a space of {n} points")
            u = u.bits
        elif u < 0 or u >> n:
            raise ValueError(f"mask {u:#x} exceeds {n} points")
        masks.add(u)
    masks |= {0, full}
    if not complete:
        ordered = canonical_order(masks)
        for i, u in enumerate(ordered):
            for v in ordered[i + 1:]:
                if u | v not in masks:
                    raise NotATopology(
                        f"union of {_fmt(u, labels)} and {_fmt(v, labels)} is not open",
                        (u, v),
                        "union",
                    )
                if u & v not in masks:
                    raise NotATopology(
                        f"intersection of {_fmt(u, labels)} and {_fmt(v, labels)} is not open",
                        (u, v),
                        "intersection",
                    )
    return space_from_rows(_rows_from_family(n, masks), labels)


def _fmt(mask: int, labels=None) -> str:
    return "{" + ",".join(labels[p] if labels else str(p) for p in bits_of(mask)) + "}"


def interior(sp: FiniteSpace, A: PointSet) -> PointSet:
    return PointSet(sp.n, sp.int_mask(_mask(A, sp)))


def closure(sp: FiniteSpace, A: PointSet) -> PointSet:
    return PointSet(sp.n, sp.cl_mask(_mask(A, sp)))


def kernel(sp: FiniteSpace, A: PointSet) -> PointSet:
    """Intersection of all opens containing A (the union of their minimal neighbourhoods)."""
    return PointSet(sp.n, sp.ker_mask(_mask(A, sp)))


def _box(sizes: Sequence[int], masks: Sequence[int]) -> int:
    """Mask of the row-major box with the given factor masks."""
    out = 0
    for idx in _cartesian(*(list(bits_of(m)) for m in masks)):
        flat = 0
        for size, i in zip(sizes, idx):
            flat = flat * size + i
        out |= 1 << flat
    return out


def product(factors: Sequence[FiniteSpace]) -> tuple[FiniteSpace, list[SpaceMap]]:
    """Finite product in row-major point order, with its projections."""
    if not factors:
        raise ValueError("product needs at least one factor")
    sizes = [f.n for f in factors]
    total = reduce(lambda a, b: a * b, sizes, 1)
    if total > MAX_WIDTH:
        raise SizeLimitExceeded(f"product has {total} points; limit is {MAX_WIDTH}")
    tuples = list(_cartesian(*(range(s) for s in sizes)))
    rows = [_box(sizes, [f.min_nbhd[i] for f, i in zip(factors, t)]) for t in tuples]
    labels = ["(" + ",".join(f.label(i) for f, i in zip(factors, t)) + ")" for t in tuples]
    space = space_from_rows(rows, labels)
    projections = [
        SpaceMap(space, f, tuple(t[j] for t in tuples)) for j, f in enumerate(factors)
    ]
    return space, projections


def sum_spaces(parts: Sequence[FiniteSpace]) -> tuple[FiniteSpace, list[SpaceMap]]:
    """Topological (disjoint) sum, with its injections."""
    if not parts:
        raise ValueError("sum needs at least one part")
    total = sum(p.n for p in parts)
    if total > MAX_WIDTH:
        raise SizeLimitExceeded(f"sum has {total} points; limit is {MAX_WIDTH}")
    rows, labels, offsets = [], [], []
    offset = 0
    for part in parts:
        offsets.append(offset)
        rows.extend(r << offset for r in part.min_nbhd)
        labels.extend(part.point_labels())
        offset += part.n
    if len(set(labels)) != len(labels):
        labels = [
            f"{part.label(p)}_{k}" for k, part in enumerate(parts) for p in range(part.n)
        ]
    space = space_from_rows(rows, labels)
    injections = [
        SpaceMap(part, space, tuple(range(off, off + part.n)))
        for part, off in zip(parts, offsets)
    ]
    return space, injections


def subspace(sp: FiniteSpace, A: PointSet) -> FiniteSpace:
    a = _mask(A, sp)
    if not a:
        raise EmptyCarrier("subspace of the empty set")
    points = list(bits_of(a))
    where = {p: i for i, p in enumerate(points)}
    rows = []
    for p in points:
        row = 0
        for q in bits_of(sp.min_nbhd[p] & a):
            row |= 1 << where[q]
        rows.append(row)
    labels = [sp.label(p) for p in points] if sp.labels is not None else None
    return space_from_rows(rows, labels)


def indiscrete(n: int, labels: Sequence[str] | None = None) -> FiniteSpace:
    return space_from_rows([(1 << n) - 1] * n, labels)


def discrete(n: int, labels: Sequence[str] | None = None) -> FiniteSpace:
    return space_from_rows([1 << p for p in range(n)], labels)


def named(sp: FiniteSpace, name: str) -> FiniteSpace:
    sp._cache["name"] = name
    return sp
