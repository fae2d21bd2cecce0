"""Symbolic eventually-constant subsets of the positive integers.

The tail topology has opens 0, N, and U_n = {n, n+1, ...} for n >= 3.
Its closed sets are 0, N, and the initial segments {1..m} with m >= 2, so
every set it can produce from a finite part and an optional tail is again
of that shape. :class:`TailSet` is that Boolean algebra.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from .core import FiniteSpace, PointSet, _box, product, space_from_rows, validate_topology
from .errors import GOpenUnsupported, ParseError, SizeLimitExceeded
from .report import CheckResult
from .setclasses import classify_basic

FIRST_OPEN_TAIL = 3


@dataclass(frozen=True)
class TailSet:
    """``finite ∪ {tail, tail+1, ...}``; ``tail=None`` means a finite set.

    Canonical form keeps ``finite`` strictly below ``tail - 1``: members
    adjacent to the tail are absorbed into it, so ``tail`` is minimal.
    Build instances with :meth:`make`.
    """

    finite: frozenset[int] = frozenset()
    tail: int | None = None

    @classmethod
    def make(cls, finite: Iterable[int] = (), tail: int | None = None) -> TailSet:
        items = set(finite)
        if any(not isinstance(x, int) or x < 1 for x in items):
            raise ValueError("TailSet members must be positive integers")
        if tail is not None:
            if tail < 1:
                raise ValueError("tail start must be a positive integer")
            items = {x for x in items if x < tail}
            while tail - 1 in items:
                items.discard(tail - 1)
                tail -= 1
        return cls(frozenset(items), tail)

    @classmethod
    def segment(cls, m: int) -> TailSet:
        return cls.make(range(1, m + 1))

    @classmethod
    def up(cls, n: int) -> TailSet:
        return cls.make((), n)

    def __contains__(self, x: int) -> bool:
        return x in self.finite or (self.tail is not None and x >= self.tail)

    @property
    def is_finite(self) -> bool:
        return self.tail is None

    @property
    def is_empty(self) -> bool:
        return self.tail is None and not self.finite

    def max(self) -> int:
        if self.tail is not None:
            raise ValueError("infinite set has no maximum")
        return max(self.finite)

    def complement(self) -> TailSet:
        if self.tail is None:
            top = max(self.finite, default=0)
            return TailSet.make(set(range(1, top + 1)) - self.finite, top + 1)
        return TailSet.make(set(range(1, self.tail)) - self.finite)

    __invert__ = complement

    def __or__(self, other: TailSet) -> TailSet:
        tails = [t for t in (self.tail, other.tail) if t is not None]
        return TailSet.make(self.finite | other.finite, min(tails) if tails else None)

    def __and__(self, other: TailSet) -> TailSet:
        keep = {x for x in self.finite | other.finite if x in self and x in other}
        tail = None
        if self.tail is not None and other.tail is not None:
            tail = max(self.tail, other.tail)
        return TailSet.make(keep, tail)

    def __sub__(self, other: TailSet) -> TailSet:
        return self & ~other

    def issubset(self, other: TailSet) -> bool:
        return (self - other).is_empty

    def window(self, w: int) -> int:
        """Mask of the members in 1..w, bit i standing for i + 1."""
        return sum(1 << (x - 1) for x in range(1, w + 1) if x in self)

    def render(self) -> str:
        body = ",".join(map(str, sorted(self.finite)))
        return f"{body};t={self.tail}" if self.tail is not None else f"{body};"

    def __str__(self):
        return self.render()

    @classmethod
    def parse(cls, text: str) -> TailSet:
        m = re.fullmatch(r"\s*([0-9,\s]*);\s*(?:t=(\d+))?\s*", text)
        if not m:
            raise ParseError(f"bad tail-set text {text!r}")
        items = [int(x) for x in m.group(1).replace(" ", "").split(",") if x]
        tail = int(m.group(2)) if m.group(2) else None
        try:
            return cls.make(items, tail)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


NATURALS = TailSet.make((), 1)
EMPTY = TailSet()


def is_open(A: TailSet) -> bool:
    if A.is_empty or A == NATURALS:
        return True
    return A.tail is not None and not A.finite and A.tail >= FIRST_OPEN_TAIL


def tail_interior(A: TailSet) -> TailSet:
    if A == NATURALS:
        return NATURALS
    if A.tail is not None:
        return TailSet.up(max(A.tail, FIRST_OPEN_TAIL))
    return EMPTY


def tail_closure(A: TailSet) -> TailSet:
    if A.is_empty:
        return EMPTY
    if A.tail is not None:
        return NATURALS
    return TailSet.segment(max(A.max(), 2))


def is_closed(A: TailSet) -> bool:
    return tail_closure(A) == A


@dataclass(frozen=True)
class TailReport:
    semi_open: bool
    nowhere_dense: bool
    hsg_closed: bool
    g_open: bool | None


def nd_points_below(bound: int) -> TailSet:
    """Points p <= bound whose singleton is nowhere dense."""
    return TailSet.make(
        p for p in range(1, bound + 1) if tail_interior(tail_closure(TailSet.make([p]))).is_empty
    )


def nd_singletons() -> TailSet:
    """N(X) for the tail space.

    For any p, cl({p}) = {1..max(p,2)} is finite and the interior of a
    finite set is empty, so every singleton is nowhere dense.
    """
    return NATURALS


def tail_is_g_open(A: TailSet) -> bool:
    """g-openness, implemented for singletons only."""
    if A.is_finite and len(A.finite) == 1:
        inner = tail_interior(A)
        return all(c.issubset(inner) for c in (EMPTY, A) if is_closed(c))
    raise GOpenUnsupported("g-openness is only implemented for singletons of the tail space")


def tail_classify(A: TailSet) -> TailReport:
    ic = tail_interior(tail_closure(A))
    single = A.is_finite and len(A.finite) == 1
    return TailReport(
        semi_open=A.issubset(tail_closure(tail_interior(A))),
        nowhere_dense=ic.is_empty,
        hsg_closed=(nd_singletons() & ic).is_empty,
        g_open=tail_is_g_open(A) if single else None,
    )


def generate_tailsets(window: int = 10) -> Iterator[TailSet]:
    """Every canonical TailSet whose finite part and tail start lie in 1..window+1."""
    seen = set()
    for bits in range(1 << window):
        finite = [i + 1 for i in range(window) if bits >> i & 1]
        for tail in [None, *range(1, window + 2)]:
            s = TailSet.make(finite, tail)
            if s not in seen:
                seen.add(s)
                yield s


def truncation(window: int = 12) -> FiniteSpace:
    """The tail topology clipped to 1..window (point i is the integer i+1)."""
    full = (1 << window) - 1
    opens = [full & ~((1 << (k - 1)) - 1) for k in range(FIRST_OPEN_TAIL, window + 1)]
    return validate_topology(window, opens, labels=[str(i) for i in range(1, window + 1)])


def _boundary_safe(A: TailSet, window: int) -> bool:
    if A.tail is not None:
        return A.tail <= window - 2
    return A.is_empty or A.max() <= window - 2


def _truncation_check(window: int = 12) -> CheckResult:
    sp = truncation(window)
    compared = 0
    for A in generate_tailsets(window - 2):
        if not _boundary_safe(A, window):
            continue
        a = A.window(window)
        pairs = (
            ("interior", tail_interior(A).window(window), sp.int_mask(a)),
            ("closure", tail_closure(A).window(window), sp.cl_mask(a)),
        )
        for op, symbolic, brute in pairs:
            if symbolic != brute:
                return CheckResult(
                    "e1-truncation-window", False, counterexample=f"{op} of {A.render()}"
                )
        compared += 1
    return CheckResult("e1-truncation-window", True, f"{compared} sets, window {window}")


def verify_e1(window: int = 12, bound: int = 200) -> list[CheckResult]:
    sets = list(generate_tailsets(8))
    out = []

    # every singleton nowhere dense: the closure of a finite set is finite
    # and the interior of a finite set is empty
    finite_ok = all(
        tail_closure(A).is_finite and tail_interior(A).is_empty for A in sets if A.is_finite
    )
    singles = nd_points_below(bound) == TailSet.segment(bound)
    out.append(
        CheckResult(
            "e1-singletons-nowhere-dense",
            finite_ok and singles and nd_singletons() == NATURALS,
            f"checked 1..{bound} and {len(sets)} finite/cofinite sets",
        )
    )

    bad = next(
        (A for A in sets if not A.is_empty and tail_classify(A).semi_open != (A.tail is not None)),
        None,
    )
    out.append(
        CheckResult(
            "e1-semi-open-cofinite",
            bad is None,
            f"{len(sets)} sets",
            bad.render() if bad else None,
        )
    )

    # proper closed sets are finite initial segments, so an infinite set of
    # any kind has closure N and cannot be hsg-closed
    closed_finite = all(
        (~TailSet.up(n)) == TailSet.segment(n - 1) for n in range(FIRST_OPEN_TAIL, bound)
    )
    bad = next((A for A in sets if tail_classify(A).hsg_closed != A.is_finite), None)
    out.append(
        CheckResult(
            "e1-hsg-finite",
            bad is None and closed_finite,
            "hsg-closed iff finite on the representable algebra",
            bad.render() if bad else None,
        )
    )

    singles_g_open = all(tail_is_g_open(TailSet.make([p])) for p in range(1, bound + 1))
    # a finite subfamily of the singleton cover has finite union, never N
    subfamilies = [range(1, k + 1) for k in range(1, bound + 1)]
    subfamilies += [range(start, bound + 1, step) for start in (1, 2) for step in (2, 3, 7)]
    finite_unions = all(
        reduce(operator.or_, (TailSet.make([p]) for p in family)).is_finite
        for family in subfamilies
    )
    covers = all(p in TailSet.make([p]) for p in range(1, bound + 1))
    out.append(
        CheckResult(
            "e1-go-compact-fails",
            singles_g_open and finite_unions and covers,
            "singletons are g-open; no finite subfamily of the singleton cover covers N",
        )
    )
    out.append(_truncation_check(window))
    return out


POINT_EXTENSION_LIMIT = 5


def point_extension(k: int) -> FiniteSpace:
    """Points a1..ak and p with opens 0, {a1..ak}, and the whole space."""
    if not 1 <= k <= POINT_EXTENSION_LIMIT:
        raise SizeLimitExceeded(f"point_extension supports 1 <= k <= {POINT_EXTENSION_LIMIT}")
    a = (1 << k) - 1
    full = (1 << (k + 1)) - 1
    return space_from_rows([a] * k + [full], [f"a{i}" for i in range(1, k + 1)] + ["p"])


def growth_witness(k: int) -> tuple[FiniteSpace, PointSet]:
    """The set {p} x A inside point_extension(k) squared."""
    x = point_extension(k)
    sq, _ = product([x, x])
    mask = _box([x.n, x.n], [1 << k, (1 << k) - 1])
    return sq, PointSet(sq.n, mask)


def verify_r1_growth(k_max: int = POINT_EXTENSION_LIMIT) -> list[CheckResult]:
    out = []
    for k in range(1, k_max + 1):
        sq, w = growth_witness(k)
        nd = classify_basic(sq, w).nowhere_dense
        out.append(
            CheckResult(
                f"r1-growth-k{k}",
                nd and len(w) == k,
                f"nowhere dense witness of size {len(w)} in {sq.n} points",
            )
        )
    return out
