"""Generalized open and closed subset classes.

All classes are computed at once per space as tables indexed by subset
mask (``n <= 16``). The tables are built from the definitions by
subset/superset scans and cached on the space.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from . import kernels
from .core import EXHAUSTIVE_LIMIT, FiniteSpace, _mask
from .errors import SizeLimitExceeded
from .pointset import PointSet, bits_of


class SpaceTables:
    """Per-space lookup tables; every list has ``1 << n`` entries."""

    def __init__(self, sp: FiniteSpace):
        n = sp.n
        if n > EXHAUSTIVE_LIMIT:
            raise SizeLimitExceeded(
                f"subset tables need n <= {EXHAUSTIVE_LIMIT}; space has {n} points"
            )
        self.n = n
        self.full = full = (1 << n) - 1
        size = 1 << n
        cl = self.cl = kernels.closure_table(n, sp.min_nbhd)
        int_ = self.int = [full ^ cl[full ^ a] for a in range(size)]
        ic = [int_[cl[a]] for a in range(size)]
        ci = [cl[int_[a]] for a in range(size)]

        self.open = [int_[a] == a for a in range(size)]
        self.closed = [cl[a] == a for a in range(size)]
        self.int_cl = ic
        self.semi_open = [a & ~ci[a] == 0 for a in range(size)]
        self.semi_closed = [ic[a] & ~a == 0 for a in range(size)]
        self.preopen = [a & ~ic[a] == 0 for a in range(size)]
        self.beta_open = [a & ~cl[ic[a]] == 0 for a in range(size)]
        self.regular_open = [ic[a] == a for a in range(size)]
        self.dense = [cl[a] == full for a in range(size)]
        self.nowhere_dense = [ic[a] == 0 for a in range(size)]

        self.ker = kernels.superset_meet(n, self.open)
        self.sint = kernels.subset_union(n, self.semi_open)
        self.scl = kernels.superset_meet(n, self.semi_closed)
        self.sker = kernels.superset_meet(n, self.semi_open)
        closed_union = kernels.subset_union(n, self.closed)
        semi_closed_union = kernels.subset_union(n, self.semi_closed)

        self.g_open = [closed_union[a] & ~int_[a] == 0 for a in range(size)]
        self.g_closed = [cl[a] & ~self.ker[a] == 0 for a in range(size)]
        self.sg_open = [semi_closed_union[a] & ~self.sint[a] == 0 for a in range(size)]
        self.sg_closed = [self.scl[a] & ~self.sker[a] == 0 for a in range(size)]
        self.gs_closed = [self.scl[a] & ~self.ker[a] == 0 for a in range(size)]

        self.nd_singletons = nd = sum(1 << p for p in range(n) if ic[1 << p] == 0)
        self.hsg_closed = [nd & ic[a] == 0 for a in range(size)]
        self._hsg_def = None

    @property
    def hsg_closed_definitional(self) -> list:
        """Every subset sg-closed; kept as the oracle for the criterion table."""
        if self._hsg_def is None:
            self._hsg_def = [bool(x) for x in kernels.all_subsets(self.n, self.sg_closed)]
        return self._hsg_def


def tables(sp: FiniteSpace) -> SpaceTables:
    t = sp._cache.get("tables")
    if t is None:
        t = sp._cache["tables"] = SpaceTables(sp)
    return t


@dataclass(frozen=True)
class ClassReport:
    open: bool
    closed: bool
    semi_open: bool
    semi_closed: bool
    preopen: bool
    regular_open: bool
    beta_open: bool
    dense: bool
    nowhere_dense: bool
    g_open: bool | None = None
    g_closed: bool | None = None
    sg_open: bool | None = None
    sg_closed: bool | None = None
    gs_closed: bool | None = None
    hsg_closed: bool | None = None

    def items(self):
        return [(f.name, getattr(self, f.name)) for f in fields(self)]


def _ps(sp, mask):
    return PointSet(sp.n, mask)


def semi_interior(sp: FiniteSpace, A: PointSet) -> PointSet:
    return _ps(sp, tables(sp).sint[_mask(A, sp)])


def semi_closure(sp: FiniteSpace, A: PointSet) -> PointSet:
    return _ps(sp, tables(sp).scl[_mask(A, sp)])


def semi_kernel(sp: FiniteSpace, A: PointSet) -> PointSet:
    return _ps(sp, tables(sp).sker[_mask(A, sp)])


def classify_basic(sp: FiniteSpace, A: PointSet) -> ClassReport:
    """The classes that need only interior and closure; any n <= 64."""
    a = _mask(A, sp)
    full = sp.full
    i, c = sp.int_mask(a), sp.cl_mask(a)
    ic, ci = sp.int_mask(c), sp.cl_mask(i)
    return ClassReport(
        open=i == a,
        closed=c == a,
        semi_open=a & ~ci == 0,
        semi_closed=ic & ~a == 0,
        preopen=a & ~ic == 0,
        regular_open=ic == a,
        beta_open=a & ~sp.cl_mask(ic) == 0,
        dense=c == full,
        nowhere_dense=ic == 0,
    )


def classify(sp: FiniteSpace, A: PointSet) -> ClassReport:
    a = _mask(A, sp)
    t = tables(sp)
    return ClassReport(
        open=t.open[a],
        closed=t.closed[a],
        semi_open=t.semi_open[a],
        semi_closed=t.semi_closed[a],
        preopen=t.preopen[a],
        regular_open=t.regular_open[a],
        beta_open=t.beta_open[a],
        dense=t.dense[a],
        nowhere_dense=t.nowhere_dense[a],
        g_open=t.g_open[a],
        g_closed=t.g_closed[a],
        sg_open=t.sg_open[a],
        sg_closed=t.sg_closed[a],
        gs_closed=t.gs_closed[a],
        hsg_closed=t.hsg_closed[a],
    )


def is_g_open(sp: FiniteSpace, A: PointSet) -> bool:
    return tables(sp).g_open[_mask(A, sp)]


def is_g_closed(sp: FiniteSpace, A: PointSet) -> bool:
    return tables(sp).g_closed[_mask(A, sp)]


def is_sg_open(sp: FiniteSpace, A: PointSet) -> bool:
    return tables(sp).sg_open[_mask(A, sp)]


def is_sg_closed(sp: FiniteSpace, A: PointSet) -> bool:
    return tables(sp).sg_closed[_mask(A, sp)]


def is_gs_closed(sp: FiniteSpace, A: PointSet) -> bool:
    return tables(sp).gs_closed[_mask(A, sp)]


def is_hsg_closed(sp: FiniteSpace, A: PointSet) -> bool:
    """Criterion route: no nowhere dense singleton lies in int(cl(A)).

    Works for any n <= 64 since it needs no subset tables.
    """
    a = _mask(A, sp)
    if sp.n <= EXHAUSTIVE_LIMIT:
        return tables(sp).hsg_closed[a]
    return nd_singletons_mask(sp) & sp.int_mask(sp.cl_mask(a)) == 0


def is_hsg_closed_definitional(sp: FiniteSpace, A: PointSet) -> bool:
    """Every subset of A is sg-closed (checked over all 2^|A| subsets)."""
    a = _mask(A, sp)
    sg = tables(sp).sg_closed
    sub = a
    while True:
        if not sg[sub]:
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & a


def nd_singletons_mask(sp: FiniteSpace) -> int:
    out = 0
    for p in range(sp.n):
        if sp.int_mask(sp.cl_mask(1 << p)) == 0:
            out |= 1 << p
    return out


def nd_singletons(sp: FiniteSpace) -> PointSet:
    return PointSet(sp.n, nd_singletons_mask(sp))


def is_beta_open_by_regular_closed(sp: FiniteSpace, A: PointSet) -> bool:
    """Oracle: A is dense in some regular closed R containing it.

    Searches the regular closed sets R = cl(int(R)) directly and takes the
    closure of A inside R as cl(A) & R.
    """
    a = _mask(A, sp)
    c = sp.cl_mask(a)
    for r in range(1 << sp.n):
        if sp.cl_mask(sp.int_mask(r)) != r or a & ~r:
            continue
        if c & r == r:
            return True
    return False


def semi_open_family(sp: FiniteSpace) -> list[int]:
    t = tables(sp)
    return [a for a in range(1 << sp.n) if t.semi_open[a]]


def subsets_of(mask: int):
    """Every submask of ``mask``, the empty one included."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


__all__ = [
    "ClassReport",
    "SpaceTables",
    "classify",
    "classify_basic",
    "is_beta_open_by_regular_closed",
    "is_g_closed",
    "is_g_open",
    "is_gs_closed",
    "is_hsg_closed",
    "is_hsg_closed_definitional",
    "is_sg_closed",
    "is_sg_open",
    "nd_singletons",
    "semi_closure",
    "semi_interior",
    "semi_kernel",
    "tables",
]
