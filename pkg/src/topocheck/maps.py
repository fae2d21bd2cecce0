"""Map properties between finite spaces, checked over all subsets."""

from __future__ import annotations

from dataclasses import dataclass, fields

from .core import FiniteSpace, SpaceMap, _mask
from .errors import SizeLimitExceeded
from .pointset import PointSet, bits_of
from .setclasses import tables

MAP_LIMIT = 12


@dataclass(frozen=True)
class MapReport:
    surjective: bool
    continuous: bool
    open: bool
    almost_open: bool
    pre_semi_open: bool
    delta_open: bool
    anti_delta_open: bool
    irresolute: bool
    sg_irresolute: bool
    gs_irresolute: bool

    def items(self):
        return [(f.name, getattr(self, f.name)) for f in fields(self)]


def image(f: SpaceMap, A: PointSet) -> PointSet:
    out = 0
    for p in bits_of(_mask(A, f.domain)):
        out |= 1 << f.assign[p]
    return PointSet(f.codomain.n, out)


def preimage(f: SpaceMap, B: PointSet) -> PointSet:
    b = _mask(B, f.codomain)
    out = 0
    for p, t in enumerate(f.assign):
        if b >> t & 1:
            out |= 1 << p
    return PointSet(f.domain.n, out)


def _check_size(f: SpaceMap) -> None:
    for side in (f.domain, f.codomain):
        if side.n > MAP_LIMIT:
            raise SizeLimitExceeded(
                f"map classification needs spaces of <= {MAP_LIMIT} points; got {side.n}"
            )


def image_table(f: SpaceMap) -> list[int]:
    size = 1 << f.domain.n
    img = [0] * size
    for a in range(1, size):
        low = a & -a
        img[a] = img[a ^ low] | 1 << f.assign[low.bit_length() - 1]
    return img


def preimage_table(f: SpaceMap) -> list[int]:
    fibres = [0] * f.codomain.n
    for p, t in enumerate(f.assign):
        fibres[t] |= 1 << p
    size = 1 << f.codomain.n
    pre = [0] * size
    for b in range(1, size):
        low = b & -b
        pre[b] = pre[b ^ low] | fibres[low.bit_length() - 1]
    return pre


def _preserves_forward(flags_src, img, flags_dst):
    return all(flags_dst[img[a]] for a, ok in enumerate(flags_src) if ok)


def _preserves_backward(flags_dst, pre, flags_src):
    return all(flags_src[pre[b]] for b, ok in enumerate(flags_dst) if ok)


def map_classify(f: SpaceMap) -> MapReport:
    _check_size(f)
    X, Y = tables(f.domain), tables(f.codomain)
    img, pre = image_table(f), preimage_table(f)
    nd_points = [1 << p for p in bits_of(X.nd_singletons)]
    return MapReport(
        surjective=img[X.full] == Y.full,
        continuous=_preserves_backward(Y.open, pre, X.open),
        open=_preserves_forward(X.open, img, Y.open),
        almost_open=_preserves_forward(X.regular_open, img, Y.open),
        pre_semi_open=_preserves_forward(X.semi_open, img, Y.semi_open),
        delta_open=_preserves_backward(Y.nowhere_dense, pre, X.nowhere_dense),
        anti_delta_open=all(Y.nowhere_dense[img[s]] for s in nd_points),
        irresolute=_preserves_backward(Y.semi_open, pre, X.semi_open),
        sg_irresolute=_preserves_backward(Y.sg_closed, pre, X.sg_closed),
        gs_irresolute=_preserves_backward(Y.gs_closed, pre, X.gs_closed),
    )


def hsg_preimage_failure(f: SpaceMap) -> int | None:
    """First hsg-closed codomain set whose preimage is not hsg-closed."""
    _check_size(f)
    X, Y = tables(f.domain), tables(f.codomain)
    pre = preimage_table(f)
    for b, ok in enumerate(Y.hsg_closed):
        if ok and not X.hsg_closed[pre[b]]:
            return b
    return None


def preimage_preserves_hsg(f: SpaceMap) -> bool:
    return hsg_preimage_failure(f) is None


def identity(sp: FiniteSpace) -> SpaceMap:
    return SpaceMap(sp, sp, tuple(range(sp.n)))


def all_maps(domain: FiniteSpace, codomain: FiniteSpace):
    """Every point map, in lexicographic order of the assignment tuple."""
    from itertools import product as cartesian

    for assign in cartesian(range(codomain.n), repeat=domain.n):
        yield SpaceMap(domain, codomain, assign)
