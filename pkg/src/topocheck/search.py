"""Witness search over enumerated spaces, subsets, and projections."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .core import FiniteSpace, SpaceMap, _box, product
from .enumeration import spaces_up_to
from .errors import SizeLimitExceeded, UnknownIdentifier
from .maps import hsg_preimage_failure, map_classify, preimage_table
from .pointset import PointSet
from .query import PropertyExpr, check_identifiers, evaluate, parse_query
from .setclasses import tables
from .spaceprops import PREDICATES

SPACE_SEARCH_LIMIT = 5
MAP_SEARCH_LIMIT = 3


@dataclass(frozen=True)
class Witness:
    space: FiniteSpace
    subset: PointSet | None = None
    map: SpaceMap | None = None
    description: str = ""

    def render(self) -> str:
        parts = [f"WITNESS space={self.space.canonical_text()}"]
        if self.subset is not None:
            # map witnesses carry a codomain set
            home = self.map.codomain if self.map is not None else self.space
            parts.append(f"set={home.format_set(self.subset)}")
        if self.map is not None:
            parts.append("map=" + ",".join(map(str, self.map.assign)))
        if self.description:
            parts.append(f"# {self.description}")
        return " ".join(parts)


@dataclass(frozen=True)
class Quest:
    name: str
    level: str  # "subset" or "map"
    run: Callable[[int], Iterator[Witness]]
    holds: Callable[[Witness], bool]
    limit: int


def _square_fails(sp: FiniteSpace, a: int) -> bool:
    sq, _ = product([sp, sp])
    return tables(sp).sg_closed[a] and not tables(sq).sg_closed[_box([sp.n, sp.n], [a, a])]


def _product_sg_closed_failure(n_max):
    for sp in spaces_up_to(n_max):
        sq, _ = product([sp, sp])
        sq_sg = tables(sq).sg_closed
        sg = tables(sp).sg_closed
        for a in range(1 << sp.n):
            if sg[a] and not sq_sg[_box([sp.n, sp.n], [a, a])]:
                yield Witness(sp, PointSet(sp.n, a), description="A sg-closed, A x A not")


def _hsg_not_nd_holds(w):
    t = tables(w.space)
    return t.hsg_closed[w.subset.bits] and not t.nowhere_dense[w.subset.bits]


def _hsg_not_nowhere_dense(n_max):
    for sp in spaces_up_to(n_max):
        t = tables(sp)
        for a in range(1 << sp.n):
            if t.hsg_closed[a] and not t.nowhere_dense[a]:
                yield Witness(sp, PointSet(sp.n, a), description="hsg-closed, not nowhere dense")


def _g_open_not_sg_open_holds(w):
    t = tables(w.space)
    return t.g_open[w.subset.bits] and not t.sg_open[w.subset.bits]


def _g_open_not_sg_open(n_max):
    for sp in spaces_up_to(n_max):
        t = tables(sp)
        for a in range(1 << sp.n):
            if t.g_open[a] and not t.sg_open[a]:
                yield Witness(sp, PointSet(sp.n, a), description="g-open, not sg-open")


def _first_projections(n_max):
    factors = spaces_up_to(n_max)
    for x in factors:
        for y in factors:
            prod, (p, _) = product([x, y])
            yield prod, p


def _sg_failure(f: SpaceMap) -> int | None:
    X, Y = tables(f.domain), tables(f.codomain)
    pre = preimage_table(f)
    for b, ok in enumerate(Y.sg_closed):
        if ok and not X.sg_closed[pre[b]]:
            return b
    return None


def _projection_not_sg_irresolute(n_max):
    for prod, p in _first_projections(n_max):
        b = _sg_failure(p)
        if b is not None:
            yield Witness(
                prod,
                PointSet(p.codomain.n, b),
                p,
                f"preimage of sg-closed {p.codomain.format_set(b)} is not sg-closed",
            )


def _projection_hsg_failure(n_max):
    for prod, p in _first_projections(n_max):
        b = hsg_preimage_failure(p)
        if b is not None:
            yield Witness(
                prod,
                PointSet(p.codomain.n, b),
                p,
                f"preimage of hsg-closed {p.codomain.format_set(b)} is not hsg-closed",
            )


QUESTS = {
    q.name: q
    for q in [
        Quest(
            "product-sg-closed-failure",
            "subset",
            _product_sg_closed_failure,
            lambda w: _square_fails(w.space, w.subset.bits),
            4,
        ),
        Quest(
            "hsg-not-nowhere-dense",
            "subset",
            _hsg_not_nowhere_dense,
            _hsg_not_nd_holds,
            SPACE_SEARCH_LIMIT,
        ),
        Quest(
            "g-open-not-sg-open",
            "subset",
            _g_open_not_sg_open,
            _g_open_not_sg_open_holds,
            SPACE_SEARCH_LIMIT,
        ),
        Quest(
            "projection-not-sg-irresolute",
            "map",
            _projection_not_sg_irresolute,
            lambda w: not map_classify(w.map).sg_irresolute,
            MAP_SEARCH_LIMIT,
        ),
        Quest(
            "projection-hsg-preimage-failure",
            "map",
            _projection_hsg_failure,
            lambda w: hsg_preimage_failure(w.map) is not None,
            MAP_SEARCH_LIMIT,
        ),
    ]
}


def _take(gen, limit):
    out = []
    for w in gen:
        out.append(w)
        if limit is not None and len(out) >= limit:
            break
    return out


def search_query(n_max: int, expr: PropertyExpr | str, limit: int | None = None) -> list[Witness]:
    if isinstance(expr, str):
        expr = parse_query(expr)
    if n_max > SPACE_SEARCH_LIMIT:
        raise SizeLimitExceeded(f"space search supports n_max <= {SPACE_SEARCH_LIMIT}")
    check_identifiers(expr, PREDICATES)
    gen = (
        Witness(sp, description="query holds")
        for sp in spaces_up_to(n_max)
        if evaluate(expr, sp, PREDICATES)
    )
    return _take(gen, limit)


def search_quest(n_max: int, name: str, limit: int | None = None) -> list[Witness]:
    try:
        quest = QUESTS[name]
    except KeyError:
        raise UnknownIdentifier(f"unknown quest {name!r}") from None
    if n_max > quest.limit:
        raise SizeLimitExceeded(f"quest {name} supports n_max <= {quest.limit}")
    return _take(quest.run(n_max), limit)


def search(
    n_max: int,
    query: PropertyExpr | str | None = None,
    *,
    quest: str | None = None,
    limit: int | None = None,
) -> list[Witness]:
    """All witnesses in enumeration order (or the first ``limit``)."""
    if (query is None) == (quest is None):
        raise ValueError("give exactly one of query or quest")
    if quest is not None:
        return search_quest(n_max, quest, limit)
    return search_query(n_max, query, limit)
