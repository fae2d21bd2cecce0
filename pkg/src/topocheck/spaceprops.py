"""Space-level predicates.

Each predicate takes a FiniteSpace and returns a bool; ``PREDICATES``
maps the snake_case names used by the query language to them.
"""

from __future__ import annotations

from typing import Callable

from .core import FiniteSpace, subspace
from .errors import EmptyCarrier
from .pointset import PointSet
from .setclasses import nd_singletons_mask, tables


def is_indiscrete(sp: FiniteSpace) -> bool:
    return all(row == sp.full for row in sp.min_nbhd)


def is_discrete(sp: FiniteSpace) -> bool:
    return all(row == 1 << p for p, row in enumerate(sp.min_nbhd))


def locally_indiscrete_by_opens(sp: FiniteSpace) -> bool:
    return all(sp.cl_mask(u) == u for u in sp.open_masks)


def locally_indiscrete_by_singletons(sp: FiniteSpace) -> bool:
    """Every singleton is locally dense (preopen)."""
    return all(sp.int_mask(sp.cl_mask(1 << p)) >> p & 1 for p in range(sp.n))


def locally_indiscrete_by_sg_open(sp: FiniteSpace) -> bool:
    return all(tables(sp).sg_open)


def is_locally_indiscrete(sp: FiniteSpace) -> bool:
    return locally_indiscrete_by_opens(sp)


# Identical to the singleton route above: singletons locally dense.
t_d_paper = locally_indiscrete_by_singletons


def is_dense_in_itself(sp: FiniteSpace) -> bool:
    """No isolated point, i.e. no open singleton."""
    return all(row != 1 << p for p, row in enumerate(sp.min_nbhd))


def is_t0(sp: FiniteSpace) -> bool:
    return len(set(sp.min_nbhd)) == sp.n


def is_hyperconnected(sp: FiniteSpace) -> bool:
    opens = [u for u in sp.open_masks if u]
    return all(u & v for i, u in enumerate(opens) for v in opens[i:])


def is_quasi_hyperdisconnected(sp: FiniteSpace) -> bool:
    """Vacuously true: a finite space has no infinite open subspace."""
    return True


def semi_hausdorff_failure(sp: FiniteSpace) -> tuple[int, int] | None:
    semi_open = [a for a, ok in enumerate(tables(sp).semi_open) if ok]
    for p in range(sp.n):
        around_p = [u for u in semi_open if u >> p & 1]
        for q in range(p + 1, sp.n):
            around_q = [v for v in semi_open if v >> q & 1]
            if not any(not u & v for u in around_p for v in around_q):
                return p, q
    return None


def is_semi_hausdorff(sp: FiniteSpace) -> bool:
    return semi_hausdorff_failure(sp) is None


def resolution(sp: FiniteSpace) -> int | None:
    """A dense set with dense complement, if one exists."""
    if sp.n == 0:
        raise EmptyCarrier("resolvability of the empty space")
    full = sp.full
    for d in range(1, 1 << sp.n):
        if sp.cl_mask(d) == full and sp.cl_mask(full ^ d) == full:
            return d
    return None


def is_resolvable(sp: FiniteSpace) -> bool:
    return resolution(sp) is not None


def is_strongly_irresolvable(sp: FiniteSpace) -> bool:
    return not any(
        is_resolvable(subspace(sp, PointSet(sp.n, u))) for u in sp.open_masks if u
    )


def beta_subset_of_sg(sp: FiniteSpace) -> bool:
    t = tables(sp)
    return all(sg for beta, sg in zip(t.beta_open, t.sg_open) if beta)


def has_nd_singleton(sp: FiniteSpace) -> bool:
    return nd_singletons_mask(sp) != 0


def is_connected(sp: FiniteSpace) -> bool:
    return not any(sp.cl_mask(u) == u for u in sp.open_masks if 0 < u < sp.full)


PREDICATES: dict[str, Callable[[FiniteSpace], bool]] = {
    "indiscrete": is_indiscrete,
    "discrete": is_discrete,
    "locally_indiscrete": is_locally_indiscrete,
    "t_d_paper": t_d_paper,
    "dense_in_itself": is_dense_in_itself,
    "t0": is_t0,
    "connected": is_connected,
    "hyperconnected": is_hyperconnected,
    "quasi_hyperdisconnected": is_quasi_hyperdisconnected,
    "semi_hausdorff": is_semi_hausdorff,
    "resolvable": is_resolvable,
    "strongly_irresolvable": is_strongly_irresolvable,
    "beta_subset_of_sg": beta_subset_of_sg,
    "has_nd_singleton": has_nd_singleton,
}


def evaluate_all(sp: FiniteSpace) -> dict[str, bool]:
    return {name: pred(sp) for name, pred in PREDICATES.items()}



def is_t_d(sp: FiniteSpace) -> bool:
    """Standard T_D: cl({p}) minus p is closed for every point p."""
    for p in range(sp.n):
        rest = sp.cl_mask(1 << p) & ~(1 << p)
        if sp.cl_mask(rest) != rest:
            return False
    return True


PREDICATES["t_d"] = is_t_d
